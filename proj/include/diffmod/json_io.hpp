#ifndef DIFFMOD_JSON_IO_HPP
#define DIFFMOD_JSON_IO_HPP

#include "json.hpp"

#include "diffmod/cohomology.hpp"
#include "diffmod/text.hpp"

namespace diffmod {

/// JSON encodings. Scalars travel as canonical text strings; polynomial
/// coefficient lists are dense with ascending powers of x.

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const DiffOp& A);
nlohmann::json to_json(const NormalSymbol& S);
nlohmann::json to_json(const Density& d);
nlohmann::json to_json(const IntertwinerVerdict& v);
nlohmann::json to_json(const Cochain1& c);
nlohmann::json to_json(const SymbolScheme& s);

Poly poly_from_json(const nlohmann::json& j);
DiffOp diffop_from_json(const nlohmann::json& j);
NormalSymbol symbol_from_json(const nlohmann::json& j);
Density density_from_json(const nlohmann::json& j);
IntertwinerVerdict verdict_from_json(const nlohmann::json& j);
Cochain1 cochain_from_json(const nlohmann::json& j);

} // namespace diffmod

#endif
