#ifndef DIFFMOD_TEXT_HPP
#define DIFFMOD_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "diffmod/intertwiner.hpp"

namespace diffmod {

/// Expression grammar shared by every text payload (whitespace ignored):
///
///   expr     := term (("+"|"-") term)*
///   term     := factor ("*" factor)*
///   factor   := rational | "r21" | "x" ("^" uint)? | "D" ("^" uint)?
///             | "xi" ("^" uint)? | "(" expr ")" | "-" factor
///   rational := int ("/" uint)?
///
/// "D" is accepted in operator payloads only and "xi" in symbol payloads
/// only; products collect into the normal form sum_j p_j(x) * D^j at parse
/// time. Parse errors carry the byte offset of the offending token.

Scalar parse_scalar(std::string_view text);
Poly parse_poly(std::string_view text);

/// Parses an operator expression at the given weight. The stored order is
/// the highest D power present, or `order` when supplied (zero-padding; an
/// expression exceeding the requested order is rejected).
DiffOp parse_operator(std::string_view text, const Scalar& weight,
                      std::optional<int> order = std::nullopt);

/// Same for normal symbols written in xi.
NormalSymbol parse_symbol(std::string_view text, const Scalar& weight,
                          std::optional<int> order = std::nullopt);

/// Canonical printers: descending powers, no zero terms, unit coefficients
/// elided, no whitespace inside scalars. parse(print(v)) == v.
std::string print(const Scalar& s);
std::string print(const Poly& p);
std::string print(const DiffOp& A);
std::string print(const NormalSymbol& S);

} // namespace diffmod

#endif
