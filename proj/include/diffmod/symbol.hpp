#ifndef DIFFMOD_SYMBOL_HPP
#define DIFFMOD_SYMBOL_HPP

#include <vector>

#include "diffmod/diffop.hpp"

namespace diffmod {

/// sl2-equivariant total symbol of an operator: the polynomial
/// xi^k bar_a_k(x) + ... + bar_a_0(x), stored as the slot list bars[i].
/// Under the sl2 fields {1, x, x^2} each slot transforms as a density of
/// label i with no correction terms.
struct NormalSymbol {
    NormalSymbol() = default;
    NormalSymbol(Scalar w, std::vector<Poly> b) : weight(std::move(w)), bars(std::move(b)) {}

    Scalar weight;
    std::vector<Poly> bars; // index = xi power

    int order() const { return static_cast<int>(bars.size()) - 1; }
    const Poly& bar(int i) const;

    friend bool operator==(const NormalSymbol& a, const NormalSymbol& b);
    friend bool operator!=(const NormalSymbol& a, const NormalSymbol& b) { return !(a == b); }
};

/// Unitriangular change of basis between operator coefficients and normal
/// symbol slots:  bar_a_i = sum_{j >= i} alpha[j][i] a_j^(j-i),  alpha[i][i] = 1.
struct SymbolScheme {
    int order = 0;
    Scalar lambda;
    std::vector<std::vector<Scalar>> alpha; // alpha[j] has entries i = 0..j

    NormalSymbol to_symbol(const DiffOp& A) const;
    DiffOp from_symbol(const NormalSymbol& S) const;
};

/// Derives the unique unitriangular scheme of the given order and weight by
/// imposing equivariance under X = x^2 d/dx and solving the resulting linear
/// system column by column. Results are memoized; the returned reference
/// stays valid for the program lifetime and is safe for concurrent readers.
const SymbolScheme& derive_scheme(int k, const Scalar& lambda);

/// Normal symbol at the operator's stored order and weight.
NormalSymbol to_symbol(const DiffOp& A);

/// Inverse of to_symbol at the symbol's stored order and weight.
DiffOp from_symbol(const NormalSymbol& S);

/// Module action transported to symbol coordinates:
/// to_symbol(ad_action(X, from_symbol(S))); computed by transport, never
/// read off a coefficient table.
NormalSymbol symbol_action(const VectorField& X, const NormalSymbol& S);

/// The order-4 symbol action written out as an explicit coefficient table
/// (reference oracle for symbol_action; accepts order-4 symbols only).
NormalSymbol symbol_action_table4(const VectorField& X, const NormalSymbol& S);

} // namespace diffmod

#endif
