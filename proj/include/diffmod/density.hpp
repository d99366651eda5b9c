#ifndef DIFFMOD_DENSITY_HPP
#define DIFFMOD_DENSITY_HPP

#include <utility>

#include "diffmod/poly.hpp"

namespace diffmod {

/// Polynomial vector field X(x) d/dx.
struct VectorField {
    VectorField() = default;
    explicit VectorField(Poly component) : comp(std::move(component)) {}

    Poly comp;

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.comp == b.comp;
    }
};

/// Tensor density in the module F_w: the stored weight is the Lie-derivative
/// label w (the geometric degree is -w). Operations never mix weights.
struct Density {
    Density() = default;
    Density(Scalar w, Poly v) : weight(std::move(w)), value(std::move(v)) {}

    Scalar weight;
    Poly value;

    friend bool operator==(const Density& a, const Density& b) {
        return a.weight == b.weight && a.value == b.value;
    }
};

/// Lie derivative on the raw coefficient function: X f' - w X' f.
Poly lie(const Scalar& w, const VectorField& X, const Poly& f);

/// L_X acting on a density; preserves the weight.
Density lie_derivative(const VectorField& X, const Density& phi);

/// [X, Y] = (X Y' - X' Y) d/dx.
VectorField vf_commutator(const VectorField& X, const VectorField& Y);

/// Transvectant j_n : F_a (x) F_b -> F_{a+b-n} (Gordan; Rankin-Cohen bracket).
/// The weight-dependent factorial ratios are taken as falling factorials,
/// which keeps them polynomial in the weights.
Density transvectant(int n, const Density& phi, const Density& psi);

/// The bilinear operations J_3, J_4, J_5 appearing in the symbol action,
/// with the symbol-slot parameter s:
///   J_3(X, a) = X''' a
///   J_4(X, a) = s X'''' a + 2 X''' a'
///   J_5(X, a) = s(2s-1) X''''' a + 5(2s-1) X'''' a' + 10 X''' a''
Poly j_op(int m, const Scalar& s, const VectorField& X, const Poly& a);

/// Falling-factorial product (w - t)(w - t - 1) ... (w - n + 1).
Scalar falling_product(const Scalar& w, int t, int n);

} // namespace diffmod

#endif
