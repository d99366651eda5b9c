#ifndef DIFFMOD_DIFFOP_HPP
#define DIFFMOD_DIFFOP_HPP

#include <vector>

#include "diffmod/density.hpp"

namespace diffmod {

/// Linear differential operator A = sum a_i(x) d^i/dx^i acting on densities
/// of the stored weight (the module parameter of D^k_w).
///
/// The stored order is the coefficient list length minus one; leading zero
/// coefficients are kept so that lower-order operators can be carried at a
/// chosen order (the normal-symbol scheme reads the stored order).
/// normalized() trims them. Mathematical equality compares trimmed forms.
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(Scalar weight, std::vector<Poly> coeffs);

    static DiffOp zero(Scalar weight, int order);
    /// Multiplication operator by f (order 0 unless f is zero-padded later).
    static DiffOp multiplication(Scalar weight, Poly f);
    static DiffOp identity(Scalar weight) { return multiplication(std::move(weight), Poly(1)); }

    const Scalar& weight() const { return weight_; }
    /// Stored order: coefficient list length - 1 (-1 for an empty list).
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& coeff(int i) const;
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Trims leading zero coefficient polynomials.
    DiffOp normalized() const;
    /// Zero-pads up to the requested stored order.
    DiffOp padded(int order) const;

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp scaled(const Scalar& s) const;

    /// Mathematical equality: same weight, same trimmed coefficients.
    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
    void check_same_weight(const DiffOp& o) const;

    Scalar weight_;
    std::vector<Poly> coeffs_;
};

/// A(phi) = sum a_i phi^(i). The density weight must match the operator's.
Density apply(const DiffOp& A, const Density& phi);

/// Operator composition A o B (equal weights).
DiffOp compose(const DiffOp& A, const DiffOp& B);

/// Lie derivative as a first-order operator: X d/dx - w X'.
DiffOp lie_op(const VectorField& X, const Scalar& w);

/// Module action ad L_X(A) = L_X o A - A o L_X, computed from first
/// principles by two compositions. Preserves the stored order (the order-k+1
/// coefficient cancels exactly).
DiffOp ad_action(const VectorField& X, const DiffOp& A);

/// Formal adjoint A* = sum_{i>=0} (-1)^i (d/dx)^i o a_i, an exact module map
/// D^k_w -> D^k_{-1-w}.
DiffOp adjoint(const DiffOp& A);

/// [A, B]_+ = A o B + B o A (equal weights).
DiffOp anticommutator(const DiffOp& A, const DiffOp& B);

/// Sum of L_X o L_Y o L_Z over all six permutations of (X, Y, Z).
DiffOp sym3(const VectorField& X, const VectorField& Y, const VectorField& Z,
            const Scalar& w);

} // namespace diffmod

#endif
