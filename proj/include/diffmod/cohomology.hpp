#ifndef DIFFMOD_COHOMOLOGY_HPP
#define DIFFMOD_COHOMOLOGY_HPP

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "diffmod/density.hpp"

namespace diffmod {

/// Translation-invariant bilinear 1-cochain of grade m:
///   c(X)(a) = sum beta_{p,q} X^(p) a^(q)  over p + q = m,
/// a linear map Vect -> Hom(F_s, F_{s+1-m}).
class Cochain1 {
public:
    Cochain1(Scalar source_weight, int grade);

    const Scalar& source_weight() const { return s_; }
    int grade() const { return m_; }
    Scalar target_weight() const { return s_ + Scalar(1) - Scalar(m_); }

    /// Sets beta_{p,q}; rejects p + q != grade.
    void set_term(int p, int q, Scalar beta);
    Scalar coeff(int p, int q) const;
    const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }

    friend bool operator==(const Cochain1& a, const Cochain1& b);

private:
    Scalar s_;
    int m_;
    std::map<std::pair<int, int>, Scalar> terms_; // nonzero entries only
};

/// The standard cocycles: c_m(X)(a) = J_m(X, a) with slot parameter s, and
/// their first-derivative-form representatives.
Cochain1 make_c3(const Scalar& s);       // X''' a
Cochain1 make_c4(const Scalar& s);       // s X'''' a + 2 X''' a'
Cochain1 make_c3_tilde(const Scalar& s); // X''' a + 2 X'' a'
Cochain1 make_c4_tilde(const Scalar& s); // X''' a' + X'' a''

/// c(X)(a); the density weight must equal the cochain's source weight.
Density eval_cochain(const Cochain1& c, const VectorField& X, const Density& a);

/// [L_X, c(Y)](a) - [L_Y, c(X)](a) - c([X,Y])(a); identically zero exactly
/// when c is a cocycle.
Density cocycle_defect(const Cochain1& c, const VectorField& X, const VectorField& Y,
                       const Density& a);

/// Translation-invariant 0-cochain b(a) = sum betas[t] a^(t), viewed as a map
/// F_s -> F_{s+1-shift}.
struct LocalMap {
    Scalar source_weight;
    int shift = 0;
    std::vector<Scalar> betas;

    Poly apply(const Poly& a) const;
};

/// Chevalley-Eilenberg differential delta(b)(X) = L_X o b - b o L_X, collected
/// into cochain form. The result must land in the single grade shift = m;
/// a map whose differential mixes grades is rejected.
Cochain1 coboundary(const LocalMap& b);

struct CoboundaryResult {
    std::optional<LocalMap> solution;
    /// Dimension of the grade-m cocycle space within the ansatz.
    int cocycle_space_dim = 0;
    /// Dimension of the grade-m coboundary space (0 or 1).
    int coboundary_space_dim = 0;
    /// When c itself is not a coboundary but c - kappa * reference is.
    std::optional<Scalar> kappa;
    /// Reference route attempted and failed (reported, not special-cased).
    bool kappa_degenerate = false;
};

/// Exact linear solve for delta(b) = c over betas beta_t, t <= max_order.
/// Absence of a solution is a regular outcome and comes with the residual
/// class data; `reference` optionally names a cochain to compare classes
/// against.
CoboundaryResult solve_coboundary(const Cochain1& c, int max_order,
                                  const Cochain1* reference = nullptr);

/// Three-parameter deformation of the direct-sum action on
/// F_3+F_2+F_1+F_0 (tuple order: weights 3, 2, 1, 0):
///   rho_X(a_3) = L^3(a_3)
///   rho_X(a_2) = L^2(a_2)
///   rho_X(a_1) = L^1(a_1) + alpha1 J_3(X, a_3)
///   rho_X(a_0) = L^0(a_0) + alpha2 J_3(X, a_2) + alpha3 J_4(X, a_3)
std::array<Density, 4> rho_action(const Scalar& alpha1, const Scalar& alpha2,
                                  const Scalar& alpha3, const VectorField& X,
                                  const std::array<Density, 4>& tuple);

} // namespace diffmod

#endif
