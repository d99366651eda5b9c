#ifndef DIFFMOD_INTERTWINER_HPP
#define DIFFMOD_INTERTWINER_HPP

#include <vector>

#include "diffmod/symbol.hpp"

namespace diffmod {

/// Weights at which the third-order (k=3) or second-order (k=2) module
/// family degenerates. For k=3 these are the roots of
/// w(w+1), 2w+1 and 3w^2+3w-1; for k=2 the roots of w(w+1).
std::vector<Scalar> critical_set(int k);

/// True when some diagonal factor of the order-3 intertwiner vanishes at w.
bool is_critical3(const Scalar& w);

/// Signals a domain error naming the vanishing factor when w is critical
/// for k=3. `name` is the parameter name used in the message ("lambda"/"mu").
void check_non_critical3(const Scalar& w, const char* name);

/// Slotwise scaling of normal symbols: bar_a_i -> alphas[i] * bar_a_i,
/// re-labelled from the source weight to the target weight.
struct DiagonalMap {
    int order = 0;
    Scalar source_weight;
    Scalar target_weight;
    std::vector<Scalar> alphas;

    NormalSymbol apply(const NormalSymbol& S) const;
    /// from_symbol(apply(to_symbol(A))) at the target weight.
    DiffOp apply_to_operator(const DiffOp& A) const;
};

enum class IsoStatus { isomorphic, not_isomorphic };

struct IntertwinerVerdict {
    IsoStatus status = IsoStatus::not_isomorphic;
    int solution_dimension = 0;
    std::vector<DiagonalMap> basis;
    /// Slots i where every equivariant diagonal map has alphas[i] = 0.
    std::vector<int> degenerate_slots;
};

/// Classifies the module pair (k, lambda) vs (k, mu) by building the exact
/// homogeneous system on the slot multipliers (requiring the diagonal map to
/// commute with the symbol action over the monomial basis X = x^p, p <= k+4,
/// slot symbols x^q, q <= k+2) and returning its nullspace. The modules are
/// isomorphic exactly when some solution has every multiplier nonzero.
IntertwinerVerdict solve_diagonal_intertwiner(int k, const Scalar& lambda, const Scalar& mu);

/// The intertwining operator T : D^3_lambda -> D^3_mu, diagonal in normal
/// symbol coordinates with multipliers
///   (mu(mu+1)(2mu+1)/(lambda(lambda+1)(2lambda+1)),
///    (3mu^2+3mu-1)/(3lambda^2+3lambda-1),
///    (2mu+1)/(2lambda+1),
///    1).
/// Both weights must be non-critical; A must have order <= 3 (it is carried
/// at order 3 internally).
DiffOp apply_T(const DiffOp& A, const Scalar& mu);

/// Reference images of the four generator types under T, built directly at
/// the target weight with the displayed scale factors.
DiffOp t_generator_reference(const Poly& f, const Scalar& lambda, const Scalar& mu);
DiffOp t_generator_reference(const VectorField& X, const Scalar& lambda, const Scalar& mu);
DiffOp t_generator_reference(const VectorField& X, const VectorField& Y,
                        const Scalar& lambda, const Scalar& mu);
DiffOp t_generator_reference(const VectorField& X, const VectorField& Y, const VectorField& Z,
                        const Scalar& lambda, const Scalar& mu);

/// Closed-form coefficient table for T, kept as an independent audit oracle
/// against the symbol-route computation (apply_T is the ground truth).
DiffOp t_closed_form(const DiffOp& A, const Scalar& mu);

} // namespace diffmod

#endif
