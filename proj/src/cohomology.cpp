#include "diffmod/cohomology.hpp"

#include <functional>
#include <string>

#include "diffmod/errors.hpp"
#include "diffmod/linalg.hpp"

namespace diffmod {

Cochain1::Cochain1(Scalar source_weight, int grade)
    : s_(std::move(source_weight)), m_(grade) {
    if (grade < 0)
        throw domain_error("cochain grade must be nonnegative");
}

void Cochain1::set_term(int p, int q, Scalar beta) {
    if (p < 0 || q < 0 || p + q != m_)
        throw domain_error("cochain term (" + std::to_string(p) + "," + std::to_string(q) +
                           ") violates grade " + std::to_string(m_));
    if (beta.is_zero())
        terms_.erase({p, q});
    else
        terms_[{p, q}] = std::move(beta);
}

Scalar Cochain1::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Scalar() : it->second;
}

bool operator==(const Cochain1& a, const Cochain1& b) {
    return a.s_ == b.s_ && a.m_ == b.m_ && a.terms_ == b.terms_;
}

Cochain1 make_c3(const Scalar& s) {
    Cochain1 c(s, 3);
    c.set_term(3, 0, Scalar(1));
    return c;
}

Cochain1 make_c4(const Scalar& s) {
    Cochain1 c(s, 4);
    c.set_term(4, 0, s);
    c.set_term(3, 1, Scalar(2));
    return c;
}

Cochain1 make_c3_tilde(const Scalar& s) {
    Cochain1 c(s, 3);
    c.set_term(3, 0, Scalar(1));
    c.set_term(2, 1, Scalar(2));
    return c;
}

Cochain1 make_c4_tilde(const Scalar& s) {
    Cochain1 c(s, 4);
    c.set_term(3, 1, Scalar(1));
    c.set_term(2, 2, Scalar(1));
    return c;
}

Density eval_cochain(const Cochain1& c, const VectorField& X, const Density& a) {
    if (a.weight != c.source_weight())
        throw domain_error("weight mismatch: cochain at source " + c.source_weight().str() +
                           " applied to density at " + a.weight.str());
    Poly out;
    for (const auto& [pq, beta] : c.terms())
        out += (X.comp.derivative(pq.first) * a.value.derivative(pq.second)).scaled(beta);
    return Density(c.target_weight(), out);
}

Density cocycle_defect(const Cochain1& c, const VectorField& X, const VectorField& Y,
                       const Density& a) {
    const Scalar tw = c.target_weight();
    Poly out = lie(tw, X, eval_cochain(c, Y, a).value);
    out -= eval_cochain(c, Y, lie_derivative(X, a)).value;
    out -= lie(tw, Y, eval_cochain(c, X, a).value);
    out += eval_cochain(c, X, lie_derivative(Y, a)).value;
    out -= eval_cochain(c, vf_commutator(X, Y), a).value;
    return Density(tw, out);
}

Poly LocalMap::apply(const Poly& a) const {
    Poly out;
    for (std::size_t t = 0; t < betas.size(); ++t)
        if (!betas[t].is_zero())
            out += a.derivative(static_cast<int>(t)).scaled(betas[t]);
    return out;
}

namespace {

// Coefficient table of a translation-invariant bilinear expression
// sum gamma_{p,q} X^(p) a^(q): the constant term of f(x^p d/dx, x^q) is
// p! q! gamma_{p,q}. The extraction is cross-checked by re-evaluating on
// monomials beyond the collection bounds.
std::map<std::pair<int, int>, Scalar>
collect_bilinear(const std::function<Poly(const VectorField&, const Poly&)>& f,
                 int pmax, int qmax) {
    std::map<std::pair<int, int>, Scalar> gamma;
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            const Scalar g = f(VectorField(Poly::monomial(p)), Poly::monomial(q)).coeff(0) /
                             (Scalar(factorial(static_cast<unsigned long>(p))) *
                              Scalar(factorial(static_cast<unsigned long>(q))));
            if (!g.is_zero())
                gamma[{p, q}] = g;
        }
    for (int P = 0; P <= pmax + 2; ++P)
        for (int Q = 0; Q <= qmax + 2; ++Q) {
            Poly expect;
            for (const auto& [pq, g] : gamma)
                expect += (Poly::monomial(P).derivative(pq.first) *
                           Poly::monomial(Q).derivative(pq.second)).scaled(g);
            if (expect != f(VectorField(Poly::monomial(P)), Poly::monomial(Q)))
                throw internal_error("bilinear collection bounds too small");
        }
    return gamma;
}

// delta of the single-derivative map a -> a^(t) at the cochain target weight
// s + 1 - m; homogeneous of grade t + 1.
std::map<std::pair<int, int>, Scalar>
delta_table(const Scalar& s, int m, int t) {
    const Scalar tw = s + Scalar(1) - Scalar(m);
    auto f = [&](const VectorField& X, const Poly& a) {
        return lie(tw, X, a.derivative(t)) - lie(s, X, a).derivative(t);
    };
    return collect_bilinear(f, t + 2, t + 1);
}

} // namespace

Cochain1 coboundary(const LocalMap& b) {
    const Scalar tw = b.source_weight + Scalar(1) - Scalar(b.shift);
    const int tmax = static_cast<int>(b.betas.size());
    auto f = [&](const VectorField& X, const Poly& a) {
        return lie(tw, X, b.apply(a)) - b.apply(lie(b.source_weight, X, a));
    };
    const auto gamma = collect_bilinear(f, tmax + 2, tmax + 1);
    Cochain1 out(b.source_weight, b.shift);
    for (const auto& [pq, g] : gamma) {
        if (pq.first + pq.second != b.shift)
            throw domain_error("coboundary leaves grade " + std::to_string(b.shift) +
                               ": term at (" + std::to_string(pq.first) + "," +
                               std::to_string(pq.second) + ")");
        out.set_term(pq.first, pq.second, g);
    }
    return out;
}

CoboundaryResult solve_coboundary(const Cochain1& c, int max_order,
                                  const Cochain1* reference) {
    if (reference &&
        (reference->source_weight() != c.source_weight() || reference->grade() != c.grade()))
        throw domain_error("reference cochain must share source weight and grade");

    const Scalar& s = c.source_weight();
    const int m = c.grade();

    std::vector<std::map<std::pair<int, int>, Scalar>> tabs;
    for (int t = 0; t <= max_order; ++t)
        tabs.push_back(delta_table(s, m, t));

    std::map<std::pair<int, int>, bool> keys;
    for (const auto& tab : tabs)
        for (const auto& [pq, g] : tab)
            keys[pq] = true;
    for (const auto& [pq, g] : c.terms())
        keys[pq] = true;
    if (reference)
        for (const auto& [pq, g] : reference->terms())
            keys[pq] = true;

    auto build = [&](bool with_reference) {
        std::pair<std::vector<std::vector<Scalar>>, std::vector<Scalar>> sys;
        for (const auto& [pq, used] : keys) {
            std::vector<Scalar> row;
            for (const auto& tab : tabs) {
                auto it = tab.find(pq);
                row.push_back(it == tab.end() ? Scalar() : it->second);
            }
            if (with_reference)
                row.push_back(reference->coeff(pq.first, pq.second));
            sys.first.push_back(std::move(row));
            sys.second.push_back(c.coeff(pq.first, pq.second));
        }
        return sys;
    };

    CoboundaryResult result;
    {
        auto [rows, rhs] = build(false);
        const LinearSolution sol = solve_linear(rows, rhs);
        if (sol.particular) {
            LocalMap b;
            b.source_weight = s;
            b.shift = m;
            b.betas = *sol.particular;
            result.solution = std::move(b);
        }
    }
    if (!result.solution && reference) {
        auto [rows, rhs] = build(true);
        const LinearSolution sol = solve_linear(rows, rhs);
        if (sol.particular)
            result.kappa = sol.particular->back();
        else
            result.kappa_degenerate = true;
    }

    // cocycle space within the grade-m ansatz
    {
        const int nterms = m + 1; // (p, q) with p + q = m
        std::vector<Cochain1> units;
        for (int p = 0; p <= m; ++p) {
            Cochain1 u(s, m);
            u.set_term(p, m - p, Scalar(1));
            units.push_back(std::move(u));
        }
        RowReducer red(nterms);
        for (int P = 0; P <= m + 3; ++P)
            for (int Q = 0; Q <= m + 3; ++Q)
                for (int R = 0; R <= m + 2; ++R) {
                    std::vector<Poly> defects;
                    int maxdeg = -1;
                    for (const Cochain1& u : units) {
                        Poly d = cocycle_defect(u, VectorField(Poly::monomial(P)),
                                                VectorField(Poly::monomial(Q)),
                                                Density(s, Poly::monomial(R)))
                                     .value;
                        maxdeg = std::max(maxdeg, d.degree());
                        defects.push_back(std::move(d));
                    }
                    for (int d = 0; d <= maxdeg; ++d) {
                        std::vector<Scalar> row;
                        row.reserve(defects.size());
                        for (const Poly& def : defects)
                            row.push_back(def.coeff(d));
                        red.add_row(std::move(row));
                    }
                }
        result.cocycle_space_dim = nterms - red.rank();
    }
    result.coboundary_space_dim =
        (m >= 1 && !delta_table(s, m, m - 1).empty()) ? 1 : 0;
    return result;
}

std::array<Density, 4> rho_action(const Scalar& alpha1, const Scalar& alpha2,
                                  const Scalar& alpha3, const VectorField& X,
                                  const std::array<Density, 4>& tuple) {
    for (int i = 0; i < 4; ++i)
        if (tuple[static_cast<std::size_t>(i)].weight != Scalar(3 - i))
            throw domain_error("rho_action expects the weight tuple (3, 2, 1, 0)");
    const Poly& a3 = tuple[0].value;
    const Poly& a2 = tuple[1].value;
    const Poly& a1 = tuple[2].value;
    const Poly& a0 = tuple[3].value;
    std::array<Density, 4> out;
    out[0] = Density(Scalar(3), lie(Scalar(3), X, a3));
    out[1] = Density(Scalar(2), lie(Scalar(2), X, a2));
    out[2] = Density(Scalar(1), lie(Scalar(1), X, a1) + j_op(3, Scalar(3), X, a3).scaled(alpha1));
    out[3] = Density(Scalar(0), lie(Scalar(0), X, a0) + j_op(3, Scalar(2), X, a2).scaled(alpha2) +
                                    j_op(4, Scalar(3), X, a3).scaled(alpha3));
    return out;
}

} // namespace diffmod
