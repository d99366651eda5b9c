#include "diffmod/intertwiner.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "diffmod/errors.hpp"
#include "diffmod/linalg.hpp"

namespace diffmod {

namespace {

const Scalar kHalf(Rational(1, 2));

Scalar sqrt21_over_6() { return Scalar(Rational(0), Rational(1, 6)); }

Scalar poly_w_w1(const Scalar& w) { return w * (w + Scalar(1)); }
Scalar poly_2w1(const Scalar& w) { return Scalar(2) * w + Scalar(1); }
Scalar poly_3w2(const Scalar& w) {
    return Scalar(3) * w * w + Scalar(3) * w - Scalar(1);
}

} // namespace

std::vector<Scalar> critical_set(int k) {
    if (k == 2)
        return {Scalar(0), Scalar(-1)};
    if (k == 3)
        return {Scalar(0), Scalar(-1), -kHalf, -kHalf + sqrt21_over_6(), -kHalf - sqrt21_over_6()};
    throw domain_error("critical_set supports k = 2 and k = 3 only");
}

bool is_critical3(const Scalar& w) {
    return poly_w_w1(w).is_zero() || poly_2w1(w).is_zero() || poly_3w2(w).is_zero();
}

void check_non_critical3(const Scalar& w, const char* name) {
    const std::string n(name);
    if (poly_w_w1(w).is_zero())
        throw domain_error("critical weight: " + n + "*(" + n + "+1) = 0 at " + n + " = " + w.str());
    if (poly_2w1(w).is_zero())
        throw domain_error("critical weight: 2*" + n + "+1 = 0 at " + n + " = " + w.str());
    if (poly_3w2(w).is_zero())
        throw domain_error("critical weight: 3*" + n + "^2+3*" + n + "-1 = 0 at " + n + " = " + w.str());
}

NormalSymbol DiagonalMap::apply(const NormalSymbol& S) const {
    if (S.weight != source_weight)
        throw domain_error("weight mismatch: diagonal map expects source weight " +
                           source_weight.str());
    if (S.order() != order)
        throw domain_error("diagonal map order mismatch");
    std::vector<Poly> bars(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        bars[static_cast<std::size_t>(i)] =
            S.bar(i).scaled(alphas[static_cast<std::size_t>(i)]);
    return NormalSymbol(target_weight, std::move(bars));
}

DiffOp DiagonalMap::apply_to_operator(const DiffOp& A) const {
    return from_symbol(apply(to_symbol(A.padded(order))));
}

namespace {

// Symbol action of every basis pair (X = x^p, unit symbol x^q in slot j) at
// one weight, compacted to sparse (power, coeff) terms per output slot.
struct TransportTable {
    int k = 0;
    int pmax = 0, qmax = 0;
    // [(p*(k+1) + j)*(qmax+1) + q][slot] -> sparse terms
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> entries;

    const std::vector<std::vector<std::pair<int, Scalar>>>&
    at(int p, int j, int q) const {
        return entries[static_cast<std::size_t>((p * (k + 1) + j) * (qmax + 1) + q)];
    }
};

TransportTable build_transport_table(int k, const Scalar& w) {
    TransportTable t;
    t.k = k;
    t.pmax = k + 4;
    t.qmax = k + 2;
    t.entries.resize(static_cast<std::size_t>((t.pmax + 1) * (k + 1) * (t.qmax + 1)));
    for (int p = 0; p <= t.pmax; ++p) {
        const VectorField X(Poly::monomial(p));
        for (int j = 0; j <= k; ++j)
            for (int q = 0; q <= t.qmax; ++q) {
                std::vector<Poly> bars(static_cast<std::size_t>(k) + 1);
                bars[static_cast<std::size_t>(j)] = Poly::monomial(q);
                const NormalSymbol out = symbol_action(X, NormalSymbol(w, std::move(bars)));
                auto& entry = t.entries[static_cast<std::size_t>(
                    (p * (k + 1) + j) * (t.qmax + 1) + q)];
                entry.resize(static_cast<std::size_t>(k) + 1);
                for (int i = 0; i <= k; ++i)
                    for (int d = 0; d <= out.bar(i).degree(); ++d)
                        if (!out.bar(i).coeff(d).is_zero())
                            entry[static_cast<std::size_t>(i)].emplace_back(d, out.bar(i).coeff(d));
            }
    }
    return t;
}

const TransportTable& transport_table(int k, const Scalar& w) {
    static std::mutex mu;
    static std::map<std::pair<int, Scalar>, std::unique_ptr<const TransportTable>> cache;
    const auto key = std::make_pair(k, w);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto table = std::make_unique<const TransportTable>(build_transport_table(k, w));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(table));
    return *it->second;
}

Scalar sparse_coeff(const std::vector<std::pair<int, Scalar>>& terms, int power) {
    for (const auto& [d, c] : terms)
        if (d == power)
            return c;
    return Scalar();
}

} // namespace

IntertwinerVerdict solve_diagonal_intertwiner(int k, const Scalar& lambda, const Scalar& mu) {
    if (k < 1)
        throw domain_error("solve_diagonal_intertwiner requires k >= 1");
    const TransportTable& tl = transport_table(k, lambda);
    const TransportTable& tm = transport_table(k, mu);

    RowReducer red(k + 1);
    for (int p = 0; p <= tl.pmax && red.rank() <= k; ++p)
        for (int j = 0; j <= k; ++j)
            for (int q = 0; q <= tl.qmax; ++q) {
                const auto& u = tl.at(p, j, q);
                const auto& v = tm.at(p, j, q);
                for (int i = 0; i <= k; ++i) {
                    // alpha_i * U_i - alpha_j * V_i = 0, one row per power
                    std::vector<int> powers;
                    for (const auto& [d, c] : u[static_cast<std::size_t>(i)])
                        powers.push_back(d);
                    for (const auto& [d, c] : v[static_cast<std::size_t>(i)])
                        if (sparse_coeff(u[static_cast<std::size_t>(i)], d).is_zero())
                            powers.push_back(d);
                    for (int d : powers) {
                        const Scalar cu = sparse_coeff(u[static_cast<std::size_t>(i)], d);
                        const Scalar cv = sparse_coeff(v[static_cast<std::size_t>(i)], d);
                        std::vector<Scalar> row(static_cast<std::size_t>(k) + 1);
                        row[static_cast<std::size_t>(i)] += cu;
                        row[static_cast<std::size_t>(j)] -= cv;
                        bool zero = true;
                        for (const Scalar& s : row)
                            if (!s.is_zero()) {
                                zero = false;
                                break;
                            }
                        if (!zero)
                            red.add_row(std::move(row));
                    }
                }
            }

    IntertwinerVerdict verdict;
    auto basis = red.nullspace();
    verdict.solution_dimension = static_cast<int>(basis.size());
    for (int i = 0; i <= k; ++i) {
        bool always_zero = true;
        for (const auto& v : basis)
            if (!v[static_cast<std::size_t>(i)].is_zero()) {
                always_zero = false;
                break;
            }
        if (always_zero)
            verdict.degenerate_slots.push_back(i);
    }
    // Some combination of basis vectors avoids every coordinate hyperplane
    // unless a slot vanishes on the whole solution space.
    verdict.status = (!basis.empty() && verdict.degenerate_slots.empty())
                         ? IsoStatus::isomorphic
                         : IsoStatus::not_isomorphic;
    for (auto& v : basis) {
        DiagonalMap m;
        m.order = k;
        m.source_weight = lambda;
        m.target_weight = mu;
        m.alphas = std::move(v);
        verdict.basis.push_back(std::move(m));
    }
    return verdict;
}

namespace {

DiagonalMap t_diagonal(const Scalar& lambda, const Scalar& mu) {
    check_non_critical3(lambda, "lambda");
    check_non_critical3(mu, "mu");
    DiagonalMap m;
    m.order = 3;
    m.source_weight = lambda;
    m.target_weight = mu;
    m.alphas = {poly_w_w1(mu) * poly_2w1(mu) / (poly_w_w1(lambda) * poly_2w1(lambda)),
                poly_3w2(mu) / poly_3w2(lambda),
                poly_2w1(mu) / poly_2w1(lambda),
                Scalar(1)};
    return m;
}

} // namespace

DiffOp apply_T(const DiffOp& A, const Scalar& mu) {
    if (A.normalized().order() > 3)
        throw domain_error("apply_T expects an operator of order <= 3");
    return t_diagonal(A.weight(), mu).apply_to_operator(A);
}

DiffOp t_generator_reference(const Poly& f, const Scalar& lambda, const Scalar& mu) {
    check_non_critical3(lambda, "lambda");
    check_non_critical3(mu, "mu");
    const Scalar factor = poly_w_w1(mu) * poly_2w1(mu) / (poly_w_w1(lambda) * poly_2w1(lambda));
    return DiffOp::multiplication(mu, f.scaled(factor));
}

DiffOp t_generator_reference(const VectorField& X, const Scalar& lambda, const Scalar& mu) {
    check_non_critical3(lambda, "lambda");
    check_non_critical3(mu, "mu");
    return lie_op(X, mu).scaled(poly_3w2(mu) / poly_3w2(lambda));
}

DiffOp t_generator_reference(const VectorField& X, const VectorField& Y,
                        const Scalar& lambda, const Scalar& mu) {
    check_non_critical3(lambda, "lambda");
    check_non_critical3(mu, "mu");
    return anticommutator(lie_op(X, mu), lie_op(Y, mu)).scaled(poly_2w1(mu) / poly_2w1(lambda));
}

DiffOp t_generator_reference(const VectorField& X, const VectorField& Y, const VectorField& Z,
                        const Scalar& lambda, const Scalar& mu) {
    check_non_critical3(lambda, "lambda");
    check_non_critical3(mu, "mu");
    return sym3(X, Y, Z, mu);
}

DiffOp t_closed_form(const DiffOp& A, const Scalar& mu) {
    const Scalar& l = A.weight();
    check_non_critical3(l, "lambda");
    check_non_critical3(mu, "mu");
    if (A.normalized().order() > 3)
        throw domain_error("t_closed_form expects an operator of order <= 3");
    const DiffOp B = A.padded(3);
    const Poly &a0 = B.coeff(0), &a1 = B.coeff(1), &a2 = B.coeff(2), &a3 = B.coeff(3);

    const Scalar l2 = l * l, l3 = l2 * l, l4 = l3 * l;
    const Scalar m1 = mu, m2 = mu * mu, m3 = m2 * mu;
    const Scalar p1 = poly_2w1(l);       // 2l+1
    const Scalar p2 = poly_3w2(l);       // 3l^2+3l-1
    const Scalar lp1 = l + Scalar(1);

    std::vector<Poly> out(4);
    out[3] = a3;
    out[2] = a2.scaled(poly_2w1(mu) / p1) +
             a3.derivative().scaled(Scalar(3) * (mu - l) / p1);
    out[1] = a1.scaled(poly_3w2(mu) / p2) +
             a2.derivative().scaled((l - mu) * (mu * (Scalar(12) * l - Scalar(1)) - l + Scalar(3)) /
                                    (Scalar(2) * p1 * p2)) +
             a3.derivative(2).scaled(Scalar(Rational(3, 2)) *
                                     (m2 * (Scalar(5) * l - Scalar(1)) -
                                      m1 * (Scalar(6) * l2 + l - Scalar(1)) +
                                      l3 + Scalar(2) * l2 - l) /
                                     (p1 * p2));
    out[0] = a0.scaled(poly_w_w1(mu) * poly_2w1(mu) / (poly_w_w1(l) * p1)) -
             a1.derivative().scaled((m3 * (Scalar(3) * l + Scalar(5)) -
                                     m2 * (Scalar(3) * l2 - Scalar(6)) -
                                     m1 * (Scalar(5) * l2 + Scalar(6) * l)) /
                                    (lp1 * p1 * p2)) +
             a2.derivative(2).scaled((m3 * (Scalar(3) - l) -
                                      m2 * (Scalar(6) * l2 + Scalar(7) * l - Scalar(5)) +
                                      m1 * (Scalar(7) * l3 + Scalar(4) * l2 - Scalar(5) * l)) /
                                     (Scalar(2) * lp1 * p1 * p2)) -
             a3.derivative(3).scaled((m3 * (Scalar(3) * l2 + Scalar(1)) -
                                      Scalar(3) * m2 * (l2 + Scalar(2) * l - Scalar(1)) -
                                      m1 * (Scalar(3) * l4 - Scalar(3) * l3 -
                                            Scalar(5) * l2 + Scalar(3) * l)) /
                                     (Scalar(2) * lp1 * p1 * p2));
    return DiffOp(mu, std::move(out));
}

} // namespace diffmod
