#include "diffmod/symbol.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "diffmod/errors.hpp"
#include "diffmod/linalg.hpp"

namespace diffmod {

namespace {
const Poly kZeroPoly{};
} // namespace

const Poly& NormalSymbol::bar(int i) const {
    if (i < 0 || i >= static_cast<int>(bars.size()))
        return kZeroPoly;
    return bars[static_cast<std::size_t>(i)];
}

bool operator==(const NormalSymbol& a, const NormalSymbol& b) {
    if (a.weight != b.weight)
        return false;
    const int n = std::max(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.bar(i) != b.bar(i))
            return false;
    return true;
}

NormalSymbol SymbolScheme::to_symbol(const DiffOp& A) const {
    if (A.order() != order)
        throw internal_error("scheme order does not match operator order");
    std::vector<Poly> bars(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        for (int j = i; j <= order; ++j) {
            const Scalar& c = alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (c.is_zero() || A.coeff(j).is_zero())
                continue;
            bars[static_cast<std::size_t>(i)] += A.coeff(j).derivative(j - i).scaled(c);
        }
    return NormalSymbol(A.weight(), std::move(bars));
}

DiffOp SymbolScheme::from_symbol(const NormalSymbol& S) const {
    if (S.order() != order)
        throw internal_error("scheme order does not match symbol order");
    std::vector<Poly> a(static_cast<std::size_t>(order) + 1);
    for (int i = order; i >= 0; --i) {
        Poly v = S.bar(i);
        for (int j = i + 1; j <= order; ++j) {
            const Scalar& c = alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (c.is_zero() || a[static_cast<std::size_t>(j)].is_zero())
                continue;
            v -= a[static_cast<std::size_t>(j)].derivative(j - i).scaled(c);
        }
        a[static_cast<std::size_t>(i)] = std::move(v);
    }
    return DiffOp(S.weight, std::move(a));
}

namespace {

// Column-by-column solve of the defining conditions: for X = x^2 d/dx and
// every basis operator (slot j0 = x^q), the slot-i component of the symbol
// of ad_X(A) must equal L^i_X of the slot-i component of the symbol of A.
SymbolScheme derive_scheme_uncached(int k, const Scalar& lambda) {
    const VectorField X(Poly::monomial(2));
    const int qmax = k + 2;

    // ad_X of every basis operator
    std::map<std::pair<int, int>, DiffOp> ad_basis;
    for (int j0 = 0; j0 <= k; ++j0)
        for (int q = 0; q <= qmax; ++q) {
            std::vector<Poly> coeffs(static_cast<std::size_t>(k) + 1);
            coeffs[static_cast<std::size_t>(j0)] = Poly::monomial(q);
            ad_basis.emplace(std::make_pair(j0, q),
                             ad_action(X, DiffOp(lambda, std::move(coeffs))));
        }

    SymbolScheme scheme;
    scheme.order = k;
    scheme.lambda = lambda;
    scheme.alpha.resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        scheme.alpha[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(j) + 1, Scalar());

    for (int i = 0; i <= k; ++i) {
        scheme.alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);
        const int nunk = k - i;
        if (nunk == 0)
            continue;
        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhs;
        for (int j0 = i; j0 <= k; ++j0)
            for (int q = 0; q <= qmax; ++q) {
                const DiffOp& adA = ad_basis.at(std::make_pair(j0, q));
                // coefficient polynomial of alpha[j][i] in the defect
                std::vector<Poly> cj(static_cast<std::size_t>(k) + 1);
                int maxdeg = -1;
                for (int j = i; j <= k; ++j) {
                    Poly c = adA.coeff(j).derivative(j - i);
                    if (j == j0)
                        c -= lie(Scalar(i), X, Poly::monomial(q).derivative(j0 - i));
                    maxdeg = std::max(maxdeg, c.degree());
                    cj[static_cast<std::size_t>(j)] = std::move(c);
                }
                for (int d = 0; d <= maxdeg; ++d) {
                    std::vector<Scalar> row(static_cast<std::size_t>(nunk));
                    for (int j = i + 1; j <= k; ++j)
                        row[static_cast<std::size_t>(j - i - 1)] =
                            cj[static_cast<std::size_t>(j)].coeff(d);
                    rows.push_back(std::move(row));
                    rhs.push_back(-cj[static_cast<std::size_t>(i)].coeff(d));
                }
            }
        LinearSolution sol = solve_linear(rows, rhs);
        if (!sol.particular || sol.kernel_dim != 0)
            throw internal_error("normal symbol scheme system is singular at order " +
                                 std::to_string(k) + ", weight " + lambda.str());
        for (int j = i + 1; j <= k; ++j)
            scheme.alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                (*sol.particular)[static_cast<std::size_t>(j - i - 1)];
    }
    return scheme;
}

} // namespace

const SymbolScheme& derive_scheme(int k, const Scalar& lambda) {
    if (k < 0)
        throw domain_error("scheme order must be nonnegative");
    static std::mutex mu;
    static std::map<std::pair<int, Scalar>, std::unique_ptr<const SymbolScheme>> cache;
    const auto key = std::make_pair(k, lambda);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto scheme = std::make_unique<const SymbolScheme>(derive_scheme_uncached(k, lambda));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(scheme));
    return *it->second;
}

NormalSymbol to_symbol(const DiffOp& A) {
    return derive_scheme(A.order(), A.weight()).to_symbol(A);
}

DiffOp from_symbol(const NormalSymbol& S) {
    return derive_scheme(S.order(), S.weight).from_symbol(S);
}

NormalSymbol symbol_action(const VectorField& X, const NormalSymbol& S) {
    return to_symbol(ad_action(X, from_symbol(S)));
}

NormalSymbol symbol_action_table4(const VectorField& X, const NormalSymbol& S) {
    if (S.order() != 4)
        throw domain_error("symbol_action_table4 expects an order-4 symbol");
    const Scalar& l = S.weight;
    const Scalar l2 = l * l;
    const Scalar c24 = Scalar(Rational(2, 7)) * (Scalar(6) * l2 + Scalar(6) * l - Scalar(5));
    const Scalar c13 = Scalar(Rational(2, 5)) * (Scalar(3) * l2 + Scalar(3) * l - Scalar(1));
    const Scalar c14 = Scalar(Rational(1, 6)) * l * (l + Scalar(1)) * (Scalar(2) * l + Scalar(1));
    const Scalar c02 = Scalar(Rational(2, 3)) * l * (l + Scalar(1));
    const Scalar c03 = c14;
    const Scalar c04 = Scalar(Rational(1, 420)) * l * (l + Scalar(1)) *
                       (Scalar(12) * l2 + Scalar(12) * l + Scalar(11));

    std::vector<Poly> out(5);
    for (int i = 0; i <= 4; ++i)
        out[static_cast<std::size_t>(i)] = lie(Scalar(i), X, S.bar(i));
    out[2] += j_op(3, Scalar(4), X, S.bar(4)).scaled(c24);
    out[1] += j_op(3, Scalar(3), X, S.bar(3)).scaled(c13);
    out[1] += j_op(4, Scalar(4), X, S.bar(4)).scaled(c14);
    out[0] += j_op(3, Scalar(2), X, S.bar(2)).scaled(c02);
    out[0] += j_op(4, Scalar(3), X, S.bar(3)).scaled(c03);
    out[0] += j_op(5, Scalar(4), X, S.bar(4)).scaled(c04);
    return NormalSymbol(S.weight, std::move(out));
}

} // namespace diffmod
