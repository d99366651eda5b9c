#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <random>
#include <thread>
#include <vector>

#include "diffmod/errors.hpp"
#include "diffmod/linalg.hpp"
#include "diffmod/symbol.hpp"

using namespace diffmod;

namespace {

std::mt19937_64 rng(0x57a6u);

const Scalar kHalf(Rational(1, 2));
const Scalar kCrit = Scalar(Rational(-1, 2)) + Scalar(Rational(0), Rational(1, 6));

VectorField vf(int degree) { return VectorField(Poly::monomial(degree)); }

std::vector<Scalar> test_weights() {
    return {Scalar(0), Scalar(-1), -kHalf, Scalar(Rational(1, 3)), kCrit};
}

Poly random_poly(int maxdeg) {
    std::uniform_int_distribution<int> deg(-1, maxdeg);
    std::uniform_int_distribution<long> num(-6, 6);
    const int d = deg(rng);
    std::vector<Scalar> c(static_cast<std::size_t>(d + 1));
    for (auto& s : c)
        s = Scalar(Rational(num(rng), 2));
    return Poly(std::move(c));
}

DiffOp random_op(const Scalar& w, int order) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    for (auto& p : coeffs)
        p = random_poly(4);
    return DiffOp(w, std::move(coeffs));
}

const Scalar& alpha_of(const SymbolScheme& s, int j, int i) {
    return s.alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

} // namespace

TEST_CASE("scheme pins the displayed low-order coefficients") {
    for (const Scalar& w : test_weights()) {
        const SymbolScheme& s4 = derive_scheme(4, w);
        CHECK(alpha_of(s4, 4, 3) == kHalf * (Scalar(2) * w - Scalar(3)));
        const SymbolScheme& s1 = derive_scheme(1, w);
        CHECK(alpha_of(s1, 1, 1) == Scalar(1));
        CHECK(alpha_of(s1, 1, 0) == w);
    }
    // at weight 1/2 the order-2 corrections from the top slot vanish; the
    // a_1' correction in the bottom slot persists (its coefficient is the
    // weight itself, forced by x^2-equivariance)
    const SymbolScheme& s2 = derive_scheme(2, kHalf);
    CHECK(alpha_of(s2, 2, 1).is_zero());
    CHECK(alpha_of(s2, 2, 0).is_zero());
    CHECK(alpha_of(s2, 1, 0) == kHalf);
}

TEST_CASE("scheme columns do not depend on the ambient order") {
    for (const Scalar& w : {Scalar(Rational(2, 7)), kCrit})
        for (int k = 1; k <= 5; ++k) {
            const SymbolScheme& lo = derive_scheme(k, w);
            const SymbolScheme& hi = derive_scheme(k + 1, w);
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= j; ++i)
                    CHECK(alpha_of(lo, j, i) == alpha_of(hi, j, i));
        }
}

TEST_CASE("to_symbol of the displayed generator examples") {
    const Scalar w(Rational(2, 3));
    SUBCASE("first-order Lie derivative has symbol xi X") {
        const VectorField X(random_poly(4));
        const NormalSymbol S = to_symbol(lie_op(X, w));
        CHECK(S.bar(1) == X.comp);
        CHECK(S.bar(0).is_zero());
    }
    SUBCASE("order-0 operators are their own symbol") {
        const Poly f = random_poly(4);
        const NormalSymbol S = to_symbol(DiffOp::multiplication(w, f));
        CHECK(S.order() == 0);
        CHECK(S.bar(0) == f);
    }
    SUBCASE("anticommutator symbol is 2 xi^2 XY - (2/3)w(w+1)(XY'' + X''Y - X'Y')") {
        const Poly Xc = random_poly(4), Yc = random_poly(4);
        const NormalSymbol S =
            to_symbol(anticommutator(lie_op(VectorField(Xc), w), lie_op(VectorField(Yc), w)));
        CHECK(S.bar(2) == (Xc * Yc).scaled(Scalar(2)));
        CHECK(S.bar(1).is_zero());
        const Poly expect =
            (Xc * Yc.derivative(2) + Xc.derivative(2) * Yc - Xc.derivative() * Yc.derivative())
                .scaled(Scalar(Rational(-2, 3)) * w * (w + Scalar(1)));
        CHECK(S.bar(0) == expect);
    }
    SUBCASE("sym3 symbol matches the displayed third-order expression") {
        const Poly Xc = random_poly(3), Yc = random_poly(3), Zc = random_poly(3);
        const NormalSymbol S =
            to_symbol(sym3(VectorField(Xc), VectorField(Yc), VectorField(Zc), w));
        CHECK(S.bar(3) == (Xc * Yc * Zc).scaled(Scalar(6)));
        CHECK(S.bar(2).is_zero());
        const Poly p2 = Xc * Yc * Zc.derivative(2) + Xc * Yc.derivative(2) * Zc +
                        Xc.derivative(2) * Yc * Zc;
        const Poly bar1 = (p2 - (Xc * Yc * Zc).derivative(2).scaled(Scalar(Rational(1, 5))))
                              .scaled(-(Scalar(3) * w * w + Scalar(3) * w - Scalar(1)));
        CHECK(S.bar(1) == bar1);
        const Poly p3 = Xc * Yc * Zc.derivative(3) + Xc * Yc.derivative(3) * Zc +
                        Xc.derivative(3) * Yc * Zc;
        CHECK(S.bar(0) == p3.scaled(-w * (w + Scalar(1)) * (Scalar(2) * w + Scalar(1))));
    }
}

TEST_CASE("from_symbol inverts to_symbol") {
    for (int trial = 0; trial < 100; ++trial) {
        const Scalar w(Rational(trial % 9 - 4, 3));
        const DiffOp A = random_op(w, trial % 5 + 1);
        CHECK(from_symbol(to_symbol(A)) == A);
        CHECK(from_symbol(to_symbol(A)).order() == A.order());
    }
    const Scalar w(Rational(3, 4));
    const VectorField X(random_poly(4));
    CHECK(from_symbol(NormalSymbol(w, {Poly(), X.comp})) == lie_op(X, w));
    const Poly f = random_poly(3);
    CHECK(from_symbol(NormalSymbol(w, {f})) == DiffOp::multiplication(w, f));
}

TEST_CASE("to_symbol commutes with zero padding") {
    for (int trial = 0; trial < 30; ++trial) {
        const Scalar w(Rational(trial % 7 - 3, 2));
        const DiffOp A = random_op(w, trial % 3 + 1);
        const NormalSymbol S = to_symbol(A);
        NormalSymbol padded = S;
        padded.bars.resize(static_cast<std::size_t>(A.order()) + 3);
        CHECK(to_symbol(A.padded(A.order() + 2)) == padded);
    }
}

TEST_CASE("symbol_action reduces to slotwise Lie derivatives on sl2") {
    for (const Scalar& w : test_weights())
        for (int p = 0; p <= 2; ++p)
            for (int k = 1; k <= 4; ++k)
                for (int j = 0; j <= k; ++j) {
                    std::vector<Poly> bars(static_cast<std::size_t>(k) + 1);
                    bars[static_cast<std::size_t>(j)] = Poly::monomial(3) + Poly::x();
                    const NormalSymbol S(w, bars);
                    const NormalSymbol R = symbol_action(vf(p), S);
                    for (int i = 0; i <= k; ++i)
                        REQUIRE(R.bar(i) == lie(Scalar(i), vf(p), S.bar(i)));
                }
}

TEST_CASE("symbol_action keeps the top slot a density") {
    for (int trial = 0; trial < 30; ++trial) {
        const Scalar w(Rational(trial % 5 - 2, 3));
        const int k = trial % 4 + 1;
        const DiffOp A = random_op(w, k);
        const VectorField X(random_poly(5));
        const NormalSymbol S = to_symbol(A);
        const NormalSymbol R = symbol_action(X, S);
        CHECK(R.bar(k) == lie(Scalar(k), X, S.bar(k)));
    }
}

TEST_CASE("symbol_action equals the explicit order-4 table") {
    for (const Scalar& w : {Scalar(Rational(1, 3)), kCrit, Scalar(-2)})
        for (int p = 0; p <= 6; ++p)
            for (int j = 0; j <= 4; ++j)
                for (int q = 0; q <= 4; ++q) {
                    std::vector<Poly> bars(5);
                    bars[static_cast<std::size_t>(j)] = Poly::monomial(q);
                    const NormalSymbol S(w, bars);
                    REQUIRE(symbol_action(vf(p), S) == symbol_action_table4(vf(p), S));
                }
    CHECK_THROWS_AS(symbol_action_table4(vf(3), NormalSymbol(Scalar(0), {Poly(1)})),
                    domain_error);
}

TEST_CASE("single J-term pickup in the order-4 table") {
    // X = x^3 and a pure top slot: the xi^2 slot gains (2/7)(6w^2+6w-5) * 6
    for (const Scalar& w : test_weights()) {
        std::vector<Poly> bars(5);
        bars[4] = Poly(1);
        const NormalSymbol R = symbol_action(vf(3), NormalSymbol(w, bars));
        const Scalar c =
            Scalar(Rational(2, 7)) * (Scalar(6) * w * w + Scalar(6) * w - Scalar(5));
        CHECK(R.bar(2) == Poly(c * Scalar(6)));
    }
}

TEST_CASE("symbol_action transports the bracket identity") {
    for (const Scalar& w : {Scalar(Rational(1, 5)), kCrit})
        for (int p = 0; p <= 5; ++p)
            for (int q = 0; q <= 5; ++q)
                for (int j = 0; j <= 3; ++j) {
                    std::vector<Poly> bars(4);
                    bars[static_cast<std::size_t>(j)] = Poly::monomial(2);
                    const NormalSymbol S(w, bars);
                    const VectorField X = vf(p), Y = vf(q);
                    const NormalSymbol lhs = symbol_action(vf_commutator(X, Y), S);
                    NormalSymbol rhs = symbol_action(X, symbol_action(Y, S));
                    const NormalSymbol sub = symbol_action(Y, symbol_action(X, S));
                    for (int i = 0; i <= 3; ++i)
                        rhs.bars[static_cast<std::size_t>(i)] -= sub.bar(i);
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("defining conditions have a one-dimensional ray per column") {
    // independent rebuild of the defining system with the diagonal left free
    for (const Scalar& w : {Scalar(Rational(1, 3)), Scalar(0), kCrit})
        for (int k = 1; k <= 5; ++k) {
            const VectorField X = vf(2);
            for (int i = 0; i <= k; ++i) {
                const int nunk = k - i + 1; // alpha[j][i], j = i..k, none pinned
                RowReducer red(nunk);
                for (int j0 = i; j0 <= k; ++j0)
                    for (int q = 0; q <= k + 2; ++q) {
                        std::vector<Poly> coeffs(static_cast<std::size_t>(k) + 1);
                        coeffs[static_cast<std::size_t>(j0)] = Poly::monomial(q);
                        const DiffOp adA = ad_action(X, DiffOp(w, std::move(coeffs)));
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
                            for (int j = i; j <= k; ++j)
                                row[static_cast<std::size_t>(j - i)] =
                                    cj[static_cast<std::size_t>(j)].coeff(d);
                            red.add_row(std::move(row));
                        }
                    }
                const auto ns = red.nullspace();
                REQUIRE(ns.size() == 1);
                // the ray normalised at the diagonal slot is the derived column
                const Scalar& diag = ns[0][0];
                REQUIRE(!diag.is_zero());
                const SymbolScheme& scheme = derive_scheme(k, w);
                for (int j = i; j <= k; ++j)
                    CHECK(ns[0][static_cast<std::size_t>(j - i)] / diag ==
                          alpha_of(scheme, j, i));
            }
        }
}

TEST_CASE("scheme cache is safe for concurrent readers") {
    const Scalar w(Rational(4, 9));
    const NormalSymbol expect = to_symbol(random_op(w, 4));
    std::vector<std::thread> workers;
    std::array<bool, 8> ok{};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            bool good = true;
            for (int i = 0; i < 20; ++i) {
                const Scalar wt(Rational(i % 5 - 2, t % 3 + 1));
                const DiffOp A = DiffOp(wt, {Poly(1), Poly::x(), Poly::monomial(2)});
                good = good && from_symbol(to_symbol(A)) == A;
            }
            ok[static_cast<std::size_t>(t)] = good;
        });
    for (auto& th : workers)
        th.join();
    for (bool good : ok)
        CHECK(good);
}

TEST_CASE("scheme entries interpolate to the displayed weight polynomials") {
    // six sample weights pin polynomials of degree <= 4 in the weight
    const int k = 4;
    std::vector<Scalar> nodes;
    for (long t = 0; t < 6; ++t)
        nodes.push_back(Scalar(t));

    auto interpolate = [&](int j, int i) {
        std::vector<Scalar> coeffs(6);
        for (std::size_t t = 0; t < nodes.size(); ++t) {
            const Scalar val = alpha_of(derive_scheme(k, nodes[t]), j, i);
            std::vector<Scalar> numer = {Scalar(1)};
            Scalar denom(1);
            for (std::size_t u = 0; u < nodes.size(); ++u) {
                if (u == t)
                    continue;
                std::vector<Scalar> next(numer.size() + 1);
                for (std::size_t d = 0; d < numer.size(); ++d) {
                    next[d] -= numer[d] * nodes[u];
                    next[d + 1] += numer[d];
                }
                numer = std::move(next);
                denom *= nodes[t] - nodes[u];
            }
            for (std::size_t d = 0; d < numer.size(); ++d)
                coeffs[d] += numer[d] * val / denom;
        }
        return coeffs;
    };

    auto expect = [](std::vector<Rational> v) {
        std::vector<Scalar> out(6);
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = Scalar(v[i]);
        return out;
    };

    CHECK(interpolate(4, 3) == expect({Rational(-3, 2), Rational(1)}));
    CHECK(interpolate(3, 2) == expect({Rational(-1), Rational(1)}));
    CHECK(interpolate(4, 2) == expect({Rational(6, 7), Rational(-10, 7), Rational(4, 7)}));
    CHECK(interpolate(2, 1) == expect({Rational(-1, 2), Rational(1)}));
    CHECK(interpolate(3, 1) == expect({Rational(3, 10), Rational(-9, 10), Rational(3, 5)}));
    CHECK(interpolate(4, 1) ==
          expect({Rational(-1, 5), Rational(11, 15), Rational(-4, 5), Rational(4, 15)}));
    CHECK(interpolate(1, 0) == expect({Rational(0), Rational(1)}));
    CHECK(interpolate(2, 0) == expect({Rational(0), Rational(-1, 3), Rational(2, 3)}));
    CHECK(interpolate(3, 0) ==
          expect({Rational(0), Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
    CHECK(interpolate(4, 0) ==
          expect({Rational(0), Rational(-1, 10), Rational(11, 30), Rational(-2, 5),
                  Rational(2, 15)}));
}
