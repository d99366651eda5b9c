#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diffmod/json_io.hpp"

using namespace diffmod;

namespace {

std::mt19937_64 rng(0x7e87u);

Scalar random_scalar() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> pick(0, 3);
    const Rational a(num(rng), den(rng));
    if (pick(rng) == 0)
        return Scalar(a, Rational(num(rng), den(rng)));
    return Scalar(a);
}

Poly random_poly(int maxdeg = 6) {
    std::uniform_int_distribution<int> deg(-1, maxdeg);
    const int d = deg(rng);
    std::vector<Scalar> c(static_cast<std::size_t>(d + 1));
    for (auto& s : c)
        s = random_scalar();
    return Poly(std::move(c));
}

DiffOp random_op() {
    std::uniform_int_distribution<int> ord(0, 4);
    std::vector<Poly> coeffs(static_cast<std::size_t>(ord(rng)) + 1);
    for (auto& p : coeffs)
        p = random_poly(4);
    return DiffOp(random_scalar(), std::move(coeffs));
}

NormalSymbol random_symbol() {
    std::uniform_int_distribution<int> ord(0, 4);
    std::vector<Poly> bars(static_cast<std::size_t>(ord(rng)) + 1);
    for (auto& p : bars)
        p = random_poly(4);
    return NormalSymbol(random_scalar(), std::move(bars));
}

} // namespace

TEST_CASE("parse examples") {
    CHECK(parse_poly("x^2 - 1/2") ==
          Poly({Scalar(Rational(-1, 2)), Scalar(0), Scalar(1)}));
    const DiffOp A = parse_operator("x*D^3 + (1 + r21)*D", Scalar(0));
    CHECK(A.order() == 3);
    CHECK(A.coeff(3) == Poly::x());
    CHECK(A.coeff(2).is_zero());
    CHECK(A.coeff(1) == Poly(Scalar(Rational(1), Rational(1))));
    CHECK(A.coeff(0).is_zero());
    CHECK(parse_scalar("-1/2 + 1/6*r21") == Scalar(Rational(-1, 2), Rational(1, 6)));
    CHECK(parse_scalar("2/4") == Scalar(Rational(1, 2)));
    CHECK(parse_poly("(x + 1)*(x - 1)") == Poly::monomial(2) - Poly(1));
    CHECK(parse_operator("D*x", Scalar(0)) == parse_operator("x*D", Scalar(0)));
    CHECK(parse_operator("(x + D)*D", Scalar(0)) ==
          parse_operator("x*D + D^2", Scalar(0)));
}

TEST_CASE("parse diagnostics carry positions") {
    CHECK_THROWS_AS(parse_poly("x +"), parse_error);
    CHECK_THROWS_AS(parse_poly("(x"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);
    CHECK_THROWS_AS(parse_poly("x/2"), parse_error);
    CHECK_THROWS_AS(parse_poly("y"), parse_error);
    try {
        parse_poly("x^2 + D");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()) == "D in polynomial context");
        CHECK(e.position() == 6);
    }
    try {
        parse_scalar("1 + x");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("operator order control") {
    CHECK(parse_operator("D^2", Scalar(1), 4).order() == 4);
    CHECK_THROWS_AS(parse_operator("D^4", Scalar(1), 2), domain_error);
    CHECK(parse_symbol("xi^2 + 1", Scalar(1), 3).order() == 3);
}

TEST_CASE("print canonical forms") {
    CHECK(print(Poly({Scalar(0), Scalar(1)})) == "x");
    CHECK(print(lie_op(VectorField(Poly::monomial(2)), Scalar(Rational(1, 2)))) ==
          "x^2*D - x");
    CHECK(print(DiffOp(Scalar(0), {})) == "0");
    CHECK(print(DiffOp::zero(Scalar(2), 3)) == "0");
    CHECK(print(Poly()) == "0");
    CHECK(print(Scalar(Rational(-1, 2), Rational(1, 6))) == "-1/2+1/6*r21");
    CHECK(print(parse_symbol("x*xi^2 + xi + 1", Scalar(0))) == "x*xi^2 + xi + 1");
    CHECK(print(parse_operator("-D^2 + (1 - r21)*x*D", Scalar(0))) ==
          "-D^2 + (1-r21)*x*D");
    CHECK(print(parse_poly("x^3 - 2*x + 5")) == "x^3 - 2*x + 5");
}

TEST_CASE("parse/print round trip on random values") {
    for (int i = 0; i < 500; ++i) {
        const Scalar s = random_scalar();
        CHECK(parse_scalar(print(s)) == s);
    }
    for (int i = 0; i < 500; ++i) {
        const Poly p = random_poly();
        CHECK(parse_poly(print(p)) == p);
    }
    for (int i = 0; i < 500; ++i) {
        const DiffOp A = random_op();
        const DiffOp back = parse_operator(print(A), A.weight());
        CHECK(back == A);
    }
    for (int i = 0; i < 500; ++i) {
        const NormalSymbol S = random_symbol();
        const NormalSymbol back = parse_symbol(print(S), S.weight);
        CHECK(back == S);
    }
}

TEST_CASE("print is deterministic") {
    const DiffOp A = random_op();
    CHECK(print(A) == print(A));
}

TEST_CASE("json round trips") {
    for (int i = 0; i < 100; ++i) {
        const DiffOp A = random_op();
        CHECK(diffop_from_json(to_json(A)) == A);
        const NormalSymbol S = random_symbol();
        CHECK(symbol_from_json(to_json(S)) == S);
        const Density d(random_scalar(), random_poly());
        CHECK(density_from_json(to_json(d)) == d);
    }
    Cochain1 c(Scalar(Rational(1, 2)), 3);
    c.set_term(3, 0, Scalar(1));
    c.set_term(2, 1, Scalar(Rational(2), Rational(1, 3)));
    CHECK(cochain_from_json(to_json(c)) == c);
    CHECK(to_json(c)["terms"].contains("2,1"));

    const IntertwinerVerdict v =
        solve_diagonal_intertwiner(3, Scalar(Rational(1, 3)), Scalar(Rational(1, 5)));
    const IntertwinerVerdict w = verdict_from_json(to_json(v));
    CHECK(w.status == v.status);
    CHECK(w.solution_dimension == v.solution_dimension);
    REQUIRE(w.basis.size() == v.basis.size());
    for (std::size_t i = 0; i < v.basis.size(); ++i)
        CHECK(w.basis[i].alphas == v.basis[i].alphas);
    CHECK(w.degenerate_slots == v.degenerate_slots);
}

TEST_CASE("json schema fields") {
    const DiffOp A = parse_operator("x*D^2 + 1", Scalar(Rational(1, 2)));
    const auto j = to_json(A);
    CHECK(j["kind"] == "diffop");
    CHECK(j["lambda"] == "1/2");
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0] == nlohmann::json::array({"1"}));
    CHECK(j["coeffs"][2] == nlohmann::json::array({"0", "1"}));
}
