#include <doctest.h>

#include "csf/poly.hpp"

using namespace csf;

TEST_CASE("UniPoly arithmetic and evaluation") {
    UniPoly f({1, 2, 3}); // 1 + 2q + 3q^2
    UniPoly g({0, -2});   // -2q
    CHECK(f.degree() == 2);
    CHECK((f + g) == UniPoly({1, 0, 3}));
    CHECK((f * g) == UniPoly({0, -2, -4, -6}));
    CHECK(f(2) == Rational(17));
    CHECK(f.coeff(5) == 0);
    CHECK(UniPoly({1, 1}).pow(3) == UniPoly({1, 3, 3, 1}));
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
}

TEST_CASE("UniPoly trims leading zeros") {
    UniPoly f({1, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK(f == UniPoly({1, 2}));
}

TEST_CASE("rev_n reverses coefficients against a fixed degree") {
    UniPoly f({2, 0, 1}); // 2 + q^2
    CHECK(rev_n(f, 2) == UniPoly({1, 0, 2}));
    CHECK(rev_n(f, 3) == UniPoly({0, 1, 0, 2}));
    CHECK(rev_n(rev_n(f, 3), 3) == f);
}

TEST_CASE("UniPoly string and json forms") {
    UniPoly f({Rational(1, 2), 0, 3});
    CHECK(f.str("q") == "3*q^2 + 1/2");
    CHECK(unipoly_json(f) == R"({"coeffs":["1/2","0","3"],"var":"q"})");
    CHECK(unipoly_json(UniPoly::monomial(1, 1)) == R"({"coeffs":["0","1"],"var":"q"})");
}

TEST_CASE("MultiPoly product, coefficient extraction, derivative") {
    MultiPoly x0 = MultiPoly::var(3, 0);
    MultiPoly x1 = MultiPoly::var(3, 1);
    MultiPoly x2 = MultiPoly::var(3, 2);
    MultiPoly p = (x0 + x1) * (x0 + x2); // x0^2 + x0x2 + x0x1 + x1x2
    CHECK(p.coeff({2, 0, 0}) == 1);
    CHECK(p.coeff({1, 1, 0}) == 1);
    CHECK(p.coeff({0, 2, 0}) == 0);

    MultiPoly c1 = p.coeff_of(0, 1); // x1 + x2
    CHECK(c1 == x1 + x2);
    CHECK(p.coeff_of(0, 2) == MultiPoly::constant(3, 1));

    // d/dx0 (x0^2 + x0x1 + x0x2 + x1x2) = 2x0 + x1 + x2
    CHECK(p.derivative(0) == x0.scaled(2) + x1 + x2);
}

TEST_CASE("MultiPoly specialization to a univariate polynomial") {
    // x0*x1^2 + x2 with x0 -> q, x1 -> q, x2 -> 2 gives q^3 + 2.
    MultiPoly p(3);
    p.add_term({1, 2, 0}, 1);
    p.add_term({0, 0, 1}, 1);
    UniPoly f = specialize_uni(
        p, {VarTarget::q_power(1), VarTarget::q_power(1), VarTarget::constant(2)});
    CHECK(f == UniPoly({2, 0, 0, 1}));

    // Keeping a variable yields a MultiPoly again (q-powers are only allowed
    // in full specializations).
    auto v = specialize(p, {VarTarget::keep(), VarTarget::constant(1), VarTarget::constant(2)});
    REQUIRE(std::holds_alternative<MultiPoly>(v));
    MultiPoly kept = std::get<MultiPoly>(v); // x0*1^2 + 2 = x0 + 2
    CHECK(kept.coeff({1, 0, 0}) == 1);
    CHECK(kept.coeff({0, 0, 0}) == 2);
    CHECK_THROWS(specialize(p, {VarTarget::keep(), VarTarget::q_power(1),
                                VarTarget::constant(2)}));
}

TEST_CASE("rational helpers") {
    CHECK(rational_str(Rational(-1, 2)) == "-1/2");
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("-3/6") == Rational(-1, 2)); // parsing canonicalizes
    CHECK(is_integral(parse_rational("8/4")));
    CHECK(!is_integral(Rational(1, 3)));
    CHECK(to_integer(parse_rational("8/4")) == 2);
}
