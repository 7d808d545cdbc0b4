#include <doctest.h>

#include "support.hpp"

#include "dcas/diagonal.hpp"
#include "dcas/error.hpp"
#include "dcas/multipoly.hpp"

#include <random>

using namespace dcas;

namespace {

RationalFunction E(const std::string& s, const VarList& v) { return parse_expression(s, v); }

std::vector<Rat> diag_coeffs(const RationalFunction& r, int N, bool force = false) {
    return diagonal(r, N, force).coeffs();
}

std::vector<Rat> oracle(const RationalFunction& r, int N) { return test::brute_diagonal(r.num(), r.den(), N); }

}  // namespace

TEST_SUITE("diagonal") {

TEST_CASE("central binomials") {
    CHECK(diag_coeffs(E("1/(1-x-y)", {"x", "y"}), 3) == test::ints({"1", "2", "6", "20"}));
    std::vector<Rat> d3 = diag_coeffs(E("1/(1-x-y-z)", {"x", "y", "z"}), 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(d3[n] == test::factorial(3 * n) / (test::factorial(n) * test::factorial(n) * test::factorial(n)));
}

TEST_CASE("agrees with the brute-force expansion") {
    VarList v{"x", "y", "z"};
    for (const char* s : {"1/(1+x+y+z+x*y+y*z-x^3*y*z)", "(1+x)/(1-x-2*y*z+x*y^2)", "1/(3-x-y-z-x*y*z)",
                          "x*y/(1-x-y-z)", "1/(x^2+y^2+z^2+x*y*z-4)"}) {
        RationalFunction r = E(s, v);
        CHECK_MESSAGE(diag_coeffs(r, 6) == oracle(r, 6), s);
    }
}

TEST_CASE("four-variable example") {
    RationalFunction r = E("1/(1+3*y+z+9*y*z+11*z^2*y+3*u*x)", {"x", "y", "z", "u"});
    CHECK(diag_coeffs(r, 5) == test::ints({"1", "0", "648", "-72900", "1224720", "-330674400"}));
}

TEST_CASE("vanishing diagonal") {
    RationalFunction r = E("x*y*z/((1+z)^2-x*(1-x)*(x-x*y*z*w)*y*(1-y)*(y-x*y*z*w))", {"x", "y", "z", "w"});
    CHECK(diagonal(r, 4, true).is_zero());
}

TEST_CASE("errors and the size guard") {
    VarList v4{"x", "y", "z", "w"};
    CHECK_THROWS_AS(diagonal(E("1/(x+y)", {"x", "y"}), 3), Error);
    try {
        diagonal(E("1/(1-x-y-z-w)", v4), 20);
        FAIL("guard should refuse");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
    CHECK(diagonal(E("1/(1-x-y-z-w)", v4), 15).order() == 15);
    CHECK_THROWS_AS(diagonal(E("1/(1-x)", {"x"}), -1), Error);
    CHECK(diag_coeffs(E("1/(1-2*x)", {"x"}), 4) == test::ints({"1", "2", "4", "8", "16"}));
}

TEST_CASE("linearity and relabeling") {
    VarList v{"x", "y", "z"};
    RationalFunction r = E("1/(1-x-y-z+x*y)", v), s = E("(1+z)/(2-x-y*z)", v);
    Rat a(3, 2), b(-7);
    std::vector<Rat> lhs = diag_coeffs(RationalFunction(MultiPoly::constant(v, a)) * r +
                                           RationalFunction(MultiPoly::constant(v, b)) * s,
                                       7);
    std::vector<Rat> dr = diag_coeffs(r, 7), ds = diag_coeffs(s, 7);
    for (int n = 0; n <= 7; ++n) CHECK(lhs[n] == a * dr[n] + b * ds[n]);

    std::map<std::string, RationalFunction> perm{{"x", E("z", v)}, {"y", E("x", v)}, {"z", E("y", v)}};
    CHECK(diag_coeffs(substitute(r, perm, v), 7) == dr);
}

TEST_CASE("monomial transforms") {
    VarList v{"x", "y", "z"};
    RationalFunction r = E("1/(1-x-y-z)", v);
    MonomialMap id = MonomialMap::from_columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id.check() == 1);
    CHECK(monomial_transform(r, id) == r);

    // The three exponent vectors are the rows here: each variable then has
    // total exponent 2 across the images.
    MonomialMap m{{{1, 1, 0}, {0, 1, 1}, {2, 0, 0}}};
    CHECK(m.check() == 2);
    RationalFunction t = monomial_transform(r, m);
    std::vector<Rat> dt = diag_coeffs(t, 12), dr = diag_coeffs(r, 6), bt = oracle(t, 12);
    CHECK(dt == bt);
    for (int n = 0; n <= 12; ++n) CHECK(dt[n] == (n % 2 ? Rat(0) : dr[n / 2]));

    CHECK_THROWS_AS(MonomialMap::from_columns({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}).check(), Error);
    CHECK_THROWS_AS(MonomialMap::from_columns({{1, 0}, {0, 1}, {1, 1}}).check(), Error);
}

TEST_CASE("power substitution") {
    VarList v{"x", "y", "z"};
    RationalFunction r = E("1/(2+3*x+5*y+7*z+11*y*z+13*x*z+17*x*y+19*y^2*z+23*z*x^2)", v);
    CHECK(power_substitution(r, 1) == r);
    RationalFunction r2 = power_substitution(r, 2);
    CHECK(equivalent(r2, E("1/(2+3*x^2+5*y^2+7*z^2+11*y^2*z^2+13*x^2*z^2+17*x^2*y^2+19*y^4*z^2+23*z^2*x^4)", v)));
    std::vector<Rat> d1 = diag_coeffs(r, 3), d2 = diag_coeffs(r2, 6);
    for (int n = 0; n <= 6; ++n) CHECK(d2[n] == (n % 2 ? Rat(0) : d1[n / 2]));

    RationalFunction q = E("1/(1-x-y-z)", v);
    std::vector<Rat> d3 = diag_coeffs(power_substitution(q, 3), 9), dq = diag_coeffs(q, 3);
    for (int n = 0; n <= 9; ++n) CHECK(d3[n] == (n % 3 ? Rat(0) : dq[n / 3]));
    CHECK_THROWS_AS(power_substitution(q, 0), Error);
}

TEST_CASE("random integrands against the brute-force expansion") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> c(-4, 4), e(0, 2);
    VarList v{"x", "y", "z"};
    for (int it = 0; it < 100; ++it) {
        MultiPoly den = MultiPoly::constant(v, 1 + (it % 3));
        for (int t = 0; t < 4; ++t) {
            Monomial m{e(rng), e(rng), e(rng)};
            if (m != Monomial{0, 0, 0}) den.add_term(m, c(rng));
        }
        MultiPoly num = MultiPoly::constant(v, 1);
        num.add_term({e(rng), e(rng), 0}, c(rng));
        RationalFunction r(num, den);
        CHECK(diag_coeffs(r, 4) == oracle(r, 4));
    }
}

}  // TEST_SUITE
