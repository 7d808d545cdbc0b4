#include <doctest.h>

#include "support.hpp"

#include "dcas/diagonal.hpp"
#include "dcas/error.hpp"
#include "dcas/multipoly.hpp"
#include "dcas/ode.hpp"
#include "dcas/series.hpp"

#include <random>

using namespace dcas;

namespace {

UniPoly P(const char* s) { return to_unirat(parse_expression(s, {"x"}), "x").num(); }

DiffOp op(std::initializer_list<const char*> c) {
    std::vector<UniPoly> v;
    for (const char* s : c) v.push_back(P(s));
    return DiffOp(v);
}

PowerSeries hyp(std::vector<Rat> up, std::vector<Rat> lo, int N) { return hypergeom_series(up, lo, N); }

// Order-2 solution from two initial terms via x(1-x)y'' + (c-(a+b+1)x)y' - ab y = 0,
// written out coefficientwise; used as an oracle for apply.
PowerSeries gauss_by_recurrence(const Rat& a, const Rat& b, const Rat& c, int N) {
    PowerSeries s(N);
    s[0] = 1;
    for (int n = 0; n < N; ++n) s[n + 1] = s[n] * (n + a) * (n + b) / ((n + 1) * (n + c));
    return s;
}

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("apply") {
    DiffOp D = op({"0", "1"});
    PowerSeries x({Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(apply(D, x) == PowerSeries({Rat(1), Rat(0), Rat(0)}));

    DiffOp L2 = op({"-1", "4*(1-2*x)", "4*x*(1-x)"});
    PowerSeries f = gauss_by_recurrence(Rat(1, 2), Rat(1, 2), 1, 40);
    CHECK(apply(L2, f).is_zero());
    CHECK(apply(L2, f).order() == 38);
    CHECK_FALSE(apply(L2, gauss_by_recurrence(Rat(1, 2), Rat(1, 3), 1, 40)).is_zero());
    CHECK_THROWS_AS(apply(L2, PowerSeries(1)), Error);
}

TEST_CASE("Painleve telescoper kills its pullbacked solution") {
    AlgebraicPrefactor a;
    a.times(parse_unirat("(x+2)*(x^3+6*x^2-12*x+8)", "x"), Rat(-1, 4));
    PowerSeries s = pullbacked_solution(a, {Rat(1, 12), Rat(5, 12)}, {Rat(1)},
                                        parse_unirat("1728*x^3*(x+8)*(x-1)^2/((x+2)^3*(x^3+6*x^2-12*x+8)^3)", "x"),
                                        30);
    DiffOp L = op({"2+x", "3*x^2+14*x-8", "x*(x+8)*(x-1)"});
    CHECK(apply(L, s).is_zero());
    CHECK(annihilates(L, s));
}

TEST_CASE("guessing") {
    PowerSeries g = PowerSeries::from_unirat(parse_unirat("1/(1-x)", "x"), 30);
    auto L = guess_ode(g, 1, 1);
    REQUIRE(L);
    CHECK(*L == op({"-1", "1-x"}));
    CHECK(annihilates(op({"-1", "1-x"}), g));

    try {
        guess_ode(PowerSeries(11), 4, 8);
        FAIL("12 terms are not enough");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InsufficientTerms);
    }

    // No small operator for an unstructured series.
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> d(-50, 50);
    PowerSeries r(40);
    for (int i = 0; i <= 40; ++i) r[i] = d(rng);
    CHECK_FALSE(guess_ode(r, 1, 2));
}

TEST_CASE("Painleve diagonal gives its telescoper") {
    PowerSeries d = diagonal(parse_expression("1/(x^2+y^2+z^2+x*y*z-4)", {"x", "y", "z"}), 39);
    auto L = guess_ode(d, 2, 3);
    REQUIRE(L);
    DiffOp expect = op({"2+x", "3*x^2+14*x-8", "x*(x+8)*(x-1)"});
    CHECK(*L == expect);
    CHECK(L->canonical().coeffs() == expect.canonical().coeffs());
    CHECK(apply(*L, d).is_zero());
}

TEST_CASE("symmetric square") {
    CHECK(symmetric_square(op({"0", "0", "1"})) == op({"0", "0", "0", "1"}));
    DiffOp M2 = op({"-1", "8*(2-3*x)", "16*x*(1-x)"});
    PowerSeries f = hyp({Rat(1, 4), Rat(1, 4)}, {Rat(1)}, 40);
    CHECK(annihilates(M2, f));
    DiffOp S = symmetric_square(M2);
    CHECK(S.order() == 3);
    CHECK(annihilates(S, f * f));
    CHECK(annihilates(S, hyp({Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}, 40)));
    CHECK_THROWS_AS(symmetric_square(op({"1", "1"})), Error);
}

TEST_CASE("theta form") {
    std::vector<UniPoly> t{P("x"), P("6*x"), P("12*x"), P("8*x-8")};
    DiffOp L = from_theta(t);
    CHECK(L.order() == 3);
    CHECK(to_theta(L) == t);
    CHECK(annihilates(L, hyp({Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}, 40)));
    CHECK_THROWS_AS(to_theta(op({"0", "0", "1"})), Error);
}

TEST_CASE("canonical equality") {
    CHECK(op({"2", "4*x"}) == op({"-1", "-2*x"}));
    CHECK(op({"1/2", "x"}) == op({"1", "2*x"}));
    CHECK_FALSE(op({"1", "x"}) == op({"1", "2*x"}));
}

TEST_CASE("guessed operators annihilate longer expansions") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> n(-7, 7), q(1, 6);
    for (int it = 0; it < 100; ++it) {
        Rat a(n(rng), q(rng)), b(n(rng), q(rng)), c(1 + std::abs(n(rng)), q(rng));
        a.canonicalize(), b.canonicalize(), c.canonicalize();
        UniRat r(UniPoly({Rat(n(rng)), Rat(1)}), UniPoly({Rat(1), Rat(n(rng))}) * UniPoly({Rat(2), Rat(n(rng))}));
        auto expand = [&](int N) {
            return it % 2 ? gauss_by_recurrence(a, b, c, N) : PowerSeries::from_unirat(r, N);
        };
        auto L = guess_ode(expand(40), 2, 3);
        REQUIRE(L);
        CHECK(apply(*L, expand(80)).is_zero());
    }
}

}  // TEST_SUITE
