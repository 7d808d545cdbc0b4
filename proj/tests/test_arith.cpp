#include <doctest.h>

#include "support.hpp"

#include "dcas/error.hpp"
#include "dcas/multipoly.hpp"
#include "dcas/unipoly.hpp"

#include <random>

using namespace dcas;

namespace {

UniPoly P(const char* s) { return to_unirat(parse_expression(s, {"x"}), "x").num(); }

UniPoly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rat> c(deg + 1);
    for (auto& v : c) v = d(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c);
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("6/-4") == Rat(-3, 2));
    CHECK(to_string(parse_rat("-10/4")) == "-5/2");
    CHECK(to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
    CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("exact roots") {
    Int r;
    CHECK(exact_root(Int(6561), 8, r));
    CHECK(r == 3);
    CHECK_FALSE(exact_root(Int(9), 8, r));
    CHECK(exact_root(Int(0), 5, r));
    CHECK(r == 0);
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(poly_gcd(P("x^3+1"), P("x+1")) == P("x+1"));
    CHECK(poly_gcd(P("6*x^2+12*x+6"), P("4*x+4")) == P("x+1"));
    CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
    CHECK(poly_gcd(P("x^2+1"), P("x-3")) == UniPoly::constant(1));
}

TEST_CASE("poly_gcd recovers a planted common factor") {
    std::mt19937_64 rng(test::seed());
    for (int it = 0; it < 100; ++it) {
        UniPoly g = random_poly(rng, 1 + it % 3);
        UniPoly a = random_poly(rng, 1 + it % 4), b = random_poly(rng, 2);
        if (poly_gcd(a, b).degree() > 0) continue;
        UniPoly got = poly_gcd(a * g, b * g);
        CHECK(got == g.monic());
        // Divides both exactly.
        CHECK(divmod(a * g, got).second.is_zero());
        CHECK(divmod(b * g, got).second.is_zero());
    }
}

TEST_CASE("division") {
    auto [q, r] = divmod(P("x^3+2*x+5"), P("x-1"));
    CHECK(q == P("x^2+x+3"));
    CHECK(r == UniPoly::constant(8));
    CHECK(exact_div(P("x^2-1"), P("x+1")) == P("x-1"));
    CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x+1")), Error);
    CHECK_THROWS_AS(divmod(P("x"), UniPoly()), Error);
}

TEST_CASE("unirat normalization") {
    UniRat a = unirat_normalize(P("2*x^2-2"), P("2*x-2"));
    CHECK(a.num() == P("x+1"));
    CHECK(a.den() == UniPoly::constant(1));
    UniRat b = unirat_normalize(P("x"), UniPoly::constant(-2));
    CHECK(b.num() == UniPoly({Rat(0), Rat(-1, 2)}));
    CHECK(b.den() == UniPoly::constant(1));
    UniRat c = unirat_normalize(P("3*x"), P("-6*x^2+4"));
    CHECK(c.den().lc() > 0);
    CHECK(content(c.den()) == 1);
    CHECK_THROWS_AS(unirat_normalize(P("x"), UniPoly()), Error);
    CHECK_THROWS_AS(parse_unirat("1/(x-2)", "x").eval(2), Error);
}

TEST_CASE("unirat equality") {
    UniRat a = parse_unirat("x/(x+1)", "x");
    CHECK(unirat_equal(a, parse_unirat("x/(x+1)", "x")));
    CHECK(unirat_equal(a, parse_unirat("(2*x^2+2*x)/(2*(x+1)^2)", "x")));
    CHECK_FALSE(unirat_equal(parse_unirat("x", "x"), parse_unirat("x+1", "x")));
}

TEST_CASE("1728/J of the quadric-intersection curve is its Hauptmodul") {
    UniRat J = parse_unirat("27*(3523+10496*x)^3/(6724*(2686976*x^3-1614336*x^2+4051257*x-470096))", "x");
    UniRat H = parse_unirat("1-27*(95457-262400*x)^2/(3523+10496*x)^3", "x");
    CHECK(unirat_equal(UniRat::constant(1728) / J, H));
    CHECK_FALSE(unirat_equal(UniRat::constant(1728) / J, H + UniRat::constant(1)));
}

TEST_CASE("random canonical arithmetic") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int it = 0; it < 100; ++it) {
        Rat a(d(rng), 1 + std::abs(d(rng))), b(d(rng), 1 + std::abs(d(rng)));
        a.canonicalize();
        b.canonicalize();
        for (Rat r : {Rat(a + b), Rat(a - b), Rat(a * b)}) {
            CHECK(gcd(r.get_num(), r.get_den()) == 1);
            CHECK(r.get_den() > 0);
        }
        if (b != 0) {
            Rat q = a / b;
            CHECK(gcd(q.get_num(), q.get_den()) == 1);
            CHECK(q * b == a);
        }
        UniPoly p = random_poly(rng, 3), q = random_poly(rng, 2);
        if (!p.is_zero() && !q.is_zero()) {
            UniRat r(p, q);
            CHECK(unirat_equal(r * r.inverse(), UniRat::constant(1)));
        }
    }
}

}  // TEST_SUITE
