// Legendre Hauptmodul gate. Registered as a ctest fixture; every other
// suite requires it, so a broken elliptic pipeline stops the run early.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcas/elliptic.hpp"
#include "dcas/multipoly.hpp"

using namespace dcas;

TEST_CASE("legendre curve gives the classical Hauptmodul") {
    MultiPoly m = parse_polynomial("(1+z)^2-x*(1-x)*(x-p)", {"x", "z", "p"});
    CurvePoly c = CurvePoly::from_multipoly(m, "x", "z", "p");
    Hauptmodul h = hauptmodul(c, "z");
    REQUIRE_FALSE(h.infinite);
    CHECK(unirat_equal(h.value, parse_unirat("27/4*p^2*(1-p)^2/(p^2-p+1)^3", "p")));

    // Pointwise against j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
    for (int n : {2, 3, -5, 7}) {
        for (int d : {1, 4, 11}) {
            Rat l(n, d);
            l.canonicalize();
            Rat s = l * l - l + 1;
            Rat j = 256 * s * s * s / (l * l * (l - 1) * (l - 1));
            CHECK(h.value.eval(l) == 1728 / j);
        }
    }
}
