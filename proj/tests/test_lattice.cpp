#include <doctest.h>

#include "support.hpp"

#include "dcas/lattice.hpp"
#include "dcas/multipoly.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace dcas;

namespace {

using Pts = std::vector<LatticePoint>;

// Enumeration oracle: strict interior by sign of every edge cross product.
std::int64_t count_interior(const LatticePolygon& p) {
    if (p.degenerate) return 0;
    std::int64_t xmin = INT64_MAX, xmax = INT64_MIN, ymin = INT64_MAX, ymax = INT64_MIN;
    for (const auto& v : p.vertices) {
        xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
    }
    std::int64_t n = 0;
    const std::size_t k = p.vertices.size();
    for (auto x = xmin; x <= xmax; ++x)
        for (auto y = ymin; y <= ymax; ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < k && inside; ++i) {
                const auto& a = p.vertices[i];
                const auto& b = p.vertices[(i + 1) % k];
                inside = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) > 0;
            }
            n += inside;
        }
    return n;
}

Pts support_of(const std::string& curve, const VarList& v) {
    std::set<LatticePoint> pts;
    MultiPoly poly = parse_polynomial(curve, v);
    for (const auto& [m, c] : poly.terms()) pts.insert({m[0], m[1]});
    return Pts(pts.begin(), pts.end());
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("newton polygons") {
    LatticePolygon t = newton_polygon({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
    CHECK_FALSE(t.degenerate);
    CHECK(t.vertices == Pts{{0, 0}, {3, 0}, {0, 3}});
    CHECK(twice_area(t) == 9);

    LatticePolygon seg = newton_polygon({{0, 0}, {1, 1}, {3, 3}});
    CHECK(seg.degenerate);
    CHECK(interior_lattice_points(seg) == 0);
    CHECK(newton_polygon({{2, 5}}).degenerate);
}

TEST_CASE("one interior point triangle") {
    // Support of the bicubic family in x, y.
    Pts s = support_of("a*x*y^2+b1*x^2*y^2+b2*x*y^3+b3*p*y+c1*p*y^2+c2*p*x*y+c3*x^2*y^3+d1*x^3*y^3+d2*y^3+d3*p^2",
                       {"x", "y", "p", "a", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3"});
    LatticePolygon t = newton_polygon(s);
    CHECK(t.vertices == Pts{{0, 0}, {3, 3}, {0, 3}});
    CHECK(interior_points(t) == Pts{{1, 2}});
    CHECK(boundary_lattice_points(t) + interior_lattice_points(t) == 10);

    // Every sub-support with one point dropped: at most 10 points, at most 1 interior.
    std::set<LatticePoint> all;
    for (std::int64_t x = 0; x <= 3; ++x)
        for (std::int64_t y = x; y <= 3; ++y) all.insert({x, y});
    CHECK(all.size() == 10);
    for (const auto& drop : all) {
        Pts sub;
        for (const auto& q : all)
            if (!(q == drop)) sub.push_back(q);
        LatticePolygon h = newton_polygon(sub);
        CHECK(interior_lattice_points(h) <= 1);
    }
}

TEST_CASE("interior counts") {
    LatticePolygon sq = newton_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(interior_lattice_points(sq) == 9);
    CHECK(count_interior(sq) == 9);
    CHECK(interior_lattice_points(newton_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 0);
    CHECK(contains(sq, {4, 2}));
    CHECK_FALSE(contains(sq, {5, 2}));
}

TEST_CASE("generic genus") {
    VarList bq{"x", "y", "p", "a", "b1", "b2", "b3", "c1", "c2", "c3", "d", "e"};
    MultiPoly alg1 = parse_polynomial("a*x*y+b1*x^2*y+b2*x*y^2+b3*p+c1*p*y+c2*p*x+c3*x^2*y^2+d*p*y^2+e*p*x^2", bq);
    CHECK(generic_genus(alg1, "x", "y").generic_genus == 1);
    MultiPoly sq = parse_polynomial(
        "a*x^2*y^2+b1*x^4*y^2+b2*x^2*y^4+b3*p^2+c1*p^2*y^2+c2*p^2*x^2+c3*x^4*y^4+d*p^2*y^4+e*p^2*x^4", bq);
    CHECK(generic_genus(sq, "x", "y").generic_genus == 9);

    VarList v{"x", "y", "p"};
    CHECK(generic_genus(parse_polynomial("x*y+x^2*y+x*y^2+p+x^2*y^2+y*p-x^3*y*p", v), "x", "y").generic_genus == 2);
    CHECK(generic_genus(parse_polynomial("x^4*y^2+x^2*y^4+(p-4)*x^2*y^2+p^2", v), "x", "y").generic_genus == 4);
    CHECK(generic_genus(parse_polynomial("11*y^2*z^3+9*y^2*z^2+3*y^2*z+y*z^2+y*z+3*p", {"y", "z", "p"}), "z", "y")
              .generic_genus == 1);
    CHECK(generic_genus(parse_polynomial("1+x+y", v), "x", "y").generic_genus == 0);
}

TEST_CASE("Pick's theorem and the enumeration oracle on random polygons") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> d(-6, 6), n(3, 9);
    for (int it = 0; it < 100; ++it) {
        Pts s(n(rng));
        for (auto& q : s) q = {d(rng), d(rng)};
        LatticePolygon p = newton_polygon(s);
        if (p.degenerate) continue;
        CHECK(pick_holds(p));
        CHECK(twice_area(p) == 2 * interior_lattice_points(p) + boundary_lattice_points(p) - 2);
        CHECK(interior_lattice_points(p) == count_interior(p));
    }
}

TEST_CASE("interior count is unimodular invariant") {
    std::mt19937_64 rng(test::seed());
    std::uniform_int_distribution<int> d(-5, 5), k(-3, 3);
    for (int it = 0; it < 100; ++it) {
        Pts s(6);
        for (auto& q : s) q = {d(rng), d(rng)};
        // Product of elementary shears: det = 1 (or -1 with the flip).
        std::int64_t a = 1, b = k(rng), c = 0, e = 1;
        std::int64_t s2 = k(rng);
        std::int64_t m00 = a, m01 = b, m10 = c + s2 * a, m11 = e + s2 * b;
        if (it % 2) std::swap(m00, m10), std::swap(m01, m11);
        std::int64_t tx = d(rng), ty = d(rng);
        Pts t;
        for (const auto& q : s) t.push_back({m00 * q.x + m01 * q.y + tx, m10 * q.x + m11 * q.y + ty});
        LatticePolygon p = newton_polygon(s), pt = newton_polygon(t);
        CHECK(p.degenerate == pt.degenerate);
        CHECK(interior_lattice_points(p) == interior_lattice_points(pt));
        CHECK(twice_area(p) == twice_area(pt));
    }
}

}  // TEST_SUITE
