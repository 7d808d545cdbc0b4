#include "dcas/lattice.hpp"

#include "dcas/error.hpp"

#include <algorithm>
#include <numeric>

namespace dcas {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

LatticePolygon newton_polygon(std::vector<LatticePoint> pts) {
    if (pts.empty()) throw Error(Errc::InvalidArgument, "empty support");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon poly;
    if (pts.size() == 1) {
        poly.vertices = pts;
        poly.degenerate = true;
        return poly;
    }
    // Andrew's monotone chain; collinear points dropped from the vertex list.
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t n = 0;
    for (const auto& p : pts) {
        while (n >= 2 && cross(h[n - 2], h[n - 1], p) <= 0) --n;
        h[n++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = n + 1; i-- > 0;) {
        while (n >= lo && cross(h[n - 2], h[n - 1], pts[i]) <= 0) --n;
        h[n++] = pts[i];
    }
    h.resize(n - 1);
    poly.vertices = h;
    poly.degenerate = h.size() < 3;
    return poly;
}

std::int64_t twice_area(const LatticePolygon& p) {
    if (p.degenerate) return 0;
    std::int64_t a = 0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& s = v[i];
        const auto& t = v[(i + 1) % v.size()];
        a += s.x * t.y - t.x * s.y;
    }
    return a;
}

std::int64_t boundary_lattice_points(const LatticePolygon& p) {
    const auto& v = p.vertices;
    if (v.size() == 1) return 1;
    if (p.degenerate) return std::gcd(std::abs(v[1].x - v[0].x), std::abs(v[1].y - v[0].y)) + 1;
    std::int64_t b = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& s = v[i];
        const auto& t = v[(i + 1) % v.size()];
        b += std::gcd(std::abs(t.x - s.x), std::abs(t.y - s.y));
    }
    return b;
}

std::int64_t interior_lattice_points(const LatticePolygon& p) {
    if (p.degenerate) return 0;
    // Pick: 2A = 2I + B - 2.
    return (twice_area(p) - boundary_lattice_points(p) + 2) / 2;
}

bool contains(const LatticePolygon& p, const LatticePoint& q) {
    const auto& v = p.vertices;
    if (v.size() == 1) return q == v[0];
    if (p.degenerate) {
        if (cross(v[0], v[1], q) != 0) return false;
        return std::min(v[0].x, v[1].x) <= q.x && q.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= q.y && q.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], q) < 0) return false;
    return true;
}

std::vector<LatticePoint> interior_points(const LatticePolygon& p) {
    std::vector<LatticePoint> out;
    if (p.degenerate) return out;
    const auto& v = p.vertices;
    auto [xmin, xmax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.y < b.y; });
    for (std::int64_t x = xmin->x; x <= xmax->x; ++x)
        for (std::int64_t y = ymin->y; y <= ymax->y; ++y) {
            LatticePoint q{x, y};
            bool strict = true;
            for (std::size_t i = 0; i < v.size() && strict; ++i) strict = cross(v[i], v[(i + 1) % v.size()], q) > 0;
            if (strict) out.push_back(q);
        }
    return out;
}

bool pick_holds(const LatticePolygon& p) {
    if (p.degenerate) return true;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) <= 0) return false;
    const std::int64_t I = static_cast<std::int64_t>(interior_points(p).size());
    return twice_area(p) == 2 * I + boundary_lattice_points(p) - 2;
}

static GenusReport genus_of_support(const std::vector<LatticePoint>& support) {
    GenusReport g;
    g.hull = newton_polygon(support);
    g.interior = interior_points(g.hull);
    g.generic_genus = interior_lattice_points(g.hull);
    return g;
}

GenusReport generic_genus(const CurvePoly& c) {
    if (c.is_constant()) throw Error(Errc::InvalidArgument, "constant curve has no genus");
    std::vector<LatticePoint> s;
    for (const auto& [i, j] : c.support()) s.push_back({i, j});
    return genus_of_support(s);
}

GenusReport generic_genus(const MultiPoly& c, const std::string& x, const std::string& y) {
    int ix = c.var_index(x), iy = c.var_index(y);
    if (ix < 0 || iy < 0) throw Error(Errc::VariableMismatch, "curve variables not declared");
    std::vector<LatticePoint> s;
    for (const auto& [m, a] : c.terms()) s.push_back({m[ix], m[iy]});
    if (s.empty() || (s.size() == 1 && s[0] == LatticePoint{0, 0}))
        throw Error(Errc::InvalidArgument, "constant curve has no genus");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() == 1 && s[0] == LatticePoint{0, 0}) throw Error(Errc::InvalidArgument, "curve is constant in x, y");
    return genus_of_support(s);
}

}  // namespace dcas
