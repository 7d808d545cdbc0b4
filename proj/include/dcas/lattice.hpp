#pragma once

#include "dcas/multipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dcas {

struct LatticePoint {
    std::int64_t x = 0, y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Counterclockwise, strictly convex vertex list. A point or a segment is
// flagged degenerate.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;
    bool degenerate = false;
};

LatticePolygon newton_polygon(std::vector<LatticePoint> support);

std::int64_t twice_area(const LatticePolygon& p);
std::int64_t boundary_lattice_points(const LatticePolygon& p);
std::int64_t interior_lattice_points(const LatticePolygon& p);
std::vector<LatticePoint> interior_points(const LatticePolygon& p);
bool contains(const LatticePolygon& p, const LatticePoint& q);  // closed polygon
bool pick_holds(const LatticePolygon& p);

struct GenusReport {
    std::int64_t generic_genus = 0;
    std::vector<LatticePoint> interior;
    LatticePolygon hull;
};

// Genus for generic coefficients on the support (interior points of the
// Newton polygon). Special coefficients can lower the true genus.
GenusReport generic_genus(const CurvePoly& c);
GenusReport generic_genus(const MultiPoly& c, const std::string& x, const std::string& y);

}  // namespace dcas
