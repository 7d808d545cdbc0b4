#pragma once

#include "dcas/multipoly.hpp"
#include "dcas/series.hpp"

#include <vector>

namespace dcas {

// Largest k*N accepted for k >= 4 variables without force.
inline constexpr int kDiagonalDegreeGuard = 60;

// Coefficients a_{m,...,m}, m = 0..N, of the multi-Taylor expansion at 0.
PowerSeries diagonal(const RationalFunction& r, int N, bool force = false);

// Column j is the exponent vector of the image of variable j.
struct MonomialMap {
    std::vector<std::vector<int>> m;  // m[i][j]: exponent of variable i in image j

    static MonomialMap from_columns(const std::vector<std::vector<int>>& columns);
    std::size_t size() const { return m.size(); }
    // Validates and returns n (every variable has total exponent n across the
    // images, so the product of the images is (x1...xk)^n).
    int check() const;
};

RationalFunction monomial_transform(const RationalFunction& r, const MonomialMap& map);
RationalFunction power_substitution(const RationalFunction& r, int n);

}  // namespace dcas
