#pragma once

#include "dcas/multipoly.hpp"
#include "dcas/unipoly.hpp"

#include <string>
#include <vector>

namespace dcas {

// Polynomial in one curve variable with coefficients in Q[p]; index = degree.
using ParamPoly = std::vector<UniPoly>;

// curve = A*v^2 + B*v + C, with A, B, C polynomials in the other variable.
struct QuadraticSplit {
    std::string var, other, param;
    ParamPoly A, B, C;
    ParamPoly disc;  // B^2 - 4AC
};

// For a x^4 + b x^3 + c x^2 + d x + e:
//   I = 12ae - 3bd + c^2
//   J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3
// and j = 1728 * 4I^3 / (4I^3 - J^2).
struct QuarticInvariants {
    UniPoly I, J;
};

QuadraticSplit quadratic_split(const CurvePoly& c, const std::string& var);
QuarticInvariants quartic_invariants(const ParamPoly& quartic);
UniRat j_from_invariants(const QuarticInvariants& inv);

UniRat j_invariant(const CurvePoly& c, const std::string& var);

struct Hauptmodul {
    bool infinite = false;  // j = 0
    UniRat value;           // 1728 / j when finite
};
Hauptmodul hauptmodul(const CurvePoly& c, const std::string& var);

// rel(a, b) == 0 as a rational function; rel uses its first two variables.
bool verify_relation(const MultiPoly& rel, const UniRat& a, const UniRat& b);

}  // namespace dcas
