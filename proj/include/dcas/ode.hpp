#pragma once

#include "dcas/series.hpp"
#include "dcas/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcas {

// sum_i c_i(x) D^i, D = d/dx.
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(std::vector<UniPoly> coeffs, std::string var = "x");

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<UniPoly>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    int degree() const;  // max coefficient degree

    // Integer content 1 and positive leading coefficient of c_r.
    DiffOp canonical() const;

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.canonical().c_ == b.canonical().c_;
    }

    std::string str() const;

private:
    std::vector<UniPoly> c_;
    std::string var_ = "x";
};

// Result truncated at order(s) - order(op).
PowerSeries apply(const DiffOp& op, const PowerSeries& s);
bool annihilates(const DiffOp& op, const PowerSeries& s);

inline constexpr int kGuessMargin = 10;

// Least order, then least degree, annihilator within the bounds.
std::optional<DiffOp> guess_ode(const PowerSeries& s, int max_order, int max_degree, int margin = kGuessMargin);

DiffOp symmetric_square(const DiffOp& op);

// theta = x D. Operators sum_i t_i(x) theta^i.
DiffOp from_theta(const std::vector<UniPoly>& theta_coeffs, const std::string& var = "x");
// Throws InvalidArgument unless x^i divides the D-coefficients as needed.
std::vector<UniPoly> to_theta(const DiffOp& op);

}  // namespace dcas
