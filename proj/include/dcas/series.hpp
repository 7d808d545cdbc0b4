#pragma once

#include "dcas/rational.hpp"
#include "dcas/unipoly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace dcas {

// Truncated power series c_0 + ... + c_N x^N, exact over Q.
class PowerSeries {
public:
    PowerSeries() : c_(1), var_("x") {}
    PowerSeries(int order, std::string var = "x") : c_(order + 1), var_(std::move(var)) {}
    PowerSeries(std::vector<Rat> coeffs, std::string var = "x");

    static PowerSeries constant(const Rat& c, int order, std::string var = "x");
    static PowerSeries from_unipoly(const UniPoly& p, int order);
    static PowerSeries from_unirat(const UniRat& r, int order);  // needs den(0) != 0

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::string& var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    int valuation() const;  // -1 for the zero series
    PowerSeries truncate(int order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rat& s, const PowerSeries& a);
    // Same order and coefficients (variable name ignored).
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

    // Result order is order() - 1.
    PowerSeries derivative() const;
    // Result order is order() + 1, zero constant term.
    PowerSeries integral() const;

private:
    std::vector<Rat> c_;
    std::string var_;
};

PowerSeries invert(const PowerSeries& s);
PowerSeries series_log(const PowerSeries& s);
PowerSeries series_exp(const PowerSeries& s);
PowerSeries series_pow(const PowerSeries& s, const Rat& q);
PowerSeries pow(const PowerSeries& s, unsigned n);

// s(h) with h(0) = 0; order min(order s, order h).
PowerSeries compose(const PowerSeries& s, const PowerSeries& h);
// s(h) with h a rational function, h(0) = 0; order of s.
PowerSeries compose_ratfunc(const PowerSeries& s, const UniRat& h);

PowerSeries hypergeom_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int N,
                             std::string var = "x");

// Product of base_i(x)^e_i. Bases are rational functions or (algebraic)
// series; only the aggregate constant prod base_i(0)^e_i must be rational.
struct AlgebraicPrefactor {
    using Base = std::variant<UniRat, PowerSeries>;
    struct Factor {
        Base base;
        Rat exponent;
    };
    std::vector<Factor> factors;

    AlgebraicPrefactor& times(Base base, const Rat& e) {
        factors.push_back({std::move(base), e});
        return *this;
    }
};

Rat prefactor_constant(const AlgebraicPrefactor& a);
PowerSeries prefactor_series(const AlgebraicPrefactor& a, int N);

using Pullback = std::variant<UniRat, PowerSeries>;

// A(x) * pFq(upper; lower; h(x)) through order N.
PowerSeries pullbacked_solution(const AlgebraicPrefactor& a, const std::vector<Rat>& upper,
                                const std::vector<Rat>& lower, const Pullback& h, int N);

}  // namespace dcas
