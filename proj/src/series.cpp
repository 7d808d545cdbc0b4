#include "dcas/series.hpp"

#include "dcas/error.hpp"

#include <algorithm>

namespace dcas {

PowerSeries::PowerSeries(std::vector<Rat> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    if (c_.empty()) throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rat& c, int order, std::string var) {
    PowerSeries s(order, std::move(var));
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::from_unipoly(const UniPoly& p, int order) {
    PowerSeries s(order, p.var());
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.c_[i] = p.coeff(i);
    return s;
}

PowerSeries PowerSeries::from_unirat(const UniRat& r, int order) {
    if (r.den().coeff(0) == 0)
        throw Error(Errc::NotExpandable, "rational function " + r.str() + " has a pole at 0");
    return from_unipoly(r.num(), order) * invert(from_unipoly(r.den(), order));
}

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c == 0; });
}

int PowerSeries::valuation() const {
    for (int i = 0; i <= order(); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

PowerSeries PowerSeries::truncate(int order) const {
    if (order > this->order()) throw Error(Errc::SeriesTooShort, "cannot extend a truncated series");
    return PowerSeries(std::vector<Rat>(c_.begin(), c_.begin() + order + 1), var_);
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()), a.var_);
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n, a.var_);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

PowerSeries operator*(const Rat& s, const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) throw Error(Errc::SeriesTooShort, "derivative of an order-0 series");
    PowerSeries r(order() - 1, var_);
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * i;
    return r;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries r(order() + 1, var_);
    for (int i = 0; i <= order(); ++i) r.c_[i + 1] = c_[i] / (i + 1);
    return r;
}

PowerSeries invert(const PowerSeries& s) {
    if (s[0] == 0) throw Error(Errc::ConstantTerm, "cannot invert a series with zero constant term");
    PowerSeries r(s.order(), s.var());
    const Rat inv = 1 / s[0];
    r[0] = inv;
    for (int n = 1; n <= s.order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k)
            if (s[k] != 0) acc += s[k] * r[n - k];
        r[n] = -acc * inv;
    }
    return r;
}

PowerSeries series_log(const PowerSeries& s) {
    if (s[0] != 1) throw Error(Errc::ConstantTerm, "log needs constant term 1");
    if (s.order() == 0) return PowerSeries(0, s.var());
    return (s.derivative() * invert(s.truncate(s.order() - 1))).integral();
}

PowerSeries series_exp(const PowerSeries& s) {
    if (s[0] != 0) throw Error(Errc::ConstantTerm, "exp needs constant term 0");
    PowerSeries f(s.order(), s.var());
    f[0] = 1;
    for (int n = 1; n <= s.order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k)
            if (s[k] != 0) acc += s[k] * k * f[n - k];
        f[n] = acc / n;
    }
    return f;
}

PowerSeries pow(const PowerSeries& s, unsigned n) {
    PowerSeries r = PowerSeries::constant(1, s.order(), s.var()), b = s;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

PowerSeries series_pow(const PowerSeries& s, const Rat& q) {
    if (q.get_den() == 1) {
        const long e = q.get_num().get_si();
        if (e >= 0) return pow(s, static_cast<unsigned>(e));
        return invert(pow(s, static_cast<unsigned>(-e)));
    }
    if (s[0] == 0) throw Error(Errc::ConstantTerm, "fractional power of a series without constant term");
    if (s[0] != 1) {
        AlgebraicPrefactor a;
        a.times(s, q);
        return prefactor_constant(a) * series_pow((1 / s[0]) * s, q);
    }
    // s f' = q s' f, coefficientwise.
    PowerSeries f(s.order(), s.var());
    f[0] = 1;
    for (int n = 1; n <= s.order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k)
            if (s[k] != 0) acc += (q * k - (n - k)) * s[k] * f[n - k];
        f[n] = acc / n;
    }
    return f;
}

PowerSeries compose(const PowerSeries& s, const PowerSeries& h) {
    if (h[0] != 0) throw Error(Errc::NonzeroConstantPullback, "pullback must vanish at 0, got constant " + to_string(h[0]));
    const int n = std::min(s.order(), h.order());
    const int v = h.valuation();
    if (v < 0) return PowerSeries::constant(s[0], n, h.var());
    PowerSeries hh = h.truncate(n);
    // Only s_0 .. s_{n/v} reach degree n.
    PowerSeries r = PowerSeries::constant(s[n / v], n, h.var());
    for (int i = n / v - 1; i >= 0; --i) {
        r = r * hh;
        r[0] += s[i];
    }
    return r;
}

PowerSeries compose_ratfunc(const PowerSeries& s, const UniRat& h) {
    if (h.den().coeff(0) == 0) throw Error(Errc::NotExpandable, "pullback " + h.str() + " has a pole at 0");
    if (h.num().coeff(0) != 0)
        throw Error(Errc::NonzeroConstantPullback, "pullback " + h.str() + " does not vanish at 0");
    return compose(s, PowerSeries::from_unirat(h, s.order()));
}

PowerSeries hypergeom_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int N, std::string var) {
    for (const auto& b : lower)
        if (b <= 0 && b.get_den() == 1)
            throw Error(Errc::InvalidParameter, "lower parameter " + to_string(b) + " is a nonpositive integer");
    PowerSeries s(N, std::move(var));
    s[0] = 1;
    for (int n = 0; n < N; ++n) {
        Rat r = s[n];
        for (const auto& a : upper) r *= a + n;
        for (const auto& b : lower) r /= b + n;
        s[n + 1] = r / (n + 1);
    }
    return s;
}

static Rat base_at_zero(const AlgebraicPrefactor::Base& b) {
    if (auto u = std::get_if<UniRat>(&b)) return u->eval(0);
    return std::get<PowerSeries>(b)[0];
}

Rat prefactor_constant(const AlgebraicPrefactor& a) {
    Int L = 1;
    for (const auto& f : a.factors) L = lcm(L, f.exponent.get_den());
    Rat K = 1;
    for (const auto& f : a.factors) {
        Rat b0 = base_at_zero(f.base);
        if (b0 == 0) throw Error(Errc::ConstantTerm, "prefactor base vanishes at 0");
        if (b0 < 0 && f.exponent.get_den() != 1)
            throw Error(Errc::IrrationalConstant, "negative base " + to_string(b0) + " under a fractional power");
        Int e = f.exponent.get_num() * (L / f.exponent.get_den());
        Rat t;
        mpz_pow_ui(t.get_num_mpz_t(), b0.get_num_mpz_t(), Int(abs(e)).get_ui());
        mpz_pow_ui(t.get_den_mpz_t(), b0.get_den_mpz_t(), Int(abs(e)).get_ui());
        t.canonicalize();
        K *= e < 0 ? Rat(1 / t) : t;
    }
    Int rn, rd;
    const unsigned long l = L.get_ui();
    const bool neg = K < 0;
    if ((neg && l % 2 == 0) || !exact_root(abs(K.get_num()), l, rn) || !exact_root(K.get_den(), l, rd))
        throw Error(Errc::IrrationalConstant, "aggregate constant (" + to_string(K) + ")^(1/" + to_string(L) + ") is irrational");
    return make_rat(neg ? Int(-rn) : rn, rd);
}

PowerSeries prefactor_series(const AlgebraicPrefactor& a, int N) {
    const Rat k = prefactor_constant(a);
    PowerSeries g(N);
    for (const auto& f : a.factors) {
        PowerSeries b = std::holds_alternative<UniRat>(f.base)
                            ? PowerSeries::from_unirat(std::get<UniRat>(f.base), N)
                            : std::get<PowerSeries>(f.base);
        if (b.order() < N) throw Error(Errc::SeriesTooShort, "prefactor base series shorter than requested order");
        b = b.truncate(N);
        g = g + f.exponent * series_log((1 / b[0]) * b);
    }
    return k * series_exp(g);
}

PowerSeries pullbacked_solution(const AlgebraicPrefactor& a, const std::vector<Rat>& upper,
                                const std::vector<Rat>& lower, const Pullback& h, int N) {
    PowerSeries F = hypergeom_series(upper, lower, N);
    PowerSeries Fh = std::holds_alternative<UniRat>(h) ? compose_ratfunc(F, std::get<UniRat>(h))
                                                       : compose(F, std::get<PowerSeries>(h));
    return prefactor_series(a, Fh.order()) * Fh;
}

}  // namespace dcas
