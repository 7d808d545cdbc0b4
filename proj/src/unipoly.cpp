#include "dcas/unipoly.hpp"

#include "dcas/error.hpp"

#include <algorithm>

namespace dcas {

namespace {

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

void zprimitive(ZPoly& p) {
    Int g = zcontent(p);
    if (g == 0) return;
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Int la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        ztrim(a);
    }
    return a;
}

// Scale a Q-polynomial to a primitive integral one (sign kept).
ZPoly to_zpoly(const UniPoly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
    return z;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rat> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs, std::string var) : var_(std::move(var)) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

UniPoly UniPoly::constant(const Rat& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::monomial(const Rat& c, int deg, std::string var) {
    std::vector<Rat> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::with_var(std::string v) const {
    UniPoly r = *this;
    r.var_ = std::move(v);
    return r;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rat UniPoly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat UniPoly::eval(const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rat l = lc();
    for (auto& c : r.c_) c /= l;
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

static std::string term_str(const Rat& c, int deg, const std::string& var, bool first) {
    std::string s;
    Rat a = abs(c);
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    bool unit = a == 1;
    if (deg == 0 || !unit) s += to_string(a);
    if (deg > 0) {
        if (!unit) s += "*";
        s += var;
        if (deg > 1) s += "^" + std::to_string(deg);
    }
    return s;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        s += term_str(c_[i], i, var_, first);
        first = false;
    }
    return s;
}

UniPoly pow(const UniPoly& p, unsigned n) {
    UniPoly r = UniPoly::constant(1, p.var()), b = p;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
    UniPoly r({}, q.var());
    for (int i = p.degree(); i >= 0; --i) r = r * q + UniPoly::constant(p.coeff(i), q.var());
    return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly({}, a.var()), a};
    std::vector<Rat> q(a.degree() - db + 1);
    const Rat lb = b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {UniPoly(std::move(q), a.var()), UniPoly(std::move(r), a.var())};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(Errc::InexactDivision, "(" + b.str() + ") does not divide (" + a.str() + ")");
    return q;
}

Rat content(const UniPoly& p) {
    if (p.is_zero()) return 0;
    Int l = 1, g = 0;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    for (const auto& c : p.coeffs()) g = gcd(g, c.get_num() * (l / c.get_den()));
    Rat r = make_rat(g, l);
    return p.lc() < 0 ? Rat(-r) : r;
}

UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    Rat c = content(p);
    UniPoly r = p;
    r *= Rat(1 / c);
    return r;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly({}, a.var());
    ZPoly x = to_zpoly(a), y = to_zpoly(b);
    zprimitive(x);
    zprimitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = zprem(x, y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> c(x.begin(), x.end());
    return UniPoly(std::move(c), a.var()).monic();
}

UniRat::UniRat(const UniPoly& p) : UniRat(p, UniPoly::constant(1, p.var())) {}

UniRat::UniRat(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
    UniPoly n = num.with_var(num.var()), d = den.with_var(num.var());
    UniPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = exact_div(n, g);
        d = exact_div(d, g);
    }
    Rat c = content(d);
    n *= Rat(1 / c);
    d *= Rat(1 / c);
    if (n.is_zero()) d = UniPoly::constant(1, n.var());
    num_ = std::move(n);
    den_ = std::move(d);
}

UniRat UniRat::constant(const Rat& c, std::string var) { return UniRat(UniPoly::constant(c, std::move(var))); }

UniRat UniRat::with_var(std::string v) const { return UniRat(Raw{}, num_.with_var(v), den_.with_var(v)); }

Rat UniRat::eval(const Rat& t) const {
    Rat d = den_.eval(t);
    if (d == 0) throw Error(Errc::ZeroDenominator, "pole at " + to_string(t));
    return num_.eval(t) / d;
}

UniRat UniRat::derivative() const {
    return UniRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

UniRat UniRat::inverse() const {
    if (is_zero()) throw Error(Errc::ZeroDenominator, "inverse of zero rational function");
    return UniRat(den_, num_);
}

UniRat UniRat::operator-() const { return UniRat(Raw{}, -num_, den_); }

UniRat operator+(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRat operator-(const UniRat& a, const UniRat& b) { return a + (-b); }

UniRat operator*(const UniRat& a, const UniRat& b) { return UniRat(a.num_ * b.num_, a.den_ * b.den_); }

UniRat operator/(const UniRat& a, const UniRat& b) { return a * b.inverse(); }

std::string UniRat::str() const {
    if (den_.is_constant() && den_.coeff(0) == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

UniRat unirat_normalize(const UniPoly& num, const UniPoly& den) { return UniRat(num, den); }

bool unirat_equal(const UniRat& a, const UniRat& b) { return a == b; }

UniRat pow(const UniRat& r, int n) {
    if (n < 0) return pow(r.inverse(), -n);
    return UniRat(pow(r.num(), static_cast<unsigned>(n)), pow(r.den(), static_cast<unsigned>(n)));
}

UniRat compose(const UniRat& r, const UniRat& s) {
    const int e = std::max(r.num().degree(), r.den().degree());
    const std::string& v = s.var();
    // Homogenize: P(a/b) * b^e = sum p_i a^i b^(e-i).
    std::vector<UniPoly> apow{UniPoly::constant(1, v)}, bpow{UniPoly::constant(1, v)};
    for (int i = 1; i <= e; ++i) {
        apow.push_back(apow.back() * s.num());
        bpow.push_back(bpow.back() * s.den());
    }
    auto hom = [&](const UniPoly& p) {
        UniPoly acc({}, v);
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i) != 0) acc += p.coeff(i) * (apow[i] * bpow[e - i]);
        return acc;
    };
    return UniRat(hom(r.num()), hom(r.den()));
}

}  // namespace dcas
