#include "dcas/multipoly.hpp"

#include "dcas/error.hpp"

#include <algorithm>
#include <numeric>

namespace dcas {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // Higher exponent in an earlier variable means a larger monomial.
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

MultiPoly MultiPoly::constant(VarList vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw Error(Errc::UnknownIdentifier, "variable '" + name + "' not declared");
    Monomial m(p.nvars(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::from_unipoly(VarList vars, const std::string& name, const UniPoly& u) {
    MultiPoly p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw Error(Errc::UnknownIdentifier, "variable '" + name + "' not declared");
    for (int d = 0; d <= u.degree(); ++d) {
        Monomial m(p.nvars(), 0);
        m[i] = d;
        p.add_term(m, u.coeff(d));
    }
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat MultiPoly::constant_term() const { return coeff(Monomial(nvars(), 0)); }

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

int MultiPoly::min_degree_in(int var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
    return d;
}

Rat MultiPoly::leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

std::map<int, MultiPoly> MultiPoly::collect(int var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[var] = 0;
        auto it = out.try_emplace(m[var], MultiPoly(vars_)).first;
        it->second.add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::embed(const VarList& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    MultiPoly out(vars);
    for (const auto& [m, c] : terms_) {
        Monomial r(vars.size(), 0);
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] < 0)
                throw Error(Errc::VariableMismatch, "variable '" + vars_[i] + "' missing from target list");
            r[where[i]] = m[i];
        }
        out.add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Int l = 1, g = 0;
    for (const auto& [m, c] : terms_) l = lcm(l, c.get_den());
    for (const auto& [m, c] : terms_) g = gcd(g, c.get_num() * (l / c.get_den()));
    Rat s = make_rat(l, g);
    if (leading_coeff() < 0) s = -s;
    MultiPoly r = *this;
    r *= s;
    return r;
}

MultiPoly MultiPoly::strip_monomial(const std::vector<int>& vars) const {
    if (terms_.empty()) return *this;
    Monomial low(nvars(), 0);
    for (int v : vars) low[v] = min_degree_in(v);
    if (std::all_of(low.begin(), low.end(), [](int e) { return e == 0; })) return *this;
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= low[i];
        out.add_term(r, c);
    }
    return out;
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw Error(Errc::VariableMismatch, "operands have different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.vars_);
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::shift(const Monomial& s) const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += s[i];
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = abs(c);
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) s += to_string(a);
        else if (a == 1) s += mono;
        else s += to_string(a) + "*" + mono;
    }
    return s;
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
    MultiPoly r = MultiPoly::constant(p.vars(), 1), b = p;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

UniPoly to_unipoly(const MultiPoly& p, const std::string& var) {
    int v = p.var_index(var);
    std::vector<Rat> c;
    for (const auto& [m, a] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != v && m[i] != 0)
                throw Error(Errc::VariableMismatch, "polynomial depends on '" + p.vars()[i] + "', expected only '" + var + "'");
        int d = v < 0 ? 0 : m[v];
        if (static_cast<int>(c.size()) <= d) c.resize(d + 1);
        c[d] += a;
    }
    return UniPoly(std::move(c), var);
}

// ---- RationalFunction

RationalFunction::RationalFunction(const MultiPoly& num)
    : num_(num), den_(MultiPoly::constant(num.vars(), 1)) {}

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (num_.vars() != den_.vars()) throw Error(Errc::VariableMismatch, "numerator and denominator variables differ");
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), 1);
        return;
    }
    Rat l = den_.leading_coeff();
    if (l != 1) {
        num_ *= Rat(1 / l);
        den_ *= Rat(1 / l);
    }
}

RationalFunction RationalFunction::embed(const VarList& vars) const {
    return RationalFunction(num_.embed(vars), den_.embed(vars));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction pow(const RationalFunction& r, unsigned n) {
    return RationalFunction(pow(r.num(), n), pow(r.den(), n));
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

UniRat to_unirat(const RationalFunction& r, const std::string& var) {
    return UniRat(to_unipoly(r.num(), var), to_unipoly(r.den(), var));
}

// ---- substitution

RationalFunction substitute(const RationalFunction& r,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarList& target_vars) {
    const VarList& vars = r.vars();
    const std::size_t k = vars.size();
    std::vector<MultiPoly> inum(k), iden(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto it = bindings.find(vars[i]);
        if (it != bindings.end()) {
            RationalFunction b = it->second.embed(target_vars);
            inum[i] = b.num();
            iden[i] = b.den();
        } else {
            bool used = r.num().depends_on(i) || r.den().depends_on(i);
            if (std::find(target_vars.begin(), target_vars.end(), vars[i]) == target_vars.end()) {
                if (used) throw Error(Errc::VariableMismatch, "unbound variable '" + vars[i] + "' not in target list");
                inum[i] = MultiPoly::constant(target_vars, 0);
            } else {
                inum[i] = MultiPoly::variable(target_vars, vars[i]);
            }
            iden[i] = MultiPoly::constant(target_vars, 1);
        }
    }
    // P(n/d) * prod d_i^E_i, with E_i the common degree bound of num and den;
    // the prod d_i^E_i factors then cancel in the quotient.
    std::vector<int> E(k);
    for (std::size_t i = 0; i < k; ++i) E[i] = std::max({0, r.num().degree_in(i), r.den().degree_in(i)});
    std::vector<std::vector<MultiPoly>> npow(k), dpow(k);
    for (std::size_t i = 0; i < k; ++i) {
        npow[i].push_back(MultiPoly::constant(target_vars, 1));
        dpow[i].push_back(MultiPoly::constant(target_vars, 1));
        for (int e = 1; e <= E[i]; ++e) {
            npow[i].push_back(npow[i].back() * inum[i]);
            dpow[i].push_back(dpow[i].back() * iden[i]);
        }
    }
    auto eval = [&](const MultiPoly& p) {
        MultiPoly acc(target_vars);
        for (const auto& [m, c] : p.terms()) {
            MultiPoly t = MultiPoly::constant(target_vars, c);
            for (std::size_t i = 0; i < k; ++i) {
                if (E[i] == 0) continue;
                if (m[i] > 0) t = t * npow[i][m[i]];
                if (E[i] > m[i]) t = t * dpow[i][E[i] - m[i]];
            }
            acc += t;
        }
        return acc;
    };
    MultiPoly n = eval(r.num()), d = eval(r.den());
    if (d.is_zero()) throw Error(Errc::ZeroDenominator, "denominator vanishes identically after substitution");
    return RationalFunction(n, d);
}

// ---- elimination

MultiPoly eliminate_to_curve(const MultiPoly& d, const std::string& eliminated, const std::string& p) {
    int e = d.var_index(eliminated);
    if (e < 0 || !d.depends_on(e))
        throw Error(Errc::NotDependent, "polynomial does not depend on '" + eliminated + "'");
    if (d.var_index(p) >= 0) throw Error(Errc::InvalidArgument, "parameter '" + p + "' already a variable");
    if (d.nvars() < 3) throw Error(Errc::InvalidArgument, "elimination needs at least three variables");
    VarList out_vars;
    std::vector<int> src;
    for (std::size_t i = 0; i < d.nvars(); ++i)
        if (static_cast<int>(i) != e) {
            out_vars.push_back(d.vars()[i]);
            src.push_back(static_cast<int>(i));
        }
    out_vars.push_back(p);
    const int E = d.degree_in(e);
    MultiPoly out(out_vars);
    for (const auto& [m, c] : d.terms()) {
        Monomial r(out_vars.size());
        for (std::size_t j = 0; j < src.size(); ++j) r[j] = m[src[j]] + (E - m[e]);
        r.back() = m[e];
        out.add_term(r, c);
    }
    std::vector<int> curve_vars(src.size());
    std::iota(curve_vars.begin(), curve_vars.end(), 0);
    return out.strip_monomial(curve_vars).primitive();
}

// ---- CurvePoly

CurvePoly CurvePoly::from_multipoly(const MultiPoly& m, const std::string& x, const std::string& y,
                                    const std::string& p) {
    CurvePoly c;
    c.x = x;
    c.y = y;
    c.p = p;
    int ix = m.var_index(x), iy = m.var_index(y), ip = m.var_index(p);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        int ii = static_cast<int>(i);
        if (ii != ix && ii != iy && ii != ip && m.depends_on(ii))
            throw Error(Errc::VariableMismatch, "curve depends on extra variable '" + m.vars()[i] + "'");
    }
    for (const auto& [mono, a] : m.terms()) {
        std::pair<int, int> key{ix < 0 ? 0 : mono[ix], iy < 0 ? 0 : mono[iy]};
        auto it = c.coeffs.try_emplace(key, UniPoly({}, p)).first;
        it->second += UniPoly::monomial(a, ip < 0 ? 0 : mono[ip], p);
        if (it->second.is_zero()) c.coeffs.erase(it);
    }
    return c;
}

MultiPoly CurvePoly::to_multipoly() const {
    MultiPoly m(VarList{x, y, p});
    for (const auto& [k, u] : coeffs)
        for (int d = 0; d <= u.degree(); ++d) m.add_term(Monomial{k.first, k.second, d}, u.coeff(d));
    return m;
}

std::vector<std::pair<int, int>> CurvePoly::support() const {
    std::vector<std::pair<int, int>> s;
    for (const auto& [k, u] : coeffs) s.push_back(k);
    return s;
}

bool CurvePoly::is_constant() const {
    return coeffs.empty() || (coeffs.size() == 1 && coeffs.begin()->first == std::pair<int, int>{0, 0});
}

CurvePoly to_curve(const MultiPoly& m) {
    if (m.nvars() != 3) throw Error(Errc::InvalidArgument, "curve needs exactly (x, y, p) variables");
    return CurvePoly::from_multipoly(m, m.vars()[0], m.vars()[1], m.vars()[2]);
}

// ---- reduction modulo a curve quadratic in y

CurveReduction reduce_modulo_curve(const MultiPoly& q, const MultiPoly& c, const std::string& y) {
    int iy = c.var_index(y);
    if (iy < 0 || c.degree_in(iy) != 2) throw Error(Errc::NotQuadratic, "curve is not quadratic in '" + y + "'");
    MultiPoly r = q.embed(c.vars());
    const MultiPoly A = c.collect(iy).at(2);
    MultiPoly mult = MultiPoly::constant(c.vars(), 1);
    while (!r.is_zero() && r.degree_in(iy) >= 2) {
        const int k = r.degree_in(iy);
        MultiPoly L = r.collect(iy).at(k);
        Monomial s(c.nvars(), 0);
        s[iy] = k - 2;
        r = A * r - L.shift(s) * c;
        mult = mult * A;
    }
    return {r, mult};
}

// ---- tri-quadratic involution

Involution triquadratic_involution(const MultiPoly& s, const std::string& v) {
    int iv = s.var_index(v);
    if (iv < 0 || s.degree_in(iv) != 2) throw Error(Errc::NotQuadratic, "surface is not quadratic in '" + v + "'");
    auto parts = s.collect(iv);
    MultiPoly A = parts.at(2);
    MultiPoly C = parts.count(0) ? parts.at(0) : MultiPoly(s.vars());
    if (C.is_zero()) throw Error(Errc::InvalidArgument, "constant coefficient in '" + v + "' vanishes");
    MultiPoly V = MultiPoly::variable(s.vars(), v);
    return {v, C, A * V, C, A * V * V};
}

RationalFunction apply_involution(const RationalFunction& r, const Involution& inv) {
    RationalFunction image(inv.image_num, inv.image_den);
    return substitute(r, {{inv.var, image.embed(r.vars())}}, r.vars());
}

bool involution_cofactor_holds(const MultiPoly& s, const Involution& inv) {
    RationalFunction lhs = apply_involution(RationalFunction(s), inv);
    RationalFunction rhs = RationalFunction(inv.cofactor_num * s, inv.cofactor_den);
    return equivalent(lhs, rhs);
}

}  // namespace dcas
