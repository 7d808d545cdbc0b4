#include "dcas/elliptic.hpp"

#include "dcas/error.hpp"

#include <algorithm>

namespace dcas {

namespace {

void trim(ParamPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ParamPoly mul(const ParamPoly& a, const ParamPoly& b) {
    if (a.empty() || b.empty()) return {};
    ParamPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

ParamPoly sub(ParamPoly a, const ParamPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

ParamPoly scale(ParamPoly a, const Rat& s) {
    for (auto& c : a) c *= s;
    trim(a);
    return a;
}

}  // namespace

QuadraticSplit quadratic_split(const CurvePoly& c, const std::string& var) {
    const bool in_y = var == c.y;
    if (!in_y && var != c.x) throw Error(Errc::VariableMismatch, "'" + var + "' is not a curve variable");
    QuadraticSplit s;
    s.var = var;
    s.other = in_y ? c.x : c.y;
    s.param = c.p;
    ParamPoly parts[3];
    int deg = -1;
    for (const auto& [k, u] : c.coeffs) {
        const int dv = in_y ? k.second : k.first;
        const int du = in_y ? k.first : k.second;
        deg = std::max(deg, dv);
        if (dv > 2) continue;
        auto& part = parts[dv];
        if (static_cast<int>(part.size()) <= du) part.resize(du + 1, UniPoly({}, c.p));
        part[du] += u;
    }
    if (deg != 2) throw Error(Errc::NotQuadratic, "curve has degree " + std::to_string(deg) + " in '" + var + "'");
    for (auto& part : parts) trim(part);
    s.C = parts[0];
    s.B = parts[1];
    s.A = parts[2];
    s.disc = sub(mul(s.B, s.B), scale(mul(s.A, s.C), 4));
    for (auto& u : s.disc) u = u.with_var(c.p);
    return s;
}

QuarticInvariants quartic_invariants(const ParamPoly& q) {
    if (q.size() > 5)
        throw Error(Errc::DiscriminantDegreeTooHigh,
                    "discriminant has degree " + std::to_string(q.size() - 1) + " (> 4): not an elliptic fibration");
    std::string v = q.empty() ? "p" : q[0].var();
    auto at = [&](std::size_t i) { return i < q.size() ? q[i] : UniPoly({}, v); };
    const UniPoly a = at(4), b = at(3), c = at(2), d = at(1), e = at(0);
    QuarticInvariants inv;
    inv.I = Rat(12) * a * e - Rat(3) * b * d + c * c;
    inv.J = Rat(72) * a * c * e + Rat(9) * b * c * d - Rat(27) * a * d * d - Rat(27) * b * b * e - Rat(2) * c * c * c;
    inv.I = inv.I.with_var(v);
    inv.J = inv.J.with_var(v);
    return inv;
}

UniRat j_from_invariants(const QuarticInvariants& inv) {
    const UniPoly I3 = Rat(4) * inv.I * inv.I * inv.I;
    const UniPoly delta = I3 - inv.J * inv.J;
    if (delta.is_zero()) throw Error(Errc::DegenerateCurve, "4I^3 - J^2 vanishes identically: singular curve");
    return UniRat(Rat(1728) * I3, delta).with_var(inv.I.var());
}

UniRat j_invariant(const CurvePoly& c, const std::string& var) {
    QuadraticSplit s = quadratic_split(c, var);
    return j_from_invariants(quartic_invariants(s.disc)).with_var(c.p);
}

Hauptmodul hauptmodul(const CurvePoly& c, const std::string& var) {
    UniRat j = j_invariant(c, var);
    Hauptmodul h;
    if (j.is_zero()) {
        h.infinite = true;
        return h;
    }
    h.value = (UniRat::constant(1728, c.p) / j).with_var(c.p);
    return h;
}

bool verify_relation(const MultiPoly& rel, const UniRat& a, const UniRat& b) {
    if (rel.nvars() != 2) throw Error(Errc::InvalidArgument, "relation must be in exactly two symbols");
    const int ea = std::max(0, rel.degree_in(0)), eb = std::max(0, rel.degree_in(1));
    const std::string& v = a.var();
    auto powers = [&](const UniPoly& p, int e) {
        std::vector<UniPoly> out{UniPoly::constant(1, v)};
        for (int i = 1; i <= e; ++i) out.push_back(out.back() * p);
        return out;
    };
    auto an = powers(a.num().with_var(v), ea), ad = powers(a.den().with_var(v), ea);
    auto bn = powers(b.num().with_var(v), eb), bd = powers(b.den().with_var(v), eb);
    // rel(a, b) * a_den^ea * b_den^eb, a polynomial.
    UniPoly acc({}, v);
    for (const auto& [m, c] : rel.terms()) acc += c * (an[m[0]] * ad[ea - m[0]] * bn[m[1]] * bd[eb - m[1]]);
    return acc.is_zero();
}

}  // namespace dcas
