#include "dcas/json_io.hpp"
#include "dcas/multipoly.hpp"

#include "dcas/error.hpp"

namespace dcas {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

json to_json(const UniRat& r) {
    return {{"var", r.var()}, {"expr", r.str()}, {"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const PowerSeries& s) {
    json c = json::array();
    for (const auto& a : s.coeffs()) c.push_back(to_string(a));
    return {{"var", s.var()}, {"order", s.order()}, {"coeffs", c}};
}

json to_json(const DiffOp& op) {
    json c = json::array();
    for (const auto& p : op.coeffs()) c.push_back(to_json(p));
    return {{"var", op.var()}, {"coeffs", c}, {"expr", op.str()}};
}

json to_json(const GenusReport& g) {
    json pts = json::array(), hull = json::array();
    for (const auto& p : g.interior) pts.push_back({p.x, p.y});
    for (const auto& p : g.hull.vertices) hull.push_back({p.x, p.y});
    return {{"generic_genus", g.generic_genus},
            {"interior_points", pts},
            {"hull", hull},
            {"degenerate_hull", g.hull.degenerate},
            {"note", "genus for generic coefficients on this support"}};
}

static Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>()), 10));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error(Errc::Parse, "expected a rational string, got " + j.dump());
}

UniPoly unipoly_from_json(const json& j, const std::string& var) {
    if (j.is_string()) {
        UniRat r = parse_unirat(j.get<std::string>(), var);
        if (r.den().degree() > 0) throw Error(Errc::Parse, "operator coefficient must be a polynomial");
        return r.num() * (Rat(1) / r.den().coeff(0));
    }
    if (!j.is_array()) throw Error(Errc::Parse, "expected a coefficient list or a polynomial");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return UniPoly(std::move(c), var);
}

PowerSeries series_from_json(const json& j) {
    try {
        std::string var = j.value("var", "x");
        const auto& cs = j.at("coeffs");
        std::vector<Rat> c;
        for (const auto& e : cs) c.push_back(rat_from_json(e));
        if (j.contains("order") && j.at("order").get<int>() + 1 != static_cast<int>(c.size()))
            throw Error(Errc::Parse, "series order does not match coefficient count");
        return PowerSeries(std::move(c), var);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("bad series JSON: ") + e.what());
    }
}

DiffOp diffop_from_json(const json& j) {
    try {
        std::string var = j.value("var", "x");
        std::vector<UniPoly> c;
        for (const auto& p : j.at("coeffs")) c.push_back(unipoly_from_json(p, var));
        return DiffOp(std::move(c), var);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("bad operator JSON: ") + e.what());
    }
}

}  // namespace dcas
