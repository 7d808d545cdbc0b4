#include "dcas/registry.hpp"

#include "dcas/diagonal.hpp"
#include "dcas/elliptic.hpp"
#include "dcas/error.hpp"
#include "dcas/json_io.hpp"
#include "dcas/lattice.hpp"
#include "dcas/multipoly.hpp"
#include "dcas/ode.hpp"
#include "dcas/series.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#ifndef DCAS_DEFAULT_REGISTRY
#define DCAS_DEFAULT_REGISTRY "data/golden.yaml"
#endif

namespace dcas {

namespace {

json yaml_to_json(const YAML::Node& n) {
    switch (n.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined: return nullptr;
        case YAML::NodeType::Sequence: {
            json a = json::array();
            for (const auto& e : n) a.push_back(yaml_to_json(e));
            return a;
        }
        case YAML::NodeType::Map: {
            json o = json::object();
            for (const auto& kv : n) o[kv.first.as<std::string>()] = yaml_to_json(kv.second);
            return o;
        }
        case YAML::NodeType::Scalar: break;
    }
    const std::string s = n.Scalar();
    if (n.Tag() == "!") return s;  // quoted
    static const std::regex integer(R"([-+]?[0-9]{1,18})");
    if (std::regex_match(s, integer)) return std::stoll(s);
    if (s == "true") return true;
    if (s == "false") return false;
    return s;
}

// ---- field access ----------------------------------------------------------

const json& field(const json& d, const char* key) {
    if (!d.contains(key)) throw Error(Errc::Registry, std::string("missing field '") + key + "'");
    return d.at(key);
}

std::string str_field(const json& d, const char* key) {
    const json& v = field(d, key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(Errc::Registry, std::string("field '") + key + "' must be a string");
}

std::string str_or(const json& d, const char* key, const std::string& dflt) {
    return d.contains(key) ? str_field(d, key) : dflt;
}

VarList list_field(const json& d, const char* key) {
    VarList out;
    for (const auto& e : field(d, key)) out.push_back(e.get<std::string>());
    return out;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(Errc::Registry, "expected a number or expression, got " + v.dump());
}

Rat rat_value(const json& v) { return parse_rat(scalar_text(v)); }

std::vector<Rat> rat_list(const json& v) {
    std::vector<Rat> out;
    for (const auto& e : v) out.push_back(rat_value(e));
    return out;
}

// ---- integrands and curves --------------------------------------------------

// Integrand over `vars`, after substituting `bindings` for the extra symbols
// in `params`.
RationalFunction integrand_of(const json& d) {
    const VarList vars = list_field(d, "vars");
    VarList all = vars;
    if (d.contains("params"))
        for (const auto& p : list_field(d, "params")) all.push_back(p);
    RationalFunction r = parse_expression(str_field(d, "integrand"), all);
    if (d.contains("bindings")) {
        std::map<std::string, RationalFunction> b;
        for (const auto& [k, v] : d.at("bindings").items()) b[k] = parse_expression(scalar_text(v), vars);
        r = substitute(r, b, vars);
    } else if (all.size() != vars.size()) {
        throw Error(Errc::Registry, "params given without bindings");
    }
    return r.embed(vars);
}

// Replaces symbolic parameters by seeded nonzero integers.
std::map<std::string, RationalFunction> random_params(const VarList& params, const VarList& target,
                                                      std::uint64_t seed, json& chosen) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, 9);
    std::map<std::string, RationalFunction> b;
    for (const auto& p : params) {
        int v = dist(rng) * (rng() % 2 ? 1 : -1);
        chosen[p] = v;
        b[p] = MultiPoly::constant(target, Rat(v));
    }
    return b;
}

// Plane curve as a polynomial in its declared variables. Either a curve text
// with `curve_vars` (optionally specialised through `bindings` and seeded
// `params`), or the denominator of an integrand with one variable eliminated.
MultiPoly curve_of(const json& d, std::uint64_t seed, json& artifacts) {
    if (d.contains("eliminate")) {
        RationalFunction r = integrand_of(d);
        MultiPoly m = eliminate_to_curve(r.den(), str_field(d, "eliminate"), str_or(d, "param", "p"));
        artifacts["curve"] = m.str();
        return m;
    }
    VarList vars = list_field(d, "curve_vars");
    VarList keep = vars;
    std::map<std::string, RationalFunction> b;
    if (d.contains("params")) {
        const VarList params = list_field(d, "params");
        VarList all = vars;
        all.insert(all.end(), params.begin(), params.end());
        json chosen = json::object();
        b = random_params(params, vars, seed, chosen);
        artifacts["parameters"] = chosen;
        vars = all;
    }
    if (d.contains("bindings")) {
        for (const auto& [k, v] : d.at("bindings").items()) {
            keep.erase(std::remove(keep.begin(), keep.end(), k), keep.end());
        }
        for (const auto& [k, v] : d.at("bindings").items()) b[k] = parse_expression(scalar_text(v), keep);
        for (auto& [k, v] : b) v = v.embed(keep);
    }
    MultiPoly m = parse_polynomial(str_field(d, "curve"), vars);
    if (!b.empty()) {
        RationalFunction s = substitute(RationalFunction(m), b, keep);
        if (!s.is_polynomial()) throw Error(Errc::Registry, "curve bindings must keep the curve polynomial");
        m = s.num() * (Rat(1) / s.den().constant_term());
    }
    m = m.embed(keep);
    artifacts["curve"] = m.str();
    return m;
}

// ---- series sources ---------------------------------------------------------

struct SeriesContext {
    std::string var;
    int order;
    std::map<std::string, PowerSeries> aux;  // symbols standing for algebraic series
};

SeriesContext context_of(const json& d, int order) {
    SeriesContext ctx{str_or(d, "var", "x"), order, {}};
    if (d.contains("aux")) {
        for (const auto& [name, spec] : d.at("aux").items()) {
            UniRat base = parse_unirat(str_field(spec, "base"), ctx.var);
            ctx.aux[name] = series_pow(PowerSeries::from_unirat(base, order), rat_value(field(spec, "exp")));
        }
    }
    return ctx;
}

PowerSeries eval_poly_series(const MultiPoly& p, const SeriesContext& ctx, const VarList& vars) {
    PowerSeries out(ctx.order, ctx.var);
    for (const auto& [m, c] : p.terms()) {
        if (m[0] > ctx.order) continue;
        PowerSeries t(ctx.order, ctx.var);
        t[m[0]] = c;
        for (std::size_t i = 1; i < vars.size(); ++i)
            if (m[i] > 0) t = t * pow(ctx.aux.at(vars[i]), static_cast<unsigned>(m[i]));
        out = out + t;
    }
    return out;
}

// Rational function of the series variable, or a series when it mentions
// an auxiliary algebraic symbol.
std::variant<UniRat, PowerSeries> series_expr(const std::string& text, const SeriesContext& ctx) {
    VarList vars{ctx.var};
    for (const auto& [k, v] : ctx.aux) vars.push_back(k);
    RationalFunction r = parse_expression(text, vars);
    bool uses_aux = false;
    for (std::size_t i = 1; i < vars.size(); ++i)
        uses_aux = uses_aux || r.num().depends_on(static_cast<int>(i)) || r.den().depends_on(static_cast<int>(i));
    if (!uses_aux) return to_unirat(r.embed({ctx.var}), ctx.var);
    return eval_poly_series(r.num(), ctx, vars) * invert(eval_poly_series(r.den(), ctx, vars));
}

PowerSeries pullback_sum(const json& terms, const SeriesContext& ctx) {
    PowerSeries total(ctx.order, ctx.var);
    for (const auto& t : terms) {
        AlgebraicPrefactor a;
        if (t.contains("prefactor"))
            for (const auto& f : t.at("prefactor")) {
                auto b = series_expr(scalar_text(f.at(0)), ctx);
                a.times(std::visit([](auto&& v) { return AlgebraicPrefactor::Base(v); }, b), rat_value(f.at(1)));
            }
        auto h = series_expr(scalar_text(field(t, "h")), ctx);
        Pullback pb = std::visit([](auto&& v) { return Pullback(v); }, h);
        PowerSeries s = pullbacked_solution(a, rat_list(field(t, "upper")), rat_list(t.value("lower", json::array())),
                                            pb, ctx.order);
        if (t.contains("power")) s = pow(s, t.at("power").get<unsigned>());
        Rat w = t.contains("weight") ? rat_value(t.at("weight")) : Rat(1);
        total = total + w * s;
    }
    return total;
}

int order_of(const json& d) {
    int n = field(d, "order").get<int>();
    if (n < 0) throw Error(Errc::Registry, "negative order");
    return n;
}

// The series under test: a diagonal, a pullback sum, or a literal list.
PowerSeries actual_series(const json& d, json& artifacts) {
    const int N = order_of(d);
    if (d.contains("integrand")) {
        RationalFunction r = integrand_of(d);
        if (d.contains("map")) {
            std::vector<std::vector<int>> cols;
            for (const auto& c : d.at("map")) cols.push_back(c.get<std::vector<int>>());
            r = monomial_transform(r, MonomialMap::from_columns(cols));
        }
        PowerSeries s = diagonal(r, N, d.value("force", false));
        artifacts["series"] = to_json(s);
        return s;
    }
    if (d.contains("lhs")) {
        PowerSeries s = pullback_sum(d.at("lhs"), context_of(d, N));
        artifacts["series"] = to_json(s);
        return s;
    }
    if (d.contains("input_series")) return PowerSeries(rat_list(d.at("input_series")), str_or(d, "var", "x")).truncate(N);
    throw Error(Errc::Registry, "no series source (integrand, lhs or input_series)");
}

PowerSeries expected_series(const json& d) {
    const int N = order_of(d);
    if (d.contains("series")) {
        auto c = rat_list(d.at("series"));
        if (static_cast<int>(c.size()) < N + 1) throw Error(Errc::Registry, "expected series shorter than order");
        return PowerSeries(std::move(c), str_or(d, "var", "x")).truncate(N);
    }
    if (d.contains("pullbacks")) return pullback_sum(d.at("pullbacks"), context_of(d, N));
    throw Error(Errc::Registry, "no expected series (series or pullbacks)");
}

DiffOp operator_of(const json& d) {
    const std::string v = str_or(d, "var", "x");
    std::vector<UniPoly> c;
    if (d.contains("theta_operator")) {
        for (const auto& e : d.at("theta_operator")) c.push_back(to_unipoly(parse_polynomial(scalar_text(e), {v}), v));
        return from_theta(c, v);
    }
    for (const auto& e : field(d, "operator")) c.push_back(to_unipoly(parse_polynomial(scalar_text(e), {v}), v));
    return DiffOp(std::move(c), v);
}

// ---- checks -----------------------------------------------------------------

void check_series_equal(const json& d, CaseReport& rep) {
    PowerSeries got = actual_series(d, rep.artifacts);
    PowerSeries want = expected_series(d);
    for (int i = 0; i <= want.order(); ++i) {
        if (got[i] != want[i]) {
            rep.mismatch = {{"index", i}, {"expected", to_string(want[i])}, {"actual", to_string(got[i])}};
            return;
        }
    }
    rep.passed = true;
}

void check_annihilation(const json& d, CaseReport& rep) {
    PowerSeries s = actual_series(d, rep.artifacts);
    DiffOp op = operator_of(d);
    rep.artifacts["operator"] = to_json(op.canonical());
    if (!annihilates(op, s)) {
        PowerSeries r = apply(op, s);
        int i = r.valuation();
        rep.mismatch = {{"what", "operator applied to series"}, {"index", i}, {"expected", "0"}, {"actual", to_string(r[i])}};
        return;
    }
    if (d.contains("guess")) {
        const json& g = d.at("guess");
        auto guessed = guess_ode(s, field(g, "max_order").get<int>(), field(g, "max_degree").get<int>(),
                                 g.value("margin", kGuessMargin));
        if (!guessed) {
            rep.mismatch = {{"what", "guess_ode"}, {"expected", op.canonical().str()}, {"actual", "none within bounds"}};
            return;
        }
        rep.artifacts["guessed"] = to_json(*guessed);
        if (!(*guessed == op)) {
            rep.mismatch = {{"what", "guess_ode"}, {"expected", op.canonical().str()}, {"actual", guessed->str()}};
            return;
        }
    }
    rep.passed = true;
}

void check_hauptmodul(const json& d, std::uint64_t seed, CaseReport& rep) {
    const std::string p = str_or(d, "param", "p");
    Hauptmodul h;
    if (d.contains("j")) {
        UniRat j = parse_unirat(str_field(d, "j"), p);
        if (j.num().is_zero()) h.infinite = true;
        else h.value = UniRat(UniPoly::constant(1728, p)) / j;
    } else {
        MultiPoly m = curve_of(d, seed, rep.artifacts);
        const std::string y = str_field(d, "quadratic_in");
        CurvePoly c = CurvePoly::from_multipoly(m, str_field(d, "curve_x"), y, p);
        h = hauptmodul(c, y);
    }
    if (d.value("infinite", false)) {
        rep.artifacts["hauptmodul"] = h.infinite ? json("infinite") : to_json(h.value);
        rep.passed = h.infinite;
        if (!rep.passed) rep.mismatch = {{"expected", "infinite"}, {"actual", h.value.str()}};
        return;
    }
    if (h.infinite) {
        rep.artifacts["hauptmodul"] = "infinite";
        rep.mismatch = {{"expected", str_field(d, "hauptmodul")}, {"actual", "infinite"}};
        return;
    }
    rep.artifacts["hauptmodul"] = to_json(h.value);
    UniRat want = parse_unirat(str_field(d, "hauptmodul"), p);
    rep.passed = unirat_equal(h.value.with_var(p), want);
    if (!rep.passed) rep.mismatch = {{"expected", want.str()}, {"actual", h.value.str()}};
}

void check_genus(const json& d, std::uint64_t seed, CaseReport& rep) {
    MultiPoly m = curve_of(d, seed, rep.artifacts);
    GenusReport g = generic_genus(m, str_field(d, "curve_x"), str_field(d, "curve_y"));
    rep.artifacts["genus"] = to_json(g);
    const auto want = field(d, "genus").get<std::int64_t>();
    rep.passed = g.generic_genus == want;
    if (!rep.passed) rep.mismatch = {{"expected", want}, {"actual", g.generic_genus}};
}

void check_relation(const json& d, CaseReport& rep) {
    const VarList rv = list_field(d, "relation_vars");
    const std::string v = str_or(d, "param", "x");
    MultiPoly rel = parse_polynomial(str_field(d, "relation"), rv);
    UniRat a = parse_unirat(str_field(d, "a"), v), b = parse_unirat(str_field(d, "b"), v);
    const std::string mode = str_or(d, "orientation", "forward");
    bool fwd = verify_relation(rel, a, b);
    rep.artifacts["forward"] = fwd;
    bool swapped = false;
    if (mode != "forward") {
        swapped = verify_relation(rel, b, a);
        rep.artifacts["swapped"] = swapped;
    }
    if (mode == "forward") rep.passed = fwd;
    else if (mode == "both") rep.passed = fwd && swapped;
    else if (mode == "either") rep.passed = fwd || swapped;
    else throw Error(Errc::Registry, "orientation must be forward, both or either");
    if (!rep.passed) rep.mismatch = {{"expected", "relation vanishes (" + mode + ")"}, {"actual", "nonzero"}};
}

GoldenCase case_from_json(json doc) {
    GoldenCase c;
    if (!doc.is_object()) throw Error(Errc::Registry, "case document must be a mapping");
    c.name = str_field(doc, "name");
    c.citation = str_or(doc, "citation", "");
    c.check_kind = str_field(doc, "check_kind");
    if (doc.contains("tags"))
        for (const auto& t : doc.at("tags")) c.tags.push_back(t.get<std::string>());
    static const std::set<std::string> kinds{"series_equal", "annihilation_only", "hauptmodul_equal", "genus_equal",
                                             "relation_holds"};
    if (!kinds.count(c.check_kind)) throw Error(Errc::Registry, c.name + ": unknown check_kind " + c.check_kind);
    c.doc = std::move(doc);
    return c;
}

}  // namespace

json CaseReport::to_json() const {
    json j = {{"name", name},     {"citation", citation},   {"check_kind", check_kind},
              {"passed", passed}, {"seconds", seconds},     {"artifacts", artifacts}};
    if (!mismatch.is_null()) j["first_mismatch"] = mismatch;
    if (!error.empty()) j["error"] = error;
    return j;
}

json Summary::to_json() const {
    json r = json::array();
    for (const auto& c : reports) r.push_back(c.to_json());
    return {{"total", total}, {"passed", passed}, {"failed", failed}, {"ok", ok()}, {"cases", r}};
}

CaseReport run_golden_case(const GoldenCase& c, std::uint64_t seed) {
    CaseReport rep;
    rep.name = c.name;
    rep.citation = c.citation;
    rep.check_kind = c.check_kind;
    rep.artifacts = json::object();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (c.check_kind == "series_equal") check_series_equal(c.doc, rep);
        else if (c.check_kind == "annihilation_only") check_annihilation(c.doc, rep);
        else if (c.check_kind == "hauptmodul_equal") check_hauptmodul(c.doc, seed, rep);
        else if (c.check_kind == "genus_equal") check_genus(c.doc, seed, rep);
        else check_relation(c.doc, rep);
    } catch (const std::exception& e) {
        rep.passed = false;
        rep.error = e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Registry Registry::load_string(const std::string& text) {
    std::vector<GoldenCase> cases;
    std::set<std::string> seen;
    std::vector<YAML::Node> docs;
    try {
        docs = YAML::LoadAll(text);
    } catch (const YAML::Exception& e) {
        throw Error(Errc::Registry, std::string("registry YAML: ") + e.what());
    }
    for (const auto& d : docs) {
        if (d.IsNull()) continue;
        GoldenCase c = case_from_json(yaml_to_json(d));
        if (!seen.insert(c.name).second) throw Error(Errc::Registry, "duplicate case name " + c.name);
        cases.push_back(std::move(c));
    }
    return Registry(std::move(cases));
}

Registry Registry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Registry, "cannot open registry " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_string(ss.str());
}

std::string Registry::default_path() {
    if (const char* e = std::getenv("DCAS_REGISTRY"); e && *e) return e;
    return DCAS_DEFAULT_REGISTRY;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> n;
    for (const auto& c : cases_) n.push_back(c.name);
    return n;
}

const GoldenCase& Registry::find(const std::string& name) const {
    for (const auto& c : cases_)
        if (c.name == name) return c;
    std::string list;
    for (const auto& n : names()) list += (list.empty() ? "" : ", ") + n;
    throw Error(Errc::UnknownCase, "unknown case '" + name + "'; available: " + list);
}

CaseReport Registry::run_case(const std::string& name, std::uint64_t seed) const {
    return run_golden_case(find(name), seed);
}

Summary Registry::run_all(const std::optional<std::string>& tag, std::uint64_t seed, unsigned jobs) const {
    std::vector<const GoldenCase*> sel;
    for (const auto& c : cases_)
        if (!tag || std::find(c.tags.begin(), c.tags.end(), *tag) != c.tags.end()) sel.push_back(&c);
    Summary s;
    s.reports.resize(sel.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < sel.size();) s.reports[i] = run_golden_case(*sel[i], seed);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(sel.size(), 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    s.total = sel.size();
    for (const auto& r : s.reports) (r.passed ? s.passed : s.failed)++;
    return s;
}

}  // namespace dcas
