#include <doctest.h>

#include "support.hpp"

#include "dcas/error.hpp"
#include "dcas/json_io.hpp"
#include "dcas/ode.hpp"
#include "dcas/registry.hpp"

using namespace dcas;

namespace {

const Registry& bundled() {
    static const Registry r = Registry::load_file(Registry::default_path());
    return r;
}

}  // namespace

TEST_SUITE("registry") {

TEST_CASE("empty registry") {
    Registry r = Registry::load_string("");
    Summary s = r.run_all();
    CHECK(s.total == 0);
    CHECK(s.ok());
    CHECK(s.to_json()["total"] == 0);
}

TEST_CASE("single cases") {
    CaseReport a = bundled().run_case("four-variable-diagonal");
    CHECK(a.passed);
    CHECK_FALSE(a.citation.empty());
    CHECK(a.artifacts.contains("series"));
    CaseReport b = bundled().run_case("legendre-hauptmodul");
    CHECK(b.passed);
    CHECK(b.to_json()["citation"].get<std::string>() == b.citation);

    try {
        bundled().run_case("no-such-case");
        FAIL("unknown case");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownCase);
        CHECK(std::string(e.what()).find("legendre-hauptmodul") != std::string::npos);
    }
}

TEST_CASE("tag filter and parallel workers") {
    Summary g = bundled().run_all(std::string("genus"));
    CHECK(g.total == 6);
    CHECK(g.ok());
    for (const auto& r : g.reports) CHECK(r.check_kind == "genus_equal");

    Summary serial = bundled().run_all(std::string("modular"), kDefaultSeed, 1);
    Summary par = bundled().run_all(std::string("modular"), kDefaultSeed, 3);
    REQUIRE(serial.total == par.total);
    for (std::size_t i = 0; i < serial.total; ++i) {
        CHECK(serial.reports[i].name == par.reports[i].name);
        CHECK(serial.reports[i].passed == par.reports[i].passed);
    }
    CHECK(bundled().run_all(std::string("no-such-tag")).total == 0);
}

TEST_CASE("failing cases report the first mismatch") {
    Registry r = Registry::load_string(R"yaml(
name: wrong-binomials
citation: "central binomials with a planted error"
tags: [demo]
check_kind: series_equal
vars: [x, y]
integrand: "1/(1-x-y)"
order: 4
series: [1, 2, 6, 21, 70]
---
name: wrong-genus
citation: "a line"
tags: [demo]
check_kind: genus_equal
curve: "1+x+y"
curve_vars: [x, y]
curve_x: x
curve_y: y
genus: 1
---
name: broken-expression
citation: "syntax error"
tags: [demo]
check_kind: series_equal
vars: [x, y]
integrand: "1/(1-x-"
order: 2
series: [1, 2, 6]
)yaml");
    Summary s = r.run_all();
    CHECK(s.total == 3);
    CHECK(s.failed == 3);
    CHECK_FALSE(s.ok());
    const CaseReport& w = s.reports[0];
    CHECK(w.mismatch["index"] == 3);
    CHECK(w.mismatch["expected"] == "21");
    CHECK(w.mismatch["actual"] == "20");
    CHECK(s.reports[1].mismatch["actual"] == 0);
    CHECK_FALSE(s.reports[2].error.empty());
}

TEST_CASE("malformed registries") {
    CHECK_THROWS_AS(Registry::load_string("name: a\ncheck_kind: series_equal\n---\nname: a\ncheck_kind: series_equal\n"),
                    Error);
    CHECK_THROWS_AS(Registry::load_string("name: [unclosed"), Error);
    CHECK_THROWS_AS(Registry::load_file("/nonexistent/registry.yaml"), Error);
}

TEST_CASE("json round trips") {
    PowerSeries s({Rat(1), Rat(-3, 4), Rat(0), Rat(5)});
    CHECK(series_from_json(to_json(s)) == s);
    CHECK(series_from_json(json::parse(R"({"coeffs": [1, "2/3", -4]})")) ==
          PowerSeries({Rat(1), Rat(2, 3), Rat(-4)}));
    DiffOp L({UniPoly({Rat(-1)}), UniPoly({Rat(4), Rat(-8)}), UniPoly({Rat(0), Rat(4), Rat(-4)})});
    CHECK(diffop_from_json(to_json(L)) == L);
    CHECK(diffop_from_json(json::parse(R"j({"coeffs": ["-1", "4*(1-2*x)", "4*x*(1-x)"]})j")) == L);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"coeffs": ["x"]})")), Error);
    CHECK(to_json(make_rat(-6, 4)) == "-3/2");
}

}  // TEST_SUITE
