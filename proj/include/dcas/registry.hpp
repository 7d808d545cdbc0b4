#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcas {

// A golden case is kept as the parsed document; the check kind decides
// which fields are read.
struct GoldenCase {
    std::string name;
    std::string citation;
    std::vector<std::string> tags;
    std::string check_kind;
    nlohmann::json doc;
};

struct CaseReport {
    std::string name;
    std::string citation;
    std::string check_kind;
    bool passed = false;
    std::string error;           // set when the case threw
    nlohmann::json mismatch;     // first mismatch, null on success
    nlohmann::json artifacts;    // computed values
    double seconds = 0;

    nlohmann::json to_json() const;
};

struct Summary {
    std::size_t total = 0, passed = 0, failed = 0;
    std::vector<CaseReport> reports;
    bool ok() const { return failed == 0; }
    nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

class Registry {
public:
    Registry() = default;
    explicit Registry(std::vector<GoldenCase> cases) : cases_(std::move(cases)) {}

    // Multi-document YAML, one case per document.
    static Registry load_file(const std::string& path);
    static Registry load_string(const std::string& text);
    // $DCAS_REGISTRY if set, otherwise the bundled data file.
    static std::string default_path();

    const std::vector<GoldenCase>& cases() const { return cases_; }
    std::vector<std::string> names() const;
    const GoldenCase& find(const std::string& name) const;  // UnknownCase lists the names

    CaseReport run_case(const std::string& name, std::uint64_t seed = kDefaultSeed) const;
    Summary run_all(const std::optional<std::string>& tag = std::nullopt, std::uint64_t seed = kDefaultSeed,
                    unsigned jobs = 1) const;

private:
    std::vector<GoldenCase> cases_;
};

CaseReport run_golden_case(const GoldenCase& c, std::uint64_t seed = kDefaultSeed);

}  // namespace dcas
