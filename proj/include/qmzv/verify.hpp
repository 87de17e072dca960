#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmzv/zeta.hpp"

namespace qmzv {

struct CaseFailure {
    std::map<std::string, std::string> params;
    std::string expected;
    std::string actual;
    std::vector<std::string> routes;
};

struct VerifyReport {
    std::string suite;
    unsigned cases = 0;
    std::vector<CaseFailure> failures;
    double elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// Ranges left unset fall back to each suite's own defaults.
struct VerifyConfig {
    std::optional<unsigned> n_max;
    std::optional<unsigned> m_max;
    std::optional<unsigned> s_max;
    std::optional<unsigned> trunc;
    unsigned jobs = 1;
    std::uint64_t budget = default_brute_budget;
};

const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Case order is fixed by the
// parameter grid, so reports are identical for any --jobs value.
VerifyReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace qmzv
