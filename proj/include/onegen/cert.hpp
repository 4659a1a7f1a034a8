#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "onegen/groebner.hpp"
#include "onegen/linear_matrix.hpp"

namespace onegen {

inline constexpr const char *tool_version = "0.1.0";

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, inconclusive, skipped, error };

std::string to_string(CheckStatus s);

/// Check names in suite order.
const std::vector<std::string> &suite_check_names();

/// The statement a check evidences; throws DomainError for an unknown name.
const std::string &check_statement(const std::string &name);

struct SuiteConfig {
    std::uint32_t prime = 101;
    std::optional<int> degree_bound; // default n + m
    std::size_t samples = 500;
    std::uint64_t seed = 0;
    std::vector<std::string> checks; // empty: all
    bool exact = false;              // Groebner work over QQ instead of GF(prime)
    bool timings = false;            // record elapsed_ms
    GroebnerLimits limits;
};

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string reason; // for skipped, inconclusive and error
    Json details = Json::object();
    double elapsed_ms = 0;
};

struct CertificateReport {
    Json matrix;
    std::vector<CheckRecord> checks;
    std::uint64_t seed = 0;
    bool timings = false;

    std::size_t count(CheckStatus s) const;
    /// 0 all executed checks pass, 1 some fail, 2 inconclusive or error without fail.
    int exit_code() const;
    Json to_json() const;
    /// Human-readable summary, one line per check.
    std::string to_text() const;
};

/// Runs the selected checks in suite order. Failures never halt the suite.
/// Throws DomainError for an unknown check name or a non-prime --prime.
CertificateReport run_suite(const LinearMatrix &M, const SuiteConfig &config,
                            const std::vector<std::string> &warnings = {});

} // namespace onegen
