#pragma once

#include <map>

#include "avalg/json_io.hpp"

namespace avalg {

struct SuiteConfig {
    std::uint64_t seed = 0;
    int samples = 20;
};

struct SuiteCheck {
    std::string id;
    bool holds = false;
    std::string method;                // "exact" | "exact-polarized" | "sampled" | "witness"
    std::string witness;               // empty when none
    std::vector<std::string> covers;   // claim tags exercised by this check
    std::vector<std::string> flags;    // erratum candidates and similar notes
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<SuiteCheck> checks;

    bool all_ok() const;
    const SuiteCheck* first_failure() const;
};

// Catalog: lemma3, theorem2, lemma4_5, theorem3, theorem4, prop4, prop5,
// prop6, lemmas8_12, prop7_families, classification_table.
const std::vector<std::string>& suite_catalog();

// Throws std::invalid_argument("unknown suite") for ids outside the catalog.
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

// Claim tags that the full run must exercise.
const std::vector<std::string>& required_coverage();

// tag -> check ids that exercise it.
std::map<std::string, std::vector<std::string>> coverage_matrix(const std::vector<SuiteResult>& results);

Json suite_to_json(const SuiteResult& result);
// Canonical full-run report: suites, coverage matrix, aggregated errata.
Json run_report_json(const std::vector<SuiteResult>& results, const SuiteConfig& config);
std::string format_csv(const std::vector<SuiteResult>& results);
std::string format_markdown(const std::vector<SuiteResult>& results);

// The two summary tables (fixed-subspace dimensions and duplication-pair
// classes) with computed values next to the reference values and erratum
// flags where they disagree.
Json tables_report(const SuiteConfig& config);
std::string tables_markdown(const SuiteConfig& config);
std::string tables_csv(const SuiteConfig& config);

}  // namespace avalg
