#pragma once

// Verification sweeps: proved identities as hard checks, the positivity
// the positivity statements B, C, D as reported findings, and the three-path chi agreement.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schubert/boxproduct.hpp"
#include "schubert/cache.hpp"

namespace schubert {

enum class Suite { TheoremInvariants, ConjB, ConjC, ConjD, CrossPaths };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Everything computed for one group. Tables come from the cache when
/// possible.
struct Engine {
    std::shared_ptr<const WeylGroup> group;
    std::shared_ptr<const Cohomology> h;
    std::shared_ptr<const Csm> csm;
    std::shared_ptr<const Richardson> rich;
    std::shared_ptr<const BoxProduct> box;
    nlohmann::json cache_log = nlohmann::json::array(); // per table: kind, status, checksum

    /// With cache == nullptr nothing is read or written. Cache problems
    /// (stale, corrupt) are reported on `log` and the table is recomputed.
    static Engine build(Series series, int rank, const TableCache* cache, std::ostream* log,
                        std::size_t capacity = kDefaultWeylCapacity);

    /// Box table, from the cache or computed with `jobs` threads.
    BoxTable box_table(const TableCache* cache, int jobs, std::ostream* log);
};

struct Witness {
    std::string check;
    nlohmann::json data; // reduced words and coefficients; no internal indices
};

struct CheckCount {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool hard = false;
};

struct SuiteResult {
    Suite suite;
    std::size_t instances_checked = 0;
    std::size_t predicted_instances = 0;
    std::vector<CheckCount> checks;
    std::vector<Witness> violations;    // conjecture findings
    std::vector<Witness> hard_failures; // proved statements or internal consistency
    nlohmann::json notes = nlohmann::json::object();
    double elapsed_ms = 0;

    /// "PASS", "VIOLATIONS" or "FAIL" (hard failure).
    std::string status() const;
};

struct MetaCheck {
    std::string name;
    std::string status; // "PASS", "FAIL", "NOT_APPLICABLE"
    std::string detail;
};

inline constexpr int kReportSchemaVersion = 1;

struct VerificationReport {
    std::string tool_version;
    Series series = Series::A;
    int rank = 0;
    std::size_t order = 0;
    std::optional<int> max_length;
    std::string csm_convention;
    std::vector<SuiteResult> suites;
    std::vector<MetaCheck> meta;
    double elapsed_ms = 0;

    /// 0 all pass, 1 conjecture finding, 2 hard failure.
    int exit_code() const;
    const SuiteResult* find(Suite s) const;
};

struct VerifyOptions {
    Series series = Series::A;
    int rank = 1;
    std::vector<Suite> suites = all_suites();
    std::optional<int> max_length;
    int jobs = 1;
    const TableCache* cache = nullptr;
    std::size_t capacity = kDefaultWeylCapacity;
    CrossCheckPolicy cross_check;
};

VerificationReport run_verification(const VerifyOptions& options, std::ostream* log = nullptr);
VerificationReport run_verification(const Engine& engine, const VerifyOptions& options, std::ostream* log = nullptr);

/// Number of elements of length <= L (all elements when L is empty), from
/// the length histogram.
std::size_t elements_up_to_length(const WeylGroup& g, std::optional<int> max_length);

std::string tool_version();

} // namespace schubert
