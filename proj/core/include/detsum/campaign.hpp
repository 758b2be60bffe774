#pragma once

/**
 * @file campaign.hpp
 * @brief Batch verification campaigns behind the CLI: seeded grids of
 *        identity checks, lemma suites, R-matrix dumps and benchmarks,
 *        each producing a JSON report.
 *
 * Determinism contract: a campaign's report depends only on (config, seed);
 * per-cell seeds are derived from the cell id, so worker threads never
 * change results, and reports are byte-identical after timing fields
 * (keys ending in "_ns") are stripped.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "detsum/scalar.hpp"

namespace detsum {

enum class Command { verify, reduced, zerosum, lemmas, pieri, rmatrix, cancel, bench, examples };

std::string to_string(Command c);

struct CampaignConfig {
    Command command = Command::verify;

    int n_lo = 2, n_hi = 2;
    std::int64_t N_lo = 2, N_hi = 2;
    Domain domain = Domain::gaussian_rational;
    std::uint64_t modulus = 2305843009213693951ULL;   // 2^61 - 1
    int trials = 1;
    std::uint64_t seed = 1;
    std::uint64_t workload_guard = 100'000'000;
    int threads = 1;

    // subcommand-specific knobs
    int k = 3;
    int bound = 4;
    long p = 6;
    int l = -1;                 // pieri degree, -1 = all valid degrees
    std::vector<int> m;         // pieri / cancel exponents
    std::string suite = "all";  // lemma suite id
    int max_n = 6;
    int max_exp = 8;
};

struct Report {
    CampaignConfig config;
    bool pass = false;
    int cells_total = 0;
    int cells_failed = 0;
    std::int64_t total_ns = 0;
    std::string json;     // full report, cells included
    std::string text;     // human-readable summary (matrix dumps, tables)
};

/// Runs the configured campaign. Invalid configurations throw ConfigError;
/// errors inside a cell mark that cell failed (with the message recorded)
/// instead of aborting the campaign.
Report execute(const CampaignConfig& config);

/// Deterministic Miller-Rabin, exact for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Canonical normalization for comparing reports across runs: recursively
/// removes every object key ending in "_ns". Timing is the only
/// nondeterministic content of a report.
std::string strip_timing_fields(const std::string& report_json);

} // namespace detsum
