#pragma once

#include "fnf_cli/io.hpp"

#include <tfnf/fnf.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fnf_cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kInternalError = 3,
};

enum class OutputFormat { Json, Text };

struct ComputeOptions {
    tfnf::BlockOrder order = tfnf::BlockOrder::Canonical;
    bool include_trace = false;
    OutputFormat format = OutputFormat::Json;
};

int cmd_compute(const InputDocument& input, const ComputeOptions& options, std::ostream& out);

inline constexpr Index kDefaultOracleBudget = 20000;

struct VerifyReport {
    Index n = 0;
    Index blocks = 0;
    bool partition_matches = false;
    bool reconstruction_matches = false;
    bool blocks_connected = false;

    bool passed() const { return partition_matches && reconstruction_matches && blocks_connected; }
};

/// Runs the fast path and the brute-force oracle on the same row.
/// Throws InputError when n exceeds the budget.
VerifyReport run_verify(const tfnf::FirstRow<double>& row, Index budget = kDefaultOracleBudget);

int cmd_verify(const InputDocument& input, Index budget, std::ostream& out);

enum class OffsetPolicy {
    /// ceil(ln n) offsets uniform in [1, n-1].
    UniformK,
    /// One offset in [n/8, n/2], the rest clustered in the top quarter so
    /// that beta steps keep several survivors.
    PaperLike,
};

std::optional<OffsetPolicy> parse_policy(std::string_view name);
std::string_view to_string(OffsetPolicy policy);

/// ceil(ln n), capped at n - 1.
Index default_offset_count(Index n);

tfnf::OffsetSet generate_offsets(Index n, OffsetPolicy policy, std::mt19937_64& rng);

/// Unit-weight first row with a_0 = 0 for the given offsets.
tfnf::FirstRow<double> unit_row(const tfnf::OffsetSet& offsets);

struct BenchConfig {
    std::vector<Index> sizes;
    OffsetPolicy policy = OffsetPolicy::UniformK;
    std::uint64_t seed = 1;
    int reps = 5;
    Index oracle_budget = kDefaultOracleBudget;
};

struct BenchRow {
    Index n = 0;
    std::size_t offsets = 0;
    double median_ms = 0.0;
    double min_ms = 0.0;
    double max_ms = 0.0;
    std::optional<double> oracle_median_ms;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
    /// Least-squares slope of log(median) against log(n); needs two sizes.
    std::optional<double> slope;
};

/// Throws InputError on unsorted sizes, sizes below 1, or reps below 1.
BenchReport run_bench(const BenchConfig& config);

void print_bench(const BenchReport& report, std::ostream& out);

double loglog_slope(const std::vector<Index>& sizes, const std::vector<double>& times);

/// FNF_SEED, when set, overrides the seed given on the command line.
std::uint64_t resolve_seed(std::uint64_t flag_seed);

std::vector<Index> parse_size_list(std::string_view text);

} // namespace fnf_cli
