#include "fnf_cli/commands.hpp"

#include <tfnf/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>

namespace fnf_cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Up to count distinct values uniform in [lo, hi].
void sample_distinct(Index lo, Index hi, Index count, std::mt19937_64& rng, std::set<Index>& into) {
    if (lo > hi || count <= 0) {
        return;
    }
    const Index available = hi - lo + 1;
    const std::size_t target = into.size() + static_cast<std::size_t>(std::min(count, available));
    std::uniform_int_distribution<Index> pick(lo, hi);
    while (into.size() < target) {
        into.insert(pick(rng));
    }
}

} // namespace

std::optional<OffsetPolicy> parse_policy(std::string_view name) {
    if (name == "uniform-k") {
        return OffsetPolicy::UniformK;
    }
    if (name == "paper-like") {
        return OffsetPolicy::PaperLike;
    }
    return std::nullopt;
}

std::string_view to_string(OffsetPolicy policy) {
    return policy == OffsetPolicy::UniformK ? "uniform-k" : "paper-like";
}

Index default_offset_count(Index n) {
    if (n < 2) {
        return 0;
    }
    const auto k = static_cast<Index>(std::ceil(std::log(static_cast<double>(n))));
    return std::clamp<Index>(k, 1, n - 1);
}

tfnf::OffsetSet generate_offsets(Index n, OffsetPolicy policy, std::mt19937_64& rng) {
    const Index k = default_offset_count(n);
    std::set<Index> chosen;
    if (policy == OffsetPolicy::UniformK) {
        sample_distinct(1, n - 1, k, rng, chosen);
    } else if (k > 0) {
        sample_distinct(std::max<Index>(1, n / 8), std::max<Index>(1, n / 2), 1, rng, chosen);
        const Index before = static_cast<Index>(chosen.size());
        sample_distinct(std::max<Index>(1, n - n / 4), n - 1, k - 1, rng, chosen);
        if (static_cast<Index>(chosen.size()) - before < k - 1) {
            sample_distinct(1, n - 1, k - static_cast<Index>(chosen.size()), rng, chosen);
        }
    }
    return tfnf::OffsetSet(std::max<Index>(n, 1), std::vector<Index>(chosen.begin(), chosen.end()));
}

tfnf::FirstRow<double> unit_row(const tfnf::OffsetSet& offsets) {
    std::vector<double> entries(static_cast<std::size_t>(offsets.order()), 0.0);
    for (Index s : offsets.offsets()) {
        entries[static_cast<std::size_t>(s)] = 1.0;
    }
    return tfnf::FirstRow<double>(std::move(entries));
}

double loglog_slope(const std::vector<Index>& sizes, const std::vector<double>& times) {
    const std::size_t count = std::min(sizes.size(), times.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mean_x += std::log(static_cast<double>(sizes[i]));
        mean_y += std::log(times[i]);
    }
    mean_x /= static_cast<double>(count);
    mean_y /= static_cast<double>(count);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dx = std::log(static_cast<double>(sizes[i])) - mean_x;
        sxy += dx * (std::log(times[i]) - mean_y);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.sizes.empty()) {
        throw InputError("bench: no sizes given");
    }
    if (config.reps < 1) {
        throw InputError("bench: repetitions must be at least 1");
    }
    for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        if (config.sizes[i] < 1 || (i > 0 && config.sizes[i] <= config.sizes[i - 1])) {
            throw InputError("bench: sizes must be positive and strictly ascending");
        }
    }

    BenchReport report{config, {}, std::nullopt};
    std::mt19937_64 rng(config.seed);
    for (Index n : config.sizes) {
        const tfnf::OffsetSet offsets = generate_offsets(n, config.policy, rng);
        const tfnf::FirstRow<double> row = unit_row(offsets);

        std::vector<double> times;
        for (int rep = 0; rep < config.reps; ++rep) {
            const auto start = Clock::now();
            auto result = tfnf::compute_fnf(row, tfnf::BlockOrder::Canonical);
            times.push_back(elapsed_ms(start));
            if (result.n != n) {
                throw tfnf::ContractError("bench: result order mismatch");
            }
        }

        BenchRow bench_row;
        bench_row.n = n;
        bench_row.offsets = offsets.size();
        bench_row.median_ms = median(times);
        bench_row.min_ms = *std::min_element(times.begin(), times.end());
        bench_row.max_ms = *std::max_element(times.begin(), times.end());

        if (n <= config.oracle_budget) {
            std::vector<double> oracle_times;
            for (int rep = 0; rep < config.reps; ++rep) {
                const auto start = Clock::now();
                auto partition = tfnf::oracle::toeplitz_components(tfnf::offsets_from_row(row));
                oracle_times.push_back(elapsed_ms(start));
                if (partition.empty()) {
                    throw tfnf::ContractError("bench: oracle returned no components");
                }
            }
            bench_row.oracle_median_ms = median(oracle_times);
        }
        report.rows.push_back(bench_row);
    }

    if (report.rows.size() >= 2) {
        std::vector<Index> sizes;
        std::vector<double> medians;
        for (const auto& r : report.rows) {
            sizes.push_back(r.n);
            // Clamp to a nanosecond so tiny sizes never produce log(0).
            medians.push_back(std::max(r.median_ms, 1e-6));
        }
        report.slope = loglog_slope(sizes, medians);
    }
    return report;
}

void print_bench(const BenchReport& report, std::ostream& out) {
    out << "policy " << to_string(report.config.policy) << "  seed " << report.config.seed
        << "  reps " << report.config.reps << '\n';
    out << std::setw(12) << "n" << std::setw(8) << "|S|" << std::setw(14) << "median_ms"
        << std::setw(14) << "min_ms" << std::setw(14) << "max_ms" << std::setw(14) << "oracle_ms"
        << '\n';
    out << std::fixed << std::setprecision(4);
    for (const auto& row : report.rows) {
        out << std::setw(12) << row.n << std::setw(8) << row.offsets << std::setw(14)
            << row.median_ms << std::setw(14) << row.min_ms << std::setw(14) << row.max_ms;
        if (row.oracle_median_ms) {
            out << std::setw(14) << *row.oracle_median_ms;
        } else {
            out << std::setw(14) << "-";
        }
        out << '\n';
    }
    if (report.slope) {
        out << "loglog slope " << std::setprecision(3) << *report.slope << '\n';
    }
    out.unsetf(std::ios::floatfield);
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("FNF_SEED"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("FNF_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return flag_seed;
}

std::vector<Index> parse_size_list(std::string_view text) {
    std::vector<Index> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token(text.substr(pos, comma - pos));
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size() || value < 1 || std::trunc(value) != value) {
            throw InputError("bad size '" + token + "' in size list");
        }
        sizes.push_back(static_cast<Index>(value));
        pos = comma + 1;
    }
    return sizes;
}

} // namespace fnf_cli
