// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance N [M ...]  run only the listed criteria
//
// Exit status is 0 when every selected criterion passes, 1 otherwise.

#include "support.hpp"

#include <fnf_cli/commands.hpp>
#include <tfnf/fnf.hpp>
#include <tfnf/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tfnf::BlockOrder;
using tfnf::FirstRow;
using tfnf::Index;
using tfnf::OffsetSet;
namespace oracle = tfnf::oracle;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            if (!passed) {
                detail << "; ";
            }
            detail << what;
            passed = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(const std::vector<Index>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(values[i]);
    }
    return out;
}

std::vector<Index> offsets_of(const std::vector<double>& row) {
    std::vector<Index> out;
    for (std::size_t i = 1; i < row.size(); ++i) {
        if (row[i] != 0.0) {
            out.push_back(static_cast<Index>(i));
        }
    }
    return out;
}

// Instances shared by the oracle sweep and the structural invariant check.
constexpr int kSweepInstances = 10000;
constexpr std::uint64_t kSweepSeed = 20240601;

OffsetSet sweep_instance(std::mt19937_64& rng) {
    return tfnf::testing::random_offsets(rng, 512, 16, 1);
}

void golden_thirty_one(Outcome& out) {
    const auto row = tfnf::testing::golden_31_row();
    const auto result = tfnf::compute_fnf(row);

    out.require(result.c == 4, "component count " + std::to_string(result.c) + " != 4");
    const oracle::Partition expected{
        {1, 2, 6, 7, 8, 12, 13, 14, 18, 19, 20, 24, 25, 26, 30, 31},
        {3, 9, 15, 21, 27},
        {4, 10, 16, 22, 28},
        {5, 11, 17, 23, 29},
    };
    out.require(oracle::partition_from_labels(result.cis.rho) == expected, "partition mismatch");

    const std::vector<double> x{0, 0, 1, 1, 1};
    const auto copies = std::count_if(result.blocks.begin(), result.blocks.end(),
                                      [&](const auto& b) { return b.first_row == x; });
    out.require(copies == 3, "expected three T[0,0,1,1,1] blocks, found " + std::to_string(copies));

    const bool stated_block = std::any_of(result.blocks.begin(), result.blocks.end(), [](const auto& b) {
        return b.size() == 19 && offsets_of(b.first_row) == std::vector<Index>{6, 9, 12, 17};
    });
    if (!stated_block) {
        Index total = 0;
        for (const auto& b : result.blocks) {
            total += b.size();
        }
        const auto& big = result.blocks.front();
        out.require(false, "no 19x19 block with offsets {6,9,12,17}: blocks are " + std::to_string(big.size()) +
                               "x" + std::to_string(big.size()) + " with offsets {" +
                               join(offsets_of(big.first_row)) + "} plus three 5x5, total order " +
                               std::to_string(total) + " = n; a 19x19 block would need order 34");
    }

    std::vector<double> times;
    for (int rep = 0; rep < 101; ++rep) {
        const auto start = Clock::now();
        const auto again = tfnf::compute_fnf(row);
        times.push_back(elapsed_ms(start));
        out.require(again.permutation == result.permutation, "nondeterministic output");
    }
    std::nth_element(times.begin(), times.begin() + 50, times.end());
    out.require(times[50] < 1.0, "median time " + std::to_string(times[50]) + " ms >= 1 ms");
    out.detail << (out.passed ? "" : "; remaining checks: ") << "4 components, exact partition, three 5x5 blocks, median "
               << times[50] << " ms";
}

void weighted_seven(Outcome& out) {
    const FirstRow<double> row({0, 0, 3, 0, 8, 0, 9});
    const auto result = tfnf::compute_fnf(row);
    out.require(result.blocks.size() == 2, "block count " + std::to_string(result.blocks.size()));
    if (result.blocks.size() == 2) {
        out.require(result.blocks[0].first_row == std::vector<double>{0, 3, 8, 9} &&
                        result.blocks[0].vertices == std::vector<Index>{1, 3, 5, 7},
                    "first block mismatch");
        out.require(result.blocks[1].first_row == std::vector<double>{0, 3, 8} &&
                        result.blocks[1].vertices == std::vector<Index>{2, 4, 6},
                    "second block mismatch");
    }
    const auto permuted = oracle::permute_dense<double>(oracle::dense_matrix(row), result.permutation);
    out.require(permuted == oracle::direct_sum<double>(result.blocks, row.order()),
                "permuted matrix differs from the direct sum");
    if (out.passed) {
        out.detail << "blocks [0,3,8,9] on {1,3,5,7} and [0,3,8] on {2,4,6}; weights preserved";
    }
}

void oracle_sweep(Outcome& out) {
    std::mt19937_64 rng(kSweepSeed);
    const auto start = Clock::now();
    int partition_failures = 0;
    int reconstruction_failures = 0;
    for (int trial = 0; trial < kSweepInstances; ++trial) {
        const OffsetSet s = sweep_instance(rng);
        const auto row = tfnf::testing::random_weighted_row(rng, s);
        const auto result = tfnf::compute_fnf(row);
        if (oracle::partition_from_labels(result.cis.rho) != oracle::components_oracle(oracle::build_graph(s))) {
            ++partition_failures;
        }
        if (!oracle::reconstruction_check<double>(row, result.blocks, result.permutation)) {
            ++reconstruction_failures;
        }
    }
    const double seconds = elapsed_ms(start) / 1000.0;
    out.require(partition_failures == 0, std::to_string(partition_failures) + " partition mismatches");
    out.require(reconstruction_failures == 0, std::to_string(reconstruction_failures) + " reconstruction failures");
    out.require(seconds < 60.0, "took " + std::to_string(seconds) + " s");
    if (out.passed) {
        out.detail << kSweepInstances << " instances, 100% partition and reconstruction match, " << seconds
                   << " s";
    }
}

// A random graph on [n] patched so that every pair (v, v + dist) is joined,
// either directly or through a random detour vertex.
oracle::ExplicitGraph reachable_graph(std::mt19937_64& rng, Index n, const std::vector<Index>& distances) {
    std::uniform_int_distribution<Index> vertex(1, n);
    std::vector<oracle::Edge> edges;
    for (Index i = 0; i < n / 2; ++i) {
        edges.push_back({vertex(rng), vertex(rng)});
    }
    oracle::UnionFind uf(n);
    for (const auto& e : edges) {
        uf.unite(e.u, e.v);
    }
    for (Index dist : distances) {
        for (Index v = 1; v + dist <= n; ++v) {
            if (uf.find(v) == uf.find(v + dist)) {
                continue;
            }
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                edges.push_back({v, v + dist});
            } else {
                const Index w = vertex(rng);
                edges.push_back({v, w});
                edges.push_back({w, v + dist});
                uf.unite(v, w);
            }
            uf.unite(v, v + dist);
        }
    }
    return oracle::make_graph(n, std::move(edges));
}

void property_suites(Outcome& out) {
    std::mt19937_64 rng(4001);

    int alpha_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const OffsetSet s = tfnf::testing::random_alpha_instance(rng, 300, 12);
        const auto [reduced, removed] = tfnf::alpha_reduce(s);
        const auto before = oracle::components_oracle(oracle::build_graph(s)).size();
        const auto after = oracle::components_oracle(oracle::build_graph(reduced)).size();
        if (!oracle::alpha_isomorphism_check(s, reduced, removed) ||
            before != after + static_cast<std::size_t>(removed)) {
            ++alpha_failures;
        }
    }
    out.require(alpha_failures == 0, "(a) " + std::to_string(alpha_failures) + " alpha failures");

    int beta_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const OffsetSet s = tfnf::testing::random_beta_instance(rng, 300, 12);
        const Index d = tfnf::da(s);
        const OffsetSet reduced = tfnf::beta_reduce(s, d);
        const auto g = oracle::build_graph(s);
        const auto h = oracle::build_graph(reduced);
        if (oracle::contract(g, d) != oracle::contract(h, d) ||
            oracle::components_oracle(g).size() != oracle::components_oracle(h).size()) {
            ++beta_failures;
        }
    }
    out.require(beta_failures == 0, "(b) " + std::to_string(beta_failures) + " beta failures");

    int reach_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const OffsetSet s = tfnf::testing::random_offsets(rng, 200, 12, 2);
        const auto g = oracle::build_graph(s);
        for (Index x : s.offsets()) {
            reach_failures += oracle::is_d_reachable(g, x) ? 0 : 1;
        }
        if (!s.empty() && 2 * s.min() <= s.order()) {
            reach_failures += oracle::is_d_reachable(g, tfnf::da(s)) ? 0 : 1;
        }
    }
    int gcd_cases = 0;
    while (gcd_cases < 1000) {
        const Index n = std::uniform_int_distribution<Index>(3, 60)(rng);
        const Index s = std::uniform_int_distribution<Index>(1, n - 2)(rng);
        const Index t = std::uniform_int_distribution<Index>(1, n - s)(rng);
        if (s == t) {
            continue;
        }
        const auto g = reachable_graph(rng, n, {s, t});
        if (!oracle::is_d_reachable(g, s) || !oracle::is_d_reachable(g, t) ||
            !oracle::is_d_reachable(g, std::gcd(s, t))) {
            ++reach_failures;
        }
        ++gcd_cases;
    }
    out.require(reach_failures == 0, "(c) " + std::to_string(reach_failures) + " reachability failures");

    int cycle_failures = 0;
    int cycle_cases = 0;
    for (Index n = 2; n <= 64; ++n) {
        for (Index s = 1; s < n; ++s) {
            if (2 * s == n) {
                continue;
            }
            cycle_failures += oracle::cycle_structure_check(n, s) ? 0 : 1;
            ++cycle_cases;
        }
    }
    out.require(cycle_failures == 0, "(d) " + std::to_string(cycle_failures) + " cycle structure failures");
    if (out.passed) {
        out.detail << "(a) 1000 alpha, (b) 1000 beta, (c) reachability incl. 1000 gcd cases, (d) " << cycle_cases
                   << " cycle cases";
    }
}

void structural_invariants(Outcome& out) {
    std::mt19937_64 rng(kSweepSeed);
    long beta_steps = 0;
    int ratio_failures = 0;
    int consecutive_alpha = 0;
    int chaining_failures = 0;
    int count_failures = 0;
    for (int trial = 0; trial < kSweepInstances; ++trial) {
        const OffsetSet s = sweep_instance(rng);
        (void)tfnf::testing::random_weighted_row(rng, s);
        const auto trace = tfnf::reduce(s);
        try {
            tfnf::validate_trace(trace);
        } catch (const tfnf::ContractError&) {
            ++chaining_failures;
        }
        Index lost = 0;
        Index n = trace.n_initial;
        for (std::size_t k = 0; k < trace.steps.size(); ++k) {
            const auto& step = trace.steps[k];
            if (step.n_before != n) {
                ++chaining_failures;
            }
            n = step.n_after;
            lost += step.c;
            if (step.kind == tfnf::ReductionKind::Beta) {
                ++beta_steps;
                if (3 * step.n_after >= 2 * step.n_before) {
                    ++ratio_failures;
                }
            } else if (k > 0 && trace.steps[k - 1].kind == tfnf::ReductionKind::Alpha) {
                ++consecutive_alpha;
            }
        }
        if (n != trace.n_final) {
            ++chaining_failures;
        }
        if (trace.c_total != lost + trace.n_final) {
            ++count_failures;
        }
    }
    out.require(ratio_failures == 0, std::to_string(ratio_failures) + " beta steps with ratio >= 2/3");
    out.require(consecutive_alpha == 0, std::to_string(consecutive_alpha) + " consecutive alpha pairs");
    out.require(chaining_failures == 0, std::to_string(chaining_failures) + " chaining failures");
    out.require(count_failures == 0, std::to_string(count_failures) + " count identity failures");
    if (out.passed) {
        out.detail << beta_steps << " beta steps over " << kSweepInstances << " traces, all invariants hold";
    }
}

void nesting(Outcome& out) {
    std::mt19937_64 rng(6001);
    int checked = 0;
    int failures = 0;
    while (checked < 200) {
        const auto row = tfnf::testing::random_weighted_row(rng, tfnf::testing::random_offsets(rng, 40, 6, 2));
        const auto result = tfnf::compute_fnf(row, BlockOrder::Canonical);
        const auto verdict = oracle::nesting_check<double>(result.blocks);
        if (verdict == oracle::NestingVerdict::NotChecked) {
            continue;
        }
        failures += verdict == oracle::NestingVerdict::Holds ? 0 : 1;
        ++checked;
    }
    out.require(failures == 0, std::to_string(failures) + " of 200 instances violate nesting");

    const auto example = tfnf::compute_fnf(tfnf::testing::golden_31_row());
    const std::span<const double> big(example.blocks[0].first_row);
    const std::span<const double> small(example.blocks[1].first_row);
    const std::vector<Index> witness{0, 3, 6, 9, 12};
    out.require(oracle::is_principal_submatrix_at<double>(big, small, witness),
                "witness {1,4,7,10,13} does not embed the 5x5 block");
    out.require(oracle::nesting_check<double>(example.blocks, 16) == oracle::NestingVerdict::Holds,
                "nesting fails on the 31-vertex example");
    if (out.passed) {
        out.detail << "200 random instances plus the 31-vertex example witness {1,4,7,10,13}";
    }
}

void linear_scaling(Outcome& out) {
    fnf_cli::BenchConfig config;
    config.sizes = {100'000, 1'000'000, 10'000'000};
    config.policy = fnf_cli::OffsetPolicy::UniformK;
    config.seed = fnf_cli::resolve_seed(1);
    config.reps = 5;
    config.oracle_budget = 0;
    const auto report = fnf_cli::run_bench(config);
    const double slope = report.slope.value_or(0.0);
    const double largest = report.rows.back().median_ms;
    out.require(slope >= 0.8 && slope <= 1.3, "slope " + std::to_string(slope) + " outside [0.8, 1.3]");
    out.require(largest < 2000.0, "n = 1e7 median " + std::to_string(largest) + " ms");
    out.detail << (out.passed ? "" : "; ") << "medians";
    for (const auto& r : report.rows) {
        out.detail << ' ' << r.median_ms;
    }
    out.detail << " ms, slope " << slope;
}

void degenerate_inputs(Outcome& out) {
    std::vector<FirstRow<double>> rows;
    rows.emplace_back(std::vector<double>{0});
    rows.emplace_back(std::vector<double>{5});
    for (Index n : {1, 2, 31, 1000, 20000}) {
        rows.emplace_back(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    }
    for (Index n = 2; n <= 200; ++n) {
        std::vector<double> last(static_cast<std::size_t>(n), 0.0);
        last.back() = 2.0;
        rows.emplace_back(std::move(last));
        rows.emplace_back(std::vector<double>(static_cast<std::size_t>(n), 1.0));
    }
    for (Index n : {1000, 2000}) {
        std::vector<double> full(static_cast<std::size_t>(n), 1.0);
        full[0] = 0.0;
        rows.emplace_back(std::move(full));
    }

    int failures = 0;
    int verified = 0;
    for (const auto& row : rows) {
        try {
            if (fnf_cli::run_verify(row).passed()) {
                ++verified;
            } else {
                ++failures;
            }
        } catch (const std::exception& e) {
            ++failures;
            out.require(false, "n = " + std::to_string(row.order()) + " threw: " + e.what());
        }
    }

    // Beyond the oracle budget only the fast path runs.
    try {
        const Index n = 1'000'000;
        const auto zeros = tfnf::compute_fnf(FirstRow<double>(std::vector<double>(static_cast<std::size_t>(n), 0.0)));
        out.require(zeros.c == n, "large all-zero row");
        std::vector<double> last(static_cast<std::size_t>(n), 0.0);
        last.back() = 1.0;
        const auto pair = tfnf::compute_fnf(FirstRow<double>(std::move(last)));
        out.require(pair.c == n - 1 && pair.blocks.front().vertices == std::vector<Index>{1, n},
                    "large single far offset");
        const auto full = tfnf::compute_fnf(FirstRow<double>(std::vector<double>(static_cast<std::size_t>(n), 1.0)));
        out.require(full.c == 1, "large full offset set");
    } catch (const std::exception& e) {
        out.require(false, std::string("large input threw: ") + e.what());
    }
    out.require(failures == 0, std::to_string(failures) + " oracle disagreements");
    if (out.passed) {
        out.detail << verified << " degenerate rows verified by the oracle, 3 large rows on the fast path";
    }
}

struct Criterion {
    std::string name;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"31-vertex golden", golden_thirty_one},
        {"7-vertex weighted", weighted_seven},
        {"oracle equivalence sweep", oracle_sweep},
        {"property suites", property_suites},
        {"structural invariants", structural_invariants},
        {"nesting at desk scale", nesting},
        {"linear scaling", linear_scaling},
        {"degenerate inputs", degenerate_inputs},
    };

    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::cerr << "unknown criterion: " << argv[i] << '\n';
            return 2;
        }
        selected.push_back(static_cast<std::size_t>(k));
    }
    if (selected.empty()) {
        selected.resize(criteria.size());
        std::iota(selected.begin(), selected.end(), 1);
    }

    bool all_passed = true;
    for (std::size_t k : selected) {
        Outcome outcome;
        try {
            criteria[k - 1].run(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        all_passed = all_passed && outcome.passed;
        std::cout << (outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << k << " (" << criteria[k - 1].name
                  << "): " << outcome.detail.str() << std::endl;
    }
    return all_passed ? 0 : 1;
}
