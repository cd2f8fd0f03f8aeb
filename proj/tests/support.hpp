#pragma once

// Seeded instance generators shared by the unit and acceptance suites.

#include <tfnf/toeplitz.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace tfnf::testing {

inline OffsetSet random_offsets(std::mt19937_64& rng, Index n, Index max_count) {
    std::set<Index> chosen;
    if (n >= 2) {
        const Index count = std::uniform_int_distribution<Index>(0, std::min(max_count, n - 1))(rng);
        std::uniform_int_distribution<Index> pick(1, n - 1);
        while (static_cast<Index>(chosen.size()) < count) {
            chosen.insert(pick(rng));
        }
    }
    return OffsetSet(n, std::vector<Index>(chosen.begin(), chosen.end()));
}

inline OffsetSet random_offsets(std::mt19937_64& rng, Index max_n, Index max_count, Index min_n) {
    const Index n = std::uniform_int_distribution<Index>(min_n, max_n)(rng);
    return random_offsets(rng, n, max_count);
}

/// Nonempty set with 2 min S > n (requires n >= 3).
inline OffsetSet random_alpha_instance(std::mt19937_64& rng, Index max_n, Index max_count) {
    const Index n = std::uniform_int_distribution<Index>(3, max_n)(rng);
    const Index s0 = std::uniform_int_distribution<Index>(n / 2 + 1, n - 1)(rng);
    std::set<Index> chosen{s0};
    if (s0 + 1 <= n - 1) {
        const Index extra = std::uniform_int_distribution<Index>(0, std::min(max_count - 1, n - 1 - s0))(rng);
        std::uniform_int_distribution<Index> pick(s0 + 1, n - 1);
        while (static_cast<Index>(chosen.size()) < extra + 1) {
            chosen.insert(pick(rng));
        }
    }
    return OffsetSet(n, std::vector<Index>(chosen.begin(), chosen.end()));
}

/// Nonempty set with 2 min S <= n (requires n >= 2).
inline OffsetSet random_beta_instance(std::mt19937_64& rng, Index max_n, Index max_count) {
    const Index n = std::uniform_int_distribution<Index>(2, max_n)(rng);
    const Index s0 = std::uniform_int_distribution<Index>(1, n / 2)(rng);
    std::set<Index> chosen{s0};
    const Index extra = std::uniform_int_distribution<Index>(0, std::min(max_count - 1, n - 1 - s0))(rng);
    std::uniform_int_distribution<Index> pick(s0 + 1, std::max(s0 + 1, n - 1));
    while (static_cast<Index>(chosen.size()) < extra + 1) {
        chosen.insert(pick(rng));
    }
    return OffsetSet(n, std::vector<Index>(chosen.begin(), chosen.end()));
}

/// Row with small nonzero integer weights on the offsets and a random diagonal.
inline FirstRow<double> random_weighted_row(std::mt19937_64& rng, const OffsetSet& offsets) {
    std::uniform_int_distribution<int> weight(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<double> entries(static_cast<std::size_t>(offsets.order()), 0.0);
    entries[0] = static_cast<double>(std::uniform_int_distribution<int>(0, 3)(rng));
    for (Index s : offsets.offsets()) {
        entries[static_cast<std::size_t>(s)] = (sign(rng) ? 1.0 : -1.0) * weight(rng);
    }
    return FirstRow<double>(std::move(entries));
}

/// Order 31, ones at {12, 18, 24, 29}.
inline FirstRow<double> golden_31_row() {
    std::vector<double> entries(31, 0.0);
    for (Index s : {12, 18, 24, 29}) {
        entries[static_cast<std::size_t>(s)] = 1.0;
    }
    return FirstRow<double>(std::move(entries));
}

} // namespace tfnf::testing
