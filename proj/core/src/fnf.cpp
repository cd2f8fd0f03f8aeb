#include "tfnf/fnf.hpp"

#include <numeric>

namespace tfnf {

std::string_view to_string(BlockOrder order) {
    return order == BlockOrder::Canonical ? "canonical" : "discovered";
}

std::optional<BlockOrder> parse_block_order(std::string_view text) {
    if (text == "canonical") {
        return BlockOrder::Canonical;
    }
    if (text == "discovered" || text == "as-discovered") {
        return BlockOrder::Discovered;
    }
    return std::nullopt;
}

std::vector<Index> block_sequence(const ComponentIndexSequence& cis, BlockOrder order) {
    const auto c = static_cast<std::size_t>(cis.c);
    std::vector<Index> sequence(c);
    if (order == BlockOrder::Discovered) {
        std::iota(sequence.begin(), sequence.end(), Index{1});
        return sequence;
    }

    // Components by smallest vertex, then a stable counting sort on size
    // (largest first) keeps the whole ordering linear in n.
    std::vector<Index> sizes(c + 1, 0);
    std::vector<Index> by_least;
    by_least.reserve(c);
    for (Index k : cis.rho) {
        if (sizes[static_cast<std::size_t>(k)]++ == 0) {
            by_least.push_back(k);
        }
    }
    if (by_least.size() != c) {
        throw ContractError("block_sequence: CIS is not surjective onto [1, c]");
    }

    const auto max_size = static_cast<std::size_t>(cis.n);
    std::vector<Index> start(max_size + 2, 0);
    for (Index k : by_least) {
        ++start[max_size - static_cast<std::size_t>(sizes[static_cast<std::size_t>(k)]) + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    for (Index k : by_least) {
        auto& slot = start[max_size - static_cast<std::size_t>(sizes[static_cast<std::size_t>(k)])];
        sequence[static_cast<std::size_t>(slot++)] = k;
    }
    return sequence;
}

std::vector<Index> permutation_from_cis(const ComponentIndexSequence& cis, BlockOrder order) {
    const std::vector<Index> sequence = block_sequence(cis, order);
    const auto c = static_cast<std::size_t>(cis.c);

    std::vector<Index> sizes(c + 1, 0);
    for (Index k : cis.rho) {
        ++sizes[static_cast<std::size_t>(k)];
    }
    std::vector<Index> cursor(c + 1, 0);
    Index offset = 0;
    for (Index k : sequence) {
        cursor[static_cast<std::size_t>(k)] = offset;
        offset += sizes[static_cast<std::size_t>(k)];
    }

    std::vector<Index> permutation(static_cast<std::size_t>(cis.n));
    for (Index v = 1; v <= cis.n; ++v) {
        permutation[static_cast<std::size_t>(cursor[static_cast<std::size_t>(cis(v))]++)] = v;
    }
    return permutation;
}

} // namespace tfnf
