#pragma once

// Frobenius normal form of a symmetric Toeplitz matrix.
//
// Each component of the Toeplitz graph, relabeled 1..k in increasing vertex
// order, is itself a symmetric Toeplitz graph, so every irreducible diagonal
// block is determined by a first row of its own. The permutation lists the
// vertices block by block and P^T A P is the direct sum of the blocks.

#include "tfnf/recovery.hpp"
#include "tfnf/reduction.hpp"
#include "tfnf/toeplitz.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace tfnf {

template <Scalar T>
struct FnfBlock {
    std::vector<T> first_row;
    /// Original labels in this component, increasing.
    std::vector<Index> vertices;

    Index size() const { return static_cast<Index>(vertices.size()); }
    bool operator==(const FnfBlock&) const = default;
};

enum class BlockOrder {
    /// Decreasing size, ties broken by the smallest vertex label.
    Canonical,
    /// Component index order as produced by recover_cis.
    Discovered,
};

std::string_view to_string(BlockOrder order);
std::optional<BlockOrder> parse_block_order(std::string_view text);

template <Scalar T>
struct FnfResult {
    Index n = 0;
    Index c = 0;
    /// Relabeled so that cis(v) is the 1-based position of v's block in blocks.
    ComponentIndexSequence cis;
    std::vector<FnfBlock<T>> blocks;
    /// permutation[p] is the original vertex placed at position p + 1.
    std::vector<Index> permutation;
    ReductionTrace trace;
};

/// Component indices (1-based) in the order their blocks are emitted.
std::vector<Index> block_sequence(const ComponentIndexSequence& cis, BlockOrder order);

std::vector<Index> permutation_from_cis(const ComponentIndexSequence& cis, BlockOrder order);

/// Blocks indexed by component: result[k - 1] belongs to component index k.
/// Single pass over the vertices, anchoring each block at its first vertex.
template <Scalar T>
std::vector<FnfBlock<T>> extract_blocks(const ComponentIndexSequence& cis, const FirstRow<T>& row) {
    if (cis.n != row.order() || static_cast<Index>(cis.rho.size()) != cis.n) {
        throw ContractError("extract_blocks: CIS order " + std::to_string(cis.n) +
                            " does not match row order " + std::to_string(row.order()));
    }
    std::vector<Index> sizes(static_cast<std::size_t>(cis.c), 0);
    for (Index k : cis.rho) {
        if (k < 1 || k > cis.c) {
            throw ContractError("extract_blocks: component index out of range");
        }
        ++sizes[static_cast<std::size_t>(k - 1)];
    }

    std::vector<FnfBlock<T>> blocks(static_cast<std::size_t>(cis.c));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        blocks[k].first_row.reserve(static_cast<std::size_t>(sizes[k]));
        blocks[k].vertices.reserve(static_cast<std::size_t>(sizes[k]));
    }
    for (Index v = 1; v <= cis.n; ++v) {
        FnfBlock<T>& block = blocks[static_cast<std::size_t>(cis(v) - 1)];
        const Index anchor = block.vertices.empty() ? v : block.vertices.front();
        block.first_row.push_back(row[v - anchor]);
        block.vertices.push_back(v);
    }
    return blocks;
}

template <Scalar T>
FnfResult<T> compute_fnf(const FirstRow<T>& row, BlockOrder order = BlockOrder::Canonical) {
    FnfResult<T> result;
    result.n = row.order();
    result.trace = reduce(offsets_from_row(row));
    ComponentIndexSequence raw = recover_cis(result.trace);
    result.c = raw.c;

    std::vector<FnfBlock<T>> by_index = extract_blocks(raw, row);
    const std::vector<Index> sequence = block_sequence(raw, order);

    std::vector<Index> position(static_cast<std::size_t>(raw.c) + 1, 0);
    result.blocks.reserve(by_index.size());
    for (std::size_t p = 0; p < sequence.size(); ++p) {
        position[static_cast<std::size_t>(sequence[p])] = static_cast<Index>(p) + 1;
        result.blocks.push_back(std::move(by_index[static_cast<std::size_t>(sequence[p] - 1)]));
    }

    result.permutation.reserve(static_cast<std::size_t>(result.n));
    for (const FnfBlock<T>& block : result.blocks) {
        result.permutation.insert(result.permutation.end(), block.vertices.begin(),
                                  block.vertices.end());
    }

    for (Index& k : raw.rho) {
        k = position[static_cast<std::size_t>(k)];
    }
    result.cis = std::move(raw);
    return result;
}

} // namespace tfnf
