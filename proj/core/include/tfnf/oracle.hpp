#pragma once

// Brute-force reference checks on the explicit graph and the explicit
// matrix. Everything here works from the definitions directly and never
// calls the reduction path, so it can be used to validate it.

#include "tfnf/fnf.hpp"
#include "tfnf/toeplitz.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tfnf::oracle {

struct Edge {
    Index u;
    Index v;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple graph on vertices 1..n. Edges are stored with u < v, no loops.
struct ExplicitGraph {
    Index n = 0;
    std::vector<Edge> edges;
};

/// Set partition of 1..n in canonical form: each class sorted, classes
/// ordered by their smallest element.
using Partition = std::vector<std::vector<Index>>;

class UnionFind {
public:
    explicit UnionFind(Index n);

    Index find(Index v);
    bool unite(Index a, Index b);
    Index components() const { return components_; }

private:
    std::vector<Index> parent_;
    std::vector<Index> size_;
    Index components_;
};

/// u ~ v iff |u - v| is an offset.
ExplicitGraph build_graph(const OffsetSet& offsets);

/// Arbitrary graph; edges are normalized to u < v, deduplicated, loops dropped.
ExplicitGraph make_graph(Index n, std::vector<Edge> edges);

/// Streams every edge {v, v + s} of the Toeplitz graph without storing them.
void for_each_edge(const OffsetSet& offsets, const std::function<void(Index, Index)>& visit);

Partition components_oracle(const ExplicitGraph& graph);
Partition components_bfs(const ExplicitGraph& graph);

/// Union-find over streamed edges; same result as
/// components_oracle(build_graph(offsets)) without materializing the graph.
Partition toeplitz_components(const OffsetSet& offsets);

/// Canonical partition induced by arbitrary labels (labels[v - 1] for vertex v).
Partition partition_from_labels(std::span<const Index> labels);

bool is_connected(const ExplicitGraph& graph);

/// Every pair (v, v + d) lies in one component. Requires 1 <= d < n.
bool is_d_reachable(const ExplicitGraph& graph, Index d);

/// Quotient by residues mod d: classes [1]_d .. [d]_d, no loops.
struct QuotientGraph {
    Index d = 0;
    /// Class pairs (i, j) with 1 <= i < j <= d, sorted.
    std::vector<std::pair<Index, Index>> edges;

    bool operator==(const QuotientGraph&) const = default;
};

QuotientGraph contract(const ExplicitGraph& graph, Index d);

/// The graph with offsets {s, n - s} is a disjoint union of cycles on the
/// residue classes mod gcd(n, s). Requires 0 < s < n and s != n - s.
bool cycle_structure_check(Index n, Index s);

/// Checks the explicit relabeling that removes the m middle vertices:
/// those vertices are isolated in G(n, S) and w -> w (w <= n - min S),
/// w -> w - m (w > min S) maps its edges bijectively onto G(n', S').
bool alpha_isomorphism_check(const OffsetSet& original, const OffsetSet& reduced, Index removed);

enum class NestingVerdict { Holds, Fails, NotChecked };

inline constexpr Index kDefaultNestingCap = 12;

/// True iff the principal submatrix of T(big) on the (0-based, increasing)
/// indices equals T(small).
template <Scalar T>
bool is_principal_submatrix_at(std::span<const T> big, std::span<const T> small,
                               std::span<const Index> indices) {
    if (indices.size() != small.size()) {
        return false;
    }
    for (std::size_t p = 0; p < indices.size(); ++p) {
        if (indices[p] < 0 || indices[p] >= static_cast<Index>(big.size()) ||
            (p > 0 && indices[p] <= indices[p - 1])) {
            return false;
        }
        for (std::size_t q = 0; q <= p; ++q) {
            if (!(big[static_cast<std::size_t>(indices[p] - indices[q])] == small[p - q])) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

template <Scalar T>
bool extend_embedding(std::span<const T> big, std::span<const T> small,
                      std::vector<Index>& chosen) {
    const std::size_t p = chosen.size();
    if (p == small.size()) {
        return true;
    }
    const Index first = p == 0 ? 0 : chosen.back() + 1;
    const Index remaining = static_cast<Index>(small.size() - p);
    for (Index i = first; i + remaining <= static_cast<Index>(big.size()); ++i) {
        bool fits = big[0] == small[0];
        for (std::size_t q = 0; fits && q < p; ++q) {
            fits = big[static_cast<std::size_t>(i - chosen[q])] == small[p - q];
        }
        if (fits) {
            chosen.push_back(i);
            if (extend_embedding(big, small, chosen)) {
                return true;
            }
            chosen.pop_back();
        }
    }
    return false;
}

} // namespace detail

/// Exhaustive search for an index subset embedding T(small) in T(big).
/// Returns the 0-based witness, or an empty optional.
template <Scalar T>
std::optional<std::vector<Index>> find_principal_embedding(std::span<const T> big,
                                                           std::span<const T> small) {
    if (small.size() > big.size()) {
        return std::nullopt;
    }
    std::vector<Index> chosen;
    chosen.reserve(small.size());
    if (detail::extend_embedding(big, small, chosen)) {
        return chosen;
    }
    return std::nullopt;
}

/// For blocks in canonical order, every later block must be a principal
/// submatrix of every earlier one. Blocks larger than the cap are not searched.
template <Scalar T>
NestingVerdict nesting_check(std::span<const FnfBlock<T>> blocks, Index cap = kDefaultNestingCap) {
    for (const FnfBlock<T>& block : blocks) {
        if (block.size() > cap) {
            return NestingVerdict::NotChecked;
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const std::span<const T> big = blocks[i].first_row;
            const std::span<const T> small = blocks[j].first_row;
            if (!find_principal_embedding(big, small)) {
                return NestingVerdict::Fails;
            }
        }
    }
    return NestingVerdict::Holds;
}

/// Explicit row-major n x n matrix with entries a_{|i-j|}.
template <Scalar T>
std::vector<T> dense_matrix(const FirstRow<T>& row) {
    const auto n = static_cast<std::size_t>(row.order());
    std::vector<T> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dense[i * n + j] = toeplitz_entry(row, static_cast<Index>(i + 1), static_cast<Index>(j + 1));
        }
    }
    return dense;
}

/// Row-major direct sum of the blocks, each expanded from its first row.
template <Scalar T>
std::vector<T> direct_sum(std::span<const FnfBlock<T>> blocks, Index n) {
    const auto size = static_cast<std::size_t>(n);
    std::vector<T> dense(size * size, T{});
    std::size_t base = 0;
    for (const FnfBlock<T>& block : blocks) {
        const std::size_t k = block.first_row.size();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                dense[(base + i) * size + base + j] = block.first_row[i > j ? i - j : j - i];
            }
        }
        base += k;
    }
    return dense;
}

/// P^T A P for the permutation pi (pi[p] = original vertex at position p + 1).
template <Scalar T>
std::vector<T> permute_dense(std::span<const T> dense, std::span<const Index> permutation) {
    const std::size_t n = permutation.size();
    std::vector<T> out(n * n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto row = static_cast<std::size_t>(permutation[p] - 1);
        for (std::size_t q = 0; q < n; ++q) {
            out[p * n + q] = dense[row * n + static_cast<std::size_t>(permutation[q] - 1)];
        }
    }
    return out;
}

/// Bijection on 1..n.
bool is_permutation_of_order(std::span<const Index> permutation, Index n);

/// Compares P^T A P with the block direct sum entry by entry, computing each
/// side from its definition on the fly (O(n^2) time, O(n) memory).
template <Scalar T>
bool reconstruction_check(const FirstRow<T>& row, std::span<const FnfBlock<T>> blocks,
                          std::span<const Index> permutation) {
    const Index n = row.order();
    if (!is_permutation_of_order(permutation, n)) {
        return false;
    }
    // Position -> (block, local index).
    std::vector<std::pair<std::size_t, std::size_t>> where;
    where.reserve(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].first_row.size() != blocks[b].vertices.size()) {
            return false;
        }
        for (std::size_t l = 0; l < blocks[b].first_row.size(); ++l) {
            if (where.size() >= permutation.size() ||
                permutation[where.size()] != blocks[b].vertices[l]) {
                return false;
            }
            where.emplace_back(b, l);
        }
    }
    if (static_cast<Index>(where.size()) != n) {
        return false;
    }
    for (std::size_t p = 0; p < where.size(); ++p) {
        for (std::size_t q = 0; q < where.size(); ++q) {
            const T& actual = toeplitz_entry(row, permutation[p], permutation[q]);
            T expected{};
            if (where[p].first == where[q].first) {
                const std::size_t lp = where[p].second;
                const std::size_t lq = where[q].second;
                expected = blocks[where[p].first].first_row[lp > lq ? lp - lq : lq - lp];
            }
            if (!(actual == expected)) {
                return false;
            }
        }
    }
    return true;
}

/// Offsets of a block viewed as a Toeplitz matrix of its own.
template <Scalar T>
OffsetSet block_offsets(const FnfBlock<T>& block) {
    return offsets_from_row(FirstRow<T>(block.first_row));
}

} // namespace tfnf::oracle
