#pragma once

// Component counting by repeated shrinking of the Toeplitz graph.
//
// Alpha step (2 min S > n): the middle vertices n-min S+1 .. min S carry no
// edge. Dropping those m = 2 min S - n isolated vertices and shifting every
// offset down by m gives a smaller instance with exactly m fewer components.
//
// Beta step (2 min S <= n): the graph is d-reachable for the d returned by
// da(), so components are unions of residue classes mod d. The instance is
// replaced by one of order d + (n mod d) (or d when d | n) whose quotient
// by residues mod d is identical, keeping the component count.
//
// Iterating until the offset set is empty records a ReductionTrace from
// which recover_cis() rebuilds the component labels.

#include "tfnf/toeplitz.hpp"

#include <string_view>
#include <vector>

namespace tfnf {

enum class ReductionKind { Alpha, Beta };

std::string_view to_string(ReductionKind kind);

struct ReductionStep {
    ReductionKind kind;
    Index n_before;
    Index n_after;
    /// min S for alpha steps, da(n, S) for beta steps.
    Index d;
    /// Components lost: m for alpha, 0 for beta.
    Index c;

    bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
    Index n_initial = 0;
    std::vector<ReductionStep> steps;
    Index n_final = 0;
    /// Sum of per-step losses plus n_final.
    Index c_total = 0;

    bool operator==(const ReductionTrace&) const = default;
};

/// Reachability divisor from the gcd chain over increasing offsets.
/// Requires a nonempty set with 2 min S <= n.
Index da(const OffsetSet& offsets);

/// The full chain d_1 = min S, d_2, ... whose last element is da(offsets).
std::vector<Index> da_sequence(const OffsetSet& offsets);

struct AlphaResult {
    OffsetSet reduced;
    Index removed;
};

/// Requires a nonempty set with 2 min S > n.
AlphaResult alpha_reduce(const OffsetSet& offsets);

/// Requires a nonempty set with 2 min S <= n and d == da(offsets).
OffsetSet beta_reduce(const OffsetSet& offsets, Index d);

ReductionTrace reduce(const OffsetSet& offsets);

/// Throws ContractError if the chaining or count invariants are broken.
void validate_trace(const ReductionTrace& trace);

} // namespace tfnf
