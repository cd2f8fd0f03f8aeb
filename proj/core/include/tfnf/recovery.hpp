#pragma once

#include "tfnf/reduction.hpp"
#include "tfnf/toeplitz.hpp"

#include <vector>

namespace tfnf {

/// rho[v - 1] is the component index of vertex v, in [1, c]. Two vertices
/// share an index iff they lie in the same component.
struct ComponentIndexSequence {
    Index n = 0;
    Index c = 0;
    std::vector<Index> rho;

    Index operator()(Index v) const { return rho[static_cast<std::size_t>(v - 1)]; }
    bool operator==(const ComponentIndexSequence&) const = default;
};

/// Replays a trace from the edgeless terminal instance back to the original
/// order. Alpha steps reopen the removed middle with fresh indices; beta
/// steps extend the labels periodically with period d. Runs in O(sum n_j).
ComponentIndexSequence recover_cis(const ReductionTrace& trace);

} // namespace tfnf
