#include "tfnf/recovery.hpp"

#include <algorithm>
#include <numeric>

namespace tfnf {

ComponentIndexSequence recover_cis(const ReductionTrace& trace) {
    validate_trace(trace);

    // One buffer of the original order suffices: every replay only writes
    // at or beyond positions it has already read from.
    std::vector<Index> rho(static_cast<std::size_t>(trace.n_initial));
    std::iota(rho.begin(), rho.begin() + trace.n_final, Index{1});
    Index next = trace.n_final;

    for (auto step = trace.steps.rbegin(); step != trace.steps.rend(); ++step) {
        const auto before = static_cast<std::size_t>(step->n_before);
        const auto after = static_cast<std::size_t>(step->n_after);
        if (step->kind == ReductionKind::Alpha) {
            const std::size_t half = after / 2;
            const std::size_t gap = before - after;
            std::copy_backward(rho.begin() + half, rho.begin() + after, rho.begin() + before);
            std::iota(rho.begin() + half, rho.begin() + half + gap, next + 1);
            next += static_cast<Index>(gap);
        } else {
            const auto d = static_cast<std::size_t>(step->d);
            for (std::size_t p = after; p < before; ++p) {
                rho[p] = rho[p - d];
            }
        }
    }

    if (next != trace.c_total) {
        throw ContractError("recover_cis: allocated " + std::to_string(next) +
                            " indices but the trace reports " + std::to_string(trace.c_total));
    }
    return {trace.n_initial, trace.c_total, std::move(rho)};
}

} // namespace tfnf
