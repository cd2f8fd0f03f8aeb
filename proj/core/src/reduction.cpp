#include "tfnf/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <string>

namespace tfnf {

namespace {

Index da_raw(Index n, std::span<const Index> offsets) {
    Index d = offsets.front();
    for (std::size_t i = 1; i < offsets.size() && offsets[i] <= n - d; ++i) {
        d = std::gcd(d, offsets[i]);
    }
    return d;
}

// Shift in place; returns the number of removed vertices.
Index alpha_in_place(Index& n, std::vector<Index>& offsets) {
    const Index m = 2 * offsets.front() - n;
    for (Index& s : offsets) {
        s -= m;
    }
    n -= m;
    return m;
}

void beta_in_place(Index& n, std::vector<Index>& offsets, Index d) {
    const Index q = n / d;
    const Index r = n - q * d;
    const Index shift = (q - 1) * d;

    // Offsets are sorted, so the survivors s > n - d form a suffix.
    auto first = std::upper_bound(offsets.begin(), offsets.end(), n - d);
    auto out = offsets.begin();
    for (auto it = first; it != offsets.end(); ++it) {
        *out++ = *it - shift;
    }
    offsets.erase(out, offsets.end());

    if (r > 0) {
        auto pos = std::lower_bound(offsets.begin(), offsets.end(), d);
        if (pos == offsets.end() || *pos != d) {
            offsets.insert(pos, d);
        }
        n = d + r;
    } else {
        n = d;
    }
}

void require_beta_eligible(const OffsetSet& offsets, const char* who) {
    if (offsets.empty()) {
        throw ContractError(std::string(who) + ": offset set is empty");
    }
    if (2 * offsets.min() > offsets.order()) {
        throw ContractError(std::string(who) + ": requires 2 min S <= n (min S = " +
                            std::to_string(offsets.min()) +
                            ", n = " + std::to_string(offsets.order()) + ")");
    }
}

} // namespace

std::string_view to_string(ReductionKind kind) {
    return kind == ReductionKind::Alpha ? "alpha" : "beta";
}

Index da(const OffsetSet& offsets) {
    require_beta_eligible(offsets, "da");
    return da_raw(offsets.order(), offsets.offsets());
}

std::vector<Index> da_sequence(const OffsetSet& offsets) {
    require_beta_eligible(offsets, "da_sequence");
    const Index n = offsets.order();
    const auto s = offsets.offsets();
    std::vector<Index> chain{s.front()};
    for (std::size_t i = 1; i < s.size() && s[i] <= n - chain.back(); ++i) {
        chain.push_back(std::gcd(chain.back(), s[i]));
    }
    return chain;
}

AlphaResult alpha_reduce(const OffsetSet& offsets) {
    if (offsets.empty() || 2 * offsets.min() <= offsets.order()) {
        throw ContractError("alpha_reduce: requires a nonempty set with 2 min S > n");
    }
    Index n = offsets.order();
    std::vector<Index> work(offsets.offsets().begin(), offsets.offsets().end());
    const Index m = alpha_in_place(n, work);
    if (n < 2) {
        throw ContractError("alpha_reduce: reduced order below 2");
    }
    return {OffsetSet(n, std::move(work)), m};
}

OffsetSet beta_reduce(const OffsetSet& offsets, Index d) {
    require_beta_eligible(offsets, "beta_reduce");
    const Index expected = da_raw(offsets.order(), offsets.offsets());
    if (d != expected) {
        throw ContractError("beta_reduce: d = " + std::to_string(d) +
                            " differs from da(n, S) = " + std::to_string(expected));
    }
    Index n = offsets.order();
    std::vector<Index> work(offsets.offsets().begin(), offsets.offsets().end());
    beta_in_place(n, work, d);
    return OffsetSet(n, std::move(work));
}

ReductionTrace reduce(const OffsetSet& offsets) {
    ReductionTrace trace;
    trace.n_initial = offsets.order();

    Index n = offsets.order();
    std::vector<Index> work(offsets.offsets().begin(), offsets.offsets().end());
    Index lost = 0;

    while (!work.empty()) {
        ReductionStep step{};
        step.n_before = n;
        if (2 * work.front() > n) {
            step.kind = ReductionKind::Alpha;
            step.d = work.front();
            step.c = alpha_in_place(n, work);
        } else {
            step.kind = ReductionKind::Beta;
            step.d = da_raw(n, work);
            step.c = 0;
            beta_in_place(n, work, step.d);
        }
        step.n_after = n;
        lost += step.c;
        trace.steps.push_back(step);
    }

    trace.n_final = n;
    trace.c_total = lost + n;
    return trace;
}

void validate_trace(const ReductionTrace& trace) {
    auto fail = [](std::size_t k, const std::string& what) {
        throw ContractError("malformed reduction trace at step " + std::to_string(k) + ": " +
                            what);
    };
    Index n = trace.n_initial;
    if (n < 1) {
        throw ContractError("malformed reduction trace: initial order " + std::to_string(n));
    }
    Index lost = 0;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const ReductionStep& step = trace.steps[k];
        if (step.n_before != n) {
            fail(k, "n_before does not match the previous order");
        }
        if (step.d < 1 || step.n_after < 1 || step.n_after >= step.n_before) {
            fail(k, "order must strictly decrease");
        }
        if (step.kind == ReductionKind::Alpha) {
            if (step.c != 2 * step.d - step.n_before || step.c < 1 ||
                step.n_after != step.n_before - step.c) {
                fail(k, "alpha step counts are inconsistent");
            }
            if (step.n_after % 2 != 0) {
                fail(k, "alpha step leaves an odd order");
            }
        } else {
            const Index r = step.n_before % step.d;
            if (step.c != 0 || step.n_after != step.d + r || 2 * step.d > step.n_before) {
                fail(k, "beta step counts are inconsistent");
            }
        }
        lost += step.c;
        n = step.n_after;
    }
    if (trace.n_final != n) {
        throw ContractError("malformed reduction trace: n_final does not match the last step");
    }
    if (trace.c_total != lost + n) {
        throw ContractError("malformed reduction trace: c_total != sum of losses + n_final");
    }
}

} // namespace tfnf
