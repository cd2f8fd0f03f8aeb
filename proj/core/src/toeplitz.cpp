#include "tfnf/toeplitz.hpp"

#include <algorithm>

namespace tfnf {

OffsetSet::OffsetSet(Index order, std::vector<Index> offsets)
    : order_(order), offsets_(std::move(offsets)) {
    if (order_ < 1) {
        throw ContractError("OffsetSet: order must be at least 1, got " + std::to_string(order_));
    }
    Index previous = 0;
    for (Index s : offsets_) {
        if (s <= previous || s >= order_) {
            throw ContractError("OffsetSet: offsets must be strictly increasing within [1, " +
                                std::to_string(order_ - 1) + "], offending value " +
                                std::to_string(s));
        }
        previous = s;
    }
}

Index OffsetSet::min() const {
    if (offsets_.empty()) {
        throw ContractError("OffsetSet::min on an empty set");
    }
    return offsets_.front();
}

bool OffsetSet::contains(Index s) const {
    return std::binary_search(offsets_.begin(), offsets_.end(), s);
}

FirstRow<std::uint8_t> indicator_row(const OffsetSet& offsets) {
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(offsets.order()), 0);
    for (Index s : offsets.offsets()) {
        entries[static_cast<std::size_t>(s)] = 1;
    }
    return FirstRow<std::uint8_t>(std::move(entries));
}

} // namespace tfnf
