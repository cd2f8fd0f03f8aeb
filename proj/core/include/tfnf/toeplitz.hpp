#pragma once

// Symmetric Toeplitz data model: the first row, its offset set, and entry
// lookup. The n x n matrix is never materialized here.

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tfnf {

/// Vertex labels, orders and offsets. Vertices are labeled 1..n.
using Index = std::int64_t;

/// Raised when an operation's precondition does not hold. Seeing one from the
/// pipeline means an internal bug, never bad user input.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <typename T>
concept Scalar = std::regular<T>;

template <Scalar T>
constexpr bool is_zero(const T& value) {
    return value == T{};
}

/// Defining row [a_0, ..., a_{n-1}]; entry i is the value on the i-th diagonal.
template <Scalar T>
class FirstRow {
public:
    explicit FirstRow(std::vector<T> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw ContractError("FirstRow: order must be at least 1");
        }
    }

    Index order() const { return static_cast<Index>(entries_.size()); }
    const T& operator[](Index i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const T> entries() const { return entries_; }

    bool operator==(const FirstRow&) const = default;

private:
    std::vector<T> entries_;
};

/// Strictly increasing offsets in [1, n-1]: the nonzero off-diagonal
/// positions of a first row. Only these matter for connectivity.
class OffsetSet {
public:
    /// Validates the ordering and range invariants.
    OffsetSet(Index order, std::vector<Index> offsets);

    /// Convenience for the all-zero row of a given order.
    explicit OffsetSet(Index order) : OffsetSet(order, {}) {}

    Index order() const { return order_; }
    std::span<const Index> offsets() const { return offsets_; }
    bool empty() const { return offsets_.empty(); }
    std::size_t size() const { return offsets_.size(); }
    Index min() const;
    bool contains(Index s) const;

    bool operator==(const OffsetSet&) const = default;

private:
    Index order_;
    std::vector<Index> offsets_;
};

template <Scalar T>
OffsetSet offsets_from_row(const FirstRow<T>& row) {
    std::vector<Index> offsets;
    for (Index i = 1; i < row.order(); ++i) {
        if (!is_zero(row[i])) {
            offsets.push_back(i);
        }
    }
    return OffsetSet(row.order(), std::move(offsets));
}

/// Entry t_{i,j} = a_{|i-j|}, 1-based.
template <Scalar T>
const T& toeplitz_entry(const FirstRow<T>& row, Index i, Index j) {
    const Index n = row.order();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw std::out_of_range("toeplitz_entry: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside order " + std::to_string(n));
    }
    return row[i > j ? i - j : j - i];
}

/// Boolean row with a_0 = 0 and a_i = 1 exactly for i in the set.
FirstRow<std::uint8_t> indicator_row(const OffsetSet& offsets);

} // namespace tfnf
