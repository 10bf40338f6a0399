#pragma once

#include <cstdint>
#include <vector>

#include "sytbij/partition.hpp"

namespace sytbij {

/// Filling of a Young diagram, stored as ragged rows; the shape is always
/// derived from the row lengths, never stored.
struct Tableau {
    std::vector<std::vector<int>> rows;

    /// Row lengths as a partition; throws std::invalid_argument when the
    /// lengths are not weakly decreasing positive.
    Partition shape() const;

    int weight() const;

    bool operator==(const Tableau&) const = default;
};

/// Row lengths weakly decreasing, no empty rows (entries not inspected).
bool has_valid_shape(const Tableau& t);

/// Entries are exactly 1..n, rows increase left to right, columns increase
/// top to bottom.
bool is_standard(const Tableau& t);

inline constexpr int kDefaultSytBound = 12;

/// Every SYT of the given shape, ordered by the row sequence in which
/// 1,2,...,n are placed. Throws std::invalid_argument past max_weight.
std::vector<Tableau> enumerate_syt(const Partition& shape, int max_weight = kDefaultSytBound);

/// f^shape by the hook length formula. Exact; throws std::overflow_error
/// when the count does not fit in 64 bits.
std::uint64_t count_syt(const Partition& shape);

}  // namespace sytbij
