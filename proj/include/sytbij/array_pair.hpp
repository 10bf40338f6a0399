#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sytbij {

enum class ArrayMode { standard, remark };

/// The common input of both bijections: two strictly increasing rows whose
/// entries together are exactly {1..top+bottom}. Standard mode has rows of
/// equal length n; remark mode has a top row one longer (n+1 over n).
struct ArrayPair {
    std::vector<int> top;
    std::vector<int> bottom;

    /// n, i.e. the bottom row length in either mode.
    int half() const { return static_cast<int>(bottom.size()); }
    ArrayMode mode() const;

    bool operator==(const ArrayPair&) const = default;
};

/// Validating constructor; the mode is inferred from the row lengths.
/// Throws std::invalid_argument with the offending field path.
ArrayPair array_pair(std::vector<int> top, std::vector<int> bottom);

inline constexpr int kDefaultArrayBound = 12;

/// C(2n,n) in standard mode, C(2n+1,n+1) in remark mode.
std::uint64_t array_count(int n, ArrayMode mode);

/// index-th pair (0-based), ordered lexicographically by the top-row set.
ArrayPair array_at(int n, ArrayMode mode, std::uint64_t index);

/// Visits pairs with index in [first, last); disjoint ranges shard the full
/// enumeration with results independent of the split.
void for_each_array(int n, ArrayMode mode, std::uint64_t first, std::uint64_t last,
                    const std::function<void(std::uint64_t, const ArrayPair&)>& visit);

std::vector<ArrayPair> enumerate_arrays(int n, ArrayMode mode, int max_n = kDefaultArrayBound);

}  // namespace sytbij
