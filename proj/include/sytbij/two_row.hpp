#pragma once

#include <vector>

#include "sytbij/array_pair.hpp"
#include "sytbij/tableau.hpp"

namespace sytbij {

/// State of the pivot-swap process: two strictly increasing rows over a
/// fixed ground set, the top row at least as long as the bottom.
struct TwoRowState {
    std::vector<int> top;
    std::vector<int> bottom;

    bool operator==(const TwoRowState&) const = default;
};

TwoRowState as_state(const ArrayPair& a);

/// One row when the bottom is empty, two rows otherwise.
Tableau as_tableau(const TwoRowState& s);

/// top[j] < bottom[j] for every bottom column; an empty bottom row is
/// standard by convention.
bool is_standard_state(const TwoRowState& s);

struct ForwardStep {
    TwoRowState state;
    int pivot;  // 1-based column index
};

/// One step at the smallest column i with top[i] > bottom[i]: the bottom
/// prefix through i moves up, the top prefix before i moves down. Lengths
/// go (r,s) -> (r+1,s-1). Throws std::invalid_argument on a standard state.
ForwardStep forward_step(const TwoRowState& s);

/// Undoes one forward step. The pivot is recovered as the smallest column i
/// with top[i] < bottom[i] (bottom length + 1 when none). Throws
/// std::invalid_argument when the state cannot have come from a step (top
/// fewer than two entries longer, or the reconstruction fails validation).
TwoRowState inverse_step(const TwoRowState& s);

/// Every state from the input to the final standard one, with the pivot of
/// each step taken.
struct BijectionTrace {
    std::vector<TwoRowState> states;
    std::vector<int> pivots;

    int steps() const { return static_cast<int>(pivots.size()); }
};

/// Iterates forward_step until the state is standard; at most n steps.
/// A trace is recorded only when requested.
Tableau to_two_row_syt(const ArrayPair& a, BijectionTrace* trace = nullptr);

/// Applies inverse_step until the rows reach lengths (n,n) (or (n+1,n) for
/// odd weight); the result is the unique preimage.
ArrayPair from_two_row_syt(const Tableau& t);

}  // namespace sytbij
