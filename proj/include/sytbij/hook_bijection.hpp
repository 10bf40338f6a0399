#pragma once

#include "sytbij/array_pair.hpp"
#include "sytbij/tableau.hpp"

namespace sytbij {

/// Ordered pair of hook-shaped SYTs. A standard-mode array yields equal
/// shapes; a remark-mode array yields first.shape == plus_one(second.shape).
/// The corner entry 1 belongs to both the row and the column of a hook but
/// is stored once, in the row.
struct HookTableauPair {
    Tableau first;
    Tableau second;

    bool operator==(const HookTableauPair&) const = default;
};

/// The set-intersection construction: top entries at most |top| shift by +1
/// into the first tableau's row; the rest shift down into the second
/// tableau's column; each tableau is completed by the complementary entries.
HookTableauPair to_hook_pair(const ArrayPair& a);

/// Inverse: reads the first row of `first` (shifted -1) and the first column
/// of `second` (shifted +|top|-1), discarding the corners. Throws
/// std::invalid_argument for pairs outside the bijection's image.
ArrayPair from_hook_pair(const HookTableauPair& pair);

}  // namespace sytbij
