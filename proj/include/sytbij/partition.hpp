#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace sytbij {

/// Integer partition: weakly decreasing positive parts, read row by row.
/// The empty partition is the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }

    /// i-th part, 0-based; 0 past the last part.
    int part(int i) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Validating constructor; throws std::invalid_argument unless parts are
/// positive and weakly decreasing.
Partition partition_of(std::vector<int> parts);

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// (l1+1, l2, ...); the empty partition maps to (1).
Partition plus_one(const Partition& p);

/// Shape of the form (a, 1^b), including one-row and one-column shapes
/// and the empty shape.
bool is_hook(const Partition& p);

/// The family H(k,l;n): partitions of n whose (k+1)-th part is at most l.
struct HookFamily {
    int arm = 0;     // k
    int leg = 0;     // l
    int weight = 0;  // n

    bool contains(const Partition& p) const;
};

/// Members of H(k,l;n), in partitions_of order.
std::vector<Partition> hook_partitions(const HookFamily& family);

/// Exact binomial coefficient; 0 when k is out of range.
/// Throws std::overflow_error beyond 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace sytbij
