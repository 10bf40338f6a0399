#include "sytbij/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sytbij {

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts[i] : 0;
}

Partition partition_of(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition part " + std::to_string(i) + " is " +
                                        std::to_string(parts[i]) + "; parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must be weakly decreasing; part " +
                                        std::to_string(i - 1) + " < part " + std::to_string(i));
    }
    return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> stack;
    // Largest admissible part first at every level: reverse-lexicographic,
    // (n) first and (1^n) last.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{stack});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    rec(rec, n, std::max(n, 1));
    return out;
}

Partition plus_one(const Partition& p) {
    Partition q = p;
    if (q.parts.empty())
        q.parts.push_back(1);
    else
        q.parts.front() += 1;
    return q;
}

bool is_hook(const Partition& p) {
    return p.part(1) <= 1;
}

bool HookFamily::contains(const Partition& p) const {
    return p.weight() == weight && p.part(arm) <= leg;
}

std::vector<Partition> hook_partitions(const HookFamily& family) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(family.weight))
        if (family.contains(p)) out.push_back(std::move(p));
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result is C(n-k+i-1, i-1); multiplying then dividing stays exact
        std::uint64_t scaled;
        if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(n - k + i), &scaled))
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
        result = scaled / static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace sytbij
