#include "sytbij/tableau.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sytbij {

Partition Tableau::shape() const {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    return partition_of(std::move(lengths));
}

int Tableau::weight() const {
    int total = 0;
    for (const auto& row : rows) total += static_cast<int>(row.size());
    return total;
}

bool has_valid_shape(const Tableau& t) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].empty()) return false;
        if (i > 0 && t.rows[i - 1].size() < t.rows[i].size()) return false;
    }
    return true;
}

bool is_standard(const Tableau& t) {
    if (!has_valid_shape(t)) return false;
    const int n = t.weight();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : t.rows)
        for (int e : row) {
            if (e < 1 || e > n || seen[e]) return false;
            seen[e] = 1;
        }
    for (const auto& row : t.rows)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] >= row[j]) return false;
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i - 1][j] >= t.rows[i][j]) return false;
    return true;
}

std::vector<Tableau> enumerate_syt(const Partition& shape, int max_weight) {
    const int n = shape.weight();
    if (n > max_weight)
        throw std::invalid_argument("enumerate_syt: |shape| = " + std::to_string(n) +
                                    " exceeds the bound " + std::to_string(max_weight));
    const int k = shape.length();
    std::vector<Tableau> out;
    Tableau t;
    t.rows.assign(k, {});
    std::vector<int> filled(k, 0);
    // Values are placed in increasing order; a row is eligible while shorter
    // than its part and strictly shorter than the row above, which keeps
    // columns increasing for free.
    auto place = [&](auto&& self, int value) -> void {
        if (value > n) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < k; ++r) {
            if (filled[r] == shape.parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            t.rows[r].push_back(value);
            ++filled[r];
            self(self, value + 1);
            --filled[r];
            t.rows[r].pop_back();
        }
    };
    place(place, 1);
    return out;
}

std::uint64_t count_syt(const Partition& shape) {
    const int n = shape.weight();
    const auto& parts = shape.parts;
    const int k = shape.length();

    std::vector<std::uint64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(n));
    std::vector<int> col_height(parts.empty() ? 0 : parts[0], 0);
    for (int j = 0; j < (parts.empty() ? 0 : parts[0]); ++j) {
        int h = 0;
        while (h < k && parts[h] > j) ++h;
        col_height[j] = h;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks.push_back(static_cast<std::uint64_t>(parts[i] - j + col_height[j] - i - 1));

    // n! / prod(hooks) via running gcd cancellation; every hook divides out
    // completely because the quotient is an integer.
    std::uint64_t result = 1;
    for (int v = 2; v <= n; ++v) {
        std::uint64_t f = static_cast<std::uint64_t>(v);
        for (auto& d : hooks) {
            if (d == 1) continue;
            const std::uint64_t g = std::gcd(f, d);
            f /= g;
            d /= g;
            if (f == 1) break;
        }
        std::uint64_t scaled;
        if (__builtin_mul_overflow(result, f, &scaled))
            throw std::overflow_error("count_syt: the count exceeds 64 bits");
        result = scaled;
    }
    return result;
}

}  // namespace sytbij
