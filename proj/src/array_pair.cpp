#include "sytbij/array_pair.hpp"

#include <stdexcept>
#include <string>

#include "sytbij/partition.hpp"

namespace sytbij {

ArrayMode ArrayPair::mode() const {
    return top.size() == bottom.size() ? ArrayMode::standard : ArrayMode::remark;
}

ArrayPair array_pair(std::vector<int> top, std::vector<int> bottom) {
    const std::size_t m = top.size();
    const std::size_t p = bottom.size();
    if (m == 0)
        throw std::invalid_argument("rows[0]: top row must not be empty");
    if (m != p && m != p + 1)
        throw std::invalid_argument("rows: top length " + std::to_string(m) +
                                    " must equal bottom length " + std::to_string(p) +
                                    " or exceed it by one");
    const int total = static_cast<int>(m + p);
    const std::vector<int>* rows[2] = {&top, &bottom};
    std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
    for (int r = 0; r < 2; ++r) {
        const auto& row = *rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string at = "rows[" + std::to_string(r) + "][" + std::to_string(i) + "]";
            if (row[i] < 1 || row[i] > total)
                throw std::invalid_argument(at + ": entry " + std::to_string(row[i]) +
                                            " outside 1.." + std::to_string(total));
            if (i > 0 && row[i - 1] >= row[i])
                throw std::invalid_argument(at + ": row not strictly increasing");
            if (seen[row[i]])
                throw std::invalid_argument(at + ": repeated entry " + std::to_string(row[i]));
            seen[row[i]] = 1;
        }
    }
    return ArrayPair{std::move(top), std::move(bottom)};
}

namespace {

void check_n(int n, ArrayMode mode) {
    const int least = mode == ArrayMode::standard ? 1 : 0;
    if (n < least)
        throw std::invalid_argument("n must be at least " + std::to_string(least) +
                                    " in this mode");
}

int top_size(int n, ArrayMode mode) {
    return mode == ArrayMode::standard ? n : n + 1;
}

void fill_bottom(ArrayPair& a, int total) {
    a.bottom.clear();
    std::size_t next = 0;
    for (int v = 1; v <= total; ++v) {
        if (next < a.top.size() && a.top[next] == v)
            ++next;
        else
            a.bottom.push_back(v);
    }
}

}  // namespace

std::uint64_t array_count(int n, ArrayMode mode) {
    check_n(n, mode);
    return mode == ArrayMode::standard ? binomial(2 * n, n) : binomial(2 * n + 1, n + 1);
}

ArrayPair array_at(int n, ArrayMode mode, std::uint64_t index) {
    check_n(n, mode);
    if (index >= array_count(n, mode))
        throw std::invalid_argument("array index " + std::to_string(index) + " out of range");
    const int m = top_size(n, mode);
    const int total = m + n;
    ArrayPair a;
    a.top.reserve(m);
    int v = 1;
    for (int j = m; j >= 1; --j) {
        for (;; ++v) {
            const std::uint64_t with_v = binomial(total - v, j - 1);
            if (index < with_v) {
                a.top.push_back(v++);
                break;
            }
            index -= with_v;
        }
    }
    fill_bottom(a, total);
    return a;
}

void for_each_array(int n, ArrayMode mode, std::uint64_t first, std::uint64_t last,
                    const std::function<void(std::uint64_t, const ArrayPair&)>& visit) {
    check_n(n, mode);
    const std::uint64_t total_count = array_count(n, mode);
    if (last > total_count) last = total_count;
    if (first >= last) return;
    ArrayPair a = array_at(n, mode, first);
    const int m = top_size(n, mode);
    const int total = m + n;
    for (std::uint64_t idx = first;;) {
        visit(idx, a);
        if (++idx == last) break;
        // lexicographic successor of the top-row set
        int i = m - 1;
        while (a.top[i] == total - (m - 1 - i)) --i;
        ++a.top[i];
        for (int j = i + 1; j < m; ++j) a.top[j] = a.top[j - 1] + 1;
        fill_bottom(a, total);
    }
}

std::vector<ArrayPair> enumerate_arrays(int n, ArrayMode mode, int max_n) {
    check_n(n, mode);
    if (n > max_n)
        throw std::invalid_argument("enumerate_arrays: n = " + std::to_string(n) +
                                    " exceeds the bound " + std::to_string(max_n));
    std::vector<ArrayPair> out;
    out.reserve(array_count(n, mode));
    for_each_array(n, mode, 0, array_count(n, mode),
                   [&](std::uint64_t, const ArrayPair& a) { out.push_back(a); });
    return out;
}

}  // namespace sytbij
