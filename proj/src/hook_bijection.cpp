#include "sytbij/hook_bijection.hpp"

#include <stdexcept>
#include <string>

namespace sytbij {

namespace {

// Hook tableau from its first-row entries (sorted, corner 1 included);
// the complement of the row within {1..weight} becomes the column.
Tableau hook_from_row(const std::vector<int>& row, int weight) {
    Tableau t;
    t.rows.push_back(row);
    std::size_t next = 0;
    for (int v = 1; v <= weight; ++v) {
        if (next < row.size() && row[next] == v)
            ++next;
        else
            t.rows.push_back({v});
    }
    return t;
}

// Hook tableau from its first-column entries (sorted, corner 1 included).
Tableau hook_from_column(const std::vector<int>& column, int weight) {
    Tableau t;
    std::vector<int> row;
    std::size_t next = 0;
    for (int v = 1; v <= weight; ++v) {
        if (next < column.size() && column[next] == v) {
            ++next;
            if (v == 1) row.push_back(1);  // corner lives in the row
        } else {
            row.push_back(v);
        }
    }
    t.rows.push_back(std::move(row));
    for (std::size_t i = 1; i < column.size(); ++i) t.rows.push_back({column[i]});
    return t;
}

}  // namespace

HookTableauPair to_hook_pair(const ArrayPair& a) {
    const int m = static_cast<int>(a.top.size());
    const int p = static_cast<int>(a.bottom.size());
    std::vector<int> row1{1};
    std::vector<int> col2{1};
    for (int v : a.top) {
        if (v <= m)
            row1.push_back(v + 1);
        else
            col2.push_back(v - m + 1);
    }
    return HookTableauPair{hook_from_row(row1, m + 1), hook_from_column(col2, p + 1)};
}

ArrayPair from_hook_pair(const HookTableauPair& pair) {
    if (!is_standard(pair.first))
        throw std::invalid_argument("first: not a standard tableau");
    if (!is_standard(pair.second))
        throw std::invalid_argument("second: not a standard tableau");
    const Partition s1 = pair.first.shape();
    const Partition s2 = pair.second.shape();
    if (!is_hook(s1))
        throw std::invalid_argument("first: shape is not a (1,1)-hook");
    if (!is_hook(s2))
        throw std::invalid_argument("second: shape is not a (1,1)-hook");

    const int w1 = pair.first.weight();
    const int w2 = pair.second.weight();
    if (w1 == w2) {
        if (s1 != s2) throw std::invalid_argument("shapes unequal");
    } else if (w1 == w2 + 1) {
        if (s1 != plus_one(s2))
            throw std::invalid_argument("first shape must be plus_one of the second");
    } else {
        throw std::invalid_argument("tableau weights must be equal or differ by one");
    }

    const int m = w1 - 1;
    const int p = w2 - 1;
    std::vector<int> top;
    for (int r : pair.first.rows[0])
        if (r > 1) top.push_back(r - 1);
    for (std::size_t i = 1; i < pair.second.rows.size(); ++i)
        top.push_back(pair.second.rows[i][0] + m - 1);

    std::vector<int> bottom;
    std::vector<char> in_top(static_cast<std::size_t>(m + p) + 1, 0);
    for (int v : top) {
        if (v < 1 || v > m + p)
            throw std::invalid_argument("pair is outside the bijection's image");
        in_top[v] = 1;
    }
    for (int v = 1; v <= m + p; ++v)
        if (!in_top[v]) bottom.push_back(v);
    return array_pair(std::move(top), std::move(bottom));
}

}  // namespace sytbij
