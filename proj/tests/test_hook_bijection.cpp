#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sytbij/array_pair.hpp"
#include "sytbij/hook_bijection.hpp"
#include "sytbij/partition.hpp"
#include "sytbij/tableau.hpp"

using namespace sytbij;

namespace {

Partition hook_shape(int row_length, int column_below) {
    std::vector<int> parts{row_length};
    parts.insert(parts.end(), column_below, 1);
    return partition_of(parts);
}

}  // namespace

TEST_CASE("worked n = 5 example maps to the published pair") {
    const ArrayPair a = array_pair({2, 4, 8, 9, 10}, {1, 3, 5, 6, 7});
    const HookTableauPair pair = to_hook_pair(a);
    // first: row (1,3,5), column (1,2,4,6); second: column (1,4,5,6), row (1,2,3)
    CHECK(pair.first == Tableau{{{1, 3, 5}, {2}, {4}, {6}}});
    CHECK(pair.second == Tableau{{{1, 2, 3}, {4}, {5}, {6}}});
    CHECK(pair.first.shape() == partition_of({3, 1, 1, 1}));
    CHECK(pair.second.shape() == partition_of({3, 1, 1, 1}));
    CHECK(from_hook_pair(pair) == a);
}

TEST_CASE("n = 1 arrays map to the two single-shape pairs") {
    const HookTableauPair row_pair = to_hook_pair(array_pair({1}, {2}));
    CHECK(row_pair.first == Tableau{{{1, 2}}});
    CHECK(row_pair.second == Tableau{{{1, 2}}});

    const HookTableauPair column_pair = to_hook_pair(array_pair({2}, {1}));
    CHECK(column_pair.first == Tableau{{{1}, {2}}});
    CHECK(column_pair.second == Tableau{{{1}, {2}}});

    CHECK(from_hook_pair(row_pair) == array_pair({1}, {2}));
    CHECK(from_hook_pair(column_pair) == array_pair({2}, {1}));
}

TEST_CASE("from_hook_pair rejects pairs outside the image") {
    const Tableau flat{{{1, 2, 3}, {4}}};          // shape (3,1)
    const Tableau tall{{{1, 2}, {3}, {4}}};        // shape (2,1,1)
    CHECK(is_standard(flat));
    CHECK(is_standard(tall));
    CHECK_THROWS_AS(from_hook_pair({flat, tall}), std::invalid_argument);  // shapes unequal

    const Tableau not_standard{{{2, 1, 3}, {4}}};
    CHECK_THROWS_AS(from_hook_pair({not_standard, flat}), std::invalid_argument);

    const Tableau square{{{1, 2}, {3, 4}}};        // not a hook
    CHECK_THROWS_AS(from_hook_pair({square, square}), std::invalid_argument);

    const Tableau tiny{{{1, 2}}};                  // weights differ by two
    CHECK_THROWS_AS(from_hook_pair({flat, tiny}), std::invalid_argument);
}

TEST_CASE("shape law: common shape is (k+1, 1^(n-k)) with k = |top within 1..n|") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : enumerate_arrays(n, ArrayMode::standard)) {
            int k = 0;
            for (int v : a.top) k += v <= n;
            const HookTableauPair pair = to_hook_pair(a);
            CHECK(is_standard(pair.first));
            CHECK(is_standard(pair.second));
            CHECK(pair.first.shape() == hook_shape(k + 1, n - k));
            CHECK(pair.second.shape() == hook_shape(k + 1, n - k));
        }
}

TEST_CASE("round-trip over every standard array up to n = 6, images distinct") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> images;
        for (const auto& a : enumerate_arrays(n, ArrayMode::standard)) {
            const HookTableauPair pair = to_hook_pair(a);
            CHECK(from_hook_pair(pair) == a);
            std::string key;
            for (const auto& t : {pair.first, pair.second})
                for (const auto& row : t.rows) {
                    for (int v : row) key += std::to_string(v) + ",";
                    key += ";";
                }
            images.insert(std::move(key));
        }
        CHECK(images.size() == array_count(n, ArrayMode::standard));
    }
}

TEST_CASE("remark-mode arrays give a plus_one shape gap and round-trip") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& a : enumerate_arrays(n, ArrayMode::remark)) {
            const HookTableauPair pair = to_hook_pair(a);
            CHECK(is_standard(pair.first));
            CHECK(is_standard(pair.second));
            CHECK(pair.first.weight() == n + 2);
            CHECK(pair.second.weight() == n + 1);
            CHECK(pair.first.shape() == plus_one(pair.second.shape()));
            CHECK(from_hook_pair(pair) == a);
        }
}

TEST_CASE("remark n = 0 single array") {
    const HookTableauPair pair = to_hook_pair(array_pair({1}, {}));
    CHECK(pair.first == Tableau{{{1, 2}}});
    CHECK(pair.second == Tableau{{{1}}});
    CHECK(from_hook_pair(pair) == array_pair({1}, {}));
}
