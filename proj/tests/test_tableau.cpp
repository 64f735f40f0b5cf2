#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/tableau.hpp"

using namespace schurkit;

namespace {

std::vector<Tableau> collect(const Partition& shape, std::int64_t max_entry) {
    std::vector<Tableau> out;
    for (const auto& t : enumerate_ssyt(shape, max_entry))
        out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("Ferrers shape cells") {
    FerrersShape f(Partition{3, 2, 1, 1, 1});
    CHECK(f.cells().size() == 8);
    CHECK(f.contains(1, 3));
    CHECK(f.contains(5, 1));
    CHECK_FALSE(f.contains(2, 3));
    CHECK_FALSE(f.contains(6, 1));
    CHECK_FALSE(f.contains(0, 1));
    CHECK(f.column_length(1) == 5);
    CHECK(f.column_length(2) == 2);
    CHECK(f.column_length(3) == 1);
    CHECK(f.column_length(4) == 0);
    for (auto [r, c] : f.cells())
        CHECK(f.contains(r, c));
}

TEST_CASE("the eight (2,1) tableaux in three letters") {
    auto all = collect(Partition{2, 1}, 3);
    std::set<Tableau> got(all.begin(), all.end());
    std::set<Tableau> expected{
        Tableau({{1, 1}, {2}}), Tableau({{1, 1}, {3}}), Tableau({{2, 2}, {3}}), Tableau({{1, 2}, {3}}),
        Tableau({{1, 3}, {2}}), Tableau({{1, 2}, {2}}), Tableau({{1, 3}, {3}}), Tableau({{2, 3}, {3}}),
    };
    CHECK(all.size() == 8);
    CHECK(got == expected);
    // Row-major lexicographic order.
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("small enumerations") {
    CHECK(collect(Partition{1}, 1).size() == 1);
    CHECK(collect(Partition{2, 1}, 6).size() == 70);
    CHECK(collect(Partition{2, 1}, 1).empty());
    auto empty = collect(Partition{}, 3);
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().rows().empty());
}

TEST_CASE("(2,1) counts follow n(n-1)(n+1)/3") {
    for (std::int64_t n = 2; n <= 7; ++n)
        CHECK(static_cast<std::int64_t>(collect(Partition{2, 1}, n).size()) == n * (n - 1) * (n + 1) / 3);
}

TEST_CASE("enumeration matches brute force, without duplicates, and grows with max_entry") {
    for (std::int64_t n = 0; n <= 5; ++n)
        for (const auto& shape : partitions_of(n))
            for (std::int64_t m = 1; m <= 4; ++m) {
                auto fast = collect(shape, m);
                auto slow = oracle::brute_force_ssyt(shape.parts(), m);
                std::set<std::vector<std::int64_t>> fast_set;
                for (const auto& t : fast) {
                    CHECK(is_ssyt(t));
                    std::vector<std::int64_t> flat;
                    for (const auto& row : t.rows())
                        flat.insert(flat.end(), row.begin(), row.end());
                    fast_set.insert(flat);
                    auto e = content(t, m);
                    CHECK(std::accumulate(e.begin(), e.end(), std::int64_t{0}) == shape.size());
                }
                CHECK(fast_set.size() == fast.size());
                CHECK(fast_set == std::set<std::vector<std::int64_t>>(slow.begin(), slow.end()));

                auto bigger = collect(shape, m + 1);
                std::set<Tableau> bigger_set(bigger.begin(), bigger.end());
                for (const auto& t : fast)
                    CHECK(bigger_set.count(t) == 1);
            }
}

TEST_CASE("is_ssyt") {
    CHECK(is_ssyt(Tableau({{1, 2, 2, 5}, {2, 4}, {3, 6}, {5}})));
    CHECK_FALSE(is_ssyt(Tableau({{1, 1}, {1}})));
    CHECK_FALSE(is_ssyt(Tableau({{2, 1}, {3}})));
    CHECK_FALSE(is_ssyt(Tableau({{0, 1}, {2}})));
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), NotAPartition);
}

TEST_CASE("is_standard") {
    CHECK(is_standard(Tableau({{1, 2}, {3}})));
    CHECK_FALSE(is_standard(Tableau({{1, 1}, {2}})));
    CHECK_FALSE(is_standard(Tableau({{1, 2, 2, 5}, {2, 4}, {3, 6}, {5}})));
    CHECK(is_standard(Tableau(std::vector<Tableau::Row>{})));
}

TEST_CASE("content") {
    CHECK(content(Tableau({{1, 1}, {2}}), 3) == std::vector<std::int64_t>{2, 1, 0});
    CHECK(content(Tableau({{1, 2}, {3}}), 3) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(content(Tableau({{1, 3}, {2}}), 3) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(content(Tableau(std::vector<Tableau::Row>{}), 3) == std::vector<std::int64_t>{0, 0, 0});
    CHECK_THROWS_AS(content(Tableau({{1, 4}, {2}}), 3), EntryOutOfRange);
}

TEST_CASE("text rendering") {
    CHECK(to_string(Tableau({{1, 2, 2, 5}, {2, 4}, {3, 6}, {5}})) == "1 2 2 5\n2 4\n3 6\n5\n");
    Tableau t(Partition{2, 1}, std::vector<std::int64_t>{1, 3, 2});
    CHECK(t.at(1, 2) == 3);
    CHECK(t.at(2, 1) == 2);
    CHECK_THROWS_AS(t.at(2, 2), IndexOutOfRange);
}
