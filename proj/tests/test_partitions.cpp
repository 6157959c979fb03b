#include "oracles.hpp"

#include "h4t/partitions.hpp"

#include <doctest.h>

#include <set>

using namespace h4t;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<OddPartition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts());
    return out;
}

std::set<std::vector<int>> part_set(const std::vector<EvenPseudoPartition>& ps)
{
    std::set<std::vector<int>> out;
    for (const auto& p : ps)
        out.insert(p.parts());
    return out;
}

} // namespace

TEST_CASE("odd partition enumeration examples")
{
    auto zero = enumerate_odd_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    auto three = parts_of(enumerate_odd_partitions(3));
    std::vector<std::vector<int>> want{{}, {1}, {1, 1}, {1, 1, 1}, {3}};
    CHECK(three == want);
}

TEST_CASE("odd partition counts")
{
    CHECK(count_odd_partitions(0) == 1);
    CHECK(count_odd_partitions(5) == 3);
    CHECK(count_odd_partitions(8) == 6);
    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        std::uint64_t exact = 0;
        for (const auto& p : enumerate_odd_partitions(n))
            exact += p.size() == n;
        CHECK(exact == count_odd_partitions(n));
        CHECK(count_distinct_partitions(n) == count_odd_partitions(n));
        CHECK(oracle::brute_odd_partitions(n) == count_odd_partitions(n));
    }
}

TEST_CASE("even pseudopartition enumeration examples")
{
    CHECK(part_set(enumerate_even_pseudopartitions(0, 1)) == std::set<std::vector<int>>{{}, {0}});
    CHECK(part_set(enumerate_even_pseudopartitions(2, 0)) == std::set<std::vector<int>>{{}, {2}});
    std::set<std::vector<int>> want{{}, {0}, {2}, {0, 2}, {4}, {0, 4}, {2, 2}, {0, 2, 2}};
    CHECK(part_set(enumerate_even_pseudopartitions(4, 1)) == want);
}

TEST_CASE("enumeration is duplicate free, sorted and within caps")
{
    for (int n = 0; n <= 12; ++n) {
        auto odd = enumerate_odd_partitions(n);
        for (std::size_t i = 1; i < odd.size(); ++i)
            CHECK(odd[i - 1] < odd[i]);
        for (const auto& p : odd) {
            CHECK(p.size() <= n);
            for (int x : p.parts())
                CHECK(x % 2 == 1);
        }
        for (int cap = 0; cap <= 2; ++cap) {
            auto even = enumerate_even_pseudopartitions(n, cap);
            for (std::size_t i = 1; i < even.size(); ++i)
                CHECK(even[i - 1] < even[i]);
            for (const auto& p : even) {
                CHECK(p.size() <= n);
                CHECK(p.zero_count() <= cap);
            }
            // brute force: positive even partitions of each size times zero choices
            std::size_t expected = 0;
            for (int s = 0; s <= n; s += 2) {
                std::vector<int> parts;
                for (int q = 2; q <= s; q += 2)
                    parts.push_back(q);
                std::vector<std::vector<int>> out;
                std::vector<int> cur;
                oracle::tuples(parts, s, 0, cur, out);
                expected += out.size() * static_cast<std::size_t>(cap + 1);
            }
            CHECK(even.size() == expected);
        }
    }
}

TEST_CASE("partition parsing and validation")
{
    CHECK(parse_odd_partition("[3,1,1]").parts() == std::vector<int>{1, 1, 3});
    CHECK(parse_odd_partition("[]").empty());
    CHECK(parse_even_pseudopartition("[0,2]").zero_count() == 1);
    CHECK_THROWS_AS(parse_odd_partition("[2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_even_pseudopartition("[1]"), std::invalid_argument);
    CHECK_THROWS_AS(OddPartition({0}), std::invalid_argument);
    OddPartition p({1, 1, 3});
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.size() == 5);
    CHECK(p.without(1).parts() == std::vector<int>{1, 3});
    CHECK(p.with(5).parts() == std::vector<int>{1, 1, 3, 5});
}
