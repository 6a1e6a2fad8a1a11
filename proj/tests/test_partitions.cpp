#include <doctest.h>

#include <stdexcept>

#include <set>

#include "hyperweil/partitions.hpp"

using namespace hyperweil;

TEST_CASE("partition counts") {
    CHECK(partitions_of(8).size() == 22);   // the twenty-two partitions of 8
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(10).size() == 42);
    for (int n = 1; n <= 20; ++n) {
        CHECK(static_cast<int64_t>(partitions_of(n).size()) == partition_count(n));
    }
}

TEST_CASE("partition stream is unique, sorted, and sums to n") {
    for (int n : {4, 8, 12}) {
        std::set<std::vector<int>> seen;
        for_each_partition(n, [&](const Partition& p) {
            CHECK(p.sum() == n);
            CHECK(std::is_sorted(p.parts.begin(), p.parts.end()));
            CHECK(seen.insert(p.parts).second);
        });
        CHECK(static_cast<int64_t>(seen.size()) == partition_count(n));
    }
}

TEST_CASE("partition helpers") {
    Partition p({4, 1, 3});
    CHECK(p.parts == std::vector<int>{1, 3, 4});
    CHECK(p.to_string() == "{1, 3, 4}");
    CHECK(p.has_distinct_parts());
    CHECK(!Partition({2, 2}).has_distinct_parts());
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(for_each_partition(0, [](const Partition&) {}), std::invalid_argument);
}
