#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "hyperweil/admissibility.hpp"

using namespace hyperweil;

namespace {

std::vector<uint8_t> par(std::initializer_list<int> bits) {
    std::vector<uint8_t> v;
    for (int b : bits) v.push_back(static_cast<uint8_t>(b));
    return v;
}

}  // namespace

TEST_CASE("Q(n) distinct-part counts") {
    CHECK(q_distinct(8) == 6);
    CHECK(q_distinct(4) == 2);
    CHECK(q_distinct(16) == 32);
    int64_t expected[] = {2, 4, 6, 10, 15, 22, 32};
    for (int g = 1; g <= 7; ++g) CHECK(q_distinct(2 * g + 2) == expected[g - 1]);
    // Euler: distinct parts count = odd parts count
    for (int n = 1; n <= 40; ++n) CHECK(q_distinct(n) == q_odd_parts(n));
}

TEST_CASE("class polynomials of named partitions") {
    // Table rows for genus 3: {1,7} -> (1,1,1), {3,5} -> (0,1,1), {8} -> (0,1,0)
    CHECK(parities_from_class(class_from_partition(Partition({1, 7})), 3) == par({1, 1, 1}));
    CHECK(parities_from_class(class_from_partition(Partition({3, 5})), 3) == par({0, 1, 1}));
    CHECK(parities_from_class(class_from_partition(Partition({8})), 3) == par({0, 1, 0}));
    // every class polynomial is self-reciprocal with constant term 1
    for_each_partition(10, [&](const Partition& p) {
        F2Poly c = class_from_partition(p);
        CHECK(c.degree() == 8);
        CHECK(c.coeff(0));
        CHECK(c.is_self_reciprocal());
    });
    CHECK_THROWS_AS(class_from_partition(Partition({1, 2})), std::invalid_argument);
}

TEST_CASE("canonical distinct-part representative") {
    CHECK(canonical_distinct(Partition({1, 1})).parts == std::vector<int>{2});
    CHECK(canonical_distinct(Partition({1, 1, 3, 3})).parts == std::vector<int>{2, 6});
    CHECK(canonical_distinct(Partition({3, 5})).parts == std::vector<int>{3, 5});
    // class preserved, result distinct, for every partition of 2g+2, g <= 8
    for (int g = 1; g <= 8; ++g) {
        for_each_partition(2 * g + 2, [&](const Partition& p) {
            Partition c = canonical_distinct(p);
            CHECK(c.has_distinct_parts());
            CHECK(class_from_partition(c) == class_from_partition(p));
        });
    }
}

TEST_CASE("genus 3 class table matches the printed 22-partition grouping") {
    ClassTable table = admissible_classes(3);
    REQUIRE(table.rows.size() == 6);

    std::map<std::vector<uint8_t>, std::set<std::vector<int>>> got;
    size_t total = 0;
    for (const auto& row : table.rows) {
        for (const auto& p : row.members) {
            got[row.parities].insert(p.parts);
            ++total;
        }
    }
    CHECK(total == 22);

    using vi = std::vector<int>;
    std::map<std::vector<uint8_t>, std::set<vi>> expected = {
        {par({0, 1, 1}), {{3, 5}}},
        {par({1, 1, 0}), {{1, 1, 1, 1, 1, 3}, {1, 1, 1, 2, 3}, {1, 2, 2, 3}, {1, 3, 4}}},
        {par({1, 0, 0}), {{1, 1, 1, 5}, {1, 2, 5}}},
        {par({0, 0, 0}), {{1, 1, 3, 3}, {1, 1, 6}, {2, 3, 3}, {2, 6}}},
        {par({0, 1, 0}),
         {{1, 1, 1, 1, 1, 1, 1, 1},
          {1, 1, 1, 1, 1, 1, 2},
          {1, 1, 1, 1, 2, 2},
          {1, 1, 1, 1, 4},
          {1, 1, 2, 2, 2},
          {1, 1, 2, 4},
          {2, 2, 2, 2},
          {2, 2, 4},
          {4, 4},
          {8}}},
        {par({1, 1, 1}), {{1, 7}}},
    };
    CHECK(got == expected);
}

TEST_CASE("class tables for g <= 8") {
    for (int g = 1; g <= 8; ++g) {
        ClassTable table = admissible_classes(g);
        CHECK(static_cast<int64_t>(table.rows.size()) == q_distinct(2 * g + 2));
        int64_t members = 0;
        std::set<std::vector<int>> distinct_witnesses;
        for (const auto& row : table.rows) {
            members += static_cast<int64_t>(row.members.size());
            CHECK(row.witness.has_distinct_parts());
            CHECK(class_from_partition(row.witness) == row.f2);
            // distinct-parts partitions inject into classes: exactly one per row
            int n_distinct = 0;
            for (const auto& p : row.members) {
                if (p.has_distinct_parts()) ++n_distinct;
            }
            CHECK(n_distinct == 1);
            CHECK(distinct_witnesses.insert(row.witness.parts).second);
        }
        CHECK(members == partition_count(2 * g + 2));
    }
}

TEST_CASE("genus 1 classes") {
    ClassTable table = admissible_classes(1);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].parities == par({0}));
    CHECK(table.rows[0].witness.parts == std::vector<int>{4});
    CHECK(table.rows[1].parities == par({1}));
    CHECK(table.rows[1].witness.parts == std::vector<int>{1, 3});
}

TEST_CASE("is_admissible verdicts") {
    auto v = is_admissible(par({0, 1, 0}), 3);
    CHECK(v.admissible);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->parts == std::vector<int>{8});

    CHECK(!is_admissible(par({0, 0, 1}), 3).admissible);
    CHECK(!is_admissible(par({1, 0, 1}), 3).admissible);

    // inadmissible counts match 2^g - Q(2g+2)
    int64_t expected_bad[] = {0, 0, 2, 6, 17, 42, 96};
    for (int g = 1; g <= 7; ++g) {
        int64_t bad = 0;
        for (uint32_t mask = 0; mask < (uint32_t(1) << g); ++mask) {
            if (!is_admissible(parities_from_mask(mask, g), g).admissible) ++bad;
        }
        CHECK(bad == expected_bad[g - 1]);
    }
}

TEST_CASE("limit proportions") {
    CHECK(limit_proportion(3) == Rational(BigInt(3), BigInt(4)));
    CHECK(limit_proportion(3).to_percent() == "75.00%");
    CHECK(limit_proportion(5) == Rational(BigInt(15), BigInt(32)));
    CHECK(limit_proportion(5).to_percent() == "46.88%");
    CHECK(limit_proportion(1) == Rational(BigInt(1), BigInt(1)));
    CHECK(limit_proportion(1).to_percent() == "100.00%");
    CHECK(limit_proportion(7).to_percent() == "25.00%");
}

TEST_CASE("Q(N) asymptotic estimate") {
    CHECK(q_asymptotic(8) / static_cast<double>(q_distinct(8)) < 2.0);
    CHECK(q_asymptotic(8) / static_cast<double>(q_distinct(8)) > 0.5);
    CHECK(q_asymptotic(16) / static_cast<double>(q_distinct(16)) < 2.0);
    CHECK(q_asymptotic(16) / static_cast<double>(q_distinct(16)) > 0.5);

    // approach to 1: the ratio stays in (1, 1.13] on [8, 200] and block maxima
    // of |ratio - 1| over consecutive blocks of 24 strictly decrease
    std::vector<double> dev;
    for (int n = 8; n <= 200; ++n) {
        double r = q_asymptotic(n) / static_cast<double>(q_distinct(n));
        CHECK(r > 1.0);
        CHECK(r <= 1.13);
        dev.push_back(r - 1.0);
    }
    double prev_max = 1e9;
    for (size_t start = 0; start < dev.size(); start += 24) {
        double m = 0;
        for (size_t i = start; i < std::min(start + 24, dev.size()); ++i) m = std::max(m, dev[i]);
        CHECK(m < prev_max);
        prev_max = m;
    }
}
