#include <doctest.h>

#include <stdexcept>

#include "hyperweil/admissibility.hpp"
#include "hyperweil/census.hpp"
#include "hyperweil/sieve.hpp"

using namespace hyperweil;

TEST_CASE("degree sets of explicit curves") {
    ExtFieldCtx F3 = build_extension(3, 1);
    // y^2 = x^3 - x over F_3: three linear factors plus the point at infinity
    HyperellipticCurve c1{F3, {0, 2, 0, 1}, 1};
    CHECK(degree_set(c1).parts == std::vector<int>{1, 1, 1, 1});
    // y^2 = (x^2+1)(x+1) = x^3 + x^2 + x + 1 over F_3
    HyperellipticCurve c2{F3, {1, 1, 1, 1}, 1};
    CHECK(degree_set(c2).parts == std::vector<int>{1, 1, 2});
    // irreducible of degree 2g+2: single orbit, no infinity part
    ExtFieldCtx F34 = build_extension(3, 4);
    HyperellipticCurve c3{F3, F34.modulus, 1};
    CHECK(degree_set(c3).parts == std::vector<int>{4});
}

TEST_CASE("point counts of y^2 = x^3 - x over F_3") {
    ExtFieldCtx F3 = build_extension(3, 1);
    HyperellipticCurve c{F3, {0, 2, 0, 1}, 1};
    CHECK(count_points(c, 1) == 4);   // x in {0,1,2} all give y = 0, plus infinity
    CHECK(count_points(c, 2) == 16);
    // parity law at each n: count = w_count(degree set, n) mod 2
    Partition dset = degree_set(c);
    for (int n = 1; n <= 4; ++n) {
        CHECK((count_points(c, n) - w_count(dset, n)) % 2 == 0);
    }
}

TEST_CASE("count_points matches Newton counts from the recovered Weil polynomial") {
    ExtFieldCtx F5 = build_extension(5, 1);
    HyperellipticCurve c{F5, {2, 3, 1, 0, 1}, 1};  // y^2 = x^4 + x^2 + 3x + 2, squarefree
    REQUIRE(is_squarefree(PolyFp(F5, c.f)));
    std::vector<BigInt> counts{count_points(c, 1)};
    WeilPolyCoeffs w = counts_to_coeffs(5, 1, counts);
    PointCounts pc = point_counts(w, 4);
    for (int n = 1; n <= 4; ++n) CHECK(pc.counts[static_cast<size_t>(n - 1)] == count_points(c, n));
}

TEST_CASE("exhaustive census at (1, 3)") {
    std::vector<CensusRecord> records;
    CensusSummary sum = census(1, 3, CensusMode::Exhaustive(), [&](const CensusRecord& r) {
        records.push_back(r);
    });
    CHECK(sum.curves == 144);
    CHECK(sum.violations == 0);
    CHECK(sum.all_classes_admissible);
    CHECK(static_cast<int64_t>(records.size()) == sum.curves);
    // all five partitions of 4 realized
    CHECK(sum.partition_counts.size() == 5);
    // ids are sequential in enumeration order
    for (size_t i = 0; i < records.size(); ++i) CHECK(records[i].id == i);

    // independent replay over the emitted records
    CensusSummary replay = verify_census(records, 1, 3);
    CHECK(replay.curves == sum.curves);
    CHECK(replay.violations == 0);
}

TEST_CASE("census records honor the instance sieve") {
    // every censused Weil polynomial survives, with its own degree set among
    // the surviving partitions
    census(1, 5, CensusMode::Exhaustive(), [&](const CensusRecord& r) {
        SieveVerdict v = instance_ruled_out(r.weil);
        CHECK(!v.ruled_out);
        bool found = false;
        for (const auto& p : v.surviving) {
            if (p == r.degree_set) found = true;
        }
        CHECK(found);
    });
}

TEST_CASE("exhaustive census at (2, 3) has no violations") {
    CensusSummary sum = census(2, 3, CensusMode::Exhaustive());
    CHECK(sum.violations == 0);
    CHECK(sum.all_classes_admissible);
    CHECK(sum.curves > 0);
    // realized classes lie within the Q(6) = 4 admissible ones
    CHECK(sum.class_counts.size() <= 4);
}

TEST_CASE("sampled census is deterministic and admissible (2, 7)") {
    CensusSummary s1 = census(2, 7, CensusMode::Sample(500, 42));
    CensusSummary s2 = census(2, 7, CensusMode::Sample(500, 42));
    CHECK(s1.curves == 500);
    CHECK(s1.violations == 0);
    CHECK(s1.partition_counts == s2.partition_counts);
    CHECK(s1.class_counts == s2.class_counts);
    CensusSummary s3 = census(2, 7, CensusMode::Sample(500, 43));
    CHECK(!(s3.class_counts == s1.class_counts && s3.partition_counts == s1.partition_counts));
}

TEST_CASE("serial and parallel census agree") {
    std::vector<std::string> labels_par, labels_ser;
    CensusSummary a = census(1, 5, CensusMode::Exhaustive(), [&](const CensusRecord& r) {
        labels_par.push_back(r.label);
    });
    CensusSummary b = census_serial(1, 5, CensusMode::Exhaustive(), [&](const CensusRecord& r) {
        labels_ser.push_back(r.label);
    });
    CHECK(a.curves == b.curves);
    CHECK(labels_par == labels_ser);
    CHECK(a.partition_counts == b.partition_counts);
}

TEST_CASE("census over a non-prime field (1, 9)") {
    CensusSummary sum = census(1, 9, CensusMode::Sample(300, 7));
    CHECK(sum.curves == 300);
    CHECK(sum.violations == 0);
    CHECK(sum.all_classes_admissible);
}

TEST_CASE("census guards") {
    CHECK_THROWS_AS(census(1, 4, CensusMode::Exhaustive()), std::domain_error);       // even q
    CHECK_THROWS_AS(census(3, 31, CensusMode::Exhaustive()), std::domain_error);      // q^{2g+2} > 1e9
    CHECK_THROWS_AS(census(1, 3, CensusMode::Sample(0, 1)), std::invalid_argument);
}
