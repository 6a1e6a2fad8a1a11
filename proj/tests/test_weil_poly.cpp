#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hyperweil/label.hpp"
#include "hyperweil/weil_poly.hpp"

using namespace hyperweil;

namespace {

FullPoly full(std::initializer_list<int64_t> ascending) {
    FullPoly p;
    for (int64_t c : ascending) p.emplace_back(c);
    return p;
}

}  // namespace

TEST_CASE("expansion of published Weil polynomials") {
    // Z1 = t^6 - t^4 - 2t^3 - 3t^2 + 27
    CHECK(expand(WeilPolyCoeffs(3, 3, {0, -1, -2})) == full({27, 0, -3, -2, -1, 0, 1}));
    // Z2 = t^6 - 2t^5 + 9t^4 - 22t^3 + 45t^2 - 50t + 125
    CHECK(expand(WeilPolyCoeffs(3, 5, {-2, 9, -22})) == full({125, -50, 45, -22, 9, -2, 1}));
    CHECK(expand(WeilPolyCoeffs(1, 3, {0})) == full({3, 0, 1}));
}

TEST_CASE("point counts by Newton identities") {
    WeilPolyCoeffs z1(3, 3, {0, -1, -2});
    PointCounts pc = point_counts(z1, 3);
    CHECK(pc.counts[0] == 4);
    CHECK(pc.counts[1] == 8);
    CHECK(pc.counts[2] == 22);
    // default n_max = 2g+2
    CHECK(point_counts(z1).counts.size() == 8);
}

TEST_CASE("counts_to_coeffs inverts point_counts") {
    auto w = counts_to_coeffs(3, 3, {BigInt(4), BigInt(8), BigInt(22)});
    CHECK(w == WeilPolyCoeffs(3, 3, {0, -1, -2}));
    CHECK(counts_to_coeffs(3, 1, {BigInt(4)}) == WeilPolyCoeffs(1, 3, {0}));
    CHECK(counts_to_coeffs(5, 2, {BigInt(6), BigInt(26)}) == WeilPolyCoeffs(2, 5, {0, 0}));
    // N2 = 9 forces s2 = 1, and s2 + c1 s1 + 2 c2 = 0 has no integer c2
    CHECK_THROWS_AS(counts_to_coeffs(3, 2, {BigInt(4), BigInt(9)}), NonIntegralCounts);
}

TEST_CASE("round trip on random coefficient vectors, g <= 5") {
    std::mt19937_64 rng(987);
    for (int iter = 0; iter < 1000; ++iter) {
        int g = 1 + static_cast<int>(rng() % 5);
        int64_t q = (rng() % 2) ? 3 : 5;
        std::vector<BigInt> a;
        for (int i = 0; i < g; ++i) a.emplace_back(static_cast<int64_t>(rng() % 41) - 20);
        WeilPolyCoeffs w(g, q, a);
        PointCounts pc = point_counts(w, g);
        CHECK(counts_to_coeffs(q, g, pc.counts) == w);
    }
}

namespace {

// The four correct printed genus-3 point-count formulas, plus the n = 5 one
// with its missing +5 a1^2 a3 term restored.
BigInt formula_n(int n, int64_t q, const BigInt& a1, const BigInt& a2, const BigInt& a3) {
    BigInt Q = q;
    switch (n) {
        case 1:
            return Q + 1 + a1;
        case 2:
            return Q * Q + 1 - a1 * a1 + 2 * a2;
        case 3:
            return Q * Q * Q + 1 + a1 * a1 * a1 - 3 * a1 * a2 + 3 * a3;
        case 4:
            return Q * Q * Q * Q + 1 - a1 * a1 * a1 * a1 + 4 * a1 * a1 * a2 - 4 * a1 * a3 - 2 * a2 * a2 +
                   4 * Q * a2;
        case 5:
            return Q * Q * Q * Q * Q + 1 + a1 * a1 * a1 * a1 * a1 - 5 * a1 * a1 * a1 * a2 + 5 * a1 * a1 * a3 +
                   5 * a1 * a2 * a2 - 5 * Q * a1 * a2 - 5 * a2 * a3 + 5 * Q * Q * a1;
        default:
            throw std::logic_error("formula_n");
    }
}

}  // namespace

TEST_CASE("genus-3 closed-form point counts at 50 random tuples") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        int64_t q = 3 + 2 * static_cast<int64_t>(rng() % 20);
        BigInt a1 = static_cast<int64_t>(rng() % 21) - 10;
        BigInt a2 = static_cast<int64_t>(rng() % 41) - 20;
        BigInt a3 = static_cast<int64_t>(rng() % 61) - 30;
        WeilPolyCoeffs w(3, q, {a1, a2, a3});
        PointCounts pc = point_counts(w, 5);
        for (int n = 1; n <= 5; ++n) {
            CHECK(pc.counts[static_cast<size_t>(n - 1)] == formula_n(n, q, a1, a2, a3));
        }
    }
}

TEST_CASE("mod-2 reduction") {
    CHECK(reduce_mod2(WeilPolyCoeffs(3, 3, {0, -1, -2})) == std::vector<uint8_t>{0, 1, 0});
    CHECK(reduce_mod2(WeilPolyCoeffs(3, 5, {-2, 9, -22})) == std::vector<uint8_t>{0, 1, 0});
    CHECK(reduce_mod2(WeilPolyCoeffs(3, 3, {2, 4, 7})) == std::vector<uint8_t>{0, 0, 1});
    CHECK_THROWS_AS(reduce_mod2(WeilPolyCoeffs(1, 4, {1})), std::domain_error);
}

TEST_CASE("expansion mod 2 is self-reciprocal with constant term 1 for odd q") {
    std::mt19937_64 rng(5551);
    for (int iter = 0; iter < 200; ++iter) {
        int g = 1 + static_cast<int>(rng() % 5);
        int64_t q = 3 + 2 * static_cast<int64_t>(rng() % 15);
        std::vector<BigInt> a;
        for (int i = 0; i < g; ++i) a.emplace_back(static_cast<int64_t>(rng() % 101) - 50);
        FullPoly z = expand(WeilPolyCoeffs(g, q, a));
        CHECK(z[0] % 2 != 0);
        for (int i = 0; i <= 2 * g; ++i) {
            CHECK((z[static_cast<size_t>(i)] - z[static_cast<size_t>(2 * g - i)]) % 2 == 0);
        }
    }
}

TEST_CASE("labels of the published examples") {
    WeilPolyCoeffs z1(3, 3, {0, -1, -2});
    CHECK(label_encode(z1) == "3.3.a_ab_ac");
    CHECK(label_decode("3.3.a_ab_ac") == z1);

    WeilPolyCoeffs z2(3, 5, {-2, 9, -22});
    CHECK(label_encode(z2) == "3.5.ac_j_aw");
    CHECK(label_decode("3.5.ac_j_aw") == z2);

    CHECK(label_encode(WeilPolyCoeffs(1, 3, {27})) == "1.3.bb");  // 27 = 1*26 + 1
}

TEST_CASE("label grammar errors") {
    CHECK_THROWS_AS(label_decode("3.3.a_ab"), std::invalid_argument);       // wrong token count
    CHECK_THROWS_AS(label_decode("3.3.a_ab_ac_a"), std::invalid_argument);  // wrong token count
    CHECK_THROWS_AS(label_decode("3.3.a_aa_ac"), std::invalid_argument);    // negative zero
    CHECK_THROWS_AS(label_decode("3.3.a_aab_ac"), std::invalid_argument);   // leading 'a' magnitude
    CHECK_THROWS_AS(label_decode("3.3.a_aB_ac"), std::invalid_argument);    // bad character
    CHECK_THROWS_AS(label_decode("3.3"), std::invalid_argument);
    CHECK_THROWS_AS(label_decode("x.3.a"), std::invalid_argument);
    CHECK_THROWS_AS(label_decode("1.6.a"), std::invalid_argument);  // q not a prime power
    CHECK_THROWS_AS(label_decode(""), std::invalid_argument);
}

TEST_CASE("label round trip for coefficients in [-1000, 1000]") {
    for (int64_t v = -1000; v <= 1000; ++v) {
        WeilPolyCoeffs w(2, 9, {v, -v});
        CHECK(label_decode(label_encode(w)) == w);
    }
}

TEST_CASE("json serialization") {
    WeilPolyCoeffs w(3, 5, {-2, 9, -22});
    CHECK(to_json(w) == R"({"a":[-2,9,-22],"g":3,"q":5})");
    CHECK(weil_from_json(to_json(w)) == w);
    // beyond-64-bit coefficients survive as strings
    WeilPolyCoeffs big(1, 3, {BigInt("123456789012345678901234567890")});
    CHECK(weil_from_json(to_json(big)) == big);
}
