#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "hyperweil/numeric.hpp"
#include "hyperweil/weil_enum.hpp"

using namespace hyperweil;

namespace {

int64_t binom64(int n, int k) {
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// full coefficient box |a_i| <= C(2g, i) q^{i/2}, filtered by is_weil only
std::vector<WeilPolyCoeffs> brute_force_box(int g, int64_t q) {
    std::vector<WeilPolyCoeffs> out;
    std::vector<int64_t> bounds;
    for (int i = 1; i <= g; ++i) {
        BigInt b2 = BigInt(binom64(2 * g, i)) * binom64(2 * g, i);
        for (int j = 0; j < i; ++j) b2 *= q;
        bounds.push_back(isqrt_floor(b2).convert_to<int64_t>());
    }
    std::vector<int64_t> a(static_cast<size_t>(g));
    std::function<void(int)> rec = [&](int k) {
        if (k == g) {
            std::vector<BigInt> coeffs(a.begin(), a.end());
            WeilPolyCoeffs w(g, q, coeffs);
            if (is_weil(w)) out.push_back(w);
            return;
        }
        for (int64_t v = -bounds[static_cast<size_t>(k)]; v <= bounds[static_cast<size_t>(k)]; ++v) {
            a[static_cast<size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("trace polynomial transforms") {
    TracePoly h = to_trace_poly(WeilPolyCoeffs(1, 3, {0}));
    CHECK(h.coeffs == std::vector<BigInt>{0, 1});  // h(x) = x

    TracePoly h2 = to_trace_poly(WeilPolyCoeffs(1, 3, {-3}));
    CHECK(h2.coeffs == std::vector<BigInt>{-3, 1});  // h(x) = x - 3
    CHECK(from_trace_poly(h2) == WeilPolyCoeffs(1, 3, {-3}));

    CHECK_THROWS_AS(from_trace_poly(TracePoly{2, 3, {BigInt(1), BigInt(2)}}), std::invalid_argument);
}

TEST_CASE("trace polynomial round trip on random valid inputs") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 1000) {
        int g = 1 + static_cast<int>(rng() % 5);
        int64_t q = (rng() % 2) ? 3 : 7;
        std::vector<BigInt> a;
        for (int i = 0; i < g; ++i) a.emplace_back(static_cast<int64_t>(rng() % 25) - 12);
        WeilPolyCoeffs w(g, q, a);
        CHECK(from_trace_poly(to_trace_poly(w)) == w);
        ++done;
    }
}

TEST_CASE("is_weil on small cases") {
    CHECK(is_weil(WeilPolyCoeffs(1, 3, {-3})));   // roots of t^2-3t+3 have |.|^2 = 3
    CHECK(!is_weil(WeilPolyCoeffs(1, 3, {-4})));  // real roots not of modulus sqrt 3
    CHECK(is_weil(WeilPolyCoeffs(1, 3, {0})));    // t^2 + 3
    CHECK(is_weil(WeilPolyCoeffs(2, 3, {0, -6})));  // (t^2-3)^2, endpoint double root
    CHECK(is_weil(WeilPolyCoeffs(1, 9, {6})));      // (t+3)^2 over square q
    CHECK(is_weil(WeilPolyCoeffs(1, 9, {-6})));     // (t-3)^2
    CHECK(!is_weil(WeilPolyCoeffs(1, 9, {7})));
    CHECK(is_weil(WeilPolyCoeffs(2, 9, {0, -18})));  // (t^2-9)^2 = (t-3)^2 (t+3)^2
}

TEST_CASE("enumeration counts for genus 1") {
    auto e3 = enumerate_weil_all(1, 3);
    CHECK(e3.size() == 7);  // a1 in -3..3
    for (int64_t a1 = -3; a1 <= 3; ++a1) {
        CHECK(std::find(e3.begin(), e3.end(), WeilPolyCoeffs(1, 3, {a1})) != e3.end());
    }
    CHECK(enumerate_weil_all(1, 2).size() == 5);  // a1 in -2..2
}

TEST_CASE("enumeration agrees with the coefficient-box oracle, g <= 2, q <= 5") {
    for (auto [g, q] : std::vector<std::pair<int, int64_t>>{{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}, {2, 5}}) {
        auto enumd = enumerate_weil_all(g, q);
        auto brute = brute_force_box(g, q);
        CHECK(enumd.size() == brute.size());
        std::set<std::vector<std::string>> se, sb;
        for (const auto& w : enumd) {
            std::vector<std::string> key;
            for (const auto& c : w.a) key.push_back(c.str());
            se.insert(key);
        }
        for (const auto& w : brute) {
            std::vector<std::string> key;
            for (const auto& c : w.a) key.push_back(c.str());
            sb.insert(key);
        }
        CHECK(se == sb);
    }
}

TEST_CASE("enumeration output is lexicographic and matches the serial kernel") {
    std::vector<WeilPolyCoeffs> par_out = enumerate_weil_all(2, 7, true);
    std::vector<WeilPolyCoeffs> ser_out;
    enumerate_weil_serial(2, 7, [&](const WeilPolyCoeffs& w) { ser_out.push_back(w); });
    CHECK(par_out.size() == ser_out.size());
    CHECK(par_out == ser_out);
    for (size_t i = 1; i < par_out.size(); ++i) {
        CHECK(par_out[i - 1].a < par_out[i].a);
    }
}

TEST_CASE("enumeration closed under the root-negation involution") {
    for (auto [g, q] : std::vector<std::pair<int, int64_t>>{{2, 3}, {3, 3}}) {
        auto all = enumerate_weil_all(g, q);
        std::set<std::vector<std::string>> keys;
        for (const auto& w : all) {
            std::vector<std::string> key;
            for (const auto& c : w.a) key.push_back(c.str());
            keys.insert(key);
        }
        for (const auto& w : all) {
            std::vector<std::string> key;
            for (int i = 0; i < g; ++i) {
                BigInt c = (i % 2 == 0) ? BigInt(-w.a[static_cast<size_t>(i)]) : w.a[static_cast<size_t>(i)];
                key.push_back(c.str());
            }
            CHECK(keys.count(key) == 1);
        }
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_weil_all(7, 3), std::domain_error);
    CHECK_THROWS_AS(enumerate_weil_all(2, 65), std::domain_error);
    CHECK_THROWS_AS(enumerate_weil_all(2, 12), std::invalid_argument);  // not a prime power
}

TEST_CASE("Honda-Tate multiplicity rule") {
    // (t^2-3)^2: multiplicity 2, passes
    CHECK(t2q_multiplicity(WeilPolyCoeffs(2, 3, {0, -6})) == 2);
    CHECK(honda_tate_filter(WeilPolyCoeffs(2, 3, {0, -6})));
    // t^4 + 9: (t^2-3) does not divide it, multiplicity 0
    CHECK(t2q_multiplicity(WeilPolyCoeffs(2, 3, {0, 0})) == 0);
    CHECK(honda_tate_filter(WeilPolyCoeffs(2, 3, {0, 0})));
    CHECK(t2q_multiplicity(WeilPolyCoeffs(1, 3, {0})) == 0);
    CHECK(honda_tate_exact(3));
    CHECK(honda_tate_exact(2));
    CHECK(!honda_tate_exact(9));
    // within the functional-equation family the multiplicity is forced even
    enumerate_weil(2, 3, [&](const WeilPolyCoeffs& w) { CHECK(t2q_multiplicity(w) % 2 == 0); });
}

TEST_CASE("proportion report basics") {
    EnumReport rep = proportion_report(1, 3);
    CHECK(rep.total == 7);
    CHECK(rep.inadmissible == 0);
    CHECK(rep.ht_filtered);
    CHECK_THROWS_AS(proportion_report(1, 4), std::domain_error);

    EnumReport r9 = proportion_report(1, 9);
    CHECK(!r9.ht_filtered);  // unfiltered marker for non-prime q
    CHECK(r9.total == 13);
    int64_t hist_total = 0;
    for (const auto& [mask, n] : r9.class_histogram) hist_total += n;
    CHECK(hist_total == r9.total);
}
