#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperweil/numeric.hpp"

namespace hyperweil {

/// An isogeny class as (g, q, a1..ag) under the functional equation
///   Z(t) = t^{2g} + a1 t^{2g-1} + ... + ag t^g + a_{g-1} q t^{g-1} + ... + a1 q^{g-1} t + q^g.
struct WeilPolyCoeffs {
    int g = 0;
    int64_t q = 0;
    std::vector<BigInt> a;

    WeilPolyCoeffs() = default;
    WeilPolyCoeffs(int g_, int64_t q_, std::vector<BigInt> a_);
    WeilPolyCoeffs(int g_, int64_t q_, std::initializer_list<int64_t> a_);

    bool operator==(const WeilPolyCoeffs& o) const { return g == o.g && q == o.q && a == o.a; }
};

/// Dense integer coefficients, lowest degree first, length 2g+1.
using FullPoly = std::vector<BigInt>;

/// The 2g+1 coefficients of Z(t), constant term first.
FullPoly expand(const WeilPolyCoeffs& w);

struct PointCounts {
    int64_t q = 0;
    std::vector<BigInt> counts;      // counts[n-1] = #C(F_{q^n})
    std::vector<BigInt> power_sums;  // power_sums[n-1] = s_n, counts = q^n + 1 - s_n
};

/// Newton-identity point counts N_n = q^n + 1 - s_n for n = 1..n_max
/// (default n_max = 2g+2).
PointCounts point_counts(const WeilPolyCoeffs& w, int n_max = 0);

/// Signals counts that do not come from any integer Weil polynomial.
struct NonIntegralCounts : std::domain_error {
    using std::domain_error::domain_error;
};

/// Inverse Newton recursion: the unique (a1..ag) whose point counts reproduce
/// the g supplied values. Throws NonIntegralCounts when the exact division by
/// n fails at step n.
WeilPolyCoeffs counts_to_coeffs(int64_t q, int g, const std::vector<BigInt>& counts);

/// Componentwise parities of (a1..ag); requires odd q.
std::vector<uint8_t> reduce_mod2(const WeilPolyCoeffs& w);

std::string to_json(const WeilPolyCoeffs& w);      // {"g":..,"q":..,"a":[..]}
WeilPolyCoeffs weil_from_json(const std::string& text);

}  // namespace hyperweil
