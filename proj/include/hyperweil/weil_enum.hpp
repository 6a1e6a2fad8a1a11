#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hyperweil/weil_poly.hpp"

namespace hyperweil {

/// The monic real Weil polynomial h with Z(t) = t^g h(t + q/t); h's roots are
/// alpha + q/alpha over the root pairs of Z.
struct TracePoly {
    int g = 0;
    int64_t q = 0;
    std::vector<BigInt> coeffs;  // ascending, length g+1, monic

    bool operator==(const TracePoly& o) const { return g == o.g && q == o.q && coeffs == o.coeffs; }
};

TracePoly to_trace_poly(const WeilPolyCoeffs& w);
WeilPolyCoeffs from_trace_poly(const TracePoly& h);

/// Whether all complex roots of Z have absolute value exactly sqrt(q),
/// decided exactly: endpoint factors of h are divided out ((x - 2s)(x + 2s)
/// for square q = s^2, x^2 - 4q otherwise), then a Sturm count over exact
/// integers certifies that every remaining root is real and interior to
/// [-2 sqrt q, 2 sqrt q].
bool is_weil(const WeilPolyCoeffs& w);

/// Every Weil polynomial for (g, q), each exactly once, lexicographic in
/// (a1, ..., ag): recursive search where a_k ranges over the interval forced
/// by |s_k| <= 2g q^{k/2} through Newton's identity, then an exact is_weil
/// filter. Guard: g <= 6, q <= 64.
void enumerate_weil(int g, int64_t q, const std::function<void(const WeilPolyCoeffs&)>& emit,
                    bool parallel = true);
void enumerate_weil_serial(int g, int64_t q, const std::function<void(const WeilPolyCoeffs&)>& emit);

std::vector<WeilPolyCoeffs> enumerate_weil_all(int g, int64_t q, bool parallel = true);

/// Whether the exact Honda-Tate multiplicity rule applies (prime q).
bool honda_tate_exact(int64_t q);
/// Multiplicity of (t^2 - q) as a divisor of Z, by repeated exact division.
int t2q_multiplicity(const WeilPolyCoeffs& w);
/// Even multiplicity of (t^2 - q); callers should treat the result as an
/// unfiltered marker when honda_tate_exact(q) is false.
bool honda_tate_filter(const WeilPolyCoeffs& w);

/// |{w : is_weil and honda_tate_filter}| (filter exact only for prime q).
int64_t count_isogeny_classes(int g, int64_t q, bool parallel = true);

struct EnumReport {
    int g = 0;
    int64_t q = 0;
    bool ht_filtered = false;   // exact Honda-Tate rule applied (prime q)
    int64_t total = 0;
    int64_t admissible = 0;
    int64_t inadmissible = 0;
    std::map<uint32_t, int64_t> class_histogram;  // by parity mask
};

/// Totals plus the admissible/inadmissible split over all isogeny classes;
/// requires odd q.
EnumReport proportion_report(int g, int64_t q, bool parallel = true);

}  // namespace hyperweil
