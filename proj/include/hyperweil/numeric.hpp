#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperweil {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of the integer square root; throws on negative input.
BigInt isqrt_floor(const BigInt& n);
int64_t isqrt_floor_i64(int64_t n);

/// 2-adic valuation of n > 0.
inline int val2(int64_t n) {
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

/// Moebius function for small n >= 1.
int mobius(int n);

/// Trial-division primality for word-sized n.
bool is_prime_u64(uint64_t n);

/// Writes q = p^k with p prime, k >= 1; returns false if q is not a prime power.
bool prime_power_split(int64_t q, int64_t& p, int& k);

/// Exact rational with reduced num/den, den > 0.
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(BigInt n, BigInt d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const;
    std::string to_string() const;       // "3/4"
    std::string to_percent(int decimals = 2) const;  // "75.00%"
};

}  // namespace hyperweil
