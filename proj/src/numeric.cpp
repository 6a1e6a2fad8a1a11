#include "hyperweil/numeric.hpp"

#include <cmath>
#include <sstream>

namespace hyperweil {

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative input");
    if (n == 0) return 0;
    // Newton iteration from a power-of-two overestimate.
    BigInt x = BigInt(1) << ((msb(n) / 2) + 1);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

int64_t isqrt_floor_i64(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt_floor_i64: negative input");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int mobius(int n) {
    if (n < 1) throw std::domain_error("mobius: n must be >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool prime_power_split(int64_t q, int64_t& p, int& k) {
    if (q < 2) return false;
    int64_t n = q;
    int64_t smallest = 0;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            smallest = d;
            break;
        }
    }
    if (smallest == 0) {
        p = q;
        k = 1;
        return true;
    }
    p = smallest;
    k = 0;
    while (n % smallest == 0) {
        n /= smallest;
        ++k;
    }
    return n == 1;
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

double Rational::to_double() const {
    return num.convert_to<double>() / den.convert_to<double>();
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num << "/" << den;
    return os.str();
}

std::string Rational::to_percent(int decimals) const {
    // round(num/den * 100 * 10^d) rendered with a decimal point
    BigInt scale = 100;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    BigInt v = num * scale;
    BigInt quot = v / den;
    BigInt rem = v % den;
    if (rem * 2 >= den) quot += 1;
    std::ostringstream os;
    os << quot;
    std::string s = os.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    while (static_cast<int>(s.size()) <= decimals) s.insert(s.begin(), '0');
    std::string out = s.substr(0, s.size() - decimals);
    if (decimals > 0) out += "." + s.substr(s.size() - decimals);
    return (neg ? "-" : "") + out + "%";
}

}  // namespace hyperweil
