#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hyperweil {

/// Bit-packed polynomial over GF(2): bit i of word i/64 is the coefficient
/// of t^i. The highest set bit equals the degree; zero is the empty vector.
class F2Poly {
public:
    F2Poly() = default;

    static F2Poly zero() { return F2Poly(); }
    static F2Poly one();
    static F2Poly monomial(unsigned deg);
    /// t^deg - 1 (= t^deg + 1 over GF(2)).
    static F2Poly x_pow_minus_one(unsigned deg);
    /// From explicit coefficient bits, lowest degree first.
    static F2Poly from_coeffs(std::initializer_list<int> bits);

    bool is_zero() const { return words_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const;
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);

    F2Poly operator+(const F2Poly& o) const;  // XOR
    F2Poly operator*(const F2Poly& o) const;  // carry-less product
    /// (quotient, remainder) with deg r < deg b; throws on zero divisor.
    std::pair<F2Poly, F2Poly> divrem(const F2Poly& b) const;
    /// Quotient of an exact division; throws std::logic_error if inexact.
    F2Poly divexact(const F2Poly& b) const;

    bool operator==(const F2Poly& o) const { return words_ == o.words_; }
    bool operator<(const F2Poly& o) const;

    /// Coefficients reversed about the degree.
    F2Poly reversed() const;
    bool is_self_reciprocal() const;

    std::string to_string() const;  // e.g. "t^6 + t^4 + 1"
    size_t hash() const;

private:
    void trim();
    std::vector<uint64_t> words_;
};

struct F2PolyHash {
    size_t operator()(const F2Poly& p) const { return p.hash(); }
};

}  // namespace hyperweil
