#pragma once

#include <cstdint>
#include <vector>

#include "hyperweil/numeric.hpp"

namespace hyperweil {

/// Arithmetic mod a word-sized prime p. Elements are residues in [0, p).
struct PrimeFieldCtx {
    uint64_t p = 0;

    PrimeFieldCtx() = default;
    explicit PrimeFieldCtx(uint64_t p_);

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
};

/// F_{p^k} = F_p[x]/(modulus), modulus monic irreducible of degree k.
/// Elements are indices in [0, p^k): the base-p digits of the index are the
/// coefficients in the polynomial basis (digit i = coefficient of x^i).
/// k = 1 degenerates to the prime field with modulus x.
struct ExtFieldCtx {
    PrimeFieldCtx base;
    int k = 0;
    std::vector<uint64_t> modulus;  // ascending, length k+1, monic
    uint64_t q = 0;                 // p^k

    uint64_t p() const { return base.p; }
    bool is_prime_field() const { return k == 1; }

    std::vector<uint64_t> decode(uint64_t e) const;
    uint64_t encode(const std::vector<uint64_t>& digits) const;

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    /// Multiplication by a prime-field scalar, digit by digit.
    uint64_t scalar_mul(uint64_t a, uint64_t s) const;
    /// Promotes a prime-field residue to a constant of this field.
    uint64_t from_base(uint64_t c) const { return c % base.p; }
};

/// Deterministic context with the first monic irreducible of degree k in the
/// lexicographic order of coefficient vectors, constant term varying fastest.
/// Guard: p^k < 2^31.
ExtFieldCtx build_extension(uint64_t p, int k);

/// 0 for a = 0, +1 for a nonzero square, -1 otherwise, via a^{(q-1)/2}.
/// Throws std::domain_error for p = 2.
int quadratic_character(const ExtFieldCtx& F, uint64_t a);

/// Dense polynomial over a finite field; coeffs are element indices in the
/// field, lowest degree first, trailing zeros trimmed.
struct PolyFp {
    ExtFieldCtx ctx;
    std::vector<uint64_t> coeffs;

    PolyFp() = default;
    PolyFp(ExtFieldCtx c, std::vector<uint64_t> v);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs.empty(); }
    uint64_t leading() const { return coeffs.back(); }
    void trim();
};

/// Prime-field polynomial helper (ctx = F_p with modulus x).
PolyFp poly_over_prime(uint64_t p, std::vector<uint64_t> coeffs);

PolyFp poly_derivative(const PolyFp& f);
PolyFp poly_make_monic(const PolyFp& f);
std::pair<PolyFp, PolyFp> poly_divrem(const PolyFp& a, const PolyFp& b);
PolyFp poly_gcd(PolyFp a, PolyFp b);  // monic gcd
PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m);
PolyFp poly_powmod(const PolyFp& a, const BigInt& e, const PolyFp& m);

/// gcd(f, f') is constant. Throws std::invalid_argument on the zero
/// polynomial.
bool is_squarefree(const PolyFp& f);

/// Degrees of the distinct irreducible factors of squarefree f (ascending,
/// with multiplicity of equal degrees), by distinct-degree factorization.
/// Throws std::invalid_argument on non-squarefree input.
std::vector<int> factor_degree_multiset(const PolyFp& f);

}  // namespace hyperweil
