#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperweil/partitions.hpp"
#include "hyperweil/weil_poly.hpp"

namespace hyperweil {

/// Congruence checks applied to a candidate (Weil polynomial, degree set)
/// pair: each n carries the modulus 2^{v2(n)+1}. The default set is the odd
/// n <= 2g+1 together with the pure 2-powers up to 2^M, M = ceil(log2(2g+2));
/// mixed n = 2^a m (a >= 1, m > 1 odd) can be added for experiments.
struct CheckSet {
    int g = 0;
    int M = 0;
    std::vector<int> ns;  // odd ascending, then 2-powers ascending, then mixed

    static CheckSet defaults(int g);
    static CheckSet with_depth(int g, int M, bool include_mixed = false);
    static int64_t modulus_of(int n) { return int64_t(1) << (val2(n) + 1); }
};

/// #W(F_{q^n}) = sum of parts dividing n.
int64_t w_count(const Partition& p, int n);

/// Parity of n * #{i : d_i = n} recovered from point-count parities of all
/// divisors of n via Moebius inversion. count_parities[d-1] is N_d mod 2;
/// throws if a divisor parity is missing.
int mobius_part_parity(const std::vector<uint8_t>& count_parities, int n);

/// Whether for every odd n <= 2g+1 the point-count parity determined by the
/// coefficient parities (q treated as 1 mod 2) equals w_count(p, n) mod 2.
bool parity_consistent(const std::vector<uint8_t>& parities, int g, const Partition& p);

/// Whether N_n = 2(q^n + 1) - #W(F_{q^n}) mod 2^{v2(n)+1} holds for every n
/// in the check set, with exact integer point counts.
bool two_adic_consistent(const WeilPolyCoeffs& w, const Partition& p, const CheckSet& cs);

struct PartitionCheckFailure {
    Partition partition;
    int n = 0;
    int64_t modulus = 0;
    int64_t expected = 0;  // required residue of N_n
    int64_t actual = 0;
    bool parity_stage = false;  // failed a mod-2 (odd n) check
};

struct SieveVerdict {
    bool ruled_out = false;
    std::vector<Partition> surviving;
    std::vector<PartitionCheckFailure> failures;  // first violated congruence per failed partition
};

/// Partition-by-partition evaluation of the congruences with the default
/// check set; ruled_out iff no partition of 2g+2 survives. Requires odd q.
SieveVerdict instance_ruled_out(const WeilPolyCoeffs& w, std::optional<CheckSet> cs = std::nullopt);

/// Class-level test: true iff for every coefficient lift of the parities
/// modulo 2^{M+1}, every odd q modulo 2^{M+2}, and every partition of 2g+2,
/// some congruence fails. Point counts at lifted precision come from the
/// Newton recursion on the lifted coefficients. Guard: the total number of
/// (lift, q) combinations must stay <= 2^28.
bool class_ruled_out(const std::vector<uint8_t>& parities, int g, int M);
bool class_ruled_out_serial(const std::vector<uint8_t>& parities, int g, int M);

struct CrossValidationReport {
    int g = 0;
    int M = 0;
    std::vector<uint32_t> inadmissible_masks;     // classes with is_admissible = false
    std::vector<uint32_t> sieve_ruled_out_masks;  // classes with class_ruled_out = true
    std::vector<uint32_t> symmetric_difference;
    bool agree = false;
};

/// Compares inadmissible parity classes against sieve-ruled-out ones.
CrossValidationReport cross_validate(int g, int M = 0);

}  // namespace hyperweil
