#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperweil/f2poly.hpp"
#include "hyperweil/numeric.hpp"
#include "hyperweil/partitions.hpp"

namespace hyperweil {

/// Number of partitions of n into distinct parts.
int64_t q_distinct(int n);
/// Number of partitions of n into odd parts (equal to q_distinct by Euler).
int64_t q_odd_parts(int n);

/// The class polynomial of a partition of 2g+2:
///   prod_i (t^{d_i} - 1) / (t - 1)^2   over GF(2).
/// Throws std::invalid_argument unless the parts sum to an even number >= 4.
F2Poly class_from_partition(const Partition& p);

/// Merges equal part pairs (d, d) -> 2d until all parts are distinct.
/// Preserves the class polynomial since t^{2d} - 1 = (t^d - 1)^2 over GF(2).
Partition canonical_distinct(Partition p);

/// Coefficient parities (a1..ag mod 2) read off a degree-2g class polynomial.
std::vector<uint8_t> parities_from_class(const F2Poly& f2, int g);
/// The self-reciprocal mod-2 polynomial t^{2g} + p1 t^{2g-1} + ... + 1
/// determined by coefficient parities (odd q).
F2Poly class_from_parities(const std::vector<uint8_t>& parities);

/// Parity vector packed as bits, a1 = bit 0.
uint32_t parity_mask(const std::vector<uint8_t>& parities);
std::vector<uint8_t> parities_from_mask(uint32_t mask, int g);

struct ClassRow {
    F2Poly f2;
    std::vector<uint8_t> parities;    // a1..ag mod 2
    Partition witness;                // the unique distinct-parts member
    std::vector<Partition> members;   // all partitions producing f2, sorted
};

/// All partitions of 2g+2 grouped by class polynomial. Rows sorted by parity
/// vector read as a binary number (a1 most significant).
struct ClassTable {
    int g = 0;
    std::vector<ClassRow> rows;
    std::unordered_map<F2Poly, size_t, F2PolyHash> index;
    std::vector<uint32_t> admissible_masks;  // sorted

    const ClassRow* find(const F2Poly& f2) const;
    bool mask_admissible(uint32_t mask) const;
};

/// Builds the table; g capped at 64.
ClassTable admissible_classes(int g);
/// Cached, immutable instance shared across threads.
const ClassTable& admissible_classes_cached(int g);

struct AdmissibleVerdict {
    bool admissible = false;
    std::optional<Partition> witness;
};

/// Whether the parity vector matches some admissible class; the witness is
/// the class's distinct-parts partition.
AdmissibleVerdict is_admissible(const std::vector<uint8_t>& parities, int g);

/// Q(2g+2) / 2^g, the q -> infinity proportion of admissible isogeny classes.
Rational limit_proportion(int g);

/// 3^{3/4} / (12 N^{3/4}) * exp(pi sqrt(N/3)), the Q(N) asymptotic.
double q_asymptotic(int n);

}  // namespace hyperweil
