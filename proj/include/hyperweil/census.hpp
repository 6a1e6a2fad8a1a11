#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperweil/finite_field.hpp"
#include "hyperweil/partitions.hpp"
#include "hyperweil/weil_poly.hpp"

namespace hyperweil {

/// Table-accelerated small finite field: multiplication through exp/log over
/// a fixed generator, addition through Zech logarithms. Elements are the same
/// indices the ExtFieldCtx uses. Immutable once built.
class DenseField {
public:
    static constexpr uint64_t kMaxSize = uint64_t(1) << 21;

    static DenseField build(const ExtFieldCtx& ctx);

    uint64_t size() const { return q_; }
    const ExtFieldCtx& ctx() const { return ctx_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        uint32_t la = log_[a], lb = log_[b];
        uint32_t d = lb >= la ? lb - la : lb + order_ - la;
        uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[la + z];
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Quadratic character from the generator-power parity (odd p only).
    int chi(uint32_t a) const {
        if (a == 0) return 0;
        return (log_[a] & 1) ? -1 : 1;
    }

private:
    ExtFieldCtx ctx_;
    uint64_t q_ = 0;
    uint32_t order_ = 0;  // q - 1
    static constexpr uint32_t kNoLog = 0xffffffffu;
    std::vector<uint32_t> exp_;   // doubled, exp_[i] for i < 2(q-1)
    std::vector<uint32_t> log_;   // log_[0] unused
    std::vector<uint32_t> zech_;  // zech_[d] = log(1 + g^d), kNoLog when zero
};

/// A hyperelliptic model y^2 = f(x) over the field of the context; f is
/// squarefree of degree 2g+1 or 2g+2 with coefficients stored as element
/// indices, lowest degree first.
struct HyperellipticCurve {
    ExtFieldCtx field;
    std::vector<uint64_t> f;
    int g = 0;
};

/// Degrees of the Frobenius orbits on the Weierstrass points: the factor
/// degrees of f, plus one extra 1 when deg f = 2g+1. Parts sum to 2g+2.
Partition degree_set(const HyperellipticCurve& curve);

/// #C(F_{q^n}) on the smooth model, by direct evaluation of the quadratic
/// character of f over F_{q^n}. Throws when q^n exceeds the field guard.
BigInt count_points(const HyperellipticCurve& curve, int n);

struct CensusRecord {
    uint64_t id = 0;
    int deg = 0;
    std::vector<uint64_t> f;     // element indices, ascending
    Partition degree_set;
    std::vector<BigInt> counts;  // n = 1..g
    WeilPolyCoeffs weil;
    std::string label;
};

struct CensusMode {
    bool exhaustive = true;
    int64_t sample_size = 0;
    uint64_t seed = 0;

    static CensusMode Exhaustive() { return {}; }
    static CensusMode Sample(int64_t n, uint64_t seed);
};

struct CensusSummary {
    int g = 0;
    int64_t q = 0;
    int64_t curves = 0;
    int64_t violations = 0;
    std::vector<std::string> violation_notes;          // first few, for diagnostics
    std::map<std::vector<int>, int64_t> partition_counts;  // by degree-set parts
    std::map<uint32_t, int64_t> class_counts;          // by parity mask
    bool all_classes_admissible = true;
    std::vector<int> computed_ns;                      // n with direct counts
};

/// Enumerates y^2 = c * f0 (f0 monic squarefree of degree 2g+1 or 2g+2,
/// c in {1, least non-residue}), emits one record per curve in deterministic
/// order, and verifies the mod-2 class identity and the parity/2-adic point
/// count laws on every record. Exhaustive mode requires q^{2g+2} <= 10^9.
CensusSummary census(int g, int64_t q, const CensusMode& mode,
                     const std::function<void(const CensusRecord&)>& sink = nullptr,
                     bool parallel = true);

CensusSummary census_serial(int g, int64_t q, const CensusMode& mode,
                            const std::function<void(const CensusRecord&)>& sink = nullptr);

/// Re-derives point counts from each record's curve equation and replays all
/// checks; any violation is an implementation fault, not a data finding.
CensusSummary verify_census(const std::vector<CensusRecord>& records, int g, int64_t q);

}  // namespace hyperweil
