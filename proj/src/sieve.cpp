#include "hyperweil/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "hyperweil/admissibility.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperweil {

CheckSet CheckSet::defaults(int g) {
    int M = static_cast<int>(std::ceil(std::log2(2.0 * g + 2.0)));
    return with_depth(g, M, false);
}

CheckSet CheckSet::with_depth(int g, int M, bool include_mixed) {
    if (g < 1) throw std::invalid_argument("CheckSet: g must be >= 1");
    if (M < 1) throw std::invalid_argument("CheckSet: M must be >= 1");
    CheckSet cs;
    cs.g = g;
    cs.M = M;
    for (int n = 1; n <= 2 * g + 1; n += 2) cs.ns.push_back(n);
    for (int m = 1; m <= M; ++m) cs.ns.push_back(1 << m);
    if (include_mixed) {
        for (int n = 2; n <= (1 << M); ++n) {
            if (n % 2 == 0 && (n & (n - 1)) != 0) cs.ns.push_back(n);
        }
    }
    return cs;
}

int64_t w_count(const Partition& p, int n) {
    if (n < 1) throw std::invalid_argument("w_count: n must be >= 1");
    int64_t s = 0;
    for (int d : p.parts) {
        if (n % d == 0) s += d;
    }
    return s;
}

int mobius_part_parity(const std::vector<uint8_t>& count_parities, int n) {
    if (n < 1) throw std::invalid_argument("mobius_part_parity: n must be >= 1");
    if (static_cast<int>(count_parities.size()) < n) {
        throw std::invalid_argument("mobius_part_parity: missing divisor parity");
    }
    int acc = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0 && mobius(n / d) != 0) acc ^= count_parities[static_cast<size_t>(d - 1)] & 1;
    }
    return acc;
}

namespace {

// s_n mod 2 for n = 1..n_max from coefficient parities, q = 1 mod 2.
// N_n = q^n + 1 - s_n is even + even - s_n, so N_n mod 2 = s_n mod 2.
std::vector<uint8_t> count_parities_symbolic(const std::vector<uint8_t>& par, int g, int n_max) {
    std::vector<uint8_t> c(static_cast<size_t>(2 * g + 1));
    c[0] = 1;
    for (int i = 1; i <= g; ++i) c[static_cast<size_t>(i)] = par[static_cast<size_t>(i - 1)] & 1;
    for (int i = g + 1; i < 2 * g; ++i) c[static_cast<size_t>(i)] = par[static_cast<size_t>(2 * g - i - 1)] & 1;
    c[static_cast<size_t>(2 * g)] = 1;

    std::vector<uint8_t> s(static_cast<size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n) {
        int acc = 0;
        for (int i = 1; i < n && i <= 2 * g; ++i) acc ^= c[static_cast<size_t>(i)] & s[static_cast<size_t>(n - i)];
        if (n <= 2 * g) acc ^= (n & 1) & c[static_cast<size_t>(n)];
        s[static_cast<size_t>(n)] = static_cast<uint8_t>(acc);
    }
    return std::vector<uint8_t>(s.begin() + 1, s.end());
}

}  // namespace

bool parity_consistent(const std::vector<uint8_t>& parities, int g, const Partition& p) {
    auto nc = count_parities_symbolic(parities, g, 2 * g + 1);
    for (int n = 1; n <= 2 * g + 1; n += 2) {
        if ((nc[static_cast<size_t>(n - 1)] & 1) != (w_count(p, n) & 1)) return false;
    }
    return true;
}

bool two_adic_consistent(const WeilPolyCoeffs& w, const Partition& p, const CheckSet& cs) {
    if (w.q % 2 == 0) throw std::domain_error("two_adic_consistent: q must be odd");
    int n_max = *std::max_element(cs.ns.begin(), cs.ns.end());
    PointCounts pc = point_counts(w, n_max);
    BigInt qpow;
    for (int n : cs.ns) {
        int64_t mod = CheckSet::modulus_of(n);
        qpow = 1;
        for (int i = 0; i < n; ++i) qpow *= w.q;
        BigInt rhs = 2 * (qpow + 1) - w_count(p, n);
        if ((pc.counts[static_cast<size_t>(n - 1)] - rhs) % mod != 0) return false;
    }
    return true;
}

SieveVerdict instance_ruled_out(const WeilPolyCoeffs& w, std::optional<CheckSet> cs_opt) {
    if (w.q % 2 == 0) throw std::domain_error("instance_ruled_out: q must be odd");
    CheckSet cs = cs_opt ? *cs_opt : CheckSet::defaults(w.g);
    int n_max = *std::max_element(cs.ns.begin(), cs.ns.end());
    PointCounts pc = point_counts(w, n_max);
    std::vector<BigInt> qpow(static_cast<size_t>(n_max) + 1);
    qpow[0] = 1;
    for (int n = 1; n <= n_max; ++n) qpow[static_cast<size_t>(n)] = qpow[static_cast<size_t>(n - 1)] * w.q;

    SieveVerdict verdict;
    for_each_partition(2 * w.g + 2, [&](const Partition& p) {
        for (int n : cs.ns) {
            int64_t mod = CheckSet::modulus_of(n);
            BigInt rhs = 2 * (qpow[static_cast<size_t>(n)] + 1) - w_count(p, n);
            BigInt diff = (pc.counts[static_cast<size_t>(n - 1)] - rhs) % mod;
            if (diff != 0) {
                PartitionCheckFailure f;
                f.partition = p;
                f.n = n;
                f.modulus = mod;
                f.expected = static_cast<int64_t>(((rhs % mod) + mod) % mod);
                f.actual = static_cast<int64_t>(((pc.counts[static_cast<size_t>(n - 1)] % mod) + mod) % mod);
                f.parity_stage = (n % 2 == 1);
                verdict.failures.push_back(std::move(f));
                return;
            }
        }
        verdict.surviving.push_back(p);
    });
    verdict.ruled_out = verdict.surviving.empty();
    return verdict;
}

namespace {

// The class-level kernel works modulo 2^32 throughout: every check modulus
// divides 2^{M+2}, and the Newton recursion is polynomial in the lifted
// inputs, so wraparound arithmetic is exact at the needed precision.
struct LiftKernel {
    int g, M;
    std::vector<int> ns;
    std::vector<uint32_t> mod_mask;   // modulus - 1 per check
    std::vector<int> sig_shift;       // bit offset of each check in the packed signature
    int n_max;
    std::vector<uint64_t> part_sigs;  // sorted packed W-count signatures

    LiftKernel(int g_, int M_) : g(g_), M(M_) {
        CheckSet cs = CheckSet::with_depth(g, M);
        ns = cs.ns;
        int shift = 0;
        for (int n : ns) {
            int bits = val2(n) + 1;
            mod_mask.push_back((uint32_t(1) << bits) - 1);
            sig_shift.push_back(shift);
            shift += bits;
        }
        if (shift > 64) throw std::domain_error("class_ruled_out: signature exceeds 64 bits");
        n_max = *std::max_element(ns.begin(), ns.end());

        for_each_partition(2 * g + 2, [&](const Partition& p) {
            uint64_t sig = 0;
            for (size_t i = 0; i < ns.size(); ++i) {
                uint32_t w = static_cast<uint32_t>(w_count(p, ns[i])) & mod_mask[i];
                sig |= static_cast<uint64_t>(w) << sig_shift[i];
            }
            part_sigs.push_back(sig);
        });
        std::sort(part_sigs.begin(), part_sigs.end());
        part_sigs.erase(std::unique(part_sigs.begin(), part_sigs.end()), part_sigs.end());
    }

    static constexpr int kMaxM = 8;       // n_max = 2^M stack buffers below
    static constexpr int kMaxN = 1 << kMaxM;

    // Whether some partition is consistent with the lifted coefficients a[]
    // (values mod 2^{M+1}) and lifted q (odd, mod 2^{M+2}).
    bool lift_survives(const uint32_t* a, uint32_t q) const {
        uint32_t c[2 * 16 + 1];
        uint32_t s[kMaxN + 1];
        uint32_t qn[kMaxN + 1];
        int two_g = 2 * g;
        c[0] = 1;
        for (int i = 1; i <= g; ++i) c[i] = a[i - 1];
        uint32_t qpow = 1;
        for (int i = g + 1; i <= two_g; ++i) {
            qpow *= q;
            c[i] = (i < two_g) ? a[two_g - i - 1] * qpow : qpow;
        }
        qn[0] = 1;
        for (int n = 1; n <= n_max; ++n) {
            qn[n] = qn[n - 1] * q;
            uint32_t acc = 0;
            for (int i = 1; i < n && i <= two_g; ++i) acc += c[i] * s[n - i];
            if (n <= two_g) acc += static_cast<uint32_t>(n) * c[n];
            s[n] = static_cast<uint32_t>(0) - acc;
        }
        // target: W_n = 2(q^n+1) - N_n = q^n + 1 + s_n  (mod 2^{v2(n)+1})
        uint64_t sig = 0;
        for (size_t i = 0; i < ns.size(); ++i) {
            int n = ns[i];
            uint32_t w = (qn[n] + 1 + s[n]) & mod_mask[i];
            sig |= static_cast<uint64_t>(w) << sig_shift[i];
        }
        return std::binary_search(part_sigs.begin(), part_sigs.end(), sig);
    }
};

void check_lift_guard(int g, int M) {
    if (g < 1 || g > 16) throw std::invalid_argument("class_ruled_out: g out of range");
    if (M < 1 || M > LiftKernel::kMaxM) throw std::invalid_argument("class_ruled_out: 2-adic depth M out of range");
    // 2^{gM} coefficient lifts times 2^{M+1} odd q residues
    if (g * M + M + 1 > 28) {
        throw std::domain_error("class_ruled_out: lift combination guard (2^28) exceeded");
    }
}

}  // namespace

bool class_ruled_out_serial(const std::vector<uint8_t>& parities, int g, int M) {
    if (static_cast<int>(parities.size()) != g) {
        throw std::invalid_argument("class_ruled_out: parity vector must have length g");
    }
    check_lift_guard(g, M);
    LiftKernel ker(g, M);
    uint64_t lifts = uint64_t(1) << (g * M);
    uint32_t lift_mask = (uint32_t(1) << M) - 1;
    for (uint32_t q = 1; q < (uint32_t(1) << (M + 2)); q += 2) {
        for (uint64_t lift = 0; lift < lifts; ++lift) {
            uint32_t a[16];
            uint64_t x = lift;
            for (int i = 0; i < g; ++i) {
                a[i] = (parities[static_cast<size_t>(i)] & 1) + 2 * (static_cast<uint32_t>(x) & lift_mask);
                x >>= M;
            }
            if (ker.lift_survives(a, q)) return false;
        }
    }
    return true;
}

bool class_ruled_out(const std::vector<uint8_t>& parities, int g, int M) {
    if (static_cast<int>(parities.size()) != g) {
        throw std::invalid_argument("class_ruled_out: parity vector must have length g");
    }
    check_lift_guard(g, M);
    LiftKernel ker(g, M);
    uint64_t lifts = uint64_t(1) << (g * M);
    uint32_t lift_mask = (uint32_t(1) << M) - 1;
    int64_t n_q = int64_t(1) << (M + 1);
    std::atomic<bool> survivor{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int64_t qi = 0; qi < n_q; ++qi) {
        if (survivor.load(std::memory_order_relaxed)) continue;
        uint32_t q = static_cast<uint32_t>(2 * qi + 1);
        for (uint64_t lift = 0; lift < lifts; ++lift) {
            if ((lift & 0xfff) == 0 && survivor.load(std::memory_order_relaxed)) break;
            uint32_t a[16];
            uint64_t x = lift;
            for (int i = 0; i < g; ++i) {
                a[i] = (parities[static_cast<size_t>(i)] & 1) + 2 * (static_cast<uint32_t>(x) & lift_mask);
                x >>= M;
            }
            if (ker.lift_survives(a, q)) {
                survivor.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    return !survivor.load();
}

CrossValidationReport cross_validate(int g, int M) {
    if (M == 0) M = CheckSet::defaults(g).M;
    CrossValidationReport rep;
    rep.g = g;
    rep.M = M;
    const ClassTable& table = admissible_classes_cached(g);
    for (uint32_t mask = 0; mask < (uint32_t(1) << g); ++mask) {
        if (!table.mask_admissible(mask)) rep.inadmissible_masks.push_back(mask);
        if (class_ruled_out(parities_from_mask(mask, g), g, M)) rep.sieve_ruled_out_masks.push_back(mask);
    }
    std::set_symmetric_difference(rep.inadmissible_masks.begin(), rep.inadmissible_masks.end(),
                                  rep.sieve_ruled_out_masks.begin(), rep.sieve_ruled_out_masks.end(),
                                  std::back_inserter(rep.symmetric_difference));
    rep.agree = rep.symmetric_difference.empty();
    return rep;
}

}  // namespace hyperweil
