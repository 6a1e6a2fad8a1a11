#include "hyperweil/census.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "hyperweil/admissibility.hpp"
#include "hyperweil/label.hpp"
#include "hyperweil/sieve.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperweil {

DenseField DenseField::build(const ExtFieldCtx& ctx) {
    if (ctx.q > kMaxSize) throw std::domain_error("DenseField: field guard exceeded");
    DenseField F;
    F.ctx_ = ctx;
    F.q_ = ctx.q;
    F.order_ = static_cast<uint32_t>(ctx.q - 1);

    // factor q-1, then find the least generator
    std::vector<uint64_t> prime_divs;
    uint64_t m = F.order_;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_divs.push_back(m);
    uint64_t gen = 0;
    for (uint64_t cand = 1; cand < ctx.q; ++cand) {
        bool ok = true;
        for (uint64_t r : prime_divs) {
            if (ctx.pow(cand, F.order_ / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }

    F.exp_.resize(2 * F.order_);
    F.log_.assign(ctx.q, 0);
    uint64_t e = 1;
    for (uint32_t i = 0; i < F.order_; ++i) {
        F.exp_[i] = static_cast<uint32_t>(e);
        F.exp_[i + F.order_] = static_cast<uint32_t>(e);
        F.log_[e] = i;
        e = ctx.mul(e, gen);
    }
    F.zech_.assign(F.order_, kNoLog);
    for (uint32_t d = 0; d < F.order_; ++d) {
        uint64_t s = ctx.add(F.exp_[d], 1);
        if (s != 0) F.zech_[d] = F.log_[s];
    }
    return F;
}

uint32_t DenseField::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t le = (static_cast<uint64_t>(log_[a]) * (e % order_)) % order_;
    return exp_[le];
}

Partition degree_set(const HyperellipticCurve& curve) {
    PolyFp f(curve.field, curve.f);
    std::vector<int> degs = factor_degree_multiset(f);
    if (f.degree() == 2 * curve.g + 1) degs.insert(degs.begin(), 1);
    Partition p{std::move(degs)};
    if (p.sum() != 2 * curve.g + 2) throw std::logic_error("degree_set: parts do not sum to 2g+2");
    return p;
}

namespace {

// Counting engine for one curve family member over F_{q^n}: f's coefficients
// embedded into the big field, then chi(f(x)) summed over all x.
struct CountingField {
    DenseField big;
    std::vector<uint32_t> embed_pow;  // powers of the embedding root, length k

    static CountingField build(const ExtFieldCtx& small, int n) {
        CountingField cf;
        cf.big = DenseField::build(build_extension(small.p(), small.k * n));
        const ExtFieldCtx& B = cf.big.ctx();
        uint32_t rho = 0;
        if (small.k == 1) {
            rho = 0;  // unused; constants embed as digit-0 values
        } else {
            // first root of the small modulus in the big field
            bool found = false;
            for (uint64_t e = 0; e < B.q && !found; ++e) {
                uint64_t acc = 0;
                for (size_t i = small.modulus.size(); i-- > 0;) {
                    acc = B.add(B.mul(acc, e), small.modulus[i] % small.p());
                }
                if (acc == 0) {
                    rho = static_cast<uint32_t>(e);
                    found = true;
                }
            }
            if (!found) throw std::logic_error("CountingField: no embedding root found");
        }
        cf.embed_pow.resize(static_cast<size_t>(small.k));
        uint32_t pw = 1;
        for (int i = 0; i < small.k; ++i) {
            cf.embed_pow[static_cast<size_t>(i)] = pw;
            pw = cf.big.mul(pw, rho);
        }
        return cf;
    }

    uint32_t embed(const ExtFieldCtx& small, uint64_t elem) const {
        uint32_t out = 0;
        for (int i = 0; i < small.k; ++i) {
            uint32_t digit = static_cast<uint32_t>(elem % small.p());
            elem /= small.p();
            if (digit) out = big.add(out, big.mul(digit, embed_pow[static_cast<size_t>(i)]));
        }
        return out;
    }

    BigInt count(const ExtFieldCtx& small, const std::vector<uint64_t>& f, int g) const {
        std::vector<uint32_t> fi(f.size());
        for (size_t i = 0; i < f.size(); ++i) fi[i] = embed(small, f[i]);
        int64_t total = 0;
        uint64_t Q = big.size();
        for (uint64_t x = 0; x < Q; ++x) {
            uint32_t acc = fi.back();
            for (size_t i = fi.size() - 1; i-- > 0;) {
                acc = big.add(big.mul(acc, static_cast<uint32_t>(x)), fi[i]);
            }
            total += 1 + big.chi(acc);
        }
        int deg = static_cast<int>(f.size()) - 1;
        if (deg == 2 * g + 1) {
            total += 1;  // ramified at infinity
        } else {
            if (big.chi(fi.back()) == 1) total += 2;  // split at infinity
        }
        return BigInt(total);
    }
};

// Runs every per-record law; appends one note per violation, returns count.
int check_record(int g, int64_t q, const Partition& dset, const std::vector<int>& ns,
                 const std::vector<BigInt>& direct_counts, const WeilPolyCoeffs& weil,
                 std::vector<std::string>* notes) {
    int bad = 0;
    auto note = [&](const std::string& s) {
        ++bad;
        if (notes && notes->size() < 20) notes->push_back(s);
    };
    if (dset.sum() != 2 * g + 2) note("degree set does not sum to 2g+2");

    int n_max = ns.back();
    PointCounts pc = point_counts(weil, n_max);
    for (size_t i = 0; i < ns.size(); ++i) {
        int n = ns[i];
        const BigInt& direct = direct_counts[i];
        if (pc.counts[static_cast<size_t>(n - 1)] != direct) {
            note("Newton count differs from direct count at n=" + std::to_string(n));
        }
        // orbit parity law
        if ((direct - w_count(dset, n)) % 2 != 0) {
            note("parity law violated at n=" + std::to_string(n));
        }
        // 2-adic law
        BigInt qn = 1;
        for (int j = 0; j < n; ++j) qn *= q;
        int64_t mod = int64_t(1) << (val2(n) + 1);
        if ((direct - (2 * (qn + 1) - w_count(dset, n))) % mod != 0) {
            note("2-adic law violated at n=" + std::to_string(n));
        }
    }
    // n vs 2n parity
    for (size_t i = 0; i < ns.size(); ++i) {
        auto it = std::find(ns.begin(), ns.end(), 2 * ns[i]);
        if (it != ns.end()) {
            size_t j = static_cast<size_t>(it - ns.begin());
            if ((direct_counts[i] - direct_counts[j]) % 2 != 0) {
                note("n vs 2n parity violated at n=" + std::to_string(ns[i]));
            }
        }
    }
    // mod-2 class identity
    F2Poly lhs = class_from_partition(dset);
    F2Poly rhs = class_from_parities(reduce_mod2(weil));
    if (!(lhs == rhs)) note("mod-2 class identity violated");
    return bad;
}

struct CurveJob {
    int deg;
    uint64_t f0_index;
    int twist;  // 0 -> c = 1, 1 -> c = non-residue
};

struct CensusEngine {
    int g;
    int64_t q;
    ExtFieldCtx Fq;
    uint64_t nonres;
    std::vector<int> ns;  // computed point-count orders: 1..g plus 2, 4 beyond g
    std::vector<CountingField> counting;  // per n
    const ClassTable* classes;

    CensusEngine(int g_, int64_t q_) : g(g_), q(q_) {
        if (q % 2 == 0) throw std::domain_error("census: q must be odd");
        int64_t p;
        int k;
        if (!prime_power_split(q, p, k)) throw std::invalid_argument("census: q must be a prime power");
        Fq = build_extension(static_cast<uint64_t>(p), k);
        nonres = 0;
        for (uint64_t c = 1; c < static_cast<uint64_t>(q); ++c) {
            if (quadratic_character(Fq, c) == -1) {
                nonres = c;
                break;
            }
        }
        for (int n = 1; n <= g; ++n) ns.push_back(n);
        for (int n : {2, 4}) {
            if (n > g) {
                // only when the counting field fits the guard
                BigInt size = 1;
                for (int i = 0; i < n; ++i) size *= q;
                if (size <= BigInt(DenseField::kMaxSize)) ns.push_back(n);
            }
        }
        std::sort(ns.begin(), ns.end());
        for (int n : ns) counting.push_back(CountingField::build(Fq, n));
        classes = &admissible_classes_cached(g);
    }

    std::vector<uint64_t> monic_from_index(int deg, uint64_t idx) const {
        std::vector<uint64_t> f(static_cast<size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) {
            f[static_cast<size_t>(i)] = idx % static_cast<uint64_t>(q);
            idx /= static_cast<uint64_t>(q);
        }
        f[static_cast<size_t>(deg)] = 1;
        return f;
    }

    // nullopt when f0 is not squarefree
    std::optional<std::pair<std::vector<int>, std::vector<uint64_t>>> prepare(int deg, uint64_t idx) const {
        std::vector<uint64_t> f0 = monic_from_index(deg, idx);
        PolyFp poly(Fq, f0);
        if (!is_squarefree(poly)) return std::nullopt;
        return std::make_pair(factor_degree_multiset(poly), std::move(f0));
    }

    // record plus the direct counts for every computed n (superset of counts)
    std::pair<CensusRecord, std::vector<BigInt>> make_record(const CurveJob& job, const std::vector<int>& f0_degs,
                                                             const std::vector<uint64_t>& f0) const {
        CensusRecord rec;
        rec.deg = job.deg;
        rec.f = f0;
        if (job.twist) {
            for (auto& c : rec.f) c = Fq.mul(c, nonres);
        }
        std::vector<int> degs = f0_degs;
        if (job.deg == 2 * g + 1) degs.insert(degs.begin(), 1);
        rec.degree_set = Partition{degs};

        std::vector<BigInt> direct(ns.size());
        for (size_t i = 0; i < ns.size(); ++i) direct[i] = counting[i].count(Fq, rec.f, g);
        rec.counts.assign(direct.begin(), direct.begin() + g);
        rec.weil = counts_to_coeffs(q, g, rec.counts);
        rec.label = label_encode(rec.weil);
        return {std::move(rec), std::move(direct)};
    }
};

}  // namespace

CensusMode CensusMode::Sample(int64_t n, uint64_t seed) {
    CensusMode m;
    m.exhaustive = false;
    m.sample_size = n;
    m.seed = seed;
    return m;
}

namespace {

CensusSummary run_census(int g, int64_t q, const CensusMode& mode,
                         const std::function<void(const CensusRecord&)>& sink, bool parallel) {
    CensusEngine eng(g, q);
    CensusSummary sum;
    sum.g = g;
    sum.q = q;
    sum.computed_ns = eng.ns;

    std::vector<CurveJob> jobs;
    if (mode.exhaustive) {
        BigInt guard = 1;
        for (int i = 0; i < 2 * g + 2; ++i) guard *= q;
        if (guard > 1000000000) throw std::domain_error("census: exhaustive guard q^{2g+2} <= 10^9 exceeded");
        for (int deg : {2 * g + 1, 2 * g + 2}) {
            uint64_t span = 1;
            for (int i = 0; i < deg; ++i) span *= static_cast<uint64_t>(q);
            for (uint64_t idx = 0; idx < span; ++idx) {
                jobs.push_back({deg, idx, 0});
                jobs.push_back({deg, idx, 1});
            }
        }
    } else {
        if (mode.sample_size < 1) throw std::invalid_argument("census: sample size must be >= 1");
        std::mt19937_64 rng(mode.seed);
        uint64_t span_lo = 1, span_hi = 1;
        for (int i = 0; i < 2 * g + 1; ++i) span_lo *= static_cast<uint64_t>(q);
        span_hi = span_lo * static_cast<uint64_t>(q);
        uint64_t total_span = span_lo + span_hi;
        int64_t accepted = 0;
        while (accepted < mode.sample_size) {
            uint64_t draw = rng() % total_span;
            int twist = static_cast<int>(rng() & 1);
            int deg = draw < span_lo ? 2 * g + 1 : 2 * g + 2;
            uint64_t idx = draw < span_lo ? draw : draw - span_lo;
            // rejection on non-squarefree happens in the worker; count draws
            // here only if squarefree so the sample has exactly N curves
            std::vector<uint64_t> f0 = eng.monic_from_index(deg, idx);
            if (!is_squarefree(PolyFp(eng.Fq, f0))) continue;
            jobs.push_back({deg, idx, twist});
            ++accepted;
        }
    }

    const int64_t total_jobs = static_cast<int64_t>(jobs.size());
    const int64_t chunk = 1024;
    const int64_t n_chunks = (total_jobs + chunk - 1) / chunk;
    std::vector<std::vector<CensusRecord>> chunk_records(static_cast<size_t>(n_chunks));
    std::vector<CensusSummary> chunk_sums(static_cast<size_t>(n_chunks));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int64_t ci = 0; ci < n_chunks; ++ci) {
        auto& records = chunk_records[static_cast<size_t>(ci)];
        auto& local = chunk_sums[static_cast<size_t>(ci)];
        for (int64_t j = ci * chunk; j < std::min(total_jobs, (ci + 1) * chunk); ++j) {
            const CurveJob& job = jobs[static_cast<size_t>(j)];
            auto prep = eng.prepare(job.deg, job.f0_index);
            if (!prep) continue;
            auto [rec, direct] = eng.make_record(job, prep->first, prep->second);
            local.curves += 1;
            local.violations += check_record(g, q, rec.degree_set, eng.ns, direct, rec.weil,
                                             &local.violation_notes);
            local.partition_counts[rec.degree_set.parts] += 1;
            uint32_t mask = parity_mask(reduce_mod2(rec.weil));
            local.class_counts[mask] += 1;
            if (!eng.classes->mask_admissible(mask)) local.all_classes_admissible = false;
            records.push_back(std::move(rec));
        }
    }

    uint64_t next_id = 0;
    for (int64_t ci = 0; ci < n_chunks; ++ci) {
        for (auto& rec : chunk_records[static_cast<size_t>(ci)]) {
            rec.id = next_id++;
            if (sink) sink(rec);
        }
        const auto& local = chunk_sums[static_cast<size_t>(ci)];
        sum.curves += local.curves;
        sum.violations += local.violations;
        for (const auto& s : local.violation_notes) {
            if (sum.violation_notes.size() < 20) sum.violation_notes.push_back(s);
        }
        for (const auto& [k, v] : local.partition_counts) sum.partition_counts[k] += v;
        for (const auto& [k, v] : local.class_counts) sum.class_counts[k] += v;
        sum.all_classes_admissible = sum.all_classes_admissible && local.all_classes_admissible;
    }
    return sum;
}

}  // namespace

CensusSummary census(int g, int64_t q, const CensusMode& mode,
                     const std::function<void(const CensusRecord&)>& sink, bool parallel) {
    return run_census(g, q, mode, sink, parallel);
}

CensusSummary census_serial(int g, int64_t q, const CensusMode& mode,
                            const std::function<void(const CensusRecord&)>& sink) {
    return run_census(g, q, mode, sink, false);
}

CensusSummary verify_census(const std::vector<CensusRecord>& records, int g, int64_t q) {
    CensusEngine eng(g, q);
    CensusSummary sum;
    sum.g = g;
    sum.q = q;
    sum.computed_ns = eng.ns;
    for (const auto& rec : records) {
        std::vector<BigInt> direct(eng.ns.size());
        for (size_t i = 0; i < eng.ns.size(); ++i) direct[i] = eng.counting[i].count(eng.Fq, rec.f, g);
        HyperellipticCurve curve{eng.Fq, rec.f, g};
        Partition dset = degree_set(curve);
        WeilPolyCoeffs weil = counts_to_coeffs(q, g, std::vector<BigInt>(direct.begin(), direct.begin() + g));
        sum.curves += 1;
        sum.violations += check_record(g, q, dset, eng.ns, direct, weil, &sum.violation_notes);
        if (!(dset == rec.degree_set)) {
            sum.violations += 1;
            if (sum.violation_notes.size() < 20) sum.violation_notes.push_back("stored degree set mismatch");
        }
        if (!(weil == rec.weil)) {
            sum.violations += 1;
            if (sum.violation_notes.size() < 20) sum.violation_notes.push_back("stored Weil coefficients mismatch");
        }
        sum.partition_counts[dset.parts] += 1;
        uint32_t mask = parity_mask(reduce_mod2(weil));
        sum.class_counts[mask] += 1;
        if (!eng.classes->mask_admissible(mask)) sum.all_classes_admissible = false;
    }
    return sum;
}

BigInt count_points(const HyperellipticCurve& curve, int n) {
    if (n < 1) throw std::invalid_argument("count_points: n must be >= 1");
    CountingField cf = CountingField::build(curve.field, n);
    return cf.count(curve.field, curve.f, curve.g);
}

}  // namespace hyperweil
