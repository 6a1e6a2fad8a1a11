#include "hyperweil/weil_enum.hpp"

#include <algorithm>

#include "hyperweil/admissibility.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperweil {

namespace {

int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

using ZPoly = std::vector<BigInt>;  // ascending, trailing zeros trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zderiv(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(BigInt(i) * p[i]);
    return d;
}

BigInt zcontent(const ZPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = gcd(g, c < 0 ? BigInt(-c) : c);
    return g;
}

void zstrip(ZPoly& p) {
    BigInt g = zcontent(p);
    if (g > 1) {
        for (auto& c : p) c /= g;
    }
}

/// Signed pseudo-remainder scaled so the result is a positive multiple of
/// rem(a, b); content-stripped.
ZPoly zprem_pos(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    const BigInt& lb = b.back();
    int delta = zdeg(a) - zdeg(b);
    // multiply a by lb^{delta+1}, flip sign if that multiplier is negative
    BigInt mult = 1;
    for (int i = 0; i <= delta; ++i) mult *= lb;
    bool flip = mult < 0;
    if (flip) mult = -mult;
    for (auto& c : r) c *= mult;
    for (int sh = delta; sh >= 0; --sh) {
        BigInt f = r[static_cast<size_t>(sh + zdeg(b))];
        if (f == 0) continue;
        f /= lb;  // exact by construction of the premultiplier
        for (size_t i = 0; i < b.size(); ++i) r[static_cast<size_t>(sh) + i] -= f * b[i];
    }
    ztrim(r);
    zstrip(r);
    return r;
}

/// Exact division in Z[x]; throws std::logic_error when inexact.
ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a, q(a.size(), BigInt(0));
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        if (r.back() % b.back() != 0) throw std::logic_error("zdivexact: inexact leading division");
        BigInt f = r.back() / b.back();
        int sh = zdeg(r) - zdeg(b);
        q[static_cast<size_t>(sh)] = f;
        for (size_t i = 0; i < b.size(); ++i) r[static_cast<size_t>(sh) + i] -= f * b[i];
        ztrim(r);
    }
    if (!r.empty()) throw std::logic_error("zdivexact: nonzero remainder");
    ztrim(q);
    return q;
}

/// Primitive gcd over Z[x] through the pseudo-remainder sequence.
ZPoly zgcd_primitive(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    zstrip(a);
    zstrip(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprem_pos(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0) {
        for (auto& c : a) c = -c;
    }
    return a;
}

/// Sign of u + v*sqrt(q) for non-square q (or v = 0).
int sign_quad(const BigInt& u, const BigInt& v, int64_t q) {
    int su = u == 0 ? 0 : (u > 0 ? 1 : -1);
    int sv = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    BigInt lhs = u * u, rhs = v * v * q;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? su : sv;
}

/// Evaluates p at b*sqrt(q) as (u, v) with value u + v*sqrt(q).
std::pair<BigInt, BigInt> eval_at_sqrt(const ZPoly& p, int64_t b, int64_t q) {
    BigInt u = 0, v = 0;
    for (size_t i = p.size(); i-- > 0;) {
        // (u + v s) * (b s) + c = (v b q + c) + (u b) s
        BigInt nu = v * b * q + p[i];
        BigInt nv = u * b;
        u = std::move(nu);
        v = std::move(nv);
    }
    return {u, v};
}

int sign_changes(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Distinct real roots of squarefree p in [-2 sqrt q, 2 sqrt q] == deg p.
bool all_roots_in_weil_interval(const ZPoly& p, int64_t q) {
    if (zdeg(p) <= 0) return true;
    std::vector<ZPoly> chain;
    ZPoly a = p;
    zstrip(a);
    chain.push_back(a);
    ZPoly b = zderiv(p);
    zstrip(b);
    while (!b.empty()) {
        chain.push_back(b);
        if (zdeg(b) == 0) break;
        ZPoly r = zprem_pos(chain[chain.size() - 2], b);
        for (auto& c : r) c = -c;
        b = std::move(r);
    }
    std::vector<int> lo_signs, hi_signs;
    for (const auto& f : chain) {
        auto [ul, vl] = eval_at_sqrt(f, -2, q);
        auto [uh, vh] = eval_at_sqrt(f, 2, q);
        lo_signs.push_back(sign_quad(ul, vl, q));
        hi_signs.push_back(sign_quad(uh, vh, q));
    }
    int interior = sign_changes(lo_signs) - sign_changes(hi_signs);  // roots in (-2 sqrt q, 2 sqrt q]
    auto [u0, v0] = eval_at_sqrt(p, -2, q);
    int at_lo = (sign_quad(u0, v0, q) == 0) ? 1 : 0;
    return interior + at_lo == zdeg(p);
}

}  // namespace

TracePoly to_trace_poly(const WeilPolyCoeffs& w) {
    int g = w.g;
    TracePoly h;
    h.g = g;
    h.q = w.q;
    h.coeffs.assign(static_cast<size_t>(g) + 1, BigInt(0));
    h.coeffs[static_cast<size_t>(g)] = 1;
    // Matching coefficients of t^{2g-i} in sum_k beta_k t^{g-k} (t^2+q)^k:
    // c_i = beta_{g-i} + sum_{k > g-i, k = g-i mod 2} beta_k C(k, (g+k-i)/2) q^{(k-(g-i))/2}
    for (int i = 1; i <= g; ++i) {
        BigInt acc = 0;
        for (int k = g - i + 2; k <= g; k += 2) {
            int j = (g + k - i) / 2;
            BigInt qpow = 1;
            for (int t = 0; t < (k - (g - i)) / 2; ++t) qpow *= w.q;
            acc += h.coeffs[static_cast<size_t>(k)] * binom(k, j) * qpow;
        }
        h.coeffs[static_cast<size_t>(g - i)] = w.a[static_cast<size_t>(i - 1)] - acc;
    }
    return h;
}

WeilPolyCoeffs from_trace_poly(const TracePoly& h) {
    int g = h.g;
    if (static_cast<int>(h.coeffs.size()) != g + 1 || h.coeffs[static_cast<size_t>(g)] != 1) {
        throw std::invalid_argument("from_trace_poly: h must be monic of degree g");
    }
    std::vector<BigInt> z(static_cast<size_t>(2 * g + 1), BigInt(0));
    for (int k = 0; k <= g; ++k) {
        BigInt qpow = 1;
        for (int j = k; j >= 0; --j) {
            // contribution beta_k * C(k, j) * q^{k-j} * t^{g-k+2j}
            z[static_cast<size_t>(g - k + 2 * j)] += h.coeffs[static_cast<size_t>(k)] * binom(k, j) * qpow;
            qpow *= h.q;
        }
    }
    std::vector<BigInt> a;
    for (int i = 1; i <= g; ++i) a.push_back(z[static_cast<size_t>(2 * g - i)]);
    return WeilPolyCoeffs(g, h.q, std::move(a));
}

bool is_weil(const WeilPolyCoeffs& w) {
    TracePoly tp = to_trace_poly(w);
    ZPoly h(tp.coeffs.begin(), tp.coeffs.end());
    int64_t q = w.q;
    int64_t s = isqrt_floor_i64(q);
    if (s * s == q) {
        // rational endpoints: strip (x - 2s) and (x + 2s)
        for (int64_t root : {2 * s, -2 * s}) {
            while (zdeg(h) >= 1) {
                ZPoly lin{BigInt(-root), BigInt(1)};
                BigInt rem = 0;
                {
                    // evaluate h(root)
                    for (size_t i = h.size(); i-- > 0;) rem = rem * root + h[i];
                }
                if (rem != 0) break;
                h = zdivexact(h, lin);
            }
        }
    } else {
        ZPoly quad{BigInt(-4 * q), BigInt(0), BigInt(1)};
        while (zdeg(h) >= 2) {
            bool exact = true;
            ZPoly quot;
            try {
                quot = zdivexact(h, quad);
            } catch (const std::logic_error&) {
                exact = false;
            }
            if (!exact) break;
            h = std::move(quot);
        }
    }
    if (zdeg(h) <= 0) return true;
    ZPoly d = zderiv(h);
    ZPoly g0 = zgcd_primitive(h, d);
    ZPoly h0 = (zdeg(g0) > 0) ? zdivexact(h, g0) : h;
    zstrip(h0);
    return all_roots_in_weil_interval(h0, q);
}

namespace {

struct EnumGuard {
    int g;
    int64_t q;
    EnumGuard(int g_, int64_t q_) : g(g_), q(q_) {
        if (g < 1 || g > 6) throw std::domain_error("enumerate_weil: guard g <= 6 exceeded");
        if (q < 2 || q > 64) throw std::domain_error("enumerate_weil: guard q <= 64 exceeded");
        int64_t p;
        int k;
        if (!prime_power_split(q, p, k)) throw std::invalid_argument("enumerate_weil: q must be a prime power");
    }
};

// Hot recursion state in machine words; __int128 accumulators keep the
// Newton partial sums exact inside the g <= 6, q <= 64 guard.
struct SearchState {
    int g;
    int64_t q;
    int64_t bound[13];   // bound[n] = floor(2g q^{n/2}) = isqrt(4 g^2 q^n)
    int64_t c[13];       // coefficients of t^{2g-i}
    int64_t s[13];       // power sums
    int64_t a[6];

    SearchState(int g_, int64_t q_) : g(g_), q(q_) {
        int64_t q_pow = 1;
        for (int n = 0; n <= 2 * g; ++n) {
            bound[n] = isqrt_floor_i64(4 * int64_t(g) * g * q_pow);
            if (n < 2 * g) q_pow *= q;
        }
        c[0] = 1;
    }

    // fills c[g+1..2g] and s[g+1..2g]; false if a power-sum bound fails
    bool complete_tail() {
        int64_t q_pow = 1;
        for (int i = g + 1; i <= 2 * g; ++i) {
            q_pow *= q;
            c[i] = (i < 2 * g) ? a[2 * g - i - 1] * q_pow : q_pow;
        }
        for (int n = g + 1; n <= 2 * g; ++n) {
            __int128 acc = 0;
            for (int i = 1; i < n && i <= 2 * g; ++i) acc += static_cast<__int128>(c[i]) * s[n - i];
            if (n <= 2 * g) acc += static_cast<__int128>(n) * c[n];
            __int128 sn = -acc;
            if (sn > bound[n] || sn < -static_cast<__int128>(bound[n])) return false;
            s[n] = static_cast<int64_t>(sn);
        }
        return true;
    }
};

template <typename Leaf>
void search_from(SearchState& st, int k, Leaf&& leaf) {
    int g = st.g;
    if (k > g) {
        if (st.complete_tail()) {
            WeilPolyCoeffs w(g, st.q, std::vector<BigInt>(st.a, st.a + g));
            if (is_weil(w)) leaf(w);
        }
        return;
    }
    __int128 partial = 0;
    for (int i = 1; i < k; ++i) partial += static_cast<__int128>(st.c[i]) * st.s[k - i];
    // k*a_k in [-B - partial, B - partial]
    __int128 lo = -static_cast<__int128>(st.bound[k]) - partial;
    __int128 hi = static_cast<__int128>(st.bound[k]) - partial;
    auto ceil_div = [](__int128 x, int k2) {
        return x >= 0 ? (x + k2 - 1) / k2 : -((-x) / k2);
    };
    auto floor_div = [](__int128 x, int k2) {
        return x >= 0 ? x / k2 : -((-x + k2 - 1) / k2);
    };
    int64_t a_lo = static_cast<int64_t>(ceil_div(lo, k));
    int64_t a_hi = static_cast<int64_t>(floor_div(hi, k));
    for (int64_t ak = a_lo; ak <= a_hi; ++ak) {
        st.a[k - 1] = ak;
        st.c[k] = ak;
        st.s[k] = static_cast<int64_t>(-(partial + static_cast<__int128>(k) * ak));
        search_from(st, k + 1, leaf);
    }
}

// top-level split at a1 for the parallel path
struct TopRange {
    int64_t a1_lo, a1_hi;
};

TopRange top_range(int g, int64_t q) {
    SearchState st(g, q);
    return {-st.bound[1], st.bound[1]};
}

}  // namespace

void enumerate_weil_serial(int g, int64_t q, const std::function<void(const WeilPolyCoeffs&)>& emit) {
    [[maybe_unused]] EnumGuard guard(g, q);
    SearchState st(g, q);
    search_from(st, 1, emit);
}

void enumerate_weil(int g, int64_t q, const std::function<void(const WeilPolyCoeffs&)>& emit, bool parallel) {
    if (!parallel) {
        enumerate_weil_serial(g, q, emit);
        return;
    }
    [[maybe_unused]] EnumGuard guard(g, q);
    TopRange range = top_range(g, q);
    int64_t n_tasks = range.a1_hi - range.a1_lo + 1;
    std::vector<std::vector<WeilPolyCoeffs>> buckets(static_cast<size_t>(n_tasks));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int64_t t = 0; t < n_tasks; ++t) {
        int64_t a1 = range.a1_lo + t;
        SearchState st(g, q);
        st.a[0] = a1;
        st.c[1] = a1;
        st.s[1] = -a1;
        auto& bucket = buckets[static_cast<size_t>(t)];
        if (g == 1) {
            if (st.complete_tail()) {
                WeilPolyCoeffs w(g, q, std::vector<BigInt>{BigInt(a1)});
                if (is_weil(w)) bucket.push_back(w);
            }
        } else {
            search_from(st, 2, [&](const WeilPolyCoeffs& w) { bucket.push_back(w); });
        }
    }
    for (auto& bucket : buckets) {
        for (auto& w : bucket) emit(w);
    }
}

std::vector<WeilPolyCoeffs> enumerate_weil_all(int g, int64_t q, bool parallel) {
    std::vector<WeilPolyCoeffs> out;
    enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) { out.push_back(w); }, parallel);
    return out;
}

bool honda_tate_exact(int64_t q) { return q >= 2 && is_prime_u64(static_cast<uint64_t>(q)); }

int t2q_multiplicity(const WeilPolyCoeffs& w) {
    ZPoly z = expand(w);
    ZPoly quad{BigInt(-w.q), BigInt(0), BigInt(1)};
    int mult = 0;
    while (zdeg(z) >= 2) {
        ZPoly quot;
        try {
            quot = zdivexact(z, quad);
        } catch (const std::logic_error&) {
            break;
        }
        z = std::move(quot);
        ++mult;
    }
    return mult;
}

bool honda_tate_filter(const WeilPolyCoeffs& w) { return t2q_multiplicity(w) % 2 == 0; }

int64_t count_isogeny_classes(int g, int64_t q, bool parallel) {
    bool exact = honda_tate_exact(q);
    int64_t count = 0;
    enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) {
        if (!exact || honda_tate_filter(w)) ++count;
    }, parallel);
    return count;
}

EnumReport proportion_report(int g, int64_t q, bool parallel) {
    if (q % 2 == 0) throw std::domain_error("proportion_report: q must be odd");
    EnumReport rep;
    rep.g = g;
    rep.q = q;
    rep.ht_filtered = honda_tate_exact(q);
    const ClassTable& table = admissible_classes_cached(g);
    enumerate_weil(g, q, [&](const WeilPolyCoeffs& w) {
        if (rep.ht_filtered && !honda_tate_filter(w)) return;
        rep.total += 1;
        uint32_t mask = parity_mask(reduce_mod2(w));
        rep.class_histogram[mask] += 1;
        if (table.mask_admissible(mask))
            rep.admissible += 1;
        else
            rep.inadmissible += 1;
    }, parallel);
    return rep;
}

}  // namespace hyperweil
