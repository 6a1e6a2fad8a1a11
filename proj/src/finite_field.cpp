#include "hyperweil/finite_field.hpp"

#include <algorithm>

namespace hyperweil {

PrimeFieldCtx::PrimeFieldCtx(uint64_t p_) : p(p_) {
    if (!is_prime_u64(p)) throw std::invalid_argument("PrimeFieldCtx: modulus is not prime");
}

uint64_t PrimeFieldCtx::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t PrimeFieldCtx::inv(uint64_t a) const {
    if (a % p == 0) throw std::domain_error("PrimeFieldCtx: inverse of zero");
    return pow(a, p - 2);
}

std::vector<uint64_t> ExtFieldCtx::decode(uint64_t e) const {
    std::vector<uint64_t> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        d[static_cast<size_t>(i)] = e % base.p;
        e /= base.p;
    }
    return d;
}

uint64_t ExtFieldCtx::encode(const std::vector<uint64_t>& digits) const {
    uint64_t e = 0;
    for (int i = k; i-- > 0;) e = e * base.p + digits[static_cast<size_t>(i)] % base.p;
    return e;
}

uint64_t ExtFieldCtx::add(uint64_t a, uint64_t b) const {
    uint64_t out = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        out += ((a % base.p + b % base.p) % base.p) * mult;
        a /= base.p;
        b /= base.p;
        mult *= base.p;
    }
    return out;
}

uint64_t ExtFieldCtx::sub(uint64_t a, uint64_t b) const {
    uint64_t out = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        out += ((a % base.p + base.p - b % base.p) % base.p) * mult;
        a /= base.p;
        b /= base.p;
        mult *= base.p;
    }
    return out;
}

uint64_t ExtFieldCtx::neg(uint64_t a) const { return sub(0, a); }

uint64_t ExtFieldCtx::mul(uint64_t a, uint64_t b) const {
    if (k == 1) return base.mul(a % base.p, b % base.p);
    auto da = decode(a), db = decode(b);
    std::vector<uint64_t> prod(static_cast<size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        if (da[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < k; ++j) {
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % base.p;
        }
    }
    // reduce by the monic modulus
    for (int i = 2 * k - 2; i >= k; --i) {
        uint64_t f = prod[static_cast<size_t>(i)];
        if (f == 0) continue;
        prod[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < k; ++j) {
            prod[static_cast<size_t>(i - k + j)] =
                (prod[static_cast<size_t>(i - k + j)] + (base.p - modulus[static_cast<size_t>(j)] % base.p) * f) %
                base.p;
        }
    }
    prod.resize(static_cast<size_t>(k));
    return encode(prod);
}

uint64_t ExtFieldCtx::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t ExtFieldCtx::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("ExtFieldCtx: inverse of zero");
    return pow(a, q - 2);
}

uint64_t ExtFieldCtx::scalar_mul(uint64_t a, uint64_t s) const {
    s %= base.p;
    uint64_t out = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        out += base.mul(a % base.p, s) * mult;
        a /= base.p;
        mult *= base.p;
    }
    return out;
}

namespace {

// no irreducible factor of degree <= k/2 <=> gcd(x^{p^d} - x, h) = 1 for all d <= k/2
bool irreducible_over_prime(const ExtFieldCtx& prime_ctx, const std::vector<uint64_t>& h) {
    PolyFp f(prime_ctx, h);
    int k = f.degree();
    PolyFp x(prime_ctx, {0, 1});
    PolyFp frob = x;
    for (int d = 1; 2 * d <= k; ++d) {
        frob = poly_powmod(frob, BigInt(prime_ctx.p()), f);
        PolyFp diff = frob;
        // frob - x
        if (diff.coeffs.size() < 2) diff.coeffs.resize(2, 0);
        diff.coeffs[1] = prime_ctx.sub(diff.coeffs[1], 1);
        diff.trim();
        PolyFp g = poly_gcd(diff, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace

ExtFieldCtx build_extension(uint64_t p, int k) {
    if (k < 1) throw std::invalid_argument("build_extension: k must be >= 1");
    PrimeFieldCtx base(p);
    uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q >= (uint64_t(1) << 31)) throw std::domain_error("build_extension: p^k must be < 2^31");
    }
    ExtFieldCtx F;
    F.base = base;
    F.k = k;
    F.q = q;
    if (k == 1) {
        F.modulus = {0, 1};
        return F;
    }
    ExtFieldCtx prime_ctx;
    prime_ctx.base = base;
    prime_ctx.k = 1;
    prime_ctx.q = p;
    prime_ctx.modulus = {0, 1};
    // lex order of (c_{k-1}, ..., c_1, c_0): the index m supplies the lower
    // coefficients base p, with the constant term varying fastest.
    for (uint64_t m = 0;; ++m) {
        std::vector<uint64_t> h(static_cast<size_t>(k + 1), 0);
        uint64_t x = m;
        for (int i = 0; i < k; ++i) {
            h[static_cast<size_t>(i)] = x % p;
            x /= p;
        }
        h[static_cast<size_t>(k)] = 1;
        if (irreducible_over_prime(prime_ctx, h)) {
            F.modulus = std::move(h);
            return F;
        }
    }
}

int quadratic_character(const ExtFieldCtx& F, uint64_t a) {
    if (F.p() == 2) throw std::domain_error("quadratic_character: undefined in characteristic 2");
    if (a % F.q == 0) return 0;
    uint64_t r = F.pow(a % F.q, (F.q - 1) / 2);
    return r == 1 ? 1 : -1;
}

PolyFp::PolyFp(ExtFieldCtx c, std::vector<uint64_t> v) : ctx(std::move(c)), coeffs(std::move(v)) {
    for (auto& x : coeffs) x %= ctx.q;
    trim();
}

void PolyFp::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

PolyFp poly_over_prime(uint64_t p, std::vector<uint64_t> coeffs) {
    return PolyFp(build_extension(p, 1), std::move(coeffs));
}

PolyFp poly_derivative(const PolyFp& f) {
    PolyFp d;
    d.ctx = f.ctx;
    for (size_t i = 1; i < f.coeffs.size(); ++i) {
        d.coeffs.push_back(f.ctx.scalar_mul(f.coeffs[i], static_cast<uint64_t>(i % f.ctx.p())));
    }
    d.trim();
    return d;
}

PolyFp poly_make_monic(const PolyFp& f) {
    if (f.is_zero()) return f;
    PolyFp g = f;
    uint64_t inv = f.ctx.inv(f.leading());
    for (auto& c : g.coeffs) c = f.ctx.mul(c, inv);
    return g;
}

std::pair<PolyFp, PolyFp> poly_divrem(const PolyFp& a, const PolyFp& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    const ExtFieldCtx& F = a.ctx;
    PolyFp q;
    q.ctx = F;
    PolyFp r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.coeffs.assign(static_cast<size_t>(a.degree() - b.degree() + 1), 0);
    uint64_t lead_inv = F.inv(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int sh = r.degree() - b.degree();
        uint64_t f = F.mul(r.leading(), lead_inv);
        q.coeffs[static_cast<size_t>(sh)] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            auto& c = r.coeffs[static_cast<size_t>(sh + i)];
            c = F.sub(c, F.mul(f, b.coeffs[static_cast<size_t>(i)]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_make_monic(a);
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m) {
    const ExtFieldCtx& F = a.ctx;
    PolyFp prod;
    prod.ctx = F;
    if (a.is_zero() || b.is_zero()) return prod;
    prod.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            prod.coeffs[i + j] = F.add(prod.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    prod.trim();
    return poly_divrem(prod, m).second;
}

PolyFp poly_powmod(const PolyFp& a, const BigInt& e, const PolyFp& m) {
    PolyFp r;
    r.ctx = a.ctx;
    r.coeffs = {1};
    PolyFp base = poly_divrem(a, m).second;
    BigInt exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_squarefree(const PolyFp& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (f.degree() == 0) return true;
    PolyFp d = poly_derivative(f);
    if (d.is_zero()) return false;  // over a finite field f would be a p-th power
    return poly_gcd(f, d).degree() == 0;
}

std::vector<int> factor_degree_multiset(const PolyFp& f) {
    if (!is_squarefree(f)) throw std::invalid_argument("factor_degree_multiset: input must be squarefree");
    std::vector<int> degs;
    PolyFp cur = poly_make_monic(f);
    if (cur.degree() == 0) return degs;
    const ExtFieldCtx& F = f.ctx;
    PolyFp x(F, {0, 1});
    PolyFp frob = poly_divrem(x, cur).second;  // x^{q^0} = x
    int d = 0;
    while (cur.degree() > 0) {
        ++d;
        if (2 * d > cur.degree()) {
            degs.push_back(cur.degree());
            break;
        }
        frob = poly_powmod(frob, BigInt(F.q), cur);
        PolyFp diff = frob;
        if (diff.coeffs.size() < 2) diff.coeffs.resize(2, 0);
        diff.coeffs[1] = F.sub(diff.coeffs[1], 1);
        diff.trim();
        PolyFp g = poly_gcd(diff, cur);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
            cur = poly_divrem(cur, g).first;
            frob = poly_divrem(frob, cur).second;
        }
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace hyperweil
