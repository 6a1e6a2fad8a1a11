#include "hyperweil/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hyperweil {

int64_t q_distinct(int n) {
    if (n < 1) throw std::invalid_argument("q_distinct: n must be >= 1");
    std::vector<int64_t> cnt(static_cast<size_t>(n) + 1, 0);
    cnt[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int s = n; s >= part; --s) cnt[s] += cnt[s - part];
    }
    return cnt[n];
}

int64_t q_odd_parts(int n) {
    if (n < 1) throw std::invalid_argument("q_odd_parts: n must be >= 1");
    std::vector<int64_t> cnt(static_cast<size_t>(n) + 1, 0);
    cnt[0] = 1;
    for (int part = 1; part <= n; part += 2) {
        for (int s = part; s <= n; ++s) cnt[s] += cnt[s - part];
    }
    return cnt[n];
}

F2Poly class_from_partition(const Partition& p) {
    int n = p.sum();
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("class_from_partition: parts must sum to an even number >= 4");
    }
    F2Poly prod = F2Poly::one();
    for (int d : p.parts) prod = prod * F2Poly::x_pow_minus_one(static_cast<unsigned>(d));
    // (t-1)^2 = t^2 + 1 over GF(2); division is exact for any valid partition.
    F2Poly t2p1 = F2Poly::from_coeffs({1, 0, 1});
    return prod.divexact(t2p1);
}

Partition canonical_distinct(Partition p) {
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 1; i < p.parts.size(); ++i) {
            if (p.parts[i] == p.parts[i - 1]) {
                int d = p.parts[i];
                p.parts.erase(p.parts.begin() + static_cast<long>(i - 1), p.parts.begin() + static_cast<long>(i + 1));
                p.parts.insert(std::lower_bound(p.parts.begin(), p.parts.end(), 2 * d), 2 * d);
                merged = true;
                break;
            }
        }
    }
    return p;
}

std::vector<uint8_t> parities_from_class(const F2Poly& f2, int g) {
    std::vector<uint8_t> par(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) par[static_cast<size_t>(i - 1)] = f2.coeff(static_cast<unsigned>(2 * g - i)) ? 1 : 0;
    return par;
}

F2Poly class_from_parities(const std::vector<uint8_t>& parities) {
    int g = static_cast<int>(parities.size());
    F2Poly f2;
    f2.set_coeff(static_cast<unsigned>(2 * g), true);
    f2.set_coeff(0, true);
    for (int i = 1; i <= g; ++i) {
        if (parities[static_cast<size_t>(i - 1)] & 1) {
            f2.set_coeff(static_cast<unsigned>(2 * g - i), true);
            if (i != g) f2.set_coeff(static_cast<unsigned>(i), true);
        }
    }
    return f2;
}

uint32_t parity_mask(const std::vector<uint8_t>& parities) {
    uint32_t m = 0;
    for (size_t i = 0; i < parities.size(); ++i) m |= static_cast<uint32_t>(parities[i] & 1) << i;
    return m;
}

std::vector<uint8_t> parities_from_mask(uint32_t mask, int g) {
    std::vector<uint8_t> par(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) par[static_cast<size_t>(i)] = (mask >> i) & 1;
    return par;
}

const ClassRow* ClassTable::find(const F2Poly& f2) const {
    auto it = index.find(f2);
    return it == index.end() ? nullptr : &rows[it->second];
}

bool ClassTable::mask_admissible(uint32_t mask) const {
    return std::binary_search(admissible_masks.begin(), admissible_masks.end(), mask);
}

ClassTable admissible_classes(int g) {
    if (g < 1) throw std::invalid_argument("admissible_classes: g must be >= 1");
    if (g > 64) throw std::invalid_argument("admissible_classes: g capped at 64");
    ClassTable table;
    table.g = g;
    std::unordered_map<F2Poly, size_t, F2PolyHash> idx;
    for_each_partition(2 * g + 2, [&](const Partition& p) {
        F2Poly c = class_from_partition(p);
        auto it = idx.find(c);
        if (it == idx.end()) {
            it = idx.emplace(c, table.rows.size()).first;
            ClassRow row;
            row.f2 = c;
            row.parities = parities_from_class(c, g);
            table.rows.push_back(std::move(row));
        }
        ClassRow& row = table.rows[it->second];
        row.members.push_back(p);
        if (p.has_distinct_parts()) row.witness = p;
    });
    // Deterministic order: by parity vector read as a binary number, a1 high.
    auto key = [g](const ClassRow& r) {
        uint64_t k = 0;
        for (int i = 0; i < g; ++i) k = (k << 1) | r.parities[static_cast<size_t>(i)];
        return k;
    };
    std::sort(table.rows.begin(), table.rows.end(),
              [&](const ClassRow& a, const ClassRow& b) { return key(a) < key(b); });
    for (auto& row : table.rows) std::sort(row.members.begin(), row.members.end());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        table.index.emplace(table.rows[i].f2, i);
        table.admissible_masks.push_back(parity_mask(table.rows[i].parities));
    }
    std::sort(table.admissible_masks.begin(), table.admissible_masks.end());
    return table;
}

const ClassTable& admissible_classes_cached(int g) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const ClassTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it == cache.end()) {
        it = cache.emplace(g, std::make_unique<const ClassTable>(admissible_classes(g))).first;
    }
    return *it->second;
}

AdmissibleVerdict is_admissible(const std::vector<uint8_t>& parities, int g) {
    if (static_cast<int>(parities.size()) != g) {
        throw std::invalid_argument("is_admissible: parity vector must have length g");
    }
    const ClassTable& table = admissible_classes_cached(g);
    const ClassRow* row = table.find(class_from_parities(parities));
    AdmissibleVerdict v;
    if (row) {
        v.admissible = true;
        v.witness = row->witness;
    }
    return v;
}

Rational limit_proportion(int g) {
    if (g < 1) throw std::invalid_argument("limit_proportion: g must be >= 1");
    return Rational(BigInt(q_distinct(2 * g + 2)), BigInt(1) << g);
}

double q_asymptotic(int n) {
    if (n < 1) throw std::invalid_argument("q_asymptotic: n must be >= 1");
    double N = static_cast<double>(n);
    return std::pow(3.0, 0.75) / (12.0 * std::pow(N, 0.75)) * std::exp(M_PI * std::sqrt(N / 3.0));
}

}  // namespace hyperweil
