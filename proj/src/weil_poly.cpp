#include "hyperweil/weil_poly.hpp"

#include <nlohmann/json.hpp>

namespace hyperweil {

namespace {

void validate(int g, int64_t q, size_t n_coeffs) {
    if (g < 1) throw std::invalid_argument("WeilPolyCoeffs: g must be >= 1");
    if (q < 2) throw std::invalid_argument("WeilPolyCoeffs: q must be >= 2");
    if (n_coeffs != static_cast<size_t>(g)) {
        throw std::invalid_argument("WeilPolyCoeffs: expected exactly g coefficients");
    }
}

}  // namespace

WeilPolyCoeffs::WeilPolyCoeffs(int g_, int64_t q_, std::vector<BigInt> a_)
    : g(g_), q(q_), a(std::move(a_)) {
    validate(g, q, a.size());
}

WeilPolyCoeffs::WeilPolyCoeffs(int g_, int64_t q_, std::initializer_list<int64_t> a_) : g(g_), q(q_) {
    for (int64_t v : a_) a.emplace_back(v);
    validate(g, q, a.size());
}

FullPoly expand(const WeilPolyCoeffs& w) {
    int g = w.g;
    FullPoly z(static_cast<size_t>(2 * g + 1));
    z[static_cast<size_t>(2 * g)] = 1;
    for (int i = 1; i <= g; ++i) z[static_cast<size_t>(2 * g - i)] = w.a[static_cast<size_t>(i - 1)];
    BigInt qpow = 1;
    for (int i = g - 1; i >= 0; --i) {
        qpow *= w.q;
        // coeff(t^i) = q^{g-i} * coeff(t^{2g-i})
        z[static_cast<size_t>(i)] = qpow * z[static_cast<size_t>(2 * g - i)];
    }
    return z;
}

PointCounts point_counts(const WeilPolyCoeffs& w, int n_max) {
    if (n_max == 0) n_max = 2 * w.g + 2;
    if (n_max < 1) throw std::invalid_argument("point_counts: n_max must be >= 1");
    int g = w.g;
    FullPoly z = expand(w);
    // c[i] = coefficient of t^{2g-i}
    std::vector<BigInt> c(static_cast<size_t>(2 * g + 1));
    for (int i = 0; i <= 2 * g; ++i) c[static_cast<size_t>(i)] = z[static_cast<size_t>(2 * g - i)];

    PointCounts pc;
    pc.q = w.q;
    pc.power_sums.resize(static_cast<size_t>(n_max));
    pc.counts.resize(static_cast<size_t>(n_max));
    std::vector<BigInt> s(static_cast<size_t>(n_max) + 1);
    BigInt qpow = 1;
    for (int n = 1; n <= n_max; ++n) {
        // s_n + c1 s_{n-1} + ... + c_{n-1} s_1 + n c_n = 0 (c_i = 0 past degree 2g)
        BigInt acc = 0;
        for (int i = 1; i < n && i <= 2 * g; ++i) acc += c[static_cast<size_t>(i)] * s[static_cast<size_t>(n - i)];
        if (n <= 2 * g) acc += n * c[static_cast<size_t>(n)];
        s[static_cast<size_t>(n)] = -acc;
        qpow *= w.q;
        pc.power_sums[static_cast<size_t>(n - 1)] = s[static_cast<size_t>(n)];
        pc.counts[static_cast<size_t>(n - 1)] = qpow + 1 - s[static_cast<size_t>(n)];
    }
    return pc;
}

WeilPolyCoeffs counts_to_coeffs(int64_t q, int g, const std::vector<BigInt>& counts) {
    if (g < 1) throw std::invalid_argument("counts_to_coeffs: g must be >= 1");
    if (counts.size() != static_cast<size_t>(g)) {
        throw std::invalid_argument("counts_to_coeffs: exactly g counts required");
    }
    std::vector<BigInt> s(static_cast<size_t>(g) + 1);
    BigInt qpow = 1;
    for (int n = 1; n <= g; ++n) {
        qpow *= q;
        s[static_cast<size_t>(n)] = qpow + 1 - counts[static_cast<size_t>(n - 1)];
    }
    std::vector<BigInt> c(static_cast<size_t>(g) + 1);
    c[0] = 1;
    for (int n = 1; n <= g; ++n) {
        BigInt acc = s[static_cast<size_t>(n)];
        for (int i = 1; i < n; ++i) acc += c[static_cast<size_t>(i)] * s[static_cast<size_t>(n - i)];
        if (acc % n != 0) {
            throw NonIntegralCounts("counts_to_coeffs: division by " + std::to_string(n) +
                                    " is not exact; counts do not arise from an integer Weil polynomial");
        }
        c[static_cast<size_t>(n)] = -acc / n;
    }
    return WeilPolyCoeffs(g, q, std::vector<BigInt>(c.begin() + 1, c.end()));
}

std::vector<uint8_t> reduce_mod2(const WeilPolyCoeffs& w) {
    if (w.q % 2 == 0) throw std::domain_error("reduce_mod2: q must be odd");
    std::vector<uint8_t> par(static_cast<size_t>(w.g));
    for (int i = 0; i < w.g; ++i) {
        par[static_cast<size_t>(i)] = static_cast<uint8_t>(w.a[static_cast<size_t>(i)] % 2 != 0);
    }
    return par;
}

std::string to_json(const WeilPolyCoeffs& w) {
    nlohmann::json j;
    j["g"] = w.g;
    j["q"] = w.q;
    auto arr = nlohmann::json::array();
    for (const BigInt& v : w.a) {
        if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max()) {
            arr.push_back(v.convert_to<int64_t>());
        } else {
            arr.push_back(v.str());  // decimal string beyond 64 bits
        }
    }
    j["a"] = std::move(arr);
    return j.dump();
}

WeilPolyCoeffs weil_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<BigInt> a;
    for (const auto& v : j.at("a")) {
        if (v.is_string())
            a.emplace_back(BigInt(v.get<std::string>()));
        else
            a.emplace_back(v.get<int64_t>());
    }
    return WeilPolyCoeffs(j.at("g").get<int>(), j.at("q").get<int64_t>(), std::move(a));
}

}  // namespace hyperweil
