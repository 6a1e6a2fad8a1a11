#include "hyperweil/f2poly.hpp"

#include <bit>
#include <stdexcept>

namespace hyperweil {

void F2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

F2Poly F2Poly::one() {
    F2Poly p;
    p.words_.push_back(1);
    return p;
}

F2Poly F2Poly::monomial(unsigned deg) {
    F2Poly p;
    p.words_.assign(deg / 64 + 1, 0);
    p.words_[deg / 64] = 1ull << (deg % 64);
    return p;
}

F2Poly F2Poly::x_pow_minus_one(unsigned deg) {
    F2Poly p = monomial(deg);
    p.words_[0] ^= 1;
    p.trim();
    return p;
}

F2Poly F2Poly::from_coeffs(std::initializer_list<int> bits) {
    F2Poly p;
    unsigned i = 0;
    for (int b : bits) {
        if (b) p.set_coeff(i, true);
        ++i;
    }
    return p;
}

int F2Poly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size()) * 64 - 1 - std::countl_zero(words_.back());
}

bool F2Poly::coeff(unsigned i) const {
    size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1;
}

void F2Poly::set_coeff(unsigned i, bool v) {
    size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v)
        words_[w] |= 1ull << (i % 64);
    else
        words_[w] &= ~(1ull << (i % 64));
    trim();
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= words_[i];
    for (size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    F2Poly r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            unsigned sh = static_cast<unsigned>(wi) * 64 + bit;
            unsigned word_sh = sh / 64, bit_sh = sh % 64;
            for (size_t j = 0; j < o.words_.size(); ++j) {
                r.words_[j + word_sh] ^= o.words_[j] << bit_sh;
                if (bit_sh) r.words_[j + word_sh + 1] ^= o.words_[j] >> (64 - bit_sh);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<F2Poly, F2Poly> F2Poly::divrem(const F2Poly& b) const {
    if (b.is_zero()) throw std::domain_error("F2Poly::divrem: division by zero polynomial");
    F2Poly q, r = *this;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned sh = static_cast<unsigned>(r.degree() - db);
        q.set_coeff(sh, true);
        // r ^= b << sh
        unsigned word_sh = sh / 64, bit_sh = sh % 64;
        if (r.words_.size() < b.words_.size() + word_sh + 1) r.words_.resize(b.words_.size() + word_sh + 1, 0);
        for (size_t j = 0; j < b.words_.size(); ++j) {
            r.words_[j + word_sh] ^= b.words_[j] << bit_sh;
            if (bit_sh) r.words_[j + word_sh + 1] ^= b.words_[j] >> (64 - bit_sh);
        }
        r.trim();
    }
    return {q, r};
}

F2Poly F2Poly::divexact(const F2Poly& b) const {
    auto [q, r] = divrem(b);
    if (!r.is_zero()) throw std::logic_error("F2Poly::divexact: inexact division");
    return q;
}

bool F2Poly::operator<(const F2Poly& o) const {
    if (words_.size() != o.words_.size()) return words_.size() < o.words_.size();
    for (size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
}

F2Poly F2Poly::reversed() const {
    if (is_zero()) return F2Poly();
    int d = degree();
    F2Poly r;
    for (int i = 0; i <= d; ++i) {
        if (coeff(static_cast<unsigned>(i))) r.set_coeff(static_cast<unsigned>(d - i), true);
    }
    return r;
}

bool F2Poly::is_self_reciprocal() const { return *this == reversed(); }

std::string F2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<unsigned>(i))) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "t";
        else
            s += "t^" + std::to_string(i);
    }
    return s;
}

size_t F2Poly::hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace hyperweil
