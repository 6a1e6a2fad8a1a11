#include "hyperweil/label.hpp"

#include <sstream>

namespace hyperweil {

namespace {

std::string encode_magnitude(BigInt v) {
    // base-26 big-endian, digits a..z, no leading 'a'; v >= 1
    std::string s;
    while (v > 0) {
        s += static_cast<char>('a' + static_cast<int>(v % 26));
        v /= 26;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string encode_coeff(const BigInt& v) {
    if (v == 0) return "a";
    if (v > 0) return encode_magnitude(v);
    return "a" + encode_magnitude(-v);
}

BigInt decode_magnitude(const std::string& tok, const std::string& label) {
    // positive value: no leading 'a' unless single digit
    if (tok.empty()) throw std::invalid_argument("label_decode: empty token in \"" + label + "\"");
    if (tok.size() > 1 && tok[0] == 'a') {
        throw std::invalid_argument("label_decode: token with leading 'a' magnitude in \"" + label + "\"");
    }
    BigInt v = 0;
    for (char ch : tok) {
        if (ch < 'a' || ch > 'z') throw std::invalid_argument("label_decode: bad character in \"" + label + "\"");
        v = v * 26 + (ch - 'a');
    }
    return v;
}

BigInt decode_coeff(const std::string& tok, const std::string& label) {
    if (tok.empty()) throw std::invalid_argument("label_decode: empty token in \"" + label + "\"");
    for (char ch : tok) {
        if (ch < 'a' || ch > 'z') throw std::invalid_argument("label_decode: bad character in \"" + label + "\"");
    }
    if (tok.size() == 1) return BigInt(tok[0] - 'a');
    if (tok[0] == 'a') {
        BigInt mag = decode_magnitude(tok.substr(1), label);
        if (mag == 0) throw std::invalid_argument("label_decode: token encodes negative zero in \"" + label + "\"");
        return -mag;
    }
    return decode_magnitude(tok, label);
}

}  // namespace

std::string label_encode(const WeilPolyCoeffs& w) {
    std::ostringstream os;
    os << w.g << "." << w.q << ".";
    for (size_t i = 0; i < w.a.size(); ++i) {
        if (i) os << "_";
        os << encode_coeff(w.a[i]);
    }
    return os.str();
}

WeilPolyCoeffs label_decode(const std::string& text) {
    size_t d1 = text.find('.');
    size_t d2 = d1 == std::string::npos ? std::string::npos : text.find('.', d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos || d1 == 0 || d2 == d1 + 1 || d2 + 1 >= text.size()) {
        throw std::invalid_argument("label_decode: malformed label \"" + text + "\"");
    }
    int g = 0;
    int64_t q = 0;
    try {
        size_t pos = 0;
        g = std::stoi(text.substr(0, d1), &pos);
        if (pos != d1) throw std::invalid_argument("");
        q = std::stoll(text.substr(d1 + 1, d2 - d1 - 1), &pos);
        if (pos != d2 - d1 - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("label_decode: malformed g or q in \"" + text + "\"");
    }
    if (g < 1) throw std::invalid_argument("label_decode: g must be >= 1 in \"" + text + "\"");
    int64_t p;
    int k;
    if (q >= (int64_t(1) << 31) || !prime_power_split(q, p, k)) {
        throw std::invalid_argument("label_decode: q is not a prime power < 2^31 in \"" + text + "\"");
    }

    std::vector<BigInt> a;
    std::string rest = text.substr(d2 + 1);
    size_t start = 0;
    while (true) {
        size_t us = rest.find('_', start);
        std::string tok = rest.substr(start, us == std::string::npos ? std::string::npos : us - start);
        a.push_back(decode_coeff(tok, text));
        if (us == std::string::npos) break;
        start = us + 1;
    }
    if (static_cast<int>(a.size()) != g) {
        throw std::invalid_argument("label_decode: expected " + std::to_string(g) + " tokens in \"" + text + "\"");
    }
    return WeilPolyCoeffs(g, q, std::move(a));
}

}  // namespace hyperweil
