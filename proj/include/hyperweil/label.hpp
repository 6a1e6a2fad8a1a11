#pragma once

#include <string>

#include "hyperweil/weil_poly.hpp"

namespace hyperweil {

/// LMFDB-style isogeny class label: g "." q "." tok ("_" tok)*, e.g.
/// "3.3.a_ab_ac". Each coefficient is base 26 with digits a=0..z=25,
/// big-endian, no leading 'a' for values >= 26; 0 is "a"; a negative value
/// is 'a' followed by the encoding of its absolute value.
std::string label_encode(const WeilPolyCoeffs& w);

/// Inverse of label_encode; throws std::invalid_argument on malformed text
/// (bad grammar, token "a" + encoding of 0, non-prime-power q, ...).
WeilPolyCoeffs label_decode(const std::string& text);

}  // namespace hyperweil
