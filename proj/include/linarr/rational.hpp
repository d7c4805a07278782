#pragma once

#include <gmpxx.h>

#include <string>

namespace linarr {

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (gcd-reduced, positive denominator) under arithmetic.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

} // namespace linarr
