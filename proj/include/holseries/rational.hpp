#pragma once

#include <gmpxx.h>

#include <string>

namespace holseries {

// Exact rational scalar. mpq_class keeps every value canonical (lowest
// terms, positive denominator), which the elimination code relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace holseries
