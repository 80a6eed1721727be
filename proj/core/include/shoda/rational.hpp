#pragma once

#include <gmpxx.h>

#include <string>

namespace shoda {

// Exact arbitrary-precision rational. The whole algebra layer works over
// these; no floating point is used anywhere near it.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

inline std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? numerator_string(q) : q.get_str();
}

}  // namespace shoda
