#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluq {

// Exact rational scalar. mpq_class is kept canonical (den > 0, gcd = 1)
// by routing every construction through make_rational.
using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline const Integer num(const Rational& r) { return r.get_num(); }
inline const Integer den(const Rational& r) { return r.get_den(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b".
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

} // namespace cluq
