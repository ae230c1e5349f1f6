#pragma once

#include "tailcert/interval.hpp"
#include "tailcert/rational.hpp"

#include <string>

namespace tailcert::testutil {

inline Rational rat(const std::string& s) {
    return parse_rational(s);
}

inline Rational rat(long num, long den) {
    return make_rational(Int(num), Int(den));
}

// The enclosure must meet the reference's own uncertainty ball. References
// are 50-digit decimal truncations of irrational values, so the true value
// lies within 10^-45 of the parsed rational; a sound enclosure therefore has
// to intersect that ball.
inline bool encloses_reference(const Interval& iv, const std::string& reference) {
    Rational r = parse_rational(reference);
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, 45);
    Rational tol = make_rational(Int(1), std::move(p));
    return cmp(lo_rational(iv), Rational(r + tol)) <= 0 &&
           cmp(Rational(r - tol), hi_rational(iv)) <= 0;
}

inline Rational pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : make_rational(Int(1), std::move(p));
}

}  // namespace tailcert::testutil
