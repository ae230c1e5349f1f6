#pragma once

#include "tailcert/dyadic.hpp"

#include <string>

namespace tailcert {

// Certified enclosure: the true real value of the represented expression lies
// in [lo, hi]. Endpoints live on the dyadic grid 2^-precision_bits and every
// operation rounds lo down and hi up (widening only).
struct Interval {
    Dyadic lo;
    Dyadic hi;
    int precision_bits{0};
};

Interval interval_from_rational(const Rational& q, int prec);
Interval interval_from_int(const Int& v, int prec);

bool is_degenerate(const Interval& x);
bool contains(const Interval& x, const Rational& q);
Rational lo_rational(const Interval& x);
Rational hi_rational(const Interval& x);
Rational width(const Interval& x);
Rational midpoint(const Interval& x);

Interval iv_neg(const Interval& x);
Interval iv_add(const Interval& x, const Interval& y);
Interval iv_sub(const Interval& x, const Interval& y);
Interval iv_mul(const Interval& x, const Interval& y);
// Throws std::domain_error if the divisor encloses zero.
Interval iv_div(const Interval& x, const Interval& y);
Interval iv_add_rational(const Interval& x, const Rational& q);
Interval iv_scale(const Interval& x, const Rational& q);

// Enclosure of [sqrt(lo), sqrt(hi)]; exact endpoints for perfect squares.
// Throws std::domain_error when lo < 0.
Interval interval_sqrt(const Interval& x);

// Enclosure of e^x for exact rational x, width <= 2^-prec. Taylor series with
// an explicit geometric tail bound; negative x goes through 1/e^(-x).
Interval exp_interval(const Rational& x, int prec);

// "lo..hi" with directed decimal endpoints (lo down, hi up), so the printed
// interval still encloses the true value.
std::string interval_to_string(const Interval& x, int significant_digits);

}  // namespace tailcert
