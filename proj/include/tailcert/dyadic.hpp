#pragma once

#include "tailcert/rational.hpp"

namespace tailcert {

enum class Round { Down, Up };

// Fixed-point dyadic value mant / 2^frac_bits. Add/sub/negate are exact
// (dyadics are closed under them); everything else rounds onto the grid of a
// caller-chosen precision in the requested direction. This is the only place
// in the library where rounding happens.
struct Dyadic {
    Int mant{0};
    int frac_bits{0};
};

Dyadic dyadic_from_int(Int v);
Dyadic dyadic_from_rational(const Rational& q, int prec, Round dir);
Rational to_rational(const Dyadic& d);

int sign(const Dyadic& d);
int cmp(const Dyadic& a, const Dyadic& b);
int cmp(const Dyadic& a, const Rational& q);

Dyadic dy_neg(const Dyadic& a);
Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b);

// Re-grid to 2^-prec, rounding in the given direction (exact when widening).
Dyadic dy_round(const Dyadic& a, int prec, Round dir);

Dyadic dy_mul(const Dyadic& a, const Dyadic& b, int prec, Round dir);
Dyadic dy_mul_rational(const Dyadic& a, const Rational& q, int prec, Round dir);
Dyadic dy_div(const Dyadic& a, const Dyadic& b, int prec, Round dir);

// Requires a >= 0. Exact when the scaled mantissa is a perfect square.
Dyadic dy_sqrt(const Dyadic& a, int prec, Round dir);

// Directed decimal rendering: the printed value is <= (Down) or >= (Up) the
// dyadic, with the given number of significant digits.
std::string dyadic_to_decimal(const Dyadic& d, int significant_digits, Round dir);

}  // namespace tailcert
