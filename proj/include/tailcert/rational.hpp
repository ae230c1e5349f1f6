#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tailcert {

// All exact arithmetic in this library runs on GMP big integers and
// canonical rationals (lowest terms, positive denominator). No operation on
// these types ever rounds.
using Int = mpz_class;
using Rational = mpq_class;

// x = ceil - frac_complement with frac_complement = ceil(x) - x in [0, 1).
struct CeilDecomposition {
    Rational value;
    Int ceil;
    Rational frac_complement;
};

// Canonical rational num/den; throws std::domain_error if den == 0.
Rational make_rational(Int num, Int den);

// Accepts "a", "-a", "a/b" and plain decimal strings ("0.25", "3.", ".5"),
// always converted to the exact rational value. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Int floor_int(const Rational& q);
Int ceil_int(const Rational& q);

// Requires x > 0.
CeilDecomposition ceil_decompose(const Rational& x);

// True iff q has a terminating decimal expansion (denominator 2^a * 5^b).
bool has_terminating_decimal(const Rational& q);

// "a/b", or "a" when q is an integer.
std::string to_fraction_string(const Rational& q);

// Exact decimal expansion; requires has_terminating_decimal(q).
std::string to_exact_decimal_string(const Rational& q);

// Exact decimal when terminating, "a/b" otherwise. The rendering used in CSV
// number fields.
std::string csv_number(const Rational& q);

// Decimal with the given number of significant digits, round-half-even.
// Positional for moderate magnitudes, scientific otherwise.
std::string to_decimal_string(const Rational& q, int significant_digits);

// Smallest e with |q| < 10^e; requires q != 0.
long decimal_exponent_of(const Rational& q);

// All reduced fractions a/b in (0,1) with b <= den_cap, ascending.
std::vector<Rational> reduced_fractions(long den_cap);

// All reduced fractions a/b in (0, max_value] with b <= den_cap, ascending.
std::vector<Rational> reduced_fractions_up_to(long den_cap, const Rational& max_value);

}  // namespace tailcert
