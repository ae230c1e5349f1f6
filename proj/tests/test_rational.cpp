#include "tailcert/rational.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tailcert;
using testutil::rat;

TEST_CASE("parsing accepts fractions, integers and decimal strings") {
    CHECK(parse_rational("1/2") == rat(1, 2));
    CHECK(parse_rational("2/4") == rat(1, 2));  // canonicalized
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3/9") == rat(-1, 3));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("-0.1") == rat(-1, 10));
    CHECK(parse_rational(".5") == rat(1, 2));
    CHECK(parse_rational("3.") == Rational(3));
    CHECK(parse_rational("+7/3") == rat(7, 3));

    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("make_rational canonicalizes and keeps the denominator positive") {
    Rational q = make_rational(Int(6), Int(-8));
    CHECK(q == rat(-3, 4));
    CHECK(q.get_den() == 4);
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("integer predicates and floor/ceil") {
    CHECK(is_integer(Rational(5)));
    CHECK_FALSE(is_integer(rat(5, 2)));
    CHECK(floor_int(rat(3, 2)) == 1);
    CHECK(ceil_int(rat(3, 2)) == 2);
    CHECK(floor_int(rat(-3, 2)) == -2);
    CHECK(ceil_int(rat(-3, 2)) == -1);
    CHECK(floor_int(Rational(4)) == 4);
    CHECK(ceil_int(Rational(4)) == 4);
}

TEST_CASE("ceil decomposition") {
    CeilDecomposition d = ceil_decompose(rat(3, 2));
    CHECK(d.ceil == 2);
    CHECK(d.frac_complement == rat(1, 2));

    d = ceil_decompose(Rational(2));
    CHECK(d.ceil == 2);
    CHECK(d.frac_complement == 0);

    d = ceil_decompose(rat(7, 3));
    CHECK(d.ceil == 3);
    CHECK(d.frac_complement == rat(2, 3));

    CHECK_THROWS_AS(ceil_decompose(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ceil_decompose(rat(-1, 2)), std::domain_error);
}

TEST_CASE("terminating decimal detection and exact expansion") {
    CHECK(has_terminating_decimal(rat(1, 2)));
    CHECK(has_terminating_decimal(rat(7, 25)));
    CHECK(has_terminating_decimal(rat(3, 40)));
    CHECK(has_terminating_decimal(Rational(12)));
    CHECK_FALSE(has_terminating_decimal(rat(1, 3)));
    CHECK_FALSE(has_terminating_decimal(rat(5, 6)));

    CHECK(to_exact_decimal_string(rat(1, 2)) == "0.5");
    CHECK(to_exact_decimal_string(rat(3, 8)) == "0.375");
    CHECK(to_exact_decimal_string(rat(1, 20)) == "0.05");
    CHECK(to_exact_decimal_string(rat(-7, 4)) == "-1.75");
    CHECK(to_exact_decimal_string(Rational(10)) == "10");
    CHECK_THROWS_AS(to_exact_decimal_string(rat(1, 3)), std::domain_error);

    CHECK(csv_number(rat(1, 2)) == "0.5");
    CHECK(csv_number(rat(1, 3)) == "1/3");
    CHECK(csv_number(rat(-5, 6)) == "-5/6");
}

TEST_CASE("significant-digit rendering uses round-half-even") {
    CHECK(to_decimal_string(rat(1, 2), 12) == "0.500000000000");
    CHECK(to_decimal_string(rat(4, 3), 12) == "1.33333333333");
    CHECK(to_decimal_string(Rational(0), 12) == "0");
    CHECK(to_decimal_string(rat(1, 4), 1) == "0.2");   // 2.5 -> even
    CHECK(to_decimal_string(rat(3, 4), 1) == "0.8");   // 7.5 -> even
    CHECK(to_decimal_string(rat(3, 8), 2) == "0.38");  // 37.5 -> even
    CHECK(to_decimal_string(rat(-4, 3), 6) == "-1.33333");
    CHECK(to_decimal_string(rat(999999, 1000), 3) == "1000");  // carry into new digit
}

TEST_CASE("rendering switches to scientific form for extreme magnitudes") {
    Int big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(to_decimal_string(Rational(big), 5) == "1e+30");
    CHECK(to_decimal_string(make_rational(Int(1), big), 5) == "1e-30");
    CHECK(to_decimal_string(make_rational(Int(1), Int(100000)), 3) == "1e-5");
    CHECK(to_decimal_string(rat(1, 10000), 3) == "0.000100");  // sig digits kept
}

TEST_CASE("decimal exponent") {
    CHECK(decimal_exponent_of(Rational(1)) == 1);
    CHECK(decimal_exponent_of(rat(999, 1000)) == 0);
    CHECK(decimal_exponent_of(Rational(10)) == 2);
    CHECK(decimal_exponent_of(rat(1, 10)) == 0);
    CHECK(decimal_exponent_of(rat(1, 11)) == -1);
}

TEST_CASE("reduced fraction grids are complete, reduced and sorted") {
    std::vector<Rational> f4 = reduced_fractions(4);
    REQUIRE(f4.size() == 5);
    CHECK(f4[0] == rat(1, 4));
    CHECK(f4[1] == rat(1, 3));
    CHECK(f4[2] == rat(1, 2));
    CHECK(f4[3] == rat(2, 3));
    CHECK(f4[4] == rat(3, 4));

    // Brute-force cross-check of size for cap 24: sum of phi(b), b = 2..24.
    std::vector<Rational> f24 = reduced_fractions(24);
    size_t count = 0;
    for (long b = 2; b <= 24; ++b) {
        for (long a = 1; a < b; ++a) {
            long g = a, h = b;
            while (h) {
                long t = g % h;
                g = h;
                h = t;
            }
            if (g == 1) ++count;
        }
    }
    CHECK(f24.size() == count);
    for (size_t i = 1; i < f24.size(); ++i) CHECK(cmp(f24[i - 1], f24[i]) < 0);

    std::vector<Rational> lam = reduced_fractions_up_to(2, Rational(3));
    REQUIRE(lam.size() == 6);
    CHECK(lam[0] == rat(1, 2));
    CHECK(lam[1] == Rational(1));
    CHECK(lam[2] == rat(3, 2));
    CHECK(lam[3] == Rational(2));
    CHECK(lam[4] == rat(5, 2));
    CHECK(lam[5] == Rational(3));
}

TEST_CASE("format/parse round trip on a deterministic grid") {
    for (const Rational& q : reduced_fractions(12)) {
        CHECK(parse_rational(to_fraction_string(q)) == q);
        if (has_terminating_decimal(q)) {
            CHECK(parse_rational(to_exact_decimal_string(q)) == q);
        }
        CHECK(parse_rational(csv_number(q)) == q);
    }
}
