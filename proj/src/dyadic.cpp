#include "tailcert/dyadic.hpp"

#include <stdexcept>
#include <utility>

namespace tailcert {

namespace {

Int shift_left(const Int& v, long bits) {
    Int r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(bits));
    return r;
}

Int dir_div(const Int& num, const Int& den, Round dir) {
    Int q;
    if (dir == Round::Down) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return q;
}

}  // namespace

Dyadic dyadic_from_int(Int v) {
    return Dyadic{std::move(v), 0};
}

Dyadic dyadic_from_rational(const Rational& q, int prec, Round dir) {
    return Dyadic{dir_div(shift_left(q.get_num(), prec), q.get_den(), dir), prec};
}

Rational to_rational(const Dyadic& d) {
    return make_rational(d.mant, shift_left(Int(1), d.frac_bits));
}

int sign(const Dyadic& d) {
    return sgn(d.mant);
}

int cmp(const Dyadic& a, const Dyadic& b) {
    if (a.frac_bits == b.frac_bits) return cmp(a.mant, b.mant);
    if (a.frac_bits < b.frac_bits) {
        return cmp(Int(shift_left(a.mant, b.frac_bits - a.frac_bits)), b.mant);
    }
    return cmp(a.mant, Int(shift_left(b.mant, a.frac_bits - b.frac_bits)));
}

int cmp(const Dyadic& a, const Rational& q) {
    // a.mant / 2^f vs num/den  <=>  a.mant * den vs num * 2^f
    return cmp(Int(a.mant * q.get_den()), Int(shift_left(q.get_num(), a.frac_bits)));
}

Dyadic dy_neg(const Dyadic& a) {
    return Dyadic{-a.mant, a.frac_bits};
}

Dyadic dy_add(const Dyadic& a, const Dyadic& b) {
    int f = std::max(a.frac_bits, b.frac_bits);
    Int am = a.frac_bits == f ? a.mant : shift_left(a.mant, f - a.frac_bits);
    Int bm = b.frac_bits == f ? b.mant : shift_left(b.mant, f - b.frac_bits);
    return Dyadic{am + bm, f};
}

Dyadic dy_sub(const Dyadic& a, const Dyadic& b) {
    return dy_add(a, dy_neg(b));
}

Dyadic dy_round(const Dyadic& a, int prec, Round dir) {
    if (a.frac_bits <= prec) {
        return Dyadic{shift_left(a.mant, prec - a.frac_bits), prec};
    }
    unsigned long drop = static_cast<unsigned long>(a.frac_bits - prec);
    Int m;
    if (dir == Round::Down) {
        mpz_fdiv_q_2exp(m.get_mpz_t(), a.mant.get_mpz_t(), drop);
    } else {
        mpz_cdiv_q_2exp(m.get_mpz_t(), a.mant.get_mpz_t(), drop);
    }
    return Dyadic{std::move(m), prec};
}

Dyadic dy_mul(const Dyadic& a, const Dyadic& b, int prec, Round dir) {
    return dy_round(Dyadic{a.mant * b.mant, a.frac_bits + b.frac_bits}, prec, dir);
}

Dyadic dy_mul_rational(const Dyadic& a, const Rational& q, int prec, Round dir) {
    // (mant * num) / (2^f * den) on the 2^-prec grid
    Int num = a.mant * q.get_num();
    if (prec >= a.frac_bits) {
        return Dyadic{dir_div(shift_left(num, prec - a.frac_bits), q.get_den(), dir), prec};
    }
    return Dyadic{dir_div(num, Int(shift_left(q.get_den(), a.frac_bits - prec)), dir), prec};
}

Dyadic dy_div(const Dyadic& a, const Dyadic& b, int prec, Round dir) {
    if (sgn(b.mant) == 0) throw std::domain_error("dyadic division by zero");
    long k = static_cast<long>(b.frac_bits) - a.frac_bits + prec;
    if (k >= 0) {
        return Dyadic{dir_div(shift_left(a.mant, k), b.mant, dir), prec};
    }
    return Dyadic{dir_div(a.mant, shift_left(b.mant, -k), dir), prec};
}

Dyadic dy_sqrt(const Dyadic& a, int prec, Round dir) {
    if (sign(a) < 0) throw std::domain_error("dyadic sqrt of a negative value");
    Dyadic x = a.frac_bits > 2 * prec ? dy_round(a, 2 * prec, dir) : a;
    if (sign(x) < 0) x.mant = 0;  // down-rounding may cross zero
    Int rad = shift_left(x.mant, 2 * prec - x.frac_bits);
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), rad.get_mpz_t());
    if (dir == Round::Up && sgn(rem) != 0) root += 1;
    return Dyadic{std::move(root), prec};
}

std::string dyadic_to_decimal(const Dyadic& d, int significant_digits, Round dir) {
    if (sign(d) == 0) return "0";
    if (sign(d) < 0) {
        Round flipped = dir == Round::Down ? Round::Up : Round::Down;
        return "-" + dyadic_to_decimal(dy_neg(d), significant_digits, flipped);
    }
    Rational q = to_rational(d);
    long e = decimal_exponent_of(q);
    long shift = significant_digits - e;
    Int num = q.get_num();
    Int den = q.get_den();
    Int p;
    if (shift >= 0) {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p;
    } else {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= p;
    }
    Int digits_int = dir_div(num, den, dir);
    std::string digits = digits_int.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        digits.resize(significant_digits);  // 10^sig after rounding up; value preserved
        ++e;
    }
    if (e > significant_digits + 3 || e < -3) {
        std::string mant(1, digits[0]);
        std::string rest = digits.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) mant += "." + rest;
        long se = e - 1;
        return mant + "e" + (se < 0 ? "-" : "+") + std::to_string(se < 0 ? -se : se);
    }
    if (e <= 0) {
        std::string out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
        return out;
    }
    if (e >= static_cast<long>(digits.size())) {
        return digits + std::string(e - digits.size(), '0');
    }
    std::string out = digits.substr(0, e) + "." + digits.substr(e);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

}  // namespace tailcert
