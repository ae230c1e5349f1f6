#include "tailcert/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace tailcert {

Interval interval_from_rational(const Rational& q, int prec) {
    return Interval{dyadic_from_rational(q, prec, Round::Down),
                    dyadic_from_rational(q, prec, Round::Up), prec};
}

Interval interval_from_int(const Int& v, int prec) {
    Dyadic d = dy_round(dyadic_from_int(v), prec, Round::Down);  // exact
    return Interval{d, d, prec};
}

bool is_degenerate(const Interval& x) {
    return cmp(x.lo, x.hi) == 0;
}

bool contains(const Interval& x, const Rational& q) {
    return cmp(x.lo, q) <= 0 && cmp(x.hi, q) >= 0;
}

Rational lo_rational(const Interval& x) {
    return to_rational(x.lo);
}

Rational hi_rational(const Interval& x) {
    return to_rational(x.hi);
}

Rational width(const Interval& x) {
    return Rational(hi_rational(x) - lo_rational(x));
}

Rational midpoint(const Interval& x) {
    return Rational((hi_rational(x) + lo_rational(x)) / 2);
}

Interval iv_neg(const Interval& x) {
    return Interval{dy_neg(x.hi), dy_neg(x.lo), x.precision_bits};
}

Interval iv_add(const Interval& x, const Interval& y) {
    int prec = std::max(x.precision_bits, y.precision_bits);
    return Interval{dy_add(x.lo, y.lo), dy_add(x.hi, y.hi), prec};
}

Interval iv_sub(const Interval& x, const Interval& y) {
    int prec = std::max(x.precision_bits, y.precision_bits);
    return Interval{dy_sub(x.lo, y.hi), dy_sub(x.hi, y.lo), prec};
}

Interval iv_mul(const Interval& x, const Interval& y) {
    int prec = std::max(x.precision_bits, y.precision_bits);
    // Exact endpoint products, exact min/max, one directed rounding at the end.
    Dyadic c[4] = {
        Dyadic{x.lo.mant * y.lo.mant, x.lo.frac_bits + y.lo.frac_bits},
        Dyadic{x.lo.mant * y.hi.mant, x.lo.frac_bits + y.hi.frac_bits},
        Dyadic{x.hi.mant * y.lo.mant, x.hi.frac_bits + y.lo.frac_bits},
        Dyadic{x.hi.mant * y.hi.mant, x.hi.frac_bits + y.hi.frac_bits},
    };
    int lo_i = 0, hi_i = 0;
    for (int i = 1; i < 4; ++i) {
        if (cmp(c[i], c[lo_i]) < 0) lo_i = i;
        if (cmp(c[i], c[hi_i]) > 0) hi_i = i;
    }
    return Interval{dy_round(c[lo_i], prec, Round::Down), dy_round(c[hi_i], prec, Round::Up),
                    prec};
}

Interval iv_div(const Interval& x, const Interval& y) {
    if (sign(y.lo) <= 0 && sign(y.hi) >= 0) {
        throw std::domain_error("interval division by an interval enclosing zero");
    }
    int prec = std::max(x.precision_bits, y.precision_bits);
    const Dyadic* xs[2] = {&x.lo, &x.hi};
    const Dyadic* ys[2] = {&y.lo, &y.hi};
    Dyadic lo, hi;
    bool first = true;
    for (const Dyadic* a : xs) {
        for (const Dyadic* b : ys) {
            Dyadic down = dy_div(*a, *b, prec, Round::Down);
            Dyadic up = dy_div(*a, *b, prec, Round::Up);
            if (first) {
                lo = down;
                hi = up;
                first = false;
            } else {
                if (cmp(down, lo) < 0) lo = down;
                if (cmp(up, hi) > 0) hi = up;
            }
        }
    }
    return Interval{lo, hi, prec};
}

Interval iv_add_rational(const Interval& x, const Rational& q) {
    return Interval{dy_add(x.lo, dyadic_from_rational(q, x.precision_bits, Round::Down)),
                    dy_add(x.hi, dyadic_from_rational(q, x.precision_bits, Round::Up)),
                    x.precision_bits};
}

Interval iv_scale(const Interval& x, const Rational& q) {
    int prec = x.precision_bits;
    if (sgn(q) >= 0) {
        return Interval{dy_mul_rational(x.lo, q, prec, Round::Down),
                        dy_mul_rational(x.hi, q, prec, Round::Up), prec};
    }
    return Interval{dy_mul_rational(x.hi, q, prec, Round::Down),
                    dy_mul_rational(x.lo, q, prec, Round::Up), prec};
}

Interval interval_sqrt(const Interval& x) {
    if (sign(x.lo) < 0) {
        throw std::domain_error("interval sqrt requires a nonnegative lower endpoint");
    }
    return Interval{dy_sqrt(x.lo, x.precision_bits, Round::Down),
                    dy_sqrt(x.hi, x.precision_bits, Round::Up), x.precision_bits};
}

Interval exp_interval(const Rational& x, int prec) {
    if (sgn(x) == 0) {
        return interval_from_int(Int(1), prec);
    }
    if (sgn(x) < 0) {
        int w = prec + 8;
        Interval pos = exp_interval(Rational(-x), w);
        return iv_div(interval_from_int(Int(1), w), pos);
    }
    // e^x = sum x^k/k! with the partial sums tracked from both sides; once the
    // term ratio x/(k+1) drops to 1/2 the remainder is at most the last term.
    int w = prec + 64;
    Dyadic one = dy_round(dyadic_from_int(Int(1)), w, Round::Down);
    Dyadic t_lo = one, t_hi = one;
    Dyadic s_lo = one, s_hi = one;
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int two_a = 2 * a;
    for (long k = 1;; ++k) {
        Rational step = make_rational(a, b * k);
        t_lo = dy_mul_rational(t_lo, step, w, Round::Down);
        if (sign(t_lo) < 0) t_lo.mant = 0;
        t_hi = dy_mul_rational(t_hi, step, w, Round::Up);
        s_lo = dy_add(s_lo, t_lo);
        s_hi = dy_add(s_hi, t_hi);
        bool ratio_small = cmp(Int(b * (k + 1)), two_a) >= 0;  // x/(k+1) <= 1/2
        if (ratio_small && cmp(t_hi.mant, Int(4)) <= 0) {
            s_hi = dy_add(s_hi, t_hi);  // geometric tail bound
            break;
        }
    }
    return Interval{s_lo, s_hi, w};
}

std::string interval_to_string(const Interval& x, int significant_digits) {
    return dyadic_to_decimal(x.lo, significant_digits, Round::Down) + ".." +
           dyadic_to_decimal(x.hi, significant_digits, Round::Up);
}

}  // namespace tailcert
