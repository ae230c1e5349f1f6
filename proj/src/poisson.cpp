#include "tailcert/poisson.hpp"

#include <stdexcept>

namespace tailcert {

namespace {

// Smallest t >= 1 with 2^-t <= eps.
int bits_for_epsilon(const Rational& eps) {
    int t = 1;
    Rational grid = make_rational(Int(1), Int(2));
    while (cmp(grid, eps) > 0) {
        ++t;
        grid /= 2;
        if (t > (1 << 20)) throw std::domain_error("epsilon is unreasonably small");
    }
    return t;
}

constexpr int kMaxWorkingBits = 1 << 18;

[[noreturn]] void width_failure() {
    throw std::runtime_error("enclosure width did not reach the requested epsilon");
}

// lambda^k / k! as an exact rational.
Rational poisson_weight(const Rational& lambda, long k) {
    Int num, fact;
    mpz_pow_ui(num.get_mpz_t(), lambda.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    Int den;
    mpz_pow_ui(den.get_mpz_t(), lambda.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return make_rational(std::move(num), Int(den * fact));
}

// sum_{j<k} lambda^j/j!, exact.
Rational partial_exp_sum(const Rational& lambda, long k) {
    Rational s(0);
    Rational term(1);
    for (long j = 0; j < k; ++j) {
        s += term;
        term = Rational(term * lambda / (j + 1));
    }
    return s;
}

Interval tail_enclosure(const Rational& lambda, long k, int w) {
    if (k <= 0) return interval_from_int(Int(1), w);
    Rational s = partial_exp_sum(lambda, k);
    Interval e = exp_interval(Rational(-lambda), w);
    return iv_sub(interval_from_int(Int(1), w), iv_scale(e, s));
}

}  // namespace

PoissonParams::PoissonParams(Rational lambda) : PoissonParams(std::move(lambda), default_epsilon()) {}

PoissonParams::PoissonParams(Rational lambda, Rational epsilon)
    : lambda_(std::move(lambda)), epsilon_(std::move(epsilon)) {
    if (sgn(lambda_) <= 0) throw std::domain_error("poisson lambda must be positive");
    if (sgn(epsilon_) <= 0) throw std::domain_error("poisson epsilon must be positive");
}

Rational PoissonParams::default_epsilon() {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, 64);
    return make_rational(Int(1), std::move(d));
}

bool PoissonParams::lambda_is_integer() const {
    return is_integer(lambda_);
}

Int PoissonParams::lambda_floor() const {
    return floor_int(lambda_);
}

Int PoissonParams::lambda_ceil() const {
    return ceil_int(lambda_);
}

Interval poisson_pmf(const PoissonParams& params, long k) {
    if (k < 0) throw std::domain_error("poisson pmf index must be nonnegative");
    Rational f = poisson_weight(params.lambda(), k);
    for (int w = bits_for_epsilon(params.epsilon()) + 64; w <= kMaxWorkingBits; w *= 2) {
        Interval r = iv_scale(exp_interval(Rational(-params.lambda()), w), f);
        if (cmp(width(r), params.epsilon()) <= 0) return r;
    }
    width_failure();
}

Interval poisson_tail(const PoissonParams& params, long k) {
    if (k < 0) throw std::domain_error("poisson tail index must be nonnegative");
    for (int w = bits_for_epsilon(params.epsilon()) + 64; w <= kMaxWorkingBits; w *= 2) {
        Interval r = tail_enclosure(params.lambda(), k, w);
        if (cmp(width(r), params.epsilon()) <= 0) return r;
    }
    width_failure();
}

Interval poisson_mad(const PoissonParams& params) {
    long fl = params.lambda_floor().get_si();
    Rational factor = Rational(2 * params.lambda() * poisson_weight(params.lambda(), fl));
    for (int w = bits_for_epsilon(params.epsilon()) + 64; w <= kMaxWorkingBits; w *= 2) {
        Interval r = iv_scale(exp_interval(Rational(-params.lambda()), w), factor);
        if (cmp(width(r), params.epsilon()) <= 0) return r;
    }
    width_failure();
}

Interval poisson_tce(const PoissonParams& params, long k) {
    if (k <= 0) {
        // Unconditional mean; exact up to the dyadic grid.
        return interval_from_rational(params.lambda(),
                                      bits_for_epsilon(params.epsilon()) + 64);
    }
    for (int w = bits_for_epsilon(params.epsilon()) + 64; w <= kMaxWorkingBits; w *= 2) {
        Interval above = tail_enclosure(params.lambda(), k - 1, w);
        Interval at = tail_enclosure(params.lambda(), k, w);
        if (sign(at.lo) <= 0) continue;  // tail too small for this precision
        Interval r = iv_scale(iv_div(above, at), params.lambda());
        if (cmp(width(r), params.epsilon()) <= 0) return r;
    }
    width_failure();
}

Interval poisson_theorem_bound(const PoissonParams& params) {
    Rational exponent = Rational(params.lambda() - params.lambda_floor() + 1);  // in [1, 2)
    for (int w = bits_for_epsilon(params.epsilon()) + 64; w <= kMaxWorkingBits; w *= 2) {
        Interval num = iv_scale(interval_sqrt(interval_from_rational(params.lambda(), w)),
                                Rational(2));
        Interval den = iv_mul(
            exp_interval(exponent, w),
            iv_add_rational(
                interval_sqrt(interval_from_rational(Rational(params.lambda() + 1), w)),
                Rational(1)));
        Interval r = iv_div(num, den);
        if (cmp(width(r), params.epsilon()) <= 0) return r;
    }
    width_failure();
}

Rational epsilon_from_bits(int bits) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return make_rational(Int(1), std::move(d));
}

PoissonIntegerTceReport poisson_integer_mean_tce_check(long lambda_int,
                                                       const PrecisionPolicy& pol) {
    if (lambda_int < 1) throw std::domain_error("integer lambda must be >= 1");
    Rational lam(lambda_int);

    EnclosureFn tce_fn = [&](int bits) {
        return poisson_tce(PoissonParams(lam, epsilon_from_bits(bits)), lambda_int);
    };
    EnclosureFn ub_fn = [&](int bits) {
        return iv_add_rational(interval_sqrt(interval_from_rational(lam, bits)), lam);
    };
    EnclosureFn tail_fn = [&](int bits) {
        return poisson_tail(PoissonParams(lam, epsilon_from_bits(bits)), lambda_int);
    };

    PoissonIntegerTceReport rep;
    rep.tce_bound = decide_true_vs_true(tce_fn, Rel::Le, ub_fn, pol).verdict;
    rep.median_premise =
        decide_exact_vs_true(make_rational(Int(1), Int(2)), Rel::Le, tail_fn, pol).verdict;
    return rep;
}

Verdict stirling_check(long m, const PrecisionPolicy& pol) {
    if (m < 1) throw std::domain_error("stirling check requires m >= 1");
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    Int mm;
    mpz_ui_pow_ui(mm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));

    EnclosureFn rhs = [&](int bits) {
        Interval e = exp_interval(Rational(1 - m), bits);
        Interval power = interval_from_int(mm, bits);
        Interval root = interval_sqrt(interval_from_int(Int(m), bits));
        return iv_mul(iv_mul(e, power), root);
    };
    return decide_exact_vs_true(Rational(fact), Rel::Le, rhs, pol).verdict;
}

}  // namespace tailcert
