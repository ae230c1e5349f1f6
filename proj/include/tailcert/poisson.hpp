#pragma once

#include "tailcert/compare.hpp"
#include "tailcert/interval.hpp"
#include "tailcert/rational.hpp"

namespace tailcert {

// Poi(lambda) with exact rational mean, so floor/ceil and the integer-mean
// case split are decidable with no epsilon. epsilon is the target absolute
// width of returned enclosures (default 2^-64).
class PoissonParams {
public:
    explicit PoissonParams(Rational lambda);
    PoissonParams(Rational lambda, Rational epsilon);
    static Rational default_epsilon();

    const Rational& lambda() const { return lambda_; }
    const Rational& epsilon() const { return epsilon_; }
    bool lambda_is_integer() const;
    Int lambda_floor() const;
    Int lambda_ceil() const;

private:
    Rational lambda_;
    Rational epsilon_;
};

// e^-lambda lambda^k / k!; the rational factor is exact, e^-lambda is the
// only enclosed quantity.
Interval poisson_pmf(const PoissonParams& params, long k);

// P[X >= k] = 1 - e^-lambda * sum_{j<k} lambda^j/j! (finite exact sum times
// one enclosure). Degenerate [1,1] for k <= 0.
Interval poisson_tail(const PoissonParams& params, long k);

// E|X - lambda| = 2 lambda e^-lambda lambda^floor(lambda)/floor(lambda)!.
Interval poisson_mad(const PoissonParams& params);

// E[X | X >= k] via the factorization lambda * P[X >= k-1] / P[X >= k];
// k <= 0 returns the unconditional mean.
Interval poisson_tce(const PoissonParams& params, long k);

// 2 e^-(lambda - floor(lambda) + 1) sqrt(lambda) / (1 + sqrt(lambda+1)),
// the certified lower bound on P[X >= lambda].
Interval poisson_theorem_bound(const PoissonParams& params);

// For integer lambda: checks E[X | X >= lambda] <= lambda + sqrt(lambda),
// and independently the premise it rests on, P[X >= lambda] >= 1/2.
struct PoissonIntegerTceReport {
    Verdict tce_bound{Verdict::Inconclusive};
    Verdict median_premise{Verdict::Inconclusive};
};

PoissonIntegerTceReport poisson_integer_mean_tce_check(long lambda_int,
                                                       const PrecisionPolicy& pol = {});

// m! <= e * m^(m+1/2) * e^-m, verified against a certified enclosure of the
// right-hand side (exact equality at m = 1).
Verdict stirling_check(long m, const PrecisionPolicy& pol = {});

// 2^-bits as an exact rational, the epsilon matching a bit budget.
Rational epsilon_from_bits(int bits);

}  // namespace tailcert
