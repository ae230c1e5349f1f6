#pragma once

#include "tailcert/rational.hpp"

#include <vector>

namespace tailcert {

// Bin(n, p) with exact rational p in the open interval (0,1). Every
// functional below is an exact rational; nothing here ever rounds.
class BinomialParams {
public:
    BinomialParams(long n, Rational p);  // throws std::domain_error

    long n() const { return n_; }
    const Rational& p() const { return p_; }
    Rational np() const;
    Rational variance() const;  // np(1-p)
    bool np_is_integer() const;
    // n >= 2 and 1/n <= p <= 1-1/n.
    bool in_core_domain() const;
    // The tail index realising P[X >= np]: np itself when integer, ceil(np)
    // otherwise. The two cases are deliberately separate code paths.
    long exceedance_index() const;

private:
    long n_;
    Rational p_;
};

// pmf(k) for k = 0..n via the running-product recurrence
// pmf(k+1) = pmf(k) * (n-k)/(k+1) * p/(1-p), kept exact throughout.
std::vector<Rational> pmf_table(const BinomialParams& params);

// C(n,k) p^k (1-p)^(n-k); throws std::domain_error for k outside [0, n].
Rational pmf(const BinomialParams& params, long k);

// P[X >= k]; defined for every integer k (1 below the support, 0 above it).
Rational tail(const BinomialParams& params, long k);

// P[X >= np], splitting exactly on whether np is an integer.
Rational mean_exceedance_prob(const BinomialParams& params);

// E|X - np|.
Rational mad(const BinomialParams& params);

// E[max(0, X - threshold)].
Rational positive_part_mean(const BinomialParams& params, const Rational& threshold);

// E[X | X >= k]; throws std::domain_error when P[X >= k] = 0 (k > n).
Rational tce(const BinomialParams& params, long k);

// Whether P[X >= floor(np)] >= 1/2. Always true for binomial laws; the
// operation exists so the harness can test that oracle rather than assume it.
bool median_lower_check(const BinomialParams& params);

}  // namespace tailcert
