#pragma once

#include "tailcert/binomial.hpp"

#include <optional>
#include <vector>

namespace tailcert {

enum class OrderKind { LikelihoodRatio, HazardRate };

// Outcome of an exact order check between two binomial laws on a common n.
// holds == true iff witness_k is absent.
struct OrderCheckReport {
    OrderKind kind{OrderKind::LikelihoodRatio};
    bool holds{true};
    std::optional<long> witness_k;  // first index violating the defining inequality
};

// left <=_lr right: pmf_left(k)/pmf_right(k) decreasing in k, checked in the
// cross-multiplied form pmf_l(k) pmf_r(k+1) >= pmf_l(k+1) pmf_r(k) for
// k in [0, n-1]. Requires equal n.
OrderCheckReport check_likelihood_ratio_order(const BinomialParams& left,
                                              const BinomialParams& right);

// left <=_hr right: tail_l(k) tail_r(k+1) >= tail_l(k+1) tail_r(k) for
// k in [1, n-1] (beyond the support everything is vacuous). Requires equal n.
OrderCheckReport check_hazard_rate_order(const BinomialParams& left,
                                         const BinomialParams& right);

// Same inequality including the k = 0 index, which the usual definition
// leaves out; reported separately, never folded into the standard verdict.
OrderCheckReport check_hazard_rate_order_from_zero(const BinomialParams& left,
                                                   const BinomialParams& right);

// E[X_p | X_p >= k] sampled over a p grid; an absent tce marks conditioning
// on a null event rather than silently dropping the point.
struct TcePoint {
    Rational p;
    std::optional<Rational> tce;
};

std::vector<TcePoint> tce_profile_in_p(long n, long k, const std::vector<Rational>& p_grid);

// True when every present tce is >= its predecessor (exact comparisons).
bool tce_profile_nondecreasing(const std::vector<TcePoint>& profile);

}  // namespace tailcert
