#pragma once

#include "tailcert/binomial.hpp"
#include "tailcert/compare.hpp"
#include "tailcert/interval.hpp"

#include <compare>
#include <optional>
#include <string_view>

namespace tailcert {

// The catalogued lower bounds on P[X >= np] for X ~ Bin(n, p). Each kind
// carries an exact validity predicate; evaluating out of domain throws.
enum class BoundKind {
    Veraar,          // (1/4) E|X-np|^2 / Var X, any p
    GreenbergMohri,  // constant 1/4, strict, requires p >= 1/n
    RigolletTong,    // min(p, 1/4), requires p <= 1/2
    Theorem1,        // sqrt(v)/(2 sqrt(2) (1+sqrt(v+1))), core domain
    Theorem1Sharp,   // sqrt(v)/(2 sqrt(2) (1+sqrt(v+1-2p))), core domain
};

std::string_view bound_name(BoundKind kind);
bool bound_in_domain(BoundKind kind, const BinomialParams& params);
std::string_view bound_domain_requirement(BoundKind kind);

// Rational-valued bounds carry their exact value next to the (then possibly
// degenerate) outward enclosure; irrational bounds carry only the enclosure.
struct BoundValue {
    std::optional<Rational> exact;
    Interval enclosure;
};

BoundValue veraar_bound(const BinomialParams& params, int prec);
BoundValue greenberg_mohri_bound(const BinomialParams& params, int prec);
BoundValue rigollet_tong_bound(const BinomialParams& params, int prec);
BoundValue theorem1_bound(const BinomialParams& params, bool sharp, int prec);
BoundValue evaluate_bound(BoundKind kind, const BinomialParams& params, int prec);

// Exact three-way comparison of np(1-p) against 8, the threshold at which the
// relaxed bound crosses 1/4 (from sqrt(2x) >= 1 + sqrt(x+1)).
std::strong_ordering quarter_threshold_check(const BinomialParams& params);

// Enclosure of np + sqrt(np(1-p)), the upper bound on E[X | X >= np] valid
// when np is an integer. Throws std::domain_error otherwise.
Interval tce_upper_bound_integer_mean(const BinomialParams& params, int prec);

}  // namespace tailcert
