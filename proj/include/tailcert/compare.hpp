#pragma once

#include "tailcert/interval.hpp"

#include <functional>
#include <string_view>

namespace tailcert {

enum class Verdict { Proven, Violated, Inconclusive, DomainSkipped };

std::string_view verdict_name(Verdict v);  // "PROVEN", "VIOLATED", ...

// Precision-escalation policy shared by every certified comparison: start at
// start_bits, double while the comparison lands inside an interval, and give
// up with an explicit Inconclusive at cap_bits.
struct PrecisionPolicy {
    int start_bits = 128;
    int cap_bits = 2048;
};

enum class Rel { Le, Lt, Ge, Gt };

// Produces an enclosure of a fixed real value at the requested precision.
using EnclosureFn = std::function<Interval(int prec)>;

struct Decision {
    Verdict verdict{Verdict::Inconclusive};
    Interval enclosure;  // enclosure of the non-exact side at the deciding precision
    int bits_used{0};
};

// Decide `exact REL value` where `fn` encloses the (possibly irrational)
// value. A degenerate enclosure pins the value and decides strict relations
// exactly.
Decision decide_exact_vs_true(const Rational& exact, Rel rel, const EnclosureFn& fn,
                              const PrecisionPolicy& pol);

struct Decision2 {
    Verdict verdict{Verdict::Inconclusive};
    Interval lhs;
    Interval rhs;
    int bits_used{0};
};

// Decide `lhs REL rhs` where both sides are fixed reals given by enclosures.
Decision2 decide_true_vs_true(const EnclosureFn& lhs, Rel rel, const EnclosureFn& rhs,
                              const PrecisionPolicy& pol);

}  // namespace tailcert
