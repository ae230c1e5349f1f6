#pragma once

#include "tailcert/rational.hpp"

#include <cstddef>
#include <vector>

namespace tailcert {

// Law of a sum of independent Bernoulli(p_i), pmf exact via sequential
// convolution.
struct PoissonBinomialLaw {
    std::vector<Rational> probs;
    std::vector<Rational> pmf;  // length probs.size() + 1

    Rational mean() const;      // sum p_i
    Rational variance() const;  // sum p_i (1 - p_i)
};

// Throws std::domain_error unless every p_i lies in (0,1) and probs is
// nonempty. O(n^2) exact rational operations.
PoissonBinomialLaw poisson_binomial_law(std::vector<Rational> probs);

// E|S - mean|, exact.
Rational pb_mad(const PoissonBinomialLaw& law);

// One explored vector: its exact MAD and variance, and the exact sign of
// MAD^2 - v/2 (the quantity a binomial-style MAD lower bound would need).
struct MadRatioEntry {
    std::vector<Rational> probs;
    Rational mad;
    Rational variance;
    int cmp_half_variance{0};  // sign of mad^2 - variance/2
};

// Deterministic enumeration: all nondecreasing vectors of reduced fractions
// with denominator <= den_cap and length in [1, max_len], optionally plus a
// fixed family of perturbations around the (1/2, 1/2) equality case. Purely
// exploratory; records minima, asserts nothing.
struct ExploreSpec {
    int max_len = 3;
    long den_cap = 4;
    bool include_perturbations = true;
};

struct ExploreResult {
    std::vector<MadRatioEntry> rows;
    size_t min_index{0};  // argmin of mad^2/variance over rows
};

ExploreResult explore_mad_ratio(const ExploreSpec& spec);

// mad / sqrt(v/2) = sqrt(2 mad^2 / v) rendered to 6 digits, for reports.
std::string mad_ratio_decimal(const MadRatioEntry& entry);

}  // namespace tailcert
