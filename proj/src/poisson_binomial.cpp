#include "tailcert/poisson_binomial.hpp"

#include "tailcert/interval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tailcert {

Rational PoissonBinomialLaw::mean() const {
    Rational s(0);
    for (const Rational& p : probs) s += p;
    return s;
}

Rational PoissonBinomialLaw::variance() const {
    Rational s(0);
    for (const Rational& p : probs) s += p * (1 - p);
    return s;
}

PoissonBinomialLaw poisson_binomial_law(std::vector<Rational> probs) {
    if (probs.empty()) throw std::domain_error("poisson-binomial law needs at least one trial");
    for (const Rational& p : probs) {
        if (sgn(p) <= 0 || cmp(p, Rational(1)) >= 0) {
            throw std::domain_error("every trial probability must lie strictly between 0 and 1");
        }
    }
    PoissonBinomialLaw law;
    law.pmf.assign(probs.size() + 1, Rational(0));
    law.pmf[0] = 1;
    for (size_t m = 0; m < probs.size(); ++m) {
        const Rational& p = probs[m];
        for (size_t k = m + 1; k-- > 0;) {
            law.pmf[k + 1] += p * law.pmf[k];
            law.pmf[k] *= 1 - p;
        }
    }
    law.probs = std::move(probs);
    return law;
}

Rational pb_mad(const PoissonBinomialLaw& law) {
    Rational mu = law.mean();
    Rational s(0);
    for (size_t k = 0; k < law.pmf.size(); ++k) {
        s += abs(Rational(k - mu)) * law.pmf[k];
    }
    return s;
}

namespace {

MadRatioEntry evaluate_vector(std::vector<Rational> probs) {
    PoissonBinomialLaw law = poisson_binomial_law(std::move(probs));
    MadRatioEntry e;
    e.mad = pb_mad(law);
    e.variance = law.variance();
    e.cmp_half_variance = cmp(Rational(e.mad * e.mad), Rational(e.variance / 2));
    e.probs = std::move(law.probs);
    return e;
}

// mad^2/v comparison across entries, cross-multiplied.
bool ratio_less(const MadRatioEntry& a, const MadRatioEntry& b) {
    return cmp(Rational(a.mad * a.mad * b.variance), Rational(b.mad * b.mad * a.variance)) < 0;
}

}  // namespace

ExploreResult explore_mad_ratio(const ExploreSpec& spec) {
    if (spec.max_len < 1) throw std::domain_error("explorer max_len must be >= 1");
    if (spec.den_cap < 2) throw std::domain_error("explorer den_cap must be >= 2");
    std::vector<Rational> values = reduced_fractions(spec.den_cap);

    ExploreResult result;
    std::vector<size_t> idx;
    // Nondecreasing index vectors of each length (the MAD is permutation
    // invariant, so ordered repeats add nothing).
    auto enumerate = [&](auto&& self, size_t from) -> void {
        if (!idx.empty()) {
            std::vector<Rational> probs;
            probs.reserve(idx.size());
            for (size_t i : idx) probs.push_back(values[i]);
            result.rows.push_back(evaluate_vector(std::move(probs)));
        }
        if (idx.size() == static_cast<size_t>(spec.max_len)) return;
        for (size_t i = from; i < values.size(); ++i) {
            idx.push_back(i);
            self(self, i);
            idx.pop_back();
        }
    };
    enumerate(enumerate, 0);

    if (spec.include_perturbations && spec.max_len >= 2) {
        Rational half = make_rational(Int(1), Int(2));
        for (int k = 3; k <= 7; ++k) {
            Rational delta = make_rational(Int(1), Int(1L << k));
            result.rows.push_back(evaluate_vector({Rational(half - delta), Rational(half + delta)}));
            result.rows.push_back(evaluate_vector({half, Rational(half - delta)}));
            result.rows.push_back(evaluate_vector({half, Rational(half + delta)}));
        }
    }

    for (size_t i = 1; i < result.rows.size(); ++i) {
        if (ratio_less(result.rows[i], result.rows[result.min_index])) result.min_index = i;
    }
    return result;
}

std::string mad_ratio_decimal(const MadRatioEntry& entry) {
    // sqrt(2 mad^2 / v) at 64 bits, midpoint rendering
    Rational sq = Rational(2 * entry.mad * entry.mad / entry.variance);
    Interval root = interval_sqrt(interval_from_rational(sq, 64));
    return to_decimal_string(midpoint(root), 6);
}

}  // namespace tailcert
