#include "tailcert/orders.hpp"

#include <stdexcept>

namespace tailcert {

namespace {

void require_equal_n(const BinomialParams& left, const BinomialParams& right) {
    if (left.n() != right.n()) {
        throw std::domain_error("order checks require equal n on both laws");
    }
}

// tails[k] = P[X >= k] for k = 0..n+1, by suffix summation.
std::vector<Rational> tail_table(const BinomialParams& params) {
    std::vector<Rational> pm = pmf_table(params);
    std::vector<Rational> tails(pm.size() + 1, Rational(0));
    for (size_t k = pm.size(); k-- > 0;) {
        tails[k] = Rational(tails[k + 1] + pm[k]);
    }
    return tails;
}

OrderCheckReport hazard_rate_impl(const BinomialParams& left, const BinomialParams& right,
                                  long k_from) {
    require_equal_n(left, right);
    OrderCheckReport rep;
    rep.kind = OrderKind::HazardRate;
    std::vector<Rational> tl = tail_table(left);
    std::vector<Rational> tr = tail_table(right);
    long n = left.n();
    for (long k = k_from; k <= n - 1; ++k) {
        size_t i = static_cast<size_t>(k);
        // tail_l(k)/tail_l(k+1) >= tail_r(k)/tail_r(k+1), cross-multiplied
        if (cmp(Rational(tl[i] * tr[i + 1]), Rational(tl[i + 1] * tr[i])) < 0) {
            rep.holds = false;
            rep.witness_k = k;
            return rep;
        }
    }
    return rep;
}

}  // namespace

OrderCheckReport check_likelihood_ratio_order(const BinomialParams& left,
                                              const BinomialParams& right) {
    require_equal_n(left, right);
    OrderCheckReport rep;
    rep.kind = OrderKind::LikelihoodRatio;
    std::vector<Rational> pl = pmf_table(left);
    std::vector<Rational> pr = pmf_table(right);
    long n = left.n();
    for (long k = 0; k <= n - 1; ++k) {
        const Rational& l0 = pl[static_cast<size_t>(k)];
        const Rational& l1 = pl[static_cast<size_t>(k + 1)];
        const Rational& r0 = pr[static_cast<size_t>(k)];
        const Rational& r1 = pr[static_cast<size_t>(k + 1)];
        if (cmp(Rational(l0 * r1), Rational(l1 * r0)) < 0) {
            rep.holds = false;
            rep.witness_k = k;
            return rep;
        }
    }
    return rep;
}

OrderCheckReport check_hazard_rate_order(const BinomialParams& left,
                                         const BinomialParams& right) {
    return hazard_rate_impl(left, right, 1);
}

OrderCheckReport check_hazard_rate_order_from_zero(const BinomialParams& left,
                                                   const BinomialParams& right) {
    return hazard_rate_impl(left, right, 0);
}

std::vector<TcePoint> tce_profile_in_p(long n, long k, const std::vector<Rational>& p_grid) {
    if (k < 0 || k > n) {
        throw std::domain_error("tce profile threshold must lie in [0, n]");
    }
    for (size_t i = 1; i < p_grid.size(); ++i) {
        if (cmp(p_grid[i - 1], p_grid[i]) >= 0) {
            throw std::domain_error("tce profile grid must be strictly increasing");
        }
    }
    std::vector<TcePoint> out;
    out.reserve(p_grid.size());
    for (const Rational& p : p_grid) {
        TcePoint pt;
        pt.p = p;
        BinomialParams params(n, p);
        if (sgn(tail(params, k)) > 0) {
            pt.tce = tce(params, k);
        }
        out.push_back(std::move(pt));
    }
    return out;
}

bool tce_profile_nondecreasing(const std::vector<TcePoint>& profile) {
    const Rational* prev = nullptr;
    for (const TcePoint& pt : profile) {
        if (!pt.tce) continue;
        if (prev != nullptr && cmp(*prev, *pt.tce) > 0) return false;
        prev = &*pt.tce;
    }
    return true;
}

}  // namespace tailcert
