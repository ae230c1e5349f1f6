#include "tailcert/orders.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tailcert;
using testutil::rat;

TEST_CASE("likelihood ratio order on the module examples") {
    OrderCheckReport rep = check_likelihood_ratio_order(BinomialParams(2, rat(1, 4)),
                                                        BinomialParams(2, rat(1, 2)));
    CHECK(rep.holds);
    CHECK_FALSE(rep.witness_k.has_value());

    rep = check_likelihood_ratio_order(BinomialParams(1, rat(1, 3)),
                                       BinomialParams(1, rat(2, 3)));
    CHECK(rep.holds);

    // Identical laws: equality throughout still satisfies the definition.
    rep = check_likelihood_ratio_order(BinomialParams(2, rat(1, 2)),
                                       BinomialParams(2, rat(1, 2)));
    CHECK(rep.holds);

    CHECK_THROWS_AS(check_likelihood_ratio_order(BinomialParams(2, rat(1, 4)),
                                                 BinomialParams(3, rat(1, 2))),
                    std::domain_error);
}

TEST_CASE("reversed pairs report a witness index") {
    OrderCheckReport rep = check_likelihood_ratio_order(BinomialParams(3, rat(2, 3)),
                                                        BinomialParams(3, rat(1, 3)));
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness_k.has_value());
    CHECK(*rep.witness_k == 0);  // the ratio increases from the very first step
}

TEST_CASE("hazard rate order on the module examples") {
    BinomialParams left(2, rat(1, 4)), right(2, rat(1, 2));
    OrderCheckReport rep = check_hazard_rate_order(left, right);
    CHECK(rep.holds);
    // At k = 1 the two hazard ratios are 7 and 3: tails (7/16, 1/16) vs (3/4, 1/4).
    CHECK(tail(left, 1) == rat(7, 16));
    CHECK(tail(left, 2) == rat(1, 16));
    CHECK(tail(right, 1) == rat(3, 4));
    CHECK(tail(right, 2) == rat(1, 4));

    rep = check_hazard_rate_order(BinomialParams(1, rat(1, 3)), BinomialParams(1, rat(2, 3)));
    CHECK(rep.holds);
}

TEST_CASE("lr implies hr on every grid pair, and both always hold for p < q") {
    for (long n = 1; n <= 20; ++n) {
        std::vector<Rational> ps = reduced_fractions(6);
        for (size_t i = 0; i < ps.size(); ++i) {
            for (size_t j = i + 1; j < ps.size(); ++j) {
                BinomialParams left(n, ps[i]), right(n, ps[j]);
                OrderCheckReport lr = check_likelihood_ratio_order(left, right);
                OrderCheckReport hr = check_hazard_rate_order(left, right);
                CHECK(lr.holds);
                CHECK(hr.holds);
                bool implication_broken = lr.holds && !hr.holds;
                CHECK_FALSE(implication_broken);
            }
        }
    }
}

TEST_CASE("extended hazard check including k = 0 is reported separately") {
    BinomialParams left(4, rat(1, 4)), right(4, rat(3, 4));
    OrderCheckReport standard = check_hazard_rate_order(left, right);
    OrderCheckReport extended = check_hazard_rate_order_from_zero(left, right);
    CHECK(standard.holds);
    CHECK(extended.holds);  // k=0 ratios: 1/tail(1) dominated the same way
    CHECK(extended.kind == OrderKind::HazardRate);
}

TEST_CASE("conditional tail comparison from the monotonicity proof") {
    // P[X_p >= k+t | X_p >= k] <= P[X_q >= k+t | X_q >= k] for p < q,
    // cross-multiplied to stay exact.
    for (long n : {2L, 3L, 5L, 8L}) {
        std::vector<Rational> ps = reduced_fractions(4);
        for (size_t i = 0; i < ps.size(); ++i) {
            for (size_t j = i + 1; j < ps.size(); ++j) {
                BinomialParams left(n, ps[i]), right(n, ps[j]);
                for (long k = 0; k <= n; ++k) {
                    for (long t = 1; t <= n - k; ++t) {
                        Rational lhs = Rational(tail(left, k + t) * tail(right, k));
                        Rational rhs = Rational(tail(right, k + t) * tail(left, k));
                        CHECK(cmp(lhs, rhs) <= 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("tce profile in p: examples and monotonicity") {
    std::vector<Rational> grid = {rat(1, 4), rat(1, 2), rat(3, 4)};
    std::vector<TcePoint> profile = tce_profile_in_p(2, 1, grid);
    REQUIRE(profile.size() == 3);
    REQUIRE(profile[1].tce.has_value());
    CHECK(*profile[1].tce == rat(4, 3));
    CHECK(tce_profile_nondecreasing(profile));

    // k = n conditions on the top point: all values equal n.
    profile = tce_profile_in_p(1, 1, grid);
    for (const TcePoint& pt : profile) {
        REQUIRE(pt.tce.has_value());
        CHECK(*pt.tce == 1);
    }
    CHECK(tce_profile_nondecreasing(profile));

    // k = 0 yields the unconditional means np.
    profile = tce_profile_in_p(2, 0, {rat(1, 4), rat(1, 2)});
    CHECK(*profile[0].tce == rat(1, 2));
    CHECK(*profile[1].tce == 1);

    CHECK_THROWS_AS(tce_profile_in_p(2, 3, grid), std::domain_error);
    CHECK_THROWS_AS(tce_profile_in_p(2, 1, {rat(1, 2), rat(1, 4)}), std::domain_error);
}

TEST_CASE("tce monotone in p across a denominator-8 grid") {
    std::vector<Rational> ps = reduced_fractions(8);
    for (long n = 1; n <= 12; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(tce_profile_nondecreasing(tce_profile_in_p(n, k, ps)));
        }
    }
}
