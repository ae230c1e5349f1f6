#include "tailcert/poisson.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tailcert;
using testutil::encloses_reference;
using testutil::pow2;
using testutil::rat;

namespace {

// 50-digit references computed offline by high-precision series summation.
const std::string kExpNeg1 = "0.3678794411714423215955237701614608674458111310317678";
const std::string kExpNeg2 = "0.1353352832366126918939994949724844034076315459095759";
const std::string kTwoOverE = "0.7357588823428846431910475403229217348916222620635357";
const std::string kExpNegHalf = "0.606530659712633423603799534991180453441918135487187";
const std::string kEightExpNeg2 = "1.082682265892901535151995959779875227261052367276607";
const std::string kOneMinusExpNeg1 = "0.6321205588285576784044762298385391325541888689682322";
const std::string kOneMinusTwoExpNeg1 = "0.2642411176571153568089524596770782651083777379364643";
const std::string kTceLambda1 = "1.581976706869326424385002005109011558546869301075396";
const std::string kBoundLambda1 = "0.3047613077028931495252573463097433412806393411146862";
const std::string kBoundLambda32 = "0.2117495704682105736409161097982210265805337504274233";
const std::string kBoundLambda4 = "0.4547239968125375748450141012255817222517061594931108";
const std::string kTail4At4 = "0.5665298796332910663820068298666239343180810679010776";
const std::string kStirling2 = "2.081040380091555585432609773265330152344523206356444";
const std::string kStirling5 = "127.9844175204635444370869768436457160988413679419";

// Direct-sum tail-conditional-expectation oracle with a geometric remainder:
// encloses sum_{j>=k} j pmf(j) / tail(k) independently of the factorization
// route used by the implementation.
Interval tce_direct_oracle(const Rational& lambda, long k, int bits) {
    long cutoff = ceil_int(Rational(4 * lambda)).get_si() + 40;
    PoissonParams params(lambda, epsilon_from_bits(bits));
    Rational weighted(0);  // sum_{k<=j<=K} j lambda^j/j!
    Rational term(1);      // lambda^j/j!
    for (long j = 0; j <= cutoff; ++j) {
        if (j >= k) weighted += j * term;
        term = Rational(term * lambda / (j + 1));
    }
    int w = bits + 64;
    Interval e = exp_interval(Rational(-lambda), w);
    Interval numerator = iv_scale(e, weighted);
    // Remainder for j > K >= 2 lambda: sum j pmf(j) <= (2K+4) pmf(K+1).
    Rational rem = Rational(hi_rational(iv_scale(e, term)) * (2 * cutoff + 4));
    numerator = Interval{numerator.lo,
                         dy_add(numerator.hi, dyadic_from_rational(rem, w, Round::Up)), w};
    return iv_div(numerator, poisson_tail(params, k));
}

}  // namespace

TEST_CASE("poisson parameter validation") {
    CHECK_THROWS_AS(PoissonParams(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(PoissonParams(rat(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(PoissonParams(Rational(1), Rational(0)), std::domain_error);

    PoissonParams p(rat(7, 2));
    CHECK_FALSE(p.lambda_is_integer());
    CHECK(p.lambda_floor() == 3);
    CHECK(p.lambda_ceil() == 4);
    CHECK(PoissonParams(Rational(4)).lambda_is_integer());
    CHECK(PoissonParams::default_epsilon() == pow2(-64));
}

TEST_CASE("poisson pmf enclosures") {
    PoissonParams params(Rational(1));
    Interval p0 = poisson_pmf(params, 0);
    CHECK(encloses_reference(p0, kExpNeg1));
    CHECK(cmp(width(p0), params.epsilon()) <= 0);

    // lambda^1/1! = 1, so the k = 1 enclosure coincides with k = 0.
    Interval p1 = poisson_pmf(params, 1);
    CHECK(cmp(p0.lo, p1.lo) == 0);
    CHECK(cmp(p0.hi, p1.hi) == 0);

    PoissonParams two(Rational(2));
    Interval q0 = poisson_pmf(two, 0);
    CHECK(encloses_reference(q0, kExpNeg2));
    // Functional-equation cross-check: sqrt(e^-2) must intersect e^-1.
    Interval root = interval_sqrt(q0);
    CHECK(encloses_reference(root, kExpNeg1));

    CHECK_THROWS_AS(poisson_pmf(params, -1), std::domain_error);
}

TEST_CASE("poisson tail enclosures") {
    PoissonParams params(Rational(1));
    Interval t0 = poisson_tail(params, 0);
    CHECK(is_degenerate(t0));
    CHECK(lo_rational(t0) == 1);

    CHECK(encloses_reference(poisson_tail(params, 1), kOneMinusExpNeg1));
    CHECK(encloses_reference(poisson_tail(params, 2), kOneMinusTwoExpNeg1));
    CHECK(encloses_reference(poisson_tail(PoissonParams(Rational(4)), 4), kTail4At4));
}

TEST_CASE("normalization: partial sums plus the remainder bound cover 1") {
    for (const Rational& lambda : {rat(1, 2), Rational(1), rat(7, 3), Rational(6)}) {
        long cutoff = ceil_int(Rational(4 * lambda)).get_si() + 40;
        // Exact partial sum sum_{k<=K} lambda^k/k!, then one e^-lambda factor.
        Rational partial_weight(0);
        Rational term(1);
        for (long k = 0; k <= cutoff; ++k) {
            partial_weight += term;
            term = Rational(term * lambda / (k + 1));
        }
        Interval e = exp_interval(Rational(-lambda), 128);
        Interval partial = iv_scale(e, partial_weight);
        // term is now lambda^(K+1)/(K+1)!; past the cutoff the term ratio is
        // <= 1/2, so the remaining mass is at most twice that pmf.
        Rational remainder_hi = Rational(2 * hi_rational(iv_scale(e, term)));
        CHECK(cmp(lo_rational(partial), Rational(1)) <= 0);
        CHECK(cmp(Rational(hi_rational(partial) + remainder_hi), Rational(1)) >= 0);
        // The cover is tight: everything unexplained fits in ~2^-120.
        Rational slack =
            Rational(hi_rational(partial) + remainder_hi - lo_rational(partial));
        CHECK(cmp(slack, pow2(-100)) <= 0);
    }
}

TEST_CASE("poisson mad closed form") {
    PoissonParams one(Rational(1));
    Interval m = poisson_mad(one);
    CHECK(encloses_reference(m, kTwoOverE));
    CHECK(cmp(width(m), pow2(-64)) <= 0);

    CHECK(encloses_reference(poisson_mad(PoissonParams(rat(1, 2))), kExpNegHalf));
    CHECK(encloses_reference(poisson_mad(PoissonParams(Rational(2))), kEightExpNeg2));
}

TEST_CASE("poisson tce: factorization route against the direct-sum oracle") {
    PoissonParams one(Rational(1));
    Interval t = poisson_tce(one, 1);
    CHECK(encloses_reference(t, kTceLambda1));

    Interval exact_mean = poisson_tce(PoissonParams(Rational(2)), 0);
    CHECK(is_degenerate(exact_mean));
    CHECK(lo_rational(exact_mean) == 2);

    for (const Rational& lambda : {rat(1, 2), Rational(1), rat(5, 2), Rational(4)}) {
        for (long k : {1L, 2L, 5L}) {
            Interval route = poisson_tce(PoissonParams(lambda), k);
            Interval oracle = tce_direct_oracle(lambda, k, 64);
            CHECK(cmp(route.lo, oracle.hi) <= 0);
            CHECK(cmp(oracle.lo, route.hi) <= 0);
        }
    }
}

TEST_CASE("integer-mean tce check and its median premise") {
    PoissonIntegerTceReport rep = poisson_integer_mean_tce_check(1);
    CHECK(rep.tce_bound == Verdict::Proven);      // 1.582 <= 2
    CHECK(rep.median_premise == Verdict::Proven); // 0.632 >= 1/2

    rep = poisson_integer_mean_tce_check(4);
    CHECK(rep.tce_bound == Verdict::Proven);
    CHECK(rep.median_premise == Verdict::Proven);

    for (long m = 1; m <= 12; ++m) {
        rep = poisson_integer_mean_tce_check(m);
        CHECK(rep.tce_bound == Verdict::Proven);
        CHECK(rep.median_premise == Verdict::Proven);
    }
    CHECK_THROWS_AS(poisson_integer_mean_tce_check(0), std::domain_error);
}

TEST_CASE("poisson lower bound enclosures and soundness") {
    PoissonParams one(Rational(1));
    Interval b = poisson_theorem_bound(one);
    CHECK(encloses_reference(b, kBoundLambda1));
    Interval t = poisson_tail(one, 1);
    CHECK(cmp(b.hi, t.lo) < 0);

    PoissonParams three_halves(rat(3, 2));
    CHECK(encloses_reference(poisson_theorem_bound(three_halves), kBoundLambda32));
    CHECK(cmp(poisson_theorem_bound(three_halves).hi, poisson_tail(three_halves, 2).lo) < 0);

    PoissonParams four(Rational(4));
    CHECK(encloses_reference(poisson_theorem_bound(four), kBoundLambda4));
    CHECK(cmp(poisson_theorem_bound(four).hi, poisson_tail(four, 4).lo) < 0);
}

TEST_CASE("poisson bound soundness across the lambda grid") {
    PrecisionPolicy pol;
    for (const Rational& lambda : reduced_fractions_up_to(4, Rational(8))) {
        long k = ceil_int(lambda).get_si();
        EnclosureFn bound_fn = [&](int bits) {
            return poisson_theorem_bound(PoissonParams(lambda, epsilon_from_bits(bits)));
        };
        EnclosureFn tail_fn = [&](int bits) {
            return poisson_tail(PoissonParams(lambda, epsilon_from_bits(bits)), k);
        };
        CHECK(decide_true_vs_true(bound_fn, Rel::Le, tail_fn, pol).verdict == Verdict::Proven);
    }
}

TEST_CASE("the stated poisson bound constant is certifiably false for large lambda") {
    // With coefficient 2 the bound tends to 2/e > 1/2 at integer lambda while
    // the tail tends to 1/2: the checker must disprove it, not smooth it over.
    // Halving the coefficient (what the MAD/TCE derivation supports) restores
    // soundness on the whole grid.
    PrecisionPolicy pol;
    auto decide_with_scale = [&](const Rational& lambda, const Rational& scale) {
        long k = ceil_int(lambda).get_si();
        EnclosureFn bound_fn = [&](int bits) {
            return iv_scale(
                poisson_theorem_bound(PoissonParams(lambda, epsilon_from_bits(bits))), scale);
        };
        EnclosureFn tail_fn = [&](int bits) {
            return poisson_tail(PoissonParams(lambda, epsilon_from_bits(bits)), k);
        };
        return decide_true_vs_true(bound_fn, Rel::Le, tail_fn, pol).verdict;
    };

    for (const Rational& lambda : {Rational(11), Rational(12), rat(37, 6), rat(67, 6)}) {
        CHECK(decide_with_scale(lambda, Rational(1)) == Verdict::Violated);
    }
    for (const Rational& lambda : {Rational(7), Rational(8), rat(25, 4), Rational(1)}) {
        CHECK(decide_with_scale(lambda, Rational(1)) == Verdict::Proven);
    }
    for (const Rational& lambda : reduced_fractions_up_to(6, Rational(12))) {
        CHECK(decide_with_scale(lambda, rat(1, 2)) == Verdict::Proven);
    }
}

TEST_CASE("tce is monotone in lambda at a fixed threshold") {
    PrecisionPolicy pol;
    std::vector<Rational> grid = reduced_fractions_up_to(3, Rational(5));
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        for (long k : {1L, 3L}) {
            EnclosureFn lhs = [&](int bits) {
                return poisson_tce(PoissonParams(grid[i], epsilon_from_bits(bits)), k);
            };
            EnclosureFn rhs = [&](int bits) {
                return poisson_tce(PoissonParams(grid[i + 1], epsilon_from_bits(bits)), k);
            };
            CHECK(decide_true_vs_true(lhs, Rel::Le, rhs, pol).verdict == Verdict::Proven);
        }
    }
}

TEST_CASE("stirling estimate: equality at m = 1, strict slack afterwards") {
    CHECK(stirling_check(1) == Verdict::Proven);
    CHECK(stirling_check(2) == Verdict::Proven);
    CHECK(stirling_check(5) == Verdict::Proven);
    for (long m = 1; m <= 60; ++m) CHECK(stirling_check(m) == Verdict::Proven);
    CHECK_THROWS_AS(stirling_check(0), std::domain_error);

    // Reference values of the right-hand side at m = 2 and m = 5.
    PrecisionPolicy pol;
    EnclosureFn rhs2 = [](int bits) {
        Interval e = exp_interval(Rational(-1), bits);
        Int mm(4);
        return iv_mul(iv_mul(e, interval_from_int(mm, bits)),
                      interval_sqrt(interval_from_int(Int(2), bits)));
    };
    CHECK(encloses_reference(rhs2(128), kStirling2));
    EnclosureFn rhs5 = [](int bits) {
        Interval e = exp_interval(Rational(-4), bits);
        Int mm(3125);
        return iv_mul(iv_mul(e, interval_from_int(mm, bits)),
                      interval_sqrt(interval_from_int(Int(5), bits)));
    };
    CHECK(encloses_reference(rhs5(128), kStirling5));
}

TEST_CASE("shrinking epsilon produces nested enclosures") {
    for (const Rational& lambda : {rat(3, 2), Rational(3)}) {
        Interval coarse = poisson_mad(PoissonParams(lambda, epsilon_from_bits(48)));
        Interval fine = poisson_mad(PoissonParams(lambda, epsilon_from_bits(160)));
        CHECK(cmp(coarse.lo, fine.lo) <= 0);
        CHECK(cmp(fine.hi, coarse.hi) <= 0);
        CHECK(cmp(width(fine), epsilon_from_bits(160)) <= 0);
    }
}
