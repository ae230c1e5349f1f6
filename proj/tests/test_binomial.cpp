#include "tailcert/binomial.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace tailcert;
using testutil::rat;

namespace {

// Independent oracle: n-fold convolution of the single-trial law (1-p, p).
std::vector<Rational> convolution_pmf(long n, const Rational& p) {
    std::vector<Rational> acc{Rational(1)};
    for (long trial = 0; trial < n; ++trial) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k] += acc[k] * (1 - p);
            next[k + 1] += acc[k] * p;
        }
        acc = std::move(next);
    }
    return acc;
}

// Second oracle for the tail: plain summation over the convolution table.
Rational convolution_tail(long n, const Rational& p, long k) {
    std::vector<Rational> table = convolution_pmf(n, p);
    Rational s(0);
    for (long j = std::max(k, 0L); j <= n; ++j) s += table[static_cast<size_t>(j)];
    return s;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(BinomialParams(0, rat(1, 2)), std::domain_error);
    CHECK_THROWS_AS(BinomialParams(5, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(BinomialParams(5, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(BinomialParams(5, rat(7, 5)), std::domain_error);
    CHECK_THROWS_AS(BinomialParams(5, rat(-1, 5)), std::domain_error);

    BinomialParams params(6, rat(1, 2));
    CHECK(params.np() == 3);
    CHECK(params.variance() == rat(3, 2));
    CHECK(params.np_is_integer());
    CHECK(params.in_core_domain());
    CHECK(params.exceedance_index() == 3);

    BinomialParams edge(4, rat(1, 4));
    CHECK(edge.in_core_domain());  // p = 1/n boundary
    CHECK_FALSE(BinomialParams(4, rat(1, 5)).in_core_domain());
    CHECK_FALSE(BinomialParams(1, rat(1, 2)).in_core_domain());

    BinomialParams frac(3, rat(1, 2));
    CHECK_FALSE(frac.np_is_integer());
    CHECK(frac.exceedance_index() == 2);  // ceil(3/2)
}

TEST_CASE("pmf examples and domain errors") {
    CHECK(pmf(BinomialParams(1, rat(1, 2)), 0) == rat(1, 2));
    CHECK(pmf(BinomialParams(2, rat(1, 2)), 1) == rat(1, 2));
    CHECK_THROWS_AS(pmf(BinomialParams(2, rat(1, 2)), 3), std::domain_error);
    CHECK_THROWS_AS(pmf(BinomialParams(2, rat(1, 2)), -1), std::domain_error);

    // (n=5, p=1/3) against the 5-fold convolution oracle.
    BinomialParams params(5, rat(1, 3));
    std::vector<Rational> oracle = convolution_pmf(5, rat(1, 3));
    CHECK(pmf(params, 2) == oracle[2]);
    std::vector<Rational> table = pmf_table(params);
    REQUIRE(table.size() == 6);
    for (size_t k = 0; k < table.size(); ++k) CHECK(table[k] == oracle[k]);
}

TEST_CASE("pmf recurrence equals the convolution oracle on a grid") {
    for (long n : {1L, 2L, 3L, 7L, 12L, 30L}) {
        for (const Rational& p : reduced_fractions(4)) {
            std::vector<Rational> mine = pmf_table(BinomialParams(n, p));
            std::vector<Rational> oracle = convolution_pmf(n, p);
            REQUIRE(mine.size() == oracle.size());
            for (size_t k = 0; k < mine.size(); ++k) CHECK(mine[k] == oracle[k]);
        }
    }
}

TEST_CASE("normalization is exact on the whole grid") {
    for (long n : {1L, 2L, 5L, 9L, 16L}) {
        for (const Rational& p : reduced_fractions(6)) {
            Rational total(0);
            for (const Rational& q : pmf_table(BinomialParams(n, p))) total += q;
            CHECK(total == 1);
        }
    }
}

TEST_CASE("tail examples") {
    CHECK(tail(BinomialParams(2, rat(1, 2)), 1) == rat(3, 4));
    CHECK(tail(BinomialParams(2, rat(1, 4)), 1) == rat(7, 16));  // 1 - (3/4)^2
    CHECK(tail(BinomialParams(2, rat(1, 4)), 1) == convolution_tail(2, rat(1, 4), 1));
    CHECK(tail(BinomialParams(2, rat(1, 2)), 3) == 0);
    CHECK(tail(BinomialParams(2, rat(1, 2)), 0) == 1);
    CHECK(tail(BinomialParams(2, rat(1, 2)), -5) == 1);
}

TEST_CASE("mean exceedance probability splits on integer np") {
    CHECK(mean_exceedance_prob(BinomialParams(1, rat(1, 2))) == rat(1, 2));
    CHECK(mean_exceedance_prob(BinomialParams(2, rat(1, 2))) == rat(3, 4));
    CHECK(mean_exceedance_prob(BinomialParams(3, rat(1, 2))) == rat(1, 2));  // tail at 2
}

TEST_CASE("mad examples and positive-part identity") {
    CHECK(mad(BinomialParams(2, rat(1, 2))) == rat(1, 2));
    CHECK(mad(BinomialParams(1, rat(1, 3))) == rat(4, 9));

    BinomialParams p4(4, rat(1, 2));
    CHECK(mad(p4) == Rational(2 * positive_part_mean(p4, Rational(2))));

    CHECK(positive_part_mean(BinomialParams(2, rat(1, 2)), Rational(1)) == rat(1, 4));
    CHECK(positive_part_mean(BinomialParams(2, rat(1, 2)), Rational(2)) == 0);

    BinomialParams p3(3, rat(1, 3));
    CHECK(positive_part_mean(p3, p3.np()) == Rational(mad(p3) / 2));
}

TEST_CASE("positive-part symmetry holds across the grid") {
    for (long n : {1L, 2L, 5L, 9L}) {
        for (const Rational& p : reduced_fractions(5)) {
            BinomialParams params(n, p);
            CHECK(positive_part_mean(params, params.np()) == Rational(mad(params) / 2));
        }
    }
}

TEST_CASE("mad matches the closed-form oracle 2 ceil(np) (1-p) pmf(ceil(np))") {
    for (long n : {1L, 2L, 3L, 6L, 11L, 20L}) {
        for (const Rational& p : reduced_fractions(6)) {
            BinomialParams params(n, p);
            long m = ceil_int(params.np()).get_si();
            Rational oracle = Rational(2 * m * (1 - p) * pmf(params, m));
            CHECK(mad(params) == oracle);
        }
    }
}

TEST_CASE("tce examples and the conditioning-on-null error") {
    BinomialParams params(2, rat(1, 2));
    CHECK(tce(params, 1) == rat(4, 3));
    CHECK(tce(params, 2) == 2);
    CHECK(tce(params, 0) == 1);  // unconditional mean np
    CHECK(tce(params, -3) == 1);
    CHECK_THROWS_AS(tce(params, 3), std::domain_error);
}

TEST_CASE("tce factorization cross-check: sum_{j>=k} j pmf_n(j) = np tail_{n-1}(k-1)") {
    for (long n : {2L, 3L, 5L, 9L, 14L}) {
        for (const Rational& p : reduced_fractions(5)) {
            BinomialParams params(n, p);
            BinomialParams reduced(n - 1, p);
            std::vector<Rational> table = pmf_table(params);
            for (long k = 0; k <= n; ++k) {
                Rational weighted(0);
                for (long j = k; j <= n; ++j) weighted += j * table[static_cast<size_t>(j)];
                CHECK(weighted == Rational(params.np() * tail(reduced, k - 1)));
                // ... so the two tce routes agree wherever the tail is positive.
                CHECK(tce(params, k) ==
                      Rational(params.np() * tail(reduced, k - 1) / tail(params, k)));
            }
        }
    }
}

TEST_CASE("identity: half the MAD equals exceedance probability times (tce - np)") {
    for (long n : {1L, 2L, 4L, 7L, 13L}) {
        for (const Rational& p : reduced_fractions(6)) {
            BinomialParams params(n, p);
            long idx = params.exceedance_index();
            Rational lhs = Rational(mad(params) / 2);
            Rational rhs =
                Rational(mean_exceedance_prob(params) * (tce(params, idx) - params.np()));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("integer-mean exceedance is strictly above one half") {
    for (long n : {2L, 3L, 4L, 6L, 8L, 12L, 24L}) {
        for (const Rational& p : reduced_fractions(8)) {
            BinomialParams params(n, p);
            if (!params.np_is_integer()) continue;
            CHECK(cmp(mean_exceedance_prob(params), rat(1, 2)) > 0);
        }
    }
}

TEST_CASE("MAD sits between sqrt(v/2) and sqrt(v), in squared form") {
    for (long n : {2L, 3L, 5L, 10L, 17L}) {
        for (const Rational& p : reduced_fractions(6)) {
            BinomialParams params(n, p);
            Rational m = mad(params);
            Rational m2 = Rational(m * m);
            CHECK(cmp(m2, params.variance()) <= 0);  // Cauchy-Schwarz direction
            if (params.in_core_domain()) {
                CHECK(cmp(m2, Rational(params.variance() / 2)) >= 0);
            }
        }
    }
}

TEST_CASE("median lower check (tail at floor(np) at least one half)") {
    CHECK(median_lower_check(BinomialParams(2, rat(1, 2))));
    CHECK(median_lower_check(BinomialParams(3, rat(1, 2))));  // floor = 1, tail 7/8
    CHECK(tail(BinomialParams(3, rat(1, 2)), 1) == rat(7, 8));
    CHECK(median_lower_check(BinomialParams(10, rat(1, 10))));
    // tail(1) = 1 - (9/10)^10 computed exactly
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), 9, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 10);
    CHECK(tail(BinomialParams(10, rat(1, 10)), 1) == Rational(1 - make_rational(num, den)));

    for (long n : {1L, 2L, 5L, 11L, 19L}) {
        for (const Rational& p : reduced_fractions(7)) {
            CHECK(median_lower_check(BinomialParams(n, p)));
        }
    }
}
