#include "tailcert/binomial.hpp"

#include <stdexcept>

namespace tailcert {

BinomialParams::BinomialParams(long n, Rational p) : n_(n), p_(std::move(p)) {
    if (n_ < 1) throw std::domain_error("binomial n must be >= 1");
    if (sgn(p_) <= 0 || cmp(p_, Rational(1)) >= 0) {
        throw std::domain_error("binomial p must lie strictly between 0 and 1");
    }
}

Rational BinomialParams::np() const {
    return Rational(p_ * n_);
}

Rational BinomialParams::variance() const {
    return Rational(np() * (1 - p_));
}

bool BinomialParams::np_is_integer() const {
    return is_integer(np());
}

bool BinomialParams::in_core_domain() const {
    if (n_ < 2) return false;
    Rational lo = make_rational(Int(1), Int(n_));
    return cmp(p_, lo) >= 0 && cmp(p_, Rational(1 - lo)) <= 0;
}

long BinomialParams::exceedance_index() const {
    Rational m = np();
    if (is_integer(m)) {
        return m.get_num().get_si();  // P[X >= np] with np on the lattice
    }
    return ceil_int(m).get_si();  // P[X >= np] = P[X >= ceil(np)]
}

namespace {

// Numerators of pmf(k) over the common denominator den(p)^n:
// N_k = C(n,k) a^k (b-a)^(n-k) for p = a/b. Integer recurrence, all divisions
// exact.
struct ScaledPmf {
    std::vector<Int> num;
    Int denom;  // b^n
};

ScaledPmf scaled_pmf(const BinomialParams& params) {
    long n = params.n();
    const Int& a = params.p().get_num();
    const Int& b = params.p().get_den();
    Int c = b - a;

    ScaledPmf t;
    t.num.resize(static_cast<size_t>(n) + 1);
    Int q;
    mpz_pow_ui(q.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
    t.num[0] = q;
    for (long k = 0; k < n; ++k) {
        Int next = t.num[static_cast<size_t>(k)] * (n - k);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
        next *= a;
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), c.get_mpz_t());
        t.num[static_cast<size_t>(k + 1)] = std::move(next);
    }
    mpz_pow_ui(t.denom.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
    return t;
}

}  // namespace

std::vector<Rational> pmf_table(const BinomialParams& params) {
    ScaledPmf t = scaled_pmf(params);
    std::vector<Rational> out;
    out.reserve(t.num.size());
    for (Int& v : t.num) {
        out.push_back(make_rational(std::move(v), t.denom));
    }
    return out;
}

Rational pmf(const BinomialParams& params, long k) {
    if (k < 0 || k > params.n()) {
        throw std::domain_error("pmf index must lie in [0, n]");
    }
    ScaledPmf t = scaled_pmf(params);
    return make_rational(std::move(t.num[static_cast<size_t>(k)]), t.denom);
}

Rational tail(const BinomialParams& params, long k) {
    if (k <= 0) return Rational(1);
    if (k > params.n()) return Rational(0);
    ScaledPmf t = scaled_pmf(params);
    Int s(0);
    for (long j = k; j <= params.n(); ++j) s += t.num[static_cast<size_t>(j)];
    return make_rational(std::move(s), t.denom);
}

Rational mean_exceedance_prob(const BinomialParams& params) {
    return tail(params, params.exceedance_index());
}

Rational mad(const BinomialParams& params) {
    // sum |k - np| pmf(k) = sum |k b - n a| N_k / b^(n+1)
    ScaledPmf t = scaled_pmf(params);
    const Int& a = params.p().get_num();
    const Int& b = params.p().get_den();
    Int na = a * params.n();
    Int s(0);
    for (long k = 0; k <= params.n(); ++k) {
        s += abs(Int(k * b - na)) * t.num[static_cast<size_t>(k)];
    }
    return make_rational(std::move(s), Int(t.denom * b));
}

Rational positive_part_mean(const BinomialParams& params, const Rational& threshold) {
    ScaledPmf t = scaled_pmf(params);
    const Int& c = threshold.get_num();
    const Int& d = threshold.get_den();
    Int s(0);
    for (long k = 0; k <= params.n(); ++k) {
        Int excess = k * d - c;
        if (sgn(excess) > 0) s += excess * t.num[static_cast<size_t>(k)];
    }
    return make_rational(std::move(s), Int(t.denom * d));
}

Rational tce(const BinomialParams& params, long k) {
    if (k > params.n()) {
        throw std::domain_error("tail conditional expectation conditions on a null event");
    }
    if (k < 0) k = 0;
    ScaledPmf t = scaled_pmf(params);
    Int num(0), den(0);
    for (long j = k; j <= params.n(); ++j) {
        num += j * t.num[static_cast<size_t>(j)];
        den += t.num[static_cast<size_t>(j)];
    }
    return make_rational(std::move(num), std::move(den));  // b^n cancels
}

bool median_lower_check(const BinomialParams& params) {
    long floor_np = floor_int(params.np()).get_si();
    return cmp(tail(params, floor_np), make_rational(Int(1), Int(2))) >= 0;
}

}  // namespace tailcert
