#include "tailcert/bounds.hpp"

#include <stdexcept>

namespace tailcert {

std::string_view bound_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::Veraar: return "veraar";
        case BoundKind::GreenbergMohri: return "gm";
        case BoundKind::RigolletTong: return "rt";
        case BoundKind::Theorem1: return "theorem1";
        case BoundKind::Theorem1Sharp: return "theorem1-sharp";
    }
    return "?";
}

std::string_view bound_domain_requirement(BoundKind kind) {
    switch (kind) {
        case BoundKind::Veraar: return "0 < p < 1";
        case BoundKind::GreenbergMohri: return "p >= 1/n";
        case BoundKind::RigolletTong: return "p <= 1/2";
        case BoundKind::Theorem1:
        case BoundKind::Theorem1Sharp: return "n >= 2 and 1/n <= p <= 1-1/n";
    }
    return "?";
}

bool bound_in_domain(BoundKind kind, const BinomialParams& params) {
    switch (kind) {
        case BoundKind::Veraar: return true;
        case BoundKind::GreenbergMohri:
            return cmp(params.p(), make_rational(Int(1), Int(params.n()))) >= 0;
        case BoundKind::RigolletTong:
            return cmp(params.p(), make_rational(Int(1), Int(2))) <= 0;
        case BoundKind::Theorem1:
        case BoundKind::Theorem1Sharp: return params.in_core_domain();
    }
    return false;
}

namespace {

void require_domain(BoundKind kind, const BinomialParams& params) {
    if (!bound_in_domain(kind, params)) {
        throw std::domain_error(std::string(bound_name(kind)) + " bound requires " +
                                std::string(bound_domain_requirement(kind)));
    }
}

BoundValue exact_bound(Rational value, int prec) {
    BoundValue b;
    b.enclosure = interval_from_rational(value, prec);
    b.exact = std::move(value);
    return b;
}

}  // namespace

BoundValue veraar_bound(const BinomialParams& params, int prec) {
    Rational m = mad(params);
    return exact_bound(Rational(m * m / (4 * params.variance())), prec);
}

BoundValue greenberg_mohri_bound(const BinomialParams& params, int prec) {
    require_domain(BoundKind::GreenbergMohri, params);
    return exact_bound(make_rational(Int(1), Int(4)), prec);
}

BoundValue rigollet_tong_bound(const BinomialParams& params, int prec) {
    require_domain(BoundKind::RigolletTong, params);
    Rational quarter = make_rational(Int(1), Int(4));
    return exact_bound(cmp(params.p(), quarter) < 0 ? params.p() : quarter, prec);
}

BoundValue theorem1_bound(const BinomialParams& params, bool sharp, int prec) {
    require_domain(BoundKind::Theorem1, params);
    // v = np(1-p) exactly first; the only rounding is in the two square roots
    // and the final division. sqrt(v/8) folds the 1/(2 sqrt 2) prefactor into
    // the numerator so the v = 8 boundary stays exact.
    Rational v = params.variance();
    Rational radicand = v + 1;
    if (sharp) radicand -= 2 * params.p();
    Interval num = interval_sqrt(interval_from_rational(Rational(v / 8), prec));
    Interval den = iv_add_rational(interval_sqrt(interval_from_rational(radicand, prec)),
                                   Rational(1));
    BoundValue b;
    b.enclosure = iv_div(num, den);
    if (is_degenerate(b.enclosure)) b.exact = lo_rational(b.enclosure);
    return b;
}

BoundValue evaluate_bound(BoundKind kind, const BinomialParams& params, int prec) {
    switch (kind) {
        case BoundKind::Veraar: return veraar_bound(params, prec);
        case BoundKind::GreenbergMohri: return greenberg_mohri_bound(params, prec);
        case BoundKind::RigolletTong: return rigollet_tong_bound(params, prec);
        case BoundKind::Theorem1: return theorem1_bound(params, false, prec);
        case BoundKind::Theorem1Sharp: return theorem1_bound(params, true, prec);
    }
    throw std::logic_error("unknown bound kind");
}

std::strong_ordering quarter_threshold_check(const BinomialParams& params) {
    require_domain(BoundKind::Theorem1, params);
    int c = cmp(params.variance(), Rational(8));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Interval tce_upper_bound_integer_mean(const BinomialParams& params, int prec) {
    if (!params.np_is_integer()) {
        throw std::domain_error("integer-mean TCE bound requires np to be an integer");
    }
    return iv_add_rational(interval_sqrt(interval_from_rational(params.variance(), prec)),
                           params.np());
}

}  // namespace tailcert
