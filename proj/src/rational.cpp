#include "tailcert/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tailcert {

Rational make_rational(Int num, Int den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational denominator must be nonzero");
    }
    Rational q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("cannot parse '" + s +
                                    "' as a rational (expected a/b or a decimal string)");
    };

    Rational q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        Int d(std::string(den), 10);
        if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        q = make_rational(Int(std::string(num), 10), std::move(d));
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty()) fail();
        if (!ip.empty() && !all_digits(ip)) fail();
        if (!fp.empty() && !all_digits(fp)) fail();
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        Int num = (ip.empty() ? Int(0) : Int(std::string(ip), 10)) * scale +
                  (fp.empty() ? Int(0) : Int(std::string(fp), 10));
        q = make_rational(std::move(num), std::move(scale));
    } else {
        if (!all_digits(body)) fail();
        q = Rational(Int(std::string(body), 10));
    }
    if (negative) q = -q;
    return q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

CeilDecomposition ceil_decompose(const Rational& x) {
    if (sgn(x) <= 0) {
        throw std::domain_error("ceil_decompose requires a positive argument");
    }
    CeilDecomposition d;
    d.value = x;
    d.ceil = ceil_int(x);
    d.frac_complement = Rational(d.ceil) - x;
    return d;
}

bool has_terminating_decimal(const Rational& q) {
    Int den = q.get_den();
    while (mpz_even_p(den.get_mpz_t())) den >>= 1;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
    return den == 1;
}

std::string to_fraction_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_exact_decimal_string(const Rational& q) {
    if (!has_terminating_decimal(q)) {
        throw std::domain_error("rational has no terminating decimal expansion");
    }
    if (sgn(q) < 0) return "-" + to_exact_decimal_string(Rational(-q));
    // Denominator is 2^a 5^b; pad to 10^digits with digits = max(a, b).
    Int den = q.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_even_p(den.get_mpz_t())) {
        den >>= 1;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    unsigned long digits = std::max(twos, fives);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled = q.get_num() * scale / q.get_den();
    std::string s = scaled.get_str();
    if (digits == 0) return s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string csv_number(const Rational& q) {
    return has_terminating_decimal(q) ? to_exact_decimal_string(q) : to_fraction_string(q);
}

// Smallest e with |q| < 10^e, i.e. the position of the leading digit.
long decimal_exponent_of(const Rational& q) {
    Rational a = abs(q);
    // Estimate from bit sizes, then correct by exact comparison.
    long bits = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
    long e = static_cast<long>(bits * 0.30102999566398119) ;
    auto pow10_cmp = [&](long k) {
        // compare a against 10^k
        Int p;
        if (k >= 0) {
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
            return cmp(a, Rational(p));
        }
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
        return cmp(a * p, Rational(1));
    };
    while (pow10_cmp(e) >= 0) ++e;
    while (pow10_cmp(e - 1) < 0) --e;
    return e;
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (sgn(q) == 0) return "0";
    if (sgn(q) < 0) return "-" + to_decimal_string(Rational(-q), significant_digits);

    long e = decimal_exponent_of(q);  // q in [10^(e-1), 10^e)
    // Round q * 10^(digits - e) half-even to an integer.
    long shift = significant_digits - e;
    Int num = q.get_num();
    Int den = q.get_den();
    Int p;
    if (shift >= 0) {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p;
    } else {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= p;
    }
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    int half = cmp(Int(rem * 2), den);
    if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

    std::string digits = quot.get_str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // 99...9 rounded up to 100...0
        digits.resize(significant_digits);
        ++e;
    }

    if (e > significant_digits + 3 || e < -3) {
        std::string mant(1, digits[0]);
        std::string rest = digits.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) mant += "." + rest;
        long se = e - 1;
        return mant + "e" + (se < 0 ? "-" : "+") + std::to_string(std::labs(se));
    }
    if (e <= 0) {
        return "0." + std::string(static_cast<size_t>(-e), '0') + digits;
    }
    if (e >= static_cast<long>(digits.size())) {
        return digits + std::string(e - digits.size(), '0');
    }
    return digits.substr(0, e) + "." + digits.substr(e);
}

std::vector<Rational> reduced_fractions(long den_cap) {
    std::vector<Rational> out;
    for (long b = 2; b <= den_cap; ++b) {
        for (long a = 1; a < b; ++a) {
            if (std::gcd(a, b) == 1) out.push_back(make_rational(Int(a), Int(b)));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
    return out;
}

std::vector<Rational> reduced_fractions_up_to(long den_cap, const Rational& max_value) {
    std::vector<Rational> out;
    for (long b = 1; b <= den_cap; ++b) {
        for (long a = 1;; ++a) {
            Rational q = make_rational(Int(a), Int(b));
            if (cmp(q, max_value) > 0) break;
            if (std::gcd(a, b) == 1) out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
    return out;
}

}  // namespace tailcert
