#include "tailcert/verify.hpp"

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tailcert {

namespace {

Rational half() {
    return make_rational(Int(1), Int(2));
}

Rational quarter() {
    return make_rational(Int(1), Int(4));
}

void append(SweepResult& out, VerificationRecord rec) {
    switch (rec.verdict) {
        case Verdict::Proven: ++out.proven; break;
        case Verdict::Violated: ++out.violated; break;
        case Verdict::Inconclusive: ++out.inconclusive; break;
        case Verdict::DomainSkipped: ++out.skipped; break;
    }
    out.records.push_back(std::move(rec));
}

VerificationRecord binomial_record(std::string claim_id, const BinomialParams& params) {
    VerificationRecord r;
    r.claim_id = std::move(claim_id);
    r.dist = "binomial";
    r.n = params.n();
    r.point = csv_number(params.p());
    return r;
}

VerificationRecord poisson_record(std::string claim_id, const Rational& lambda) {
    VerificationRecord r;
    r.claim_id = std::move(claim_id);
    r.dist = "poisson";
    r.point = csv_number(lambda);
    return r;
}

template <typename F>
void for_each_binomial_point(const GridSpec& grid, F&& f) {
    std::vector<Rational> ps = reduced_fractions(grid.p_den_cap);
    for (long n = grid.n_min; n <= grid.n_max; ++n) {
        for (const Rational& p : ps) {
            f(BinomialParams(n, p));
        }
    }
}

// ---- binomial grid claims ----

void claim_veraar(const GridSpec& grid, const SweepOptions& opt, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("VERAAR", params);
        BoundValue b = veraar_bound(params, grid.policy.start_bits);
        Rational scaled = Rational(*b.exact * opt.bound_scale);
        Rational t = mean_exceedance_prob(params);
        r.exact_value = t;
        r.bound = interval_from_rational(scaled, grid.policy.start_bits);
        r.margin = Rational(t - scaled);
        int vs_quarter = cmp(*b.exact, quarter());
        if (vs_quarter == 0) r.note = "veraar value equals 1/4 exactly";
        bool sound = cmp(t, scaled) >= 0 && vs_quarter <= 0;
        r.verdict = sound ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_gm(const GridSpec& grid, const SweepOptions& opt, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("GM_EQ2", params);
        if (!bound_in_domain(BoundKind::GreenbergMohri, params)) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        Rational bound = Rational(quarter() * opt.bound_scale);
        Rational t = mean_exceedance_prob(params);
        r.exact_value = t;
        r.bound = interval_from_rational(bound, grid.policy.start_bits);
        r.margin = Rational(t - bound);
        r.verdict = cmp(t, bound) > 0 ? Verdict::Proven : Verdict::Violated;  // strict
        append(out, std::move(r));
    });
}

void claim_rt(const GridSpec& grid, const SweepOptions& opt, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("RT_EQ3", params);
        if (!bound_in_domain(BoundKind::RigolletTong, params)) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        BoundValue b = rigollet_tong_bound(params, grid.policy.start_bits);
        Rational bound = Rational(*b.exact * opt.bound_scale);
        Rational t = mean_exceedance_prob(params);
        r.exact_value = t;
        r.bound = interval_from_rational(bound, grid.policy.start_bits);
        r.margin = Rational(t - bound);
        r.verdict = cmp(t, bound) >= 0 ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_theorem1(const GridSpec& grid, const SweepOptions& opt, SweepResult& out,
                    bool sharp) {
    const char* id = sharp ? "THM1_SHARP" : "THM1_RELAXED";
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record(id, params);
        if (!params.in_core_domain()) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        Rational t = mean_exceedance_prob(params);
        EnclosureFn fn = [&](int bits) {
            return iv_scale(theorem1_bound(params, sharp, bits).enclosure, opt.bound_scale);
        };
        Decision d = decide_exact_vs_true(t, Rel::Ge, fn, grid.policy);
        r.exact_value = t;
        r.bound = d.enclosure;
        r.margin = Rational(t - hi_rational(d.enclosure));
        r.verdict = d.verdict;
        append(out, std::move(r));
    });
}

void claim_thm1_relaxed(const GridSpec& g, const SweepOptions& o, SweepResult& out) {
    claim_theorem1(g, o, out, false);
}

void claim_thm1_sharp(const GridSpec& g, const SweepOptions& o, SweepResult& out) {
    claim_theorem1(g, o, out, true);
}

void claim_kaas(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("LEMMA_KAAS", params);
        if (!params.np_is_integer()) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        Rational t = mean_exceedance_prob(params);
        r.exact_value = t;
        r.bound = interval_from_rational(half(), grid.policy.start_bits);
        r.margin = Rational(t - half());
        r.verdict = cmp(t, half()) > 0 ? Verdict::Proven : Verdict::Violated;  // strict
        append(out, std::move(r));
    });
}

void claim_tce_int_ub(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("LEMMA_TCE_INT_UB", params);
        if (!params.np_is_integer()) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        Rational t = tce(params, params.exceedance_index());
        EnclosureFn fn = [&](int bits) { return tce_upper_bound_integer_mean(params, bits); };
        Decision d = decide_exact_vs_true(t, Rel::Lt, fn, grid.policy);
        r.exact_value = t;
        r.bound = d.enclosure;
        r.margin = Rational(lo_rational(d.enclosure) - t);
        r.verdict = d.verdict;
        append(out, std::move(r));
    });
}

void claim_mad_lb(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("LEMMA_MAD_LB", params);
        if (!params.in_core_domain()) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        Rational m = mad(params);
        Rational m2 = Rational(m * m);
        Rational hv = Rational(params.variance() / 2);
        r.exact_value = m2;
        r.bound = interval_from_rational(hv, grid.policy.start_bits);
        r.margin = Rational(m2 - hv);
        r.verdict = cmp(m2, hv) >= 0 ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_mad_cs(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("MAD_CAUCHY_SCHWARZ", params);
        Rational m = mad(params);
        Rational m2 = Rational(m * m);
        Rational v = params.variance();
        r.exact_value = m2;
        r.bound = interval_from_rational(v, grid.policy.start_bits);
        r.margin = Rational(v - m2);
        r.verdict = cmp(m2, v) <= 0 ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_identity4(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("IDENTITY_4", params);
        Rational lhs = Rational(mad(params) / 2);
        long idx = params.exceedance_index();
        Rational rhs =
            Rational(mean_exceedance_prob(params) * (tce(params, idx) - params.np()));
        r.exact_value = lhs;
        r.margin = Rational(lhs - rhs);
        r.verdict = sgn(*r.margin) == 0 ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_median_floor(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("MEDIAN_FLOOR", params);
        Rational t = tail(params, floor_int(params.np()).get_si());
        r.exact_value = t;
        r.bound = interval_from_rational(half(), grid.policy.start_bits);
        r.margin = Rational(t - half());
        r.verdict = cmp(t, half()) >= 0 ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    });
}

void claim_quarter_threshold(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        VerificationRecord r = binomial_record("QUARTER_THRESHOLD", params);
        if (!params.in_core_domain()) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        r.exact_value = params.variance();
        EnclosureFn fn = [&](int bits) { return theorem1_bound(params, false, bits).enclosure; };
        auto ord = quarter_threshold_check(params);
        if (ord == std::strong_ordering::greater) {
            Decision d = decide_exact_vs_true(quarter(), Rel::Lt, fn, grid.policy);
            r.bound = d.enclosure;
            r.margin = Rational(lo_rational(d.enclosure) - quarter());
            r.verdict = d.verdict;
        } else if (ord == std::strong_ordering::less) {
            Decision d = decide_exact_vs_true(quarter(), Rel::Gt, fn, grid.policy);
            r.bound = d.enclosure;
            r.margin = Rational(quarter() - hi_rational(d.enclosure));
            r.verdict = d.verdict;
        } else {
            Interval enc = fn(grid.policy.start_bits);
            r.bound = enc;
            r.margin = Rational(0);
            r.verdict = contains(enc, quarter()) ? Verdict::Proven : Verdict::Violated;
            if (!is_degenerate(enc)) r.note = "v = 8 boundary did not evaluate exactly";
        }
        append(out, std::move(r));
    });
}

void claim_proof_chain(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        if (!params.in_core_domain() || params.np_is_integer()) {
            VerificationRecord r = binomial_record("PROOF_CHAIN", params);
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            return;
        }
        for (VerificationRecord& rec : proof_chain_audit(params, grid.policy)) {
            append(out, std::move(rec));
        }
    });
}

// ---- order claims ----

std::string pair_point(const Rational& p, const Rational& q) {
    return csv_number(p) + "<" + csv_number(q);
}

template <typename F>
void for_each_pair(const GridSpec& grid, F&& f) {
    std::vector<Rational> ps = reduced_fractions(grid.p_den_cap);
    for (long n = grid.n_min; n <= grid.n_max; ++n) {
        for (size_t i = 0; i < ps.size(); ++i) {
            for (size_t j = i + 1; j < ps.size(); ++j) {
                f(BinomialParams(n, ps[i]), BinomialParams(n, ps[j]));
            }
        }
    }
}

void claim_order_lr(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_pair(grid, [&](const BinomialParams& l, const BinomialParams& r_) {
        VerificationRecord r;
        r.claim_id = "ORDER_LR";
        r.dist = "binomial";
        r.n = l.n();
        r.point = pair_point(l.p(), r_.p());
        OrderCheckReport rep = check_likelihood_ratio_order(l, r_);
        r.verdict = rep.holds ? Verdict::Proven : Verdict::Violated;
        if (rep.witness_k) r.note = "violated at k=" + std::to_string(*rep.witness_k);
        append(out, std::move(r));
    });
}

void claim_order_hr(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_pair(grid, [&](const BinomialParams& l, const BinomialParams& r_) {
        VerificationRecord r;
        r.claim_id = "ORDER_HR";
        r.dist = "binomial";
        r.n = l.n();
        r.point = pair_point(l.p(), r_.p());
        OrderCheckReport rep = check_hazard_rate_order(l, r_);
        r.verdict = rep.holds ? Verdict::Proven : Verdict::Violated;
        if (rep.witness_k) r.note = "violated at k=" + std::to_string(*rep.witness_k);
        append(out, std::move(r));
    });
}

void claim_order_lr_implies_hr(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for_each_pair(grid, [&](const BinomialParams& l, const BinomialParams& r_) {
        VerificationRecord r;
        r.claim_id = "ORDER_LR_IMPLIES_HR";
        r.dist = "binomial";
        r.n = l.n();
        r.point = pair_point(l.p(), r_.p());
        bool lr = check_likelihood_ratio_order(l, r_).holds;
        bool hr = check_hazard_rate_order(l, r_).holds;
        r.verdict = (lr && !hr) ? Verdict::Violated : Verdict::Proven;
        append(out, std::move(r));
    });
}

void claim_tce_monotone_p(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    std::vector<Rational> ps = reduced_fractions(grid.p_den_cap);
    for (long n = grid.n_min; n <= grid.n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
            VerificationRecord r;
            r.claim_id = "TCE_MONOTONE_P";
            r.dist = "binomial";
            r.n = n;
            r.point = "k=" + std::to_string(k);
            std::vector<TcePoint> profile = tce_profile_in_p(n, k, ps);
            r.verdict = tce_profile_nondecreasing(profile) ? Verdict::Proven
                                                           : Verdict::Violated;
            append(out, std::move(r));
        }
    }
}

// ---- poisson claims ----

long exceedance_index_poisson(const Rational& lambda) {
    return ceil_int(lambda).get_si();  // equals lambda itself when integral
}

void poisson_bound_claim_impl(const GridSpec& grid, const SweepOptions& opt, SweepResult& out,
                              const char* id, const Rational& coefficient_scale) {
    for (const Rational& lambda : grid.lambda_grid) {
        VerificationRecord r = poisson_record(id, lambda);
        long k = exceedance_index_poisson(lambda);
        Rational scale = Rational(opt.bound_scale * coefficient_scale);
        EnclosureFn bound_fn = [&](int bits) {
            return iv_scale(poisson_theorem_bound(PoissonParams(lambda, epsilon_from_bits(bits))),
                            scale);
        };
        EnclosureFn tail_fn = [&](int bits) {
            return poisson_tail(PoissonParams(lambda, epsilon_from_bits(bits)), k);
        };
        Decision2 d = decide_true_vs_true(bound_fn, Rel::Le, tail_fn, grid.policy);
        r.bound = d.lhs;
        r.margin = Rational(lo_rational(d.rhs) - hi_rational(d.lhs));
        r.verdict = d.verdict;
        append(out, std::move(r));
    }
}

void claim_poisson_bound(const GridSpec& grid, const SweepOptions& opt, SweepResult& out) {
    poisson_bound_claim_impl(grid, opt, out, "POISSON_BOUND", Rational(1));
}

void claim_poisson_bound_half(const GridSpec& grid, const SweepOptions& opt,
                              SweepResult& out) {
    poisson_bound_claim_impl(grid, opt, out, "POISSON_BOUND_HALF",
                             make_rational(Int(1), Int(2)));
}

// Truncated direct sum of E|X - lambda| with a certified geometric remainder.
Interval poisson_mad_direct(const Rational& lambda, int bits) {
    long cutoff = ceil_int(Rational(4 * lambda)).get_si() + 40;
    Rational weighted(0);  // sum_{k<=K} |k - lambda| lambda^k / k!
    Rational term(1);
    for (long k = 0; k <= cutoff; ++k) {
        weighted += abs(Rational(k - lambda)) * term;
        term = Rational(term * lambda / (k + 1));
    }
    // term now holds lambda^(K+1)/(K+1)!; for j > K >= 2 lambda the summands
    // |j-lambda| pmf(j) <= j pmf(j) decay by factor <= 1/2, giving
    // remainder <= (2K+4) pmf(K+1).
    int w = bits + 64;
    Interval e = exp_interval(Rational(-lambda), w);
    Interval base = iv_scale(e, weighted);
    Rational rem = Rational(hi_rational(iv_scale(e, term)) * (2 * cutoff + 4));
    return Interval{base.lo, dy_add(base.hi, dyadic_from_rational(rem, w, Round::Up)), w};
}

void claim_poisson_mad_form(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for (const Rational& lambda : grid.lambda_grid) {
        VerificationRecord r = poisson_record("POISSON_MAD_FORM", lambda);
        Interval closed = poisson_mad(
            PoissonParams(lambda, epsilon_from_bits(grid.policy.start_bits)));
        Interval direct = poisson_mad_direct(lambda, grid.policy.start_bits);
        bool intersect =
            cmp(closed.lo, direct.hi) <= 0 && cmp(direct.lo, closed.hi) <= 0;
        r.bound = closed;
        r.verdict = intersect ? Verdict::Proven : Verdict::Violated;
        append(out, std::move(r));
    }
}

void claim_poisson_tce_int(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for (const Rational& lambda : grid.lambda_grid) {
        VerificationRecord r = poisson_record("POISSON_TCE_INT", lambda);
        if (!is_integer(lambda)) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            continue;
        }
        long li = lambda.get_num().get_si();
        EnclosureFn tce_fn = [&](int bits) {
            return poisson_tce(PoissonParams(lambda, epsilon_from_bits(bits)), li);
        };
        EnclosureFn ub_fn = [&](int bits) {
            return iv_add_rational(interval_sqrt(interval_from_rational(lambda, bits)), lambda);
        };
        Decision2 d = decide_true_vs_true(tce_fn, Rel::Le, ub_fn, grid.policy);
        r.bound = d.rhs;
        r.margin = Rational(lo_rational(d.rhs) - hi_rational(d.lhs));
        r.verdict = d.verdict;
        append(out, std::move(r));
    }
}

void claim_poisson_median_int(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for (const Rational& lambda : grid.lambda_grid) {
        VerificationRecord r = poisson_record("POISSON_MEDIAN_INT", lambda);
        if (!is_integer(lambda)) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            continue;
        }
        long li = lambda.get_num().get_si();
        EnclosureFn tail_fn = [&](int bits) {
            return poisson_tail(PoissonParams(lambda, epsilon_from_bits(bits)), li);
        };
        Decision d = decide_exact_vs_true(half(), Rel::Le, tail_fn, grid.policy);
        r.exact_value = half();
        r.bound = d.enclosure;
        r.margin = Rational(lo_rational(d.enclosure) - half());
        r.verdict = d.verdict;
        append(out, std::move(r));
    }
}

void claim_poisson_tce_ceil(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for (const Rational& lambda : grid.lambda_grid) {
        VerificationRecord r = poisson_record("POISSON_TCE_CEIL", lambda);
        if (is_integer(lambda)) {
            r.verdict = Verdict::DomainSkipped;
            append(out, std::move(r));
            continue;
        }
        long k = exceedance_index_poisson(lambda);
        EnclosureFn lhs = [&](int bits) {
            return poisson_tce(PoissonParams(lambda, epsilon_from_bits(bits)), k);
        };
        EnclosureFn rhs = [&](int bits) {
            return poisson_tce(PoissonParams(Rational(k), epsilon_from_bits(bits)), k);
        };
        Decision2 d = decide_true_vs_true(lhs, Rel::Le, rhs, grid.policy);
        r.bound = d.rhs;
        r.margin = Rational(lo_rational(d.rhs) - hi_rational(d.lhs));
        r.verdict = d.verdict;
        append(out, std::move(r));
    }
}

void claim_stirling(const GridSpec& grid, const SweepOptions&, SweepResult& out) {
    for (long m = 1; m <= grid.stirling_m_max; ++m) {
        VerificationRecord r;
        r.claim_id = "STIRLING";
        r.dist = "poisson";
        r.point = std::to_string(m);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        Int mm;
        mpz_ui_pow_ui(mm.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(m));
        EnclosureFn rhs = [&](int bits) {
            Interval e = exp_interval(Rational(1 - m), bits);
            return iv_mul(iv_mul(e, interval_from_int(mm, bits)),
                          interval_sqrt(interval_from_int(Int(m), bits)));
        };
        Decision d = decide_exact_vs_true(Rational(fact), Rel::Le, rhs, grid.policy);
        r.exact_value = Rational(fact);
        r.bound = d.enclosure;
        r.margin = Rational(lo_rational(d.enclosure) - fact);
        r.verdict = d.verdict;
        append(out, std::move(r));
    }
}

struct ClaimEntry {
    ClaimInfo info;
    void (*fn)(const GridSpec&, const SweepOptions&, SweepResult&);
};

const std::vector<ClaimEntry>& registry() {
    static const std::vector<ClaimEntry> entries = {
        {{"VERAAR", "P[X>=np] >= (1/4) E|X-np|^2 / Var X (Veraar / Paley-Zygmund style), "
                    "plus value <= 1/4 with boundary equalities logged",
          "0 < p < 1"},
         claim_veraar},
        {{"GM_EQ2", "P[X>=np] > 1/4, strict (Greenberg-Mohri)", "p >= 1/n"}, claim_gm},
        {{"RT_EQ3", "P[X>=np] >= min(p, 1/4) (Rigollet-Tong)", "p <= 1/2"}, claim_rt},
        {{"THM1_RELAXED",
          "P[X>=np] >= sqrt(v)/(2 sqrt(2) (1+sqrt(v+1))), v = np(1-p)",
          "n >= 2 and 1/n <= p <= 1-1/n"},
         claim_thm1_relaxed},
        {{"THM1_SHARP",
          "P[X>=np] >= sqrt(v)/(2 sqrt(2) (1+sqrt(v+1-2p))), v = np(1-p)",
          "n >= 2 and 1/n <= p <= 1-1/n"},
         claim_thm1_sharp},
        {{"LEMMA_KAAS", "P[X>=np] > 1/2, strict, when np is an integer (Kaas-Buhrman)",
          "np integer"},
         claim_kaas},
        {{"LEMMA_TCE_INT_UB",
          "E[X | X>=np] < np + sqrt(np(1-p)), strict, when np is an integer", "np integer"},
         claim_tce_int_ub},
        {{"LEMMA_MAD_LB",
          "E|X-np|^2 >= np(1-p)/2 (Berend-Kontorovich MAD lower bound, squared form)",
          "n >= 2 and 1/n <= p <= 1-1/n"},
         claim_mad_lb},
        {{"MAD_CAUCHY_SCHWARZ", "E|X-np|^2 <= np(1-p)", "0 < p < 1"}, claim_mad_cs},
        {{"IDENTITY_4",
          "(1/2) E|X-np| = P[X>=np] (E[X | X>=np] - np), exact rational equality",
          "0 < p < 1"},
         claim_identity4},
        {{"MEDIAN_FLOOR", "P[X >= floor(np)] >= 1/2 (binomial median >= floor(np))",
          "0 < p < 1"},
         claim_median_floor},
        {{"QUARTER_THRESHOLD",
          "relaxed bound vs 1/4 matches the exact sign of np(1-p) - 8",
          "n >= 2 and 1/n <= p <= 1-1/n"},
         claim_quarter_threshold},
        {{"PROOF_CHAIN",
          "six-link derivation audit (records CHAIN_A_IDENTITY .. CHAIN_F_SHARP_RELAXED)",
          "core domain, np not an integer"},
         claim_proof_chain},
        {{"ORDER_LR", "Bin(n,p) <=_lr Bin(n,q) for p < q, cross-multiplied exact check",
          "pairs p < q, equal n"},
         claim_order_lr},
        {{"ORDER_HR", "Bin(n,p) <=_hr Bin(n,q) for p < q, cross-multiplied exact check",
          "pairs p < q, equal n"},
         claim_order_hr},
        {{"ORDER_LR_IMPLIES_HR", "lr order implies hr order on every tested pair",
          "pairs p < q, equal n"},
         claim_order_lr_implies_hr},
        {{"TCE_MONOTONE_P", "E[X_p | X_p >= k] nondecreasing in p over the grid",
          "k in [0, n]"},
         claim_tce_monotone_p},
        {{"POISSON_BOUND",
          "P[X>=lambda] >= 2 e^-(lambda-floor(lambda)+1) sqrt(lambda)/(1+sqrt(lambda+1)); "
          "the sweep disproves this constant for lambda >~ 6",
          "lambda > 0"},
         claim_poisson_bound},
        {{"POISSON_BOUND_HALF",
          "P[X>=lambda] >= e^-(lambda-floor(lambda)+1) sqrt(lambda)/(1+sqrt(lambda+1)); "
          "the coefficient-1 variant the MAD/TCE route supports",
          "lambda > 0"},
         claim_poisson_bound_half},
        {{"POISSON_MAD_FORM",
          "E|X-lambda| closed form 2 lambda e^-lambda lambda^floor/floor! vs direct sum",
          "lambda > 0"},
         claim_poisson_mad_form},
        {{"POISSON_TCE_INT", "E[X | X>=lambda] <= lambda + sqrt(lambda), integer lambda",
          "lambda integer"},
         claim_poisson_tce_int},
        {{"POISSON_MEDIAN_INT", "P[X>=lambda] >= 1/2 for integer lambda (median = mean)",
          "lambda integer"},
         claim_poisson_median_int},
        {{"POISSON_TCE_CEIL",
          "E[X_lambda | X_lambda >= k] <= E[X_k | X_k >= k], k = ceil(lambda)",
          "lambda not an integer"},
         claim_poisson_tce_ceil},
        {{"STIRLING", "m! <= e m^(m+1/2) e^-m for m = 1..stirling_m_max", "m >= 1"},
         claim_stirling},
    };
    return entries;
}

void validate_grid(const GridSpec& grid) {
    if (grid.n_min < 1 || grid.n_max < grid.n_min) {
        throw std::invalid_argument("grid n range must satisfy 1 <= n_min <= n_max");
    }
    if (grid.p_den_cap < 2) {
        throw std::invalid_argument("grid p denominator cap must be >= 2");
    }
    if (grid.policy.start_bits < 8 || grid.policy.cap_bits < grid.policy.start_bits) {
        throw std::invalid_argument("grid precision policy must satisfy 8 <= start <= cap");
    }
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> v;
        for (const ClaimEntry& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

int SweepResult::exit_code() const {
    if (violated > 0) return 2;
    if (inconclusive > 0) return 3;
    return 0;
}

std::string SweepResult::summary_text() const {
    std::ostringstream os;
    // Per-claim tallies in record order, then notes, then the total line.
    std::vector<std::string> order;
    std::map<std::string, std::array<long, 4>> counts;
    std::map<std::string, std::pair<const Rational*, const VerificationRecord*>> min_margin;
    for (const VerificationRecord& r : records) {
        std::string key = r.claim_id;
        if (!counts.count(key)) order.push_back(key);
        auto& c = counts[key];
        switch (r.verdict) {
            case Verdict::Proven: ++c[0]; break;
            case Verdict::Violated: ++c[1]; break;
            case Verdict::Inconclusive: ++c[2]; break;
            case Verdict::DomainSkipped: ++c[3]; break;
        }
        if (r.margin) {
            auto& slot = min_margin[key];
            if (slot.first == nullptr || cmp(*r.margin, *slot.first) < 0) {
                slot = {&*r.margin, &r};
            }
        }
    }
    for (const std::string& id : order) {
        const auto& c = counts[id];
        os << id << ": proven=" << c[0] << " violated=" << c[1] << " inconclusive=" << c[2]
           << " skipped=" << c[3];
        auto it = min_margin.find(id);
        if (it != min_margin.end() && it->second.first != nullptr) {
            const VerificationRecord& rec = *it->second.second;
            os << " min_margin=" << to_decimal_string(*it->second.first, 12) << " at";
            if (rec.n) os << " n=" << *rec.n;
            os << " p=" << rec.point;
        }
        os << "\n";
    }
    for (const VerificationRecord& r : records) {
        if (!r.note.empty()) {
            os << "note: " << r.claim_id;
            if (r.n) os << " n=" << *r.n;
            os << " p=" << r.point << ": " << r.note << "\n";
        }
    }
    os << "TOTAL: proven=" << proven << " violated=" << violated
       << " inconclusive=" << inconclusive << " skipped=" << skipped << "\n";
    return os.str();
}

SweepResult run_claim_sweep(const GridSpec& grid, const std::string& claim_id,
                            const SweepOptions& options) {
    validate_grid(grid);
    SweepResult out;
    if (claim_id == "ALL") {
        for (const ClaimEntry& e : registry()) e.fn(grid, options, out);
        return out;
    }
    for (const ClaimEntry& e : registry()) {
        if (e.info.id == claim_id) {
            e.fn(grid, options, out);
            return out;
        }
    }
    std::string msg = "unknown claim '" + claim_id + "'; known claims:";
    for (const ClaimEntry& e : registry()) msg += " " + e.info.id;
    msg += " ALL";
    throw std::invalid_argument(msg);
}

std::vector<VerificationRecord> proof_chain_audit(const BinomialParams& params,
                                                  const PrecisionPolicy& pol) {
    if (!params.in_core_domain() || params.np_is_integer()) {
        throw std::domain_error(
            "proof chain audit requires the core domain and non-integer np");
    }
    std::vector<VerificationRecord> out;
    long m = params.exceedance_index();  // ceil(np), the k+1 of the derivation
    Rational np = params.np();
    Rational v = params.variance();
    Rational t = tail(params, m);
    Rational md = mad(params);
    Rational tce_p = tce(params, m);
    BinomialParams integer_mean_law(params.n(), make_rational(Int(m), Int(params.n())));
    Rational tce_q = tce(integer_mean_law, m);
    Rational rad_d = Rational(m * (1 - integer_mean_law.p()));  // m (1 - m/n)
    Rational rad_e = Rational(v + 1 - 2 * params.p());

    auto base = [&](const char* id) { return binomial_record(id, params); };

    {  // (a) P[X >= np] = (1/2) E|X-np| / (E[X | X >= m] - np), exactly
        VerificationRecord r = base("CHAIN_A_IDENTITY");
        Rational lhs = Rational(md / 2);
        Rational rhs = Rational(t * (tce_p - np));
        r.exact_value = lhs;
        r.margin = Rational(lhs - rhs);
        r.verdict = sgn(*r.margin) == 0 ? Verdict::Proven : Verdict::Violated;
        out.push_back(std::move(r));
    }
    {  // (b) E|X-np|^2 >= v/2
        VerificationRecord r = base("CHAIN_B_MAD_LB");
        Rational m2 = Rational(md * md);
        Rational hv = Rational(v / 2);
        r.exact_value = m2;
        r.margin = Rational(m2 - hv);
        r.verdict = cmp(m2, hv) >= 0 ? Verdict::Proven : Verdict::Violated;
        out.push_back(std::move(r));
    }
    {  // (c) E[X_p | X_p >= m] <= E[X_q | X_q >= m] for q = m/n
        VerificationRecord r = base("CHAIN_C_TCE_MONOTONE");
        r.exact_value = tce_p;
        r.margin = Rational(tce_q - tce_p);
        r.verdict = cmp(tce_p, tce_q) <= 0 ? Verdict::Proven : Verdict::Violated;
        out.push_back(std::move(r));
    }
    {  // (d) E[X_q | X_q >= m] < m + sqrt(m (1 - m/n)), strict
        VerificationRecord r = base("CHAIN_D_TCE_INT_UB");
        EnclosureFn fn = [&](int bits) {
            return iv_add_rational(interval_sqrt(interval_from_rational(rad_d, bits)),
                                   Rational(m));
        };
        Decision d = decide_exact_vs_true(tce_q, Rel::Lt, fn, pol);
        r.exact_value = tce_q;
        r.bound = d.enclosure;
        r.margin = Rational(lo_rational(d.enclosure) - tce_q);
        r.verdict = d.verdict;
        out.push_back(std::move(r));
    }
    {  // (e) m + sqrt(m (1 - m/n)) <= np + 1 + sqrt(v + 1 - 2p)
        VerificationRecord r = base("CHAIN_E_CEIL_RELAX");
        EnclosureFn lhs = [&](int bits) {
            return iv_add_rational(interval_sqrt(interval_from_rational(rad_d, bits)),
                                   Rational(m));
        };
        EnclosureFn rhs = [&](int bits) {
            return iv_add_rational(interval_sqrt(interval_from_rational(rad_e, bits)),
                                   Rational(np + 1));
        };
        Decision2 d = decide_true_vs_true(lhs, Rel::Le, rhs, pol);
        r.bound = d.rhs;
        r.margin = Rational(lo_rational(d.rhs) - hi_rational(d.lhs));
        r.verdict = d.verdict;
        out.push_back(std::move(r));
    }
    {  // (f) relaxed bound <= sharp bound
        VerificationRecord r = base("CHAIN_F_SHARP_RELAXED");
        EnclosureFn relaxed = [&](int bits) {
            return theorem1_bound(params, false, bits).enclosure;
        };
        EnclosureFn sharp = [&](int bits) {
            return theorem1_bound(params, true, bits).enclosure;
        };
        Decision2 d = decide_true_vs_true(relaxed, Rel::Le, sharp, pol);
        r.bound = d.rhs;
        r.margin = Rational(lo_rational(d.rhs) - hi_rational(d.lhs));
        r.verdict = d.verdict;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Strictly-better challenger replaces the incumbent; ties keep catalog order.
struct BestTracker {
    std::string name;
    bool have_exact = false;
    Rational exact;
    EnclosureFn fn;
    PrecisionPolicy pol;

    void consider_exact(const std::string& nm, const Rational& val) {
        if (name.empty()) {
            name = nm;
            have_exact = true;
            exact = val;
            return;
        }
        if (have_exact) {
            if (cmp(val, exact) > 0) {
                name = nm;
                exact = val;
            }
            return;
        }
        if (decide_exact_vs_true(val, Rel::Gt, fn, pol).verdict == Verdict::Proven) {
            name = nm;
            have_exact = true;
            exact = val;
        }
    }

    void consider_fn(const std::string& nm, const EnclosureFn& f) {
        if (name.empty()) {
            name = nm;
            have_exact = false;
            fn = f;
            return;
        }
        if (have_exact) {
            if (decide_exact_vs_true(exact, Rel::Ge, f, pol).verdict == Verdict::Violated) {
                name = nm;
                have_exact = false;
                fn = f;
            }
            return;
        }
        if (decide_true_vs_true(f, Rel::Gt, fn, pol).verdict == Verdict::Proven) {
            name = nm;
            fn = f;
        }
    }
};

}  // namespace

std::vector<TightnessRow> tightness_report(const GridSpec& grid) {
    validate_grid(grid);
    std::vector<TightnessRow> rows;
    for_each_binomial_point(grid, [&](const BinomialParams& params) {
        TightnessRow row;
        row.n = params.n();
        row.p = params.p();
        row.exact_tail = mean_exceedance_prob(params);

        BestTracker best;
        best.pol = grid.policy;

        row.veraar = *veraar_bound(params, grid.policy.start_bits).exact;
        best.consider_exact("veraar", *row.veraar);
        if (bound_in_domain(BoundKind::GreenbergMohri, params)) {
            row.gm = quarter();
            best.consider_exact("gm", *row.gm);
        }
        if (bound_in_domain(BoundKind::RigolletTong, params)) {
            row.rt = *rigollet_tong_bound(params, grid.policy.start_bits).exact;
            best.consider_exact("rt", *row.rt);
        }
        if (params.in_core_domain()) {
            EnclosureFn relaxed = [&](int bits) {
                return theorem1_bound(params, false, bits).enclosure;
            };
            EnclosureFn sharp = [&](int bits) {
                return theorem1_bound(params, true, bits).enclosure;
            };
            row.thm1 = relaxed(grid.policy.start_bits);
            row.thm1_sharp = sharp(grid.policy.start_bits);
            best.consider_fn("theorem1", relaxed);
            best.consider_fn("theorem1-sharp", sharp);

            auto ord = quarter_threshold_check(params);
            if (ord == std::strong_ordering::greater) {
                row.quarter_consistent =
                    decide_exact_vs_true(quarter(), Rel::Lt, relaxed, grid.policy).verdict ==
                    Verdict::Proven;
            } else if (ord == std::strong_ordering::less) {
                row.quarter_consistent =
                    decide_exact_vs_true(quarter(), Rel::Gt, relaxed, grid.policy).verdict ==
                    Verdict::Proven;
            } else {
                row.quarter_consistent = contains(*row.thm1, quarter());
            }
        }
        row.best = best.name;
        rows.push_back(std::move(row));
    });
    return rows;
}

namespace {

std::string csv_optional(const std::optional<Rational>& q) {
    return q ? csv_number(*q) : std::string();
}

constexpr int kIntervalDigits = 17;

}  // namespace

void write_csv(std::ostream& os, const std::vector<VerificationRecord>& records) {
    os << "claim_id,dist,n,p,exact,bound_lo,bound_hi,verdict,margin\n";
    for (const VerificationRecord& r : records) {
        os << r.claim_id << ',' << r.dist << ',';
        if (r.n) os << *r.n;
        os << ',' << r.point << ',' << csv_optional(r.exact_value) << ',';
        if (r.bound) {
            os << dyadic_to_decimal(r.bound->lo, kIntervalDigits, Round::Down) << ','
               << dyadic_to_decimal(r.bound->hi, kIntervalDigits, Round::Up);
        } else {
            os << ',';
        }
        os << ',' << verdict_name(r.verdict) << ',' << csv_optional(r.margin) << '\n';
    }
}

void write_tightness_csv(std::ostream& os, const std::vector<TightnessRow>& rows) {
    os << "n,p,exact,veraar,gm,rt,thm1,thm1_sharp,"
          "ratio_veraar,ratio_gm,ratio_rt,ratio_thm1,ratio_thm1_sharp,"
          "best,quarter_consistent\n";
    for (const TightnessRow& row : rows) {
        os << row.n << ',' << csv_number(row.p) << ',' << csv_number(row.exact_tail) << ',';
        os << csv_optional(row.veraar) << ',' << csv_optional(row.gm) << ','
           << csv_optional(row.rt) << ',';
        os << (row.thm1 ? to_decimal_string(midpoint(*row.thm1), kIntervalDigits)
                        : std::string())
           << ','
           << (row.thm1_sharp ? to_decimal_string(midpoint(*row.thm1_sharp), kIntervalDigits)
                              : std::string())
           << ',';
        auto ratio_exact = [&](const std::optional<Rational>& b) {
            return b ? to_decimal_string(Rational(*b / row.exact_tail), 12) : std::string();
        };
        auto ratio_interval = [&](const std::optional<Interval>& b) {
            return b ? to_decimal_string(Rational(hi_rational(*b) / row.exact_tail), 12)
                     : std::string();
        };
        os << ratio_exact(row.veraar) << ',' << ratio_exact(row.gm) << ','
           << ratio_exact(row.rt) << ',' << ratio_interval(row.thm1) << ','
           << ratio_interval(row.thm1_sharp) << ',';
        os << row.best << ',' << (row.quarter_consistent ? "yes" : "no") << '\n';
    }
}

}  // namespace tailcert
