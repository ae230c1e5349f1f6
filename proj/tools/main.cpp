#include "tailcert/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace tc = tailcert;

namespace {

constexpr int kIntervalDigits = 17;
constexpr int kDecimalDigits = 12;

struct QuantitySpec {
    std::string name;
    std::optional<long> index;
};

QuantitySpec parse_quantity(const std::string& text) {
    QuantitySpec q;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        q.name = text;
        return q;
    }
    q.name = text.substr(0, colon);
    q.index = std::stol(text.substr(colon + 1));
    return q;
}

std::string exact_line(const tc::Rational& value) {
    return tc::to_fraction_string(value) + " (" + tc::to_decimal_string(value, kDecimalDigits) +
           ")";
}

std::string interval_line(const tc::Interval& iv) {
    return "[" + tc::interval_to_string(iv, kIntervalDigits) + "]";
}

int run_exact(long n, const std::string& p_text, const std::string& quantity) {
    tc::BinomialParams params(n, tc::parse_rational(p_text));
    QuantitySpec q = parse_quantity(quantity);
    if (q.name == "pmf" && q.index) {
        std::cout << exact_line(tc::pmf(params, *q.index)) << "\n";
    } else if (q.name == "tail" && q.index) {
        std::cout << exact_line(tc::tail(params, *q.index)) << "\n";
    } else if (q.name == "tce" && q.index) {
        std::cout << exact_line(tc::tce(params, *q.index)) << "\n";
    } else if (q.name == "mad") {
        std::cout << exact_line(tc::mad(params)) << "\n";
    } else if (q.name == "exceed") {
        std::cout << exact_line(tc::mean_exceedance_prob(params)) << "\n";
    } else if (q.name == "median-check") {
        std::cout << (tc::median_lower_check(params) ? "true" : "false") << "\n";
    } else {
        throw CLI::ValidationError(
            "--quantity", "expected one of pmf:k, tail:k, tce:k, mad, exceed, median-check");
    }
    return 0;
}

int run_bound(long n, const std::string& p_text, const std::string& kind_text, bool sharp,
              const tc::PrecisionPolicy& pol) {
    tc::BinomialParams params(n, tc::parse_rational(p_text));
    tc::BoundKind kind;
    if (kind_text == "veraar") {
        kind = tc::BoundKind::Veraar;
    } else if (kind_text == "gm") {
        kind = tc::BoundKind::GreenbergMohri;
    } else if (kind_text == "rt") {
        kind = tc::BoundKind::RigolletTong;
    } else if (kind_text == "theorem1") {
        kind = sharp ? tc::BoundKind::Theorem1Sharp : tc::BoundKind::Theorem1;
    } else {
        throw CLI::ValidationError("--kind", "expected one of veraar, gm, rt, theorem1");
    }

    tc::Rational t = tc::mean_exceedance_prob(params);
    tc::Verdict verdict;
    tc::Rational margin;
    tc::BoundValue first = tc::evaluate_bound(kind, params, pol.start_bits);
    std::cout << "bound " << tc::bound_name(kind) << ": ";
    if (first.exact) {
        std::cout << exact_line(*first.exact) << "\n";
        bool strict = kind == tc::BoundKind::GreenbergMohri;
        int c = cmp(t, *first.exact);
        verdict = (strict ? c > 0 : c >= 0) ? tc::Verdict::Proven : tc::Verdict::Violated;
        margin = tc::Rational(t - *first.exact);
    } else {
        tc::EnclosureFn fn = [&](int bits) {
            return tc::evaluate_bound(kind, params, bits).enclosure;
        };
        tc::Decision d = tc::decide_exact_vs_true(t, tc::Rel::Ge, fn, pol);
        std::cout << interval_line(d.enclosure) << " (prec " << d.enclosure.precision_bits
                  << " bits)\n";
        verdict = d.verdict;
        margin = tc::Rational(t - tc::hi_rational(d.enclosure));
    }
    std::cout << "exact tail: " << exact_line(t) << "\n";
    std::cout << "verdict: " << tc::verdict_name(verdict)
              << " margin: " << tc::to_decimal_string(margin, kDecimalDigits) << "\n";
    return verdict == tc::Verdict::Proven ? 0 : verdict == tc::Verdict::Violated ? 2 : 3;
}

int run_poisson(const std::string& lambda_text, const std::string& quantity, int eps_bits,
                const tc::PrecisionPolicy& pol) {
    tc::Rational lambda = tc::parse_rational(lambda_text);
    tc::PoissonParams params(lambda, tc::epsilon_from_bits(eps_bits));
    QuantitySpec q = parse_quantity(quantity);
    if (q.name == "pmf" && q.index) {
        std::cout << interval_line(tc::poisson_pmf(params, *q.index)) << "\n";
    } else if (q.name == "tail" && q.index) {
        std::cout << interval_line(tc::poisson_tail(params, *q.index)) << "\n";
    } else if (q.name == "tce" && q.index) {
        std::cout << interval_line(tc::poisson_tce(params, *q.index)) << "\n";
    } else if (q.name == "mad") {
        std::cout << interval_line(tc::poisson_mad(params)) << "\n";
    } else if (q.name == "bound") {
        long k = tc::ceil_int(lambda).get_si();
        tc::EnclosureFn bound_fn = [&](int bits) {
            return tc::poisson_theorem_bound(
                tc::PoissonParams(lambda, tc::epsilon_from_bits(bits)));
        };
        tc::EnclosureFn tail_fn = [&](int bits) {
            return tc::poisson_tail(tc::PoissonParams(lambda, tc::epsilon_from_bits(bits)), k);
        };
        tc::Decision2 d = tc::decide_true_vs_true(bound_fn, tc::Rel::Le, tail_fn, pol);
        std::cout << "bound: " << interval_line(d.lhs) << "\n";
        std::cout << "tail(k=" << k << "): " << interval_line(d.rhs) << "\n";
        std::cout << "verdict: " << tc::verdict_name(d.verdict) << "\n";
        return d.verdict == tc::Verdict::Proven ? 0
               : d.verdict == tc::Verdict::Violated ? 2 : 3;
    } else if (q.name == "tce-check") {
        if (!params.lambda_is_integer()) {
            throw std::domain_error("tce-check requires an integer lambda");
        }
        tc::PoissonIntegerTceReport rep =
            tc::poisson_integer_mean_tce_check(params.lambda_floor().get_si(), pol);
        std::cout << "tce <= lambda + sqrt(lambda): " << tc::verdict_name(rep.tce_bound)
                  << "\n";
        std::cout << "median premise tail >= 1/2: " << tc::verdict_name(rep.median_premise)
                  << "\n";
        bool ok = rep.tce_bound == tc::Verdict::Proven &&
                  rep.median_premise == tc::Verdict::Proven;
        return ok ? 0 : 3;
    } else if (q.name == "median-check") {
        if (!params.lambda_is_integer()) {
            throw std::domain_error("median-check requires an integer lambda");
        }
        long li = params.lambda_floor().get_si();
        tc::EnclosureFn tail_fn = [&](int bits) {
            return tc::poisson_tail(tc::PoissonParams(lambda, tc::epsilon_from_bits(bits)), li);
        };
        tc::Decision d = tc::decide_exact_vs_true(tc::make_rational(tc::Int(1), tc::Int(2)),
                                                  tc::Rel::Le, tail_fn, pol);
        std::cout << "verdict: " << tc::verdict_name(d.verdict) << "\n";
        return d.verdict == tc::Verdict::Proven ? 0
               : d.verdict == tc::Verdict::Violated ? 2 : 3;
    } else if (q.name == "stirling") {
        if (!params.lambda_is_integer()) {
            throw std::domain_error("stirling requires an integer lambda (= m)");
        }
        tc::Verdict v = tc::stirling_check(params.lambda_floor().get_si(), pol);
        std::cout << "verdict: " << tc::verdict_name(v) << "\n";
        return v == tc::Verdict::Proven ? 0 : v == tc::Verdict::Violated ? 2 : 3;
    } else {
        throw CLI::ValidationError("--quantity",
                                   "expected one of pmf:k, tail:k, tce:k, mad, bound, "
                                   "tce-check, median-check, stirling");
    }
    return 0;
}

int run_orders(long n, const std::string& p_text, const std::string& q_text) {
    tc::BinomialParams left(n, tc::parse_rational(p_text));
    tc::BinomialParams right(n, tc::parse_rational(q_text));
    tc::OrderCheckReport lr = tc::check_likelihood_ratio_order(left, right);
    tc::OrderCheckReport hr = tc::check_hazard_rate_order(left, right);
    tc::OrderCheckReport hr0 = tc::check_hazard_rate_order_from_zero(left, right);
    auto print = [](const char* name, const tc::OrderCheckReport& rep) {
        std::cout << name << ": " << (rep.holds ? "holds" : "fails");
        if (rep.witness_k) std::cout << " (witness k=" << *rep.witness_k << ")";
        std::cout << "\n";
    };
    print("likelihood-ratio order", lr);
    print("hazard-rate order (k >= 1)", hr);
    print("hazard-rate order incl. k=0 (extended)", hr0);
    std::cout << "lr => hr: " << ((lr.holds && !hr.holds) ? "violated" : "consistent") << "\n";
    return (lr.holds && hr.holds) ? 0 : 2;
}

int run_explore(int max_len, long den_cap, bool perturb, const std::string& out_path) {
    tc::ExploreSpec spec;
    spec.max_len = max_len;
    spec.den_cap = den_cap;
    spec.include_perturbations = perturb;
    tc::ExploreResult res = tc::explore_mad_ratio(spec);

    std::ostringstream csv;
    csv << "probs,mad,variance,mad2_vs_half_variance,ratio\n";
    for (const tc::MadRatioEntry& e : res.rows) {
        std::string probs;
        for (size_t i = 0; i < e.probs.size(); ++i) {
            if (i) probs += ";";
            probs += tc::to_fraction_string(e.probs[i]);
        }
        const char* rel = e.cmp_half_variance > 0 ? ">" : e.cmp_half_variance < 0 ? "<" : "=";
        csv << probs << ',' << tc::to_fraction_string(e.mad) << ','
            << tc::to_fraction_string(e.variance) << ',' << rel << ','
            << tc::mad_ratio_decimal(e) << '\n';
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << csv.str();
    } else {
        std::cout << csv.str();
    }

    const tc::MadRatioEntry& min = res.rows[res.min_index];
    std::string probs;
    for (size_t i = 0; i < min.probs.size(); ++i) {
        if (i) probs += ", ";
        probs += tc::to_fraction_string(min.probs[i]);
    }
    std::cout << "exploratory minimum ratio mad/sqrt(v/2) = " << tc::mad_ratio_decimal(min)
              << " at probs (" << probs << ")"
              << (min.cmp_half_variance == 0 ? " [equality, mad^2 = v/2]" : "") << "\n"
              << "no bound is claimed; values above are an exhaustive-search report\n";
    return 0;
}

int run_claims() {
    for (const tc::ClaimInfo& c : tc::claim_catalog()) {
        std::cout << c.id << "\n  domain: " << c.domain << "\n  " << c.description << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified verification of binomial and Poisson mean-exceedance bounds"};
    app.require_subcommand(1);

    int precision_bits = 128;
    int precision_cap_bits = 2048;
    app.add_option("--precision-bits", precision_bits, "starting enclosure precision")
        ->capture_default_str();
    app.add_option("--precision-cap-bits", precision_cap_bits,
                   "escalation cap before INCONCLUSIVE")
        ->capture_default_str();

    // exact
    auto* cmd_exact = app.add_subcommand("exact", "exact rational binomial functionals");
    long ex_n = 0;
    std::string ex_p, ex_quantity;
    cmd_exact->add_option("--n", ex_n, "number of trials")->required();
    cmd_exact->add_option("--p", ex_p, "success probability, a/b or decimal")->required();
    cmd_exact->add_option("--quantity", ex_quantity,
                          "pmf:k | tail:k | tce:k | mad | exceed | median-check")
        ->required();

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "evaluate a lower bound and compare");
    long b_n = 0;
    std::string b_p, b_kind;
    bool b_sharp = false;
    cmd_bound->add_option("--n", b_n)->required();
    cmd_bound->add_option("--p", b_p)->required();
    cmd_bound->add_option("--kind", b_kind, "veraar | gm | rt | theorem1")->required();
    cmd_bound->add_flag("--sharp", b_sharp, "sharp denominator variant of theorem1");

    // poisson
    auto* cmd_poisson = app.add_subcommand("poisson", "certified Poisson quantities");
    std::string po_lambda, po_quantity;
    int po_eps_bits = 64;
    cmd_poisson->add_option("--lambda", po_lambda)->required();
    cmd_poisson->add_option("--quantity", po_quantity,
                            "pmf:k | tail:k | tce:k | mad | bound | tce-check | "
                            "median-check | stirling")
        ->required();
    cmd_poisson->add_option("--epsilon-bits", po_eps_bits, "target width 2^-bits")
        ->capture_default_str();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "grid verification, CSV records");
    long s_n_min = 2, s_n_max = 30, s_den_cap = 12, s_lambda_den_cap = 6, s_stirling_max = 200;
    std::string s_lambda_max = "12";
    std::string s_lambda_grid, s_claim = "ALL", s_out, s_corrupt;
    cmd_sweep->add_option("--n-min", s_n_min)->capture_default_str();
    cmd_sweep->add_option("--n-max", s_n_max)->capture_default_str();
    cmd_sweep->add_option("--p-den-cap", s_den_cap)->capture_default_str();
    cmd_sweep->add_option("--lambda-den-cap", s_lambda_den_cap)->capture_default_str();
    cmd_sweep->add_option("--lambda-max", s_lambda_max)->capture_default_str();
    cmd_sweep->add_option("--lambda-grid", s_lambda_grid,
                          "explicit comma-separated lambda list (overrides den-cap/max)");
    cmd_sweep->add_option("--stirling-max", s_stirling_max)->capture_default_str();
    cmd_sweep->add_option("--claim", s_claim, "claim id or ALL")->capture_default_str();
    cmd_sweep->add_option("--out", s_out, "CSV output path (default stdout)");
    cmd_sweep->add_option("--corrupt-bound-scale", s_corrupt,
                          "self-test: scale bound values to force violations");

    // orders
    auto* cmd_orders = app.add_subcommand("orders", "stochastic order checks");
    long o_n = 0;
    std::string o_p, o_q;
    cmd_orders->add_option("--n", o_n)->required();
    cmd_orders->add_option("--p", o_p)->required();
    cmd_orders->add_option("--q", o_q)->required();

    // explore-pb
    auto* cmd_explore = app.add_subcommand(
        "explore-pb", "Poisson-binomial MAD ratio exploration (no claims)");
    int e_max_len = 3;
    long e_den_cap = 4;
    bool e_no_perturb = false;
    std::string e_out;
    cmd_explore->add_option("--max-len", e_max_len)->capture_default_str();
    cmd_explore->add_option("--den-cap", e_den_cap)->capture_default_str();
    cmd_explore->add_flag("--no-perturb", e_no_perturb, "skip the perturbation family");
    cmd_explore->add_option("--out", e_out, "CSV output path (default stdout)");

    // claims
    app.add_subcommand("claims", "list the claim catalog");

    // tightness
    auto* cmd_tight = app.add_subcommand("tightness", "per-point bound comparison table");
    long t_n_min = 2, t_n_max = 30, t_den_cap = 12;
    std::string t_out;
    cmd_tight->add_option("--n-min", t_n_min)->capture_default_str();
    cmd_tight->add_option("--n-max", t_n_max)->capture_default_str();
    cmd_tight->add_option("--p-den-cap", t_den_cap)->capture_default_str();
    cmd_tight->add_option("--out", t_out, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    tc::PrecisionPolicy pol{precision_bits, precision_cap_bits};

    try {
        if (app.got_subcommand(cmd_exact)) {
            return run_exact(ex_n, ex_p, ex_quantity);
        }
        if (app.got_subcommand(cmd_bound)) {
            return run_bound(b_n, b_p, b_kind, b_sharp, pol);
        }
        if (app.got_subcommand(cmd_poisson)) {
            return run_poisson(po_lambda, po_quantity, po_eps_bits, pol);
        }
        if (app.got_subcommand(cmd_sweep)) {
            tc::GridSpec grid;
            grid.n_min = s_n_min;
            grid.n_max = s_n_max;
            grid.p_den_cap = s_den_cap;
            grid.stirling_m_max = s_stirling_max;
            grid.policy = pol;
            if (!s_lambda_grid.empty()) {
                std::stringstream ss(s_lambda_grid);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    grid.lambda_grid.push_back(tc::parse_rational(item));
                }
            } else {
                grid.lambda_grid =
                    tc::reduced_fractions_up_to(s_lambda_den_cap, tc::parse_rational(s_lambda_max));
            }
            tc::SweepOptions options;
            if (!s_corrupt.empty()) options.bound_scale = tc::parse_rational(s_corrupt);
            tc::SweepResult result = tc::run_claim_sweep(grid, s_claim, options);
            if (!s_out.empty()) {
                std::ofstream f(s_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open output file " + s_out);
                tc::write_csv(f, result.records);
                std::cout << result.summary_text();
            } else {
                tc::write_csv(std::cout, result.records);
                std::cerr << result.summary_text();
            }
            return result.exit_code();
        }
        if (app.got_subcommand(cmd_orders)) {
            return run_orders(o_n, o_p, o_q);
        }
        if (app.got_subcommand(cmd_explore)) {
            return run_explore(e_max_len, e_den_cap, !e_no_perturb, e_out);
        }
        if (app.got_subcommand("claims")) {
            return run_claims();
        }
        if (app.got_subcommand(cmd_tight)) {
            tc::GridSpec grid;
            grid.n_min = t_n_min;
            grid.n_max = t_n_max;
            grid.p_den_cap = t_den_cap;
            grid.policy = pol;
            std::vector<tc::TightnessRow> rows = tc::tightness_report(grid);
            if (!t_out.empty()) {
                std::ofstream f(t_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open output file " + t_out);
                tc::write_tightness_csv(f, rows);
            } else {
                tc::write_tightness_csv(std::cout, rows);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
