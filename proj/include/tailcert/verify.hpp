#pragma once

#include "tailcert/binomial.hpp"
#include "tailcert/bounds.hpp"
#include "tailcert/compare.hpp"
#include "tailcert/orders.hpp"
#include "tailcert/poisson.hpp"
#include "tailcert/poisson_binomial.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tailcert {

// Deterministic verification grid: binomial points are (n, p) for
// n in [n_min, n_max] and p over reduced_fractions(p_den_cap), enumerated
// sorted by (n, p); Poisson claims run over lambda_grid and the Stirling
// check over m = 1..stirling_m_max.
struct GridSpec {
    long n_min = 2;
    long n_max = 30;
    long p_den_cap = 12;
    std::vector<Rational> lambda_grid;
    long stirling_m_max = 200;
    PrecisionPolicy policy;
};

// One grid point of one claim. `point` renders the p/lambda slot of the CSV
// ("1/3", "1/4<1/2" for order pairs, "k=3" for monotonicity rows, "5" for
// Stirling's m). margin is the certified slack in the claim's direction and
// is nonnegative on every PROVEN record that carries one.
struct VerificationRecord {
    std::string claim_id;
    std::string dist;  // "binomial" | "poisson"
    std::optional<long> n;
    std::string point;
    std::optional<Rational> exact_value;
    std::optional<Interval> bound;
    Verdict verdict{Verdict::Inconclusive};
    std::optional<Rational> margin;
    std::string note;  // not part of the CSV; surfaced in the summary
};

struct ClaimInfo {
    std::string id;
    std::string description;
    std::string domain;
};

// Every sweepable claim, in sweep order. The PROOF_CHAIN sweep emits records
// under the per-link ids CHAIN_A_IDENTITY .. CHAIN_F_SHARP_RELAXED.
const std::vector<ClaimInfo>& claim_catalog();

struct SweepOptions {
    // Self-test fixture: scales lower-bound values before comparison so a
    // deliberately corrupted constant is caught as VIOLATED (exit 2).
    Rational bound_scale{1};
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    long proven{0};
    long violated{0};
    long inconclusive{0};
    long skipped{0};

    // 0 all proven/skipped, 2 violations present, 3 inconclusive only.
    int exit_code() const;
    std::string summary_text() const;
};

// Runs one claim (or every claim for id "ALL") over the grid. Unknown ids
// raise std::invalid_argument listing the catalog.
SweepResult run_claim_sweep(const GridSpec& grid, const std::string& claim_id,
                            const SweepOptions& options = {});

// The six-link audit of the derivation at a non-integer-np core-domain point:
// (a) the exceedance identity, (b) the MAD lower bound, (c) TCE monotonicity
// in p, (d) the integer-mean TCE bound, (e) the ceiling relaxation, (f) the
// sharp-to-relaxed denominator step. Throws std::domain_error off-domain.
std::vector<VerificationRecord> proof_chain_audit(const BinomialParams& params,
                                                  const PrecisionPolicy& pol = {});

// Per-point comparison of every in-domain bound against the exact tail.
struct TightnessRow {
    long n{0};
    Rational p;
    Rational exact_tail;
    std::optional<Rational> veraar;
    std::optional<Rational> gm;
    std::optional<Rational> rt;
    std::optional<Interval> thm1;
    std::optional<Interval> thm1_sharp;
    std::string best;
    bool quarter_consistent{true};
};

std::vector<TightnessRow> tightness_report(const GridSpec& grid);

// Fixed-header record CSV (UTF-8, LF):
// claim_id,dist,n,p,exact,bound_lo,bound_hi,verdict,margin
void write_csv(std::ostream& os, const std::vector<VerificationRecord>& records);
void write_tightness_csv(std::ostream& os, const std::vector<TightnessRow>& rows);

}  // namespace tailcert
