#include "tailcert/compare.hpp"

namespace tailcert {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Proven: return "PROVEN";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::DomainSkipped: return "DOMAIN_SKIPPED";
    }
    return "?";
}

namespace {

// Exact three-way decision against a pinned value; 1 = holds, -1 = fails.
int decide_exact(int c, Rel rel) {
    switch (rel) {
        case Rel::Le: return c <= 0 ? 1 : -1;
        case Rel::Lt: return c < 0 ? 1 : -1;
        case Rel::Ge: return c >= 0 ? 1 : -1;
        case Rel::Gt: return c > 0 ? 1 : -1;
    }
    return -1;
}

}  // namespace

Decision decide_exact_vs_true(const Rational& exact, Rel rel, const EnclosureFn& fn,
                              const PrecisionPolicy& pol) {
    Decision d;
    for (int bits = pol.start_bits;; bits *= 2) {
        if (bits > pol.cap_bits) {
            d.verdict = Verdict::Inconclusive;
            return d;
        }
        Interval enc = fn(bits);
        d.enclosure = enc;
        d.bits_used = bits;
        if (is_degenerate(enc)) {
            int c = -cmp(enc.lo, exact);  // exact vs pinned value
            d.verdict = decide_exact(c, rel) > 0 ? Verdict::Proven : Verdict::Violated;
            return d;
        }
        int vs_lo = cmp(enc.lo, exact);  // sign of lo - exact
        int vs_hi = cmp(enc.hi, exact);
        switch (rel) {
            case Rel::Le:  // exact <= value
                if (vs_lo >= 0) { d.verdict = Verdict::Proven; return d; }
                if (vs_hi < 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Lt:  // exact < value
                if (vs_lo > 0) { d.verdict = Verdict::Proven; return d; }
                if (vs_hi <= 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Ge:  // exact >= value
                if (vs_hi <= 0) { d.verdict = Verdict::Proven; return d; }
                if (vs_lo > 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Gt:  // exact > value
                if (vs_hi < 0) { d.verdict = Verdict::Proven; return d; }
                if (vs_lo >= 0) { d.verdict = Verdict::Violated; return d; }
                break;
        }
    }
}

Decision2 decide_true_vs_true(const EnclosureFn& lhs, Rel rel, const EnclosureFn& rhs,
                              const PrecisionPolicy& pol) {
    Decision2 d;
    for (int bits = pol.start_bits;; bits *= 2) {
        if (bits > pol.cap_bits) {
            d.verdict = Verdict::Inconclusive;
            return d;
        }
        Interval l = lhs(bits);
        Interval r = rhs(bits);
        d.lhs = l;
        d.rhs = r;
        d.bits_used = bits;
        if (is_degenerate(l) && is_degenerate(r)) {
            d.verdict = decide_exact(cmp(l.lo, r.lo), rel) > 0 ? Verdict::Proven
                                                               : Verdict::Violated;
            return d;
        }
        switch (rel) {
            case Rel::Le:
                if (cmp(l.hi, r.lo) <= 0) { d.verdict = Verdict::Proven; return d; }
                if (cmp(l.lo, r.hi) > 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Lt:
                if (cmp(l.hi, r.lo) < 0) { d.verdict = Verdict::Proven; return d; }
                if (cmp(l.lo, r.hi) >= 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Ge:
                if (cmp(l.lo, r.hi) >= 0) { d.verdict = Verdict::Proven; return d; }
                if (cmp(l.hi, r.lo) < 0) { d.verdict = Verdict::Violated; return d; }
                break;
            case Rel::Gt:
                if (cmp(l.lo, r.hi) > 0) { d.verdict = Verdict::Proven; return d; }
                if (cmp(l.hi, r.lo) <= 0) { d.verdict = Verdict::Violated; return d; }
                break;
        }
    }
}

}  // namespace tailcert
