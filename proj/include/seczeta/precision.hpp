// Precision policy: decimal-digit precision contexts and the
// cancellation-driven escalation rule.
//
// The evaluator's intermediate terms can exceed the final result by dozens
// of orders of magnitude (the four-term decomposition cancels almost
// completely). A PrecisionContext records the caller's requested digits and
// the escalation applied to survive that cancellation:
//
//   work_digits = target_digits + max(0, ceil(magnitude_log10)) + guard_digits
//
// where magnitude_log10 estimates the largest intermediate term. Contexts
// are immutable values; escalation returns a new context and never lowers
// the working precision.
#pragma once

#include "seczeta/real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace seczeta {

// Thrown when escalation would exceed the configured hard cap.
class InfeasiblePrecision : public std::runtime_error {
  public:
    explicit InfeasiblePrecision(const std::string& what) : std::runtime_error(what) {}
};

inline long max_digits_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("SECZETA_MAX_DIGITS")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 10000L;
    }();
    return cap;
}

struct PrecisionContext {
    long target_digits = 15;   // digits requested by the caller
    long magnitude = 0;        // ceil(log10) of the largest intermediate, >= 0
    long guard_digits = 10;    // rounding guard for few-hundred-term sums

    static PrecisionContext make(long target, long guard = 10) {
        if (target < 1) throw std::invalid_argument("target_digits must be >= 1");
        PrecisionContext ctx;
        ctx.target_digits = target;
        ctx.guard_digits = guard;
        ctx.check_cap();
        return ctx;
    }

    long work_digits() const { return target_digits + magnitude + guard_digits; }
    mpfr_prec_t bits() const { return bits_for_digits(work_digits()); }

    // 10^-work_digits at working precision.
    Real epsilon() const {
        Real e(static_cast<long>(-work_digits()), bits());
        return exp10(e);
    }

    // Series stop threshold: 10^-(target + magnitude + 2). Terms below this
    // cannot move the target digits even after the big cancellation; stopping
    // here (rather than at the full work epsilon) reproduces the truncation
    // counts the term diagnostics are calibrated to, while the extra guard
    // digits protect the arithmetic itself.
    Real series_epsilon() const {
        Real e(static_cast<long>(-(target_digits + magnitude + 2)), bits());
        return exp10(e);
    }

    // Escalate to cover intermediates of size ~10^magnitude_log10.
    // Idempotent and monotone: the stored magnitude only ever grows.
    PrecisionContext escalate(double magnitude_log10) const {
        long m = magnitude_log10 > 0 ? static_cast<long>(std::ceil(magnitude_log10)) : 0;
        PrecisionContext ctx = *this;
        if (m > ctx.magnitude) ctx.magnitude = m;
        ctx.check_cap();
        return ctx;
    }

    // Extra digits on top of the current working precision (for internal
    // sub-evaluations that need their own headroom, e.g. near-pole factors).
    PrecisionContext bump(long extra_digits) const {
        PrecisionContext ctx = *this;
        if (extra_digits > 0) ctx.magnitude += extra_digits;
        ctx.check_cap();
        return ctx;
    }

    void check_cap() const {
        if (work_digits() > max_digits_cap()) {
            throw InfeasiblePrecision(
                "requested working precision " + std::to_string(work_digits()) +
                " digits exceeds cap " + std::to_string(max_digits_cap()) +
                " (set SECZETA_MAX_DIGITS to override)");
        }
    }
};

}  // namespace seczeta
