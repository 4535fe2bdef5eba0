// Full evaluations of Z(s): smoothing-parameter selection, the cheap
// magnitude probe and precision escalation, the four-term combination,
// honest error reporting, pole refusal, and the two-parameter consistency
// check. Also the pole data itself: numeric finite parts and residues with
// their closed-form counterparts.
#pragma once

#include "seczeta/specials.hpp"
#include "seczeta/terms.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace seczeta {

struct PoleInfo {
    long location = 0;  // 1 (double) or a negative odd integer (simple)
    int order = 0;
};

// Thrown when an evaluation point sits inside the guard radius
// 10^(-target_digits) of a pole: a plain value would be meaningless there.
// Carries the pole's location and order; finite_part()/residue_at() are the
// meaningful queries at the pole itself.
class PoleProximity : public PoleError {
  public:
    PoleProximity(const std::string& what, PoleInfo info)
        : PoleError(what), info_(info) {}
    const PoleInfo& info() const { return info_; }

  private:
    PoleInfo info_;
};

struct TermBreakdown {
    Complex A, P, E, S;
    long zeros_used = 0;    // term_A's count
    long lambdas_used = 0;  // term_P's stopping integer
    Real err_A, err_P, err_E, err_S;
};

struct EvalResult {
    Complex z;              // held at full working precision: exactly
                            // ((A - P) + E) - S, never reassociated
    TermBreakdown breakdown;
    Real error_estimate;    // combined absolute heuristic (sum of the four)
    double a_used = 0.0;
    long work_digits = 0;
    std::optional<long> agreed_digits;  // set by the two-a verification
    std::optional<PoleInfo> pole_info;  // set only on finite-part results
    bool is_finite_part = false;        // z holds a finite part, not a value
};

struct EvalOptions {
    std::optional<double> a;  // force this smoothing parameter (no fallback)
    bool verify = false;      // re-evaluate at a second a, fill agreed_digits
    double verify_a = 0.0;    // 0 = pick the next rung of the ladder
};

// Evaluate Z(s) to target_digits significant digits.
//
// Pipeline: pick a (default 0.015), probe the magnitude of the dominant
// intermediates at 20 digits, escalate the working precision to survive the
// cancellation, evaluate the four terms, combine. If the singular series
// cannot reach the target at this a (AsymptoticFailure), or the combined
// error estimate misses the budget, fall down the ladder {0.015, 0.005,
// 0.0025} (unless options force a specific a). The returned error_estimate
// is honest: it may exceed 10^(-target_digits) on the last rung, in which
// case the caller sees exactly that.
//
// Throws PoleProximity inside the guard radius of s = 1 and the negative
// odd integers, InfeasiblePrecision past the precision cap, and
// AsymptoticFailure when every rung fails.
EvalResult secondzeta(const Complex& s, long target_digits, const EvalOptions& opt = {});

// The pole of Z nearest to s if s lies within the guard radius
// 10^(-target_digits) of it. Poles: s = 1 (order 2), s = -(2n-1) (order 1).
std::optional<PoleInfo> pole_near(const Complex& s, long target_digits);

// Two evaluations with different smoothing parameters and the count of
// leading significant digits on which they agree (minimum over the real and
// imaginary parts). Digits shared by two evaluations whose series have
// completely different truncation structure are almost surely correct.
long verify_two_a(const Complex& s, long target_digits, double a1, double a2);

// Count of leading significant digits on which two values agree (minimum
// over components; capped at `cap`).
long agreed_digits(const Complex& x, const Complex& y, long cap);

struct FinitePart {
    Real value;
    Real error_estimate;  // spread of the extrapolation's last two levels
};

// Finite part of Z at a pole: the symmetric mean (Z(p+h) + Z(p-h))/2
// extrapolated to h = 0 (Richardson over h in {1e-3, 1e-4, 1e-5}, the inner
// evaluations carrying target_digits + 20 working digits). At the double
// pole s = 1 the even singular part (2 pi)^{-1} h^{-2} is removed before
// extrapolating; the odd part cancels in the mean by itself.
FinitePart finite_part(long pole_s, long target_digits);

// Residue at a simple pole s = -(2n-1), extrapolated from h * Z(p+h).
FinitePart residue_at(long pole_s, long target_digits);

// Exact closed form of the same residue: (-1)^n (1 - 2^{1-2n}) B_{2n} / (4 pi n).
Real residue_closed_form(long pole_s, mpfr_prec_t prec);

// Coefficients (c2, c1) of the double pole at s = 1, extrapolated from the
// even and odd parts of h^2 Z(1+h) at h in {1e-3, 1e-4, 1e-5}. Closed
// forms: c2 = 1/(2 pi), c1 = -log(2 pi)/(2 pi).
std::pair<Real, Real> double_pole_main_part(long target_digits);

}  // namespace seczeta
