// The four building blocks of the analytic continuation
//
//   Z(s) = A(s) - P(s) + E(s) - S(s),
//
// each depending on a smoothing parameter a in (0,1):
//
//   A  -- sum over ordinates of the nontrivial zeta zeros, smoothed by a
//         regularized upper incomplete gamma factor,
//   P  -- sum over prime powers weighted by the von Mangoldt function,
//   E  -- an entire exponential-integral series,
//   S  -- the singular part: the pole terms at s = 1 plus an asymptotic
//         series in sqrt(a) whose coefficients involve Bernoulli polynomial
//         values at 3/4; it carries all poles of Z (double at 1, simple at
//         the negative odd integers).
//
// Truncation policy (shared by all four): a series term is compared against
// ctx.series_epsilon(), an absolute threshold tied to the requested digits
// plus the cancellation magnitude of the decomposition. The first summand
// that falls below the threshold stops the loop. terms_used reports each
// series' natural progress measure, chosen to match the diagnostic counts
// the decomposition's reference tables are calibrated to: for A it is the
// number of zero ordinates fetched (the below-threshold probe included,
// though never added); for P it is the stopping integer of the scan over
// n = 2, 3, 4, ...; for E and S it is the index of the last term examined.
// The S series is asymptotic rather than convergent: its odd-indexed terms
// dominate and are monitored; if they start growing before reaching the
// threshold the achievable accuracy has bottomed out and AsymptoticFailure
// is thrown when that floor is worse than the target.
#pragma once

#include "seczeta/complexnum.hpp"
#include "seczeta/precision.hpp"

#include <stdexcept>

namespace seczeta {

// The asymptotic (singular) series cannot reach the requested accuracy for
// this value of a. The evaluator catches this and retries with a smaller a.
class AsymptoticFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class StopReason {
    below_epsilon,    // a term fell under the series threshold
    terms_increasing, // asymptotic series truncated at its smallest term
    exhausted         // iteration cap reached (reported, never silent)
};

struct TermResult {
    Complex value;
    long terms_used = 0;      // includes the final below-threshold probe
    Real error_estimate;      // heuristic absolute bound on the truncation
    StopReason reason = StopReason::below_epsilon;
};

struct EvalParams {
    Complex s;
    double a = 0.015;  // kept as a machine double: the decomposition is
                       // exact for ANY a, and the reference tables depend
                       // on the binary value of the double literal
    PrecisionContext ctx;
};

// Zero-ordinate sum. terms_used = zeros evaluated (see header comment).
// Exactly zero (with a trivial count) when 1/Gamma(s/2) vanishes, i.e. at
// even nonpositive integer s.
TermResult term_A(const EvalParams& p);

// Prime-power sum. terms_used = the stopping integer n of the scan over
// n = 2, 3, 4, ...; integers with a zero von Mangoldt value never stop the
// scan, and the scan always proceeds through n = 9 before a stop is allowed
// (the early terms are not monotone in magnitude).
TermResult term_P(const EvalParams& p);

// Entire exponential series. At exact even nonpositive integer s returns the
// closed form E(-2m) = (-1)^m / 4^m (the series' lattice pole cancels the
// gamma prefactor's zero there; the closed form is the limit).
TermResult term_E(const EvalParams& p);

// Singular term. Throws PoleError at s = 1 and at negative odd integers
// (the actual poles of Z). At exact even nonpositive integer s returns the
// closed form S(-2m) = (-1)^m E_{2m} / (8 * 4^m) (Euler number), the limit
// of the cancelling pole/zero pair. Throws AsymptoticFailure when the
// divergent tail prevents reaching the target accuracy at this a.
TermResult term_S(const EvalParams& p);

}  // namespace seczeta
