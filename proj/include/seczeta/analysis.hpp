// Identity checks and critical-point exploration on top of the evaluator:
// the heat-kernel identity relating the zero ordinates to the von Mangoldt
// function, the dual computation of its Phi transform, exact special values
// from Euler numbers, real zeros and extrema of Z on the real axis, and the
// pole-free cosine form 2 Z(s) cos(pi s / 2).
#pragma once

#include "seczeta/engine.hpp"

#include <gmpxx.h>

#include <string>

namespace seczeta {

struct ModularCheck {
    Real lhs;                // sum over ordinates of exp(-gamma_n^2 x)
    Real rhs;                // prime side + e^{x/4} - Phi(x)
    long digits_agreed = 0;  // see below
};

// Heat-kernel identity at x: compares
//
//   lhs = sum_{n=1}^{n_zeros} exp(-gamma_n^2 x)
//   rhs = -(1 / (2 sqrt(pi x))) sum_{n=2}^{n_primes} Lambda(n) n^{-1/2}
//             exp(-log^2 n / (4x))
//         + e^{x/4} - Phi(x)
//
// with Phi evaluated by quadrature of its closed integral form (see
// phi_closed_form). The two sides share no machinery: the left side knows
// only zero ordinates, the right side only prime powers and the Phi
// transform.
//
// digits_agreed counts agreement on the absolute difference,
// floor(-log10(|lhs - rhs| + 10^-(wd-5))) with wd the context's working
// digits. The identity's natural scale is O(1) (the e^{x/4} and Phi terms),
// while lhs itself can be ~1e-44 at x = 0.5, so a relative count against
// lhs would demand precision far beyond the context; the absolute count is
// also what makes the agreement monotone in the truncation levels.
//
// Preconditions: x in [0.01, 1], n_zeros >= 1, n_primes >= 2. Throws
// std::domain_error when x is out of range or when either truncation tail
// cannot reach the working epsilon at the given levels.
ModularCheck check_modular(double x, long n_zeros, long n_primes,
                           const PrecisionContext& ctx);

// Phi(x) computed two independent ways:
//
//   (1 / 2pi) Integral_0^inf e^{-x t^2} Psi(t) dt,
//       Psi(t) = log 2pi + pi / (2 cosh pi t) - Re psi(1/2 + i t)
//
// against the closed form
//
//   (C_0 + log 16 pi^2 x) / (8 sqrt(pi x))
//   - (1 / (4 sqrt(pi x))) Integral_0^inf e^{-u^2 / 16x}
//         (1/u - e^{3u/4} / (e^u - 1)) du
//
// and returns the number of agreeing significant digits. Preconditions:
// x in [0.01, 1]. Quadrature non-convergence surfaces as the quadrature
// module's std::runtime_error.
long check_phi_equality(double x, const PrecisionContext& ctx);

// The closed-form side alone (also the rhs ingredient of check_modular).
Real phi_closed_form(double x, const PrecisionContext& ctx);

struct SpecialValue {
    Complex computed;  // Z(-2n) from the evaluator
    mpq_class exact;   // (-1)^n (8 - E_{2n}) / 2^(2n+3)
};

// Z(-2n) against the exact rational from Euler numbers, n >= 1.
SpecialValue special_value_check(long n, long digits = 30);

struct CriticalPoint {
    enum class Kind { zero_of_Z, extremum_min, extremum_max, derivative_zero };
    Kind kind = Kind::zero_of_Z;
    Real location;
    Real value;  // Z(location)
};

const char* critical_kind_name(CriticalPoint::Kind k);

// Locate a real zero of Z near x0 to `digits` digits. Requires a sign
// change within 0.5 of x0; throws std::runtime_error when no bracket is
// found. Pole-aware: within 0.6 of a pole p the solver brackets and refines
// (x - p) Z(x) instead, which is analytic through p, so zeros hugging a
// pole (the table zeros near -5, -7, -9 sit within 1e-6 of one) resolve
// without fighting the blow-up; the returned point is then re-polished
// until |Z| itself clears the reporting threshold 10^-(digits-2).
CriticalPoint find_real_zero_near(double x0, long digits);

// Locate an extremum of Z near x0 to `digits` digits: secant iteration on
// the central difference (step 10^-(wd/3) at wd ~ 3*digits/2 working
// digits), classified min/max by the second difference (derivative_zero
// when the second difference is below the noise floor). Requires a
// derivative sign change near x0; throws std::runtime_error otherwise.
CriticalPoint find_extremum_near(double x0, long digits);

// 2 Z(s) cos(pi s / 2): the combination whose cosine zeros cancel the
// simple poles of Z. At exact odd negative integers the value is the limit
// (-1)^(n+1) pi Res_{-(2n-1)} Z; at s = 1 the double pole is not cancelled
// and PoleProximity is thrown.
Complex z_cos_form(const Complex& s, long digits);

// JSON record {kind, location, value, digits} with the numerics rendered as
// fixed-width decimal strings.
std::string critical_point_to_json(const CriticalPoint& cp, long digits);

}  // namespace seczeta
