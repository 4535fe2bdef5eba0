// Special functions at arbitrary precision: complex log-gamma and digamma
// (Stirling series with argument shifting and reflection), the upper
// incomplete gamma function Gamma(s, x) for complex s and real x > 0
// (continued fraction / complement-series split), and 1/Gamma with exact
// zeros at the poles.
#pragma once

#include "seczeta/complexnum.hpp"
#include "seczeta/precision.hpp"

#include <stdexcept>

namespace seczeta {

class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// True iff z is exactly a nonpositive integer (a pole of Gamma).
bool is_gamma_pole(const Complex& z);

// Principal-branch-per-component log Gamma(z). Accurate in modulus and in
// phase mod 2*pi everywhere; the imaginary part is the continuous branch
// (true principal value) for Re z > 0, which is the only region where
// callers rely on the branch itself. Throws PoleError at nonpositive
// integers.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

// Digamma psi(z). Throws PoleError at nonpositive integers.
Complex digamma(const Complex& z, const PrecisionContext& ctx);

// 1/Gamma(z): exact zero when z is exactly a nonpositive integer,
// exp(-log_gamma(z)) otherwise. Entire, so no error cases.
Complex recip_gamma(const Complex& z, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(s, x), x > 0, complex s. `underflow`, when
// given, is set if e^{-x} underflows the working exponent range (the result
// is then an exact zero).
Complex upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx,
                    bool* underflow = nullptr);

// log Gamma(s, x) for x > 0. Used by series summands in the form
// exp(log Gamma(s,x) - log Gamma(s) - ...) so that huge/tiny magnitudes
// never appear as separate factors.
//
// `lgamma_hint`, when given, must be log Gamma(s) carrying at least the
// internal working precision of this call; the complement branch then reuses
// it instead of recomputing log Gamma(s) per call. Series that evaluate
// Gamma(s, x_n) for one fixed s across many x_n pass the hint so the gamma
// evaluation happens once per series rather than once per summand.
Complex log_upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx,
                        const Complex* lgamma_hint = nullptr);

}  // namespace seczeta
