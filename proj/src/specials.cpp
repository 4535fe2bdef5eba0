#include "seczeta/specials.hpp"

#include "seczeta/arith.hpp"

#include <cmath>

namespace seczeta {

namespace {

// Internal guard on top of the caller's working precision.
constexpr long kGuard = 5;

PrecisionContext sub_context(long work_digits) {
    return PrecisionContext::make(work_digits, 0);
}

// 10^-d at `prec` bits.
Real pow10_neg(long d, mpfr_prec_t prec) {
    return exp10(Real(-d, prec));
}

// log sin(pi z) up to a multiple of 2*pi*i (callers only exponentiate).
// The argument is reduced exactly by the nearest integer to Re z, so values
// close to the real-axis zeros of sin lose no accuracy.
Complex log_sin_pi(const Complex& z, mpfr_prec_t prec) {
    Complex w = z;
    long n = 0;
    Real rounded = round_nearest(z.re);
    if (rounded.fits_long()) {
        n = rounded.to_long();
        w.re = z.re - n;  // exact: |Re w| <= 1/2
    }
    Real pi = const_pi(prec);
    Complex s = sin(Complex(w.re * pi, w.im * pi));
    Complex ls = log(s);
    if (n % 2 != 0) ls.im = ls.im + pi;  // sin(pi(w+n)) = (-1)^n sin(pi w)
    return ls;
}

// Stirling series for log Gamma(z), valid once Re z >= 0.5 and |z| is large
// relative to the digit count. `wd` is the working digit count.
Complex stirling_log_gamma(Complex z, long wd, mpfr_prec_t prec) {
    const double radius = 0.65 * (double)wd + 10.0;
    // Shift z up until the asymptotic series can reach the target accuracy.
    Complex shift(prec);
    bool shifted = false;
    while (z.re < 0.5 || abs(z).to_double() < radius) {
        shift = shift + log(z);
        z = z + 1L;
        shifted = true;
    }
    Real pi = const_pi(prec);
    Complex lz = log(z);
    Complex acc = (z - Real(0.5, prec)) * lz - z + Real(0.5, prec) * log(pi * 2L);
    // sum_{k>=1} B_{2k} / (2k (2k-1) z^{2k-1})
    Complex z2 = z * z;
    Complex zpow = Real(1L, prec) / z;  // z^{-(2k-1)}
    Real eps = pow10_neg(wd + 2, prec);
    Real prev_mag(prec);
    mpfr_set_inf(prev_mag.get(), 1);
    for (unsigned k = 1;; ++k) {
        Real coef = rational_to_real(mpq_class(bernoulli_number(2 * k) /
                                               mpq_class(2 * k * (2 * k - 1))),
                                     prec);
        Complex term = zpow * coef;
        Real mag = abs(term);
        if (mag < eps) break;
        if (mag >= prev_mag || k > (unsigned)(2 * wd + 40))
            throw std::runtime_error("log_gamma: asymptotic series stalled");
        acc = acc + term;
        prev_mag = mag;
        zpow = zpow / z2;
    }
    if (shifted) acc = acc - shift;
    return acc;
}

Complex stirling_digamma(Complex z, long wd, mpfr_prec_t prec) {
    const double radius = 0.65 * (double)wd + 10.0;
    Complex shift(prec);
    bool shifted = false;
    while (z.re < 0.5 || abs(z).to_double() < radius) {
        shift = shift + Real(1L, prec) / z;
        z = z + 1L;
        shifted = true;
    }
    // psi(z) = log z - 1/(2z) - sum_{k>=1} B_{2k} / (2k z^{2k})
    Complex acc = log(z) - Real(0.5, prec) / z;
    Complex z2 = z * z;
    Complex zpow = Real(1L, prec) / z2;  // z^{-2k}
    Real eps = pow10_neg(wd + 2, prec);
    Real prev_mag(prec);
    mpfr_set_inf(prev_mag.get(), 1);
    for (unsigned k = 1;; ++k) {
        Real coef = rational_to_real(mpq_class(bernoulli_number(2 * k) /
                                               mpq_class(2 * k)),
                                     prec);
        Complex term = zpow * coef;
        Real mag = abs(term);
        if (mag < eps) break;
        if (mag >= prev_mag || k > (unsigned)(2 * wd + 40))
            throw std::runtime_error("digamma: asymptotic series stalled");
        acc = acc - term;
        prev_mag = mag;
        zpow = zpow / z2;
    }
    if (shifted) acc = acc - shift;
    return acc;
}

}  // namespace

bool is_gamma_pole(const Complex& z) {
    return z.im.is_zero() && z.re.is_finite() && z.re.sign() <= 0 &&
           mpfr_integer_p(z.re.get()) != 0;
}

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
    if (is_gamma_pole(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    long wd = ctx.work_digits() + kGuard;
    mpfr_prec_t prec = bits_for_digits(wd);
    if (z.im.is_zero()) {
        // Real axis: MPFR computes log|Gamma| and the sign directly.
        int sg = 0;
        Real lg = lgamma_real(z.re.round_to(prec), &sg);
        Real im(0L, prec);
        if (sg < 0) im = const_pi(prec);  // Gamma < 0: odd multiple of i*pi
        return Complex(std::move(lg), std::move(im));
    }
    if (z.im.sign() < 0) return conj(log_gamma(conj(z), ctx));
    Complex zz = z.round_to(prec);
    if (zz.re < 0.5 && zz.im < 1.0) {
        // Close to the negative real axis: reflect instead of shifting the
        // argument across all the poles. The branch of the result is only
        // defined mod 2*pi*i, which every caller in this codebase accepts
        // (the value is always exponentiated).
        Real pi = const_pi(prec);
        Complex rest = log_gamma(Complex(Real(1L, prec) - zz.re, -zz.im), ctx);
        return log(Complex(pi)) - log_sin_pi(zz, prec) - rest;
    }
    return stirling_log_gamma(zz, wd, prec);
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
    if (is_gamma_pole(z)) throw PoleError("digamma: pole at nonpositive integer");
    long wd = ctx.work_digits() + kGuard;
    mpfr_prec_t prec = bits_for_digits(wd);
    if (z.im.is_zero()) return Complex(digamma_real(z.re.round_to(prec)));
    if (z.im.sign() < 0) return conj(digamma(conj(z), ctx));
    Complex zz = z.round_to(prec);
    if (zz.re < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z); reduce the argument exactly so
        // cot is accurate near the real axis.
        Real pi = const_pi(prec);
        Complex w = zz;
        Real rounded = round_nearest(zz.re);
        if (rounded.fits_long()) w.re = zz.re - rounded.to_long();
        Complex pw(w.re * pi, w.im * pi);
        Complex cot = cos(pw) / sin(pw);
        Complex rest = digamma(Complex(Real(1L, prec) - zz.re, -zz.im), ctx);
        return rest - pi * cot;
    }
    return stirling_digamma(zz, wd, prec);
}

Complex recip_gamma(const Complex& z, const PrecisionContext& ctx) {
    if (is_gamma_pole(z)) return Complex(ctx.bits());  // exact zero
    Complex lg = log_gamma(z, ctx);
    return exp(-lg);
}

namespace {

// Continued fraction for Gamma(s, x), valid when x dominates |s|.
// Modified Lentz on  Gamma(s,x) = e^{-x} x^s / (x+1-s - 1(1-s)/(x+3-s - ...)).
// Returns log Gamma(s, x).
Complex upper_gamma_cf_log(const Complex& s, const Real& x, long wd,
                           mpfr_prec_t prec) {
    Real tiny = pow10_neg(2 * wd + 60, prec);
    Real eps = pow10_neg(wd + 2, prec);
    Complex b = Complex(x) + Real(1L, prec) - s;
    Complex c = Complex(Real(1L, prec) / tiny);
    Complex d = Real(1L, prec) / b;
    Complex h = d;
    long maxit = 400 + 60 * wd;
    for (long i = 1; i <= maxit; ++i) {
        Complex an = Real((double)-i, prec) * (Real((double)i, prec) - s);
        b = b + 2L;
        d = an * d + b;
        if (abs(d) < tiny) d = Complex(tiny);
        c = b + an / c;
        if (abs(c) < tiny) c = Complex(tiny);
        d = Real(1L, prec) / d;
        Complex del = d * c;
        h = h * del;
        if (abs(del - Real(1L, prec)) < eps)
            return Complex(-x) + s * Complex(log(x)) + log(h);
    }
    throw std::runtime_error("upper_gamma: continued fraction stalled");
}

// Gamma(-m, x) for exact integer m >= 0 and small-to-moderate x, via the
// E1 power series and downward recurrence. All quantities are real positive.
Real upper_gamma_int_chain(long m, const Real& x, long wd, mpfr_prec_t prec0) {
    double xd = x.to_double();
    long wd2 = wd + 2 * (long)std::ceil(xd * 0.4342944819032518) + 10;
    mpfr_prec_t prec = bits_for_digits(wd2);
    Real xx = x.round_to(prec);
    // Gamma(0,x) = E1(x) = -euler - log x + sum_{k>=1} (-1)^{k+1} x^k/(k k!)
    Real acc = -const_euler(prec) - log(xx);
    Real term(1L, prec);  // x^k / k!
    Real eps = pow10_neg(wd2 + 2, prec);
    for (long k = 1;; ++k) {
        term = term * xx / k;
        Real contrib = term / k;
        if (contrib < eps) break;
        if (k % 2 == 1) acc = acc + contrib; else acc = acc - contrib;
    }
    // Downward: Gamma(s-1,x) = (Gamma(s,x) - x^{s-1} e^{-x}) / (s-1),
    // from s = 0 through s = -m+1. The power term starts at x^{-1} e^{-x}.
    Real p = exp(-xx) / xx;
    for (long j = 1; j <= m; ++j) {
        acc = (acc - p) / (-(long)j);
        p = p / xx;
    }
    return acc.round_to(prec0);
}

// Complement form: Gamma(s,x) = Gamma(s) * Q with
// Q = 1 - exp(s log x - x + log(sum) - log Gamma(s)), where sum is the
// Kummer series sum_k x^k / (s (s+1) ... (s+k)). Requires Re s >= 0.5.
// Returns log Gamma(s, x) as lgamma(s) + log Q so that callers dividing by
// Gamma(s) see Q with full relative accuracy. `lgamma_hint`, if precise
// enough, supplies log Gamma(s) without recomputation.
Complex upper_gamma_complement_log(const Complex& s, const Real& x, long wd,
                                   const Complex* lgamma_hint) {
    double xd = x.to_double();
    long wd2 = wd + (long)std::ceil(xd * 0.4342944819032518) + 10;
    mpfr_prec_t prec = bits_for_digits(wd2);
    Complex ss = s.round_to(prec);
    Real xx = x.round_to(prec);
    Complex term = Real(1L, prec) / ss;
    Complex sum = term;
    Real eps = pow10_neg(wd2 + 2, prec);
    for (long k = 0;; ++k) {
        term = term * xx / (ss + (k + 1));
        sum = sum + term;
        if (abs(term) < eps * abs(sum)) break;
        if (k > 40 * wd2 + 1000)
            throw std::runtime_error("upper_gamma: complement series stalled");
    }
    Complex lg(prec);
    if (lgamma_hint && lgamma_hint->prec() >= prec) {
        lg = lgamma_hint->round_to(prec);
    } else {
        PrecisionContext sub = sub_context(wd2);
        lg = log_gamma(ss, sub);
    }
    Complex w = ss * Complex(log(xx)) - Complex(xx) + log(sum) - lg;
    Complex q = Real(1L, prec) - exp(w);
    if (abs(q).is_zero())
        throw std::runtime_error("upper_gamma: total cancellation in complement");
    return lg + log(q);
}

Complex log_upper_gamma_impl(const Complex& s, const Real& x,
                             const PrecisionContext& ctx,
                             const Complex* lgamma_hint) {
    long wd = ctx.work_digits() + kGuard;
    mpfr_prec_t prec = bits_for_digits(wd);
    double xd = x.to_double();
    double smod = abs(s).to_double();
    if (xd >= smod + 1.1513 * (double)wd)
        return upper_gamma_cf_log(s.round_to(prec), x.round_to(prec), wd, prec);
    if (s.im.is_zero() && mpfr_integer_p(s.re.get()) && s.re.sign() <= 0) {
        long m = -s.re.to_long();
        return Complex(log(upper_gamma_int_chain(m, x, wd, prec)));
    }
    if (s.re >= 0.5)
        return upper_gamma_complement_log(s, x, wd, lgamma_hint);
    // Re s < 0.5: raise the shape to [0.5, 1.5) and recur downward on values.
    long m = (long)std::ceil(0.5 - s.re.to_double());
    mpfr_prec_t prec2 = bits_for_digits(wd + 2 * m + 10);
    Complex ss = s.round_to(prec2);
    Real xx = x.round_to(prec2);
    PrecisionContext sub = sub_context(wd + 2 * m + 10);
    Complex g(prec2);
    if (lgamma_hint) {
        // Carry the hint across the shift: log Gamma(s+m) = log Gamma(s)
        // + sum_j log(s+j). Only ever exponentiated, so branch slop is fine.
        Complex h2 = *lgamma_hint;
        Complex sh = s.round_to(lgamma_hint->prec());
        for (long j = 0; j < m; ++j) h2 = h2 + log(sh + j);
        g = exp(log_upper_gamma_impl(ss + m, xx, sub, &h2));
    } else {
        g = exp(log_upper_gamma_impl(ss + m, xx, sub, nullptr));
    }
    // p_j = x^{s+j-1} e^{-x}, starting at j = m.
    Complex p = exp((ss + (m - 1)) * Complex(log(xx)) - Complex(xx));
    for (long j = m; j >= 1; --j) {
        g = (g - p) / (ss + (j - 1));
        if (j > 1) p = p / xx;
    }
    return log(g);
}

}  // namespace

Complex log_upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx,
                        const Complex* lgamma_hint) {
    if (!(x > 0.0)) throw std::invalid_argument("log_upper_gamma: x must be > 0");
    if (s.im.sign() < 0) {
        if (lgamma_hint) {
            // log Gamma(conj s) = conj(log Gamma(s))
            Complex hc = conj(*lgamma_hint);
            return conj(log_upper_gamma(conj(s), x, ctx, &hc));
        }
        return conj(log_upper_gamma(conj(s), x, ctx, nullptr));
    }
    return log_upper_gamma_impl(s, x, ctx, lgamma_hint);
}

Complex upper_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx,
                    bool* underflow) {
    if (underflow) *underflow = false;
    if (!(x > 0.0)) throw std::invalid_argument("upper_gamma: x must be > 0");
    // e^{-x} below the MPFR exponent floor: the value is an exact zero at
    // working precision. Unreachable in ordinary use (the floor is astronomic)
    // but honored for completeness.
    double floor_x = -((double)mpfr_get_emin()) * 0.693;
    if (x.to_double() > 0.9 * floor_x) {
        if (underflow) *underflow = true;
        return Complex(ctx.bits());
    }
    return exp(log_upper_gamma(s, x, ctx)).round_to(ctx.bits());
}

}  // namespace seczeta
