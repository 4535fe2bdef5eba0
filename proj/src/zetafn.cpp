#include "seczeta/zetafn.hpp"

#include "seczeta/arith.hpp"

#include <cmath>

namespace seczeta {

namespace {

// One Euler-Maclaurin pass with cutoff N. Returns false (and leaves `out`
// unspecified) if the correction series failed to reach the tolerance while
// its terms still shrank -- the caller then retries with a larger N.
bool zeta_em_pass(const Complex& s, long N, long wd, mpfr_prec_t prec,
                  Complex& out) {
    Real eps = exp10(Real(-(wd + 2), prec));
    // Head: sum_{n=1}^{N-1} n^{-s}, plus N^{1-s}/(s-1) + N^{-s}/2.
    Complex acc(prec);
    Complex ms = -s;
    for (long n = 1; n < N; ++n)
        acc = acc + pow_real_base(Real(n, prec), ms);
    Real rN(N, prec);
    Complex Npow_ms = pow_real_base(rN, ms);              // N^{-s}
    acc = acc + Npow_ms * rN / (s - 1L);                  // N^{1-s}/(s-1)
    acc = acc + Npow_ms / 2L;
    // Corrections: t_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    Complex poch = s;                                     // (s)_{2k-1}, k = 1
    Complex npow = Npow_ms / rN;                          // N^{-s-2k+1}, k = 1
    Real n2inv = Real(1L, prec) / (rN * rN);
    Real scale = fmax(Real(1L, prec), abs(acc));
    Real prev_mag(prec);
    mpfr_set_inf(prev_mag.get(), 1);
    for (long k = 1;; ++k) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), (unsigned long)(2 * k));
        Real coef = rational_to_real(
            mpq_class(bernoulli_number((unsigned)(2 * k)) / mpq_class(fact)), prec);
        Complex term = poch * npow * coef;
        Real mag = abs(term);
        if (mag < eps * scale) {
            // Remainder bound: |R| <= |t_{k}| * |s + 2k - 1| / (sigma + 2k - 1),
            // valid once sigma + 2k - 1 > 0. Our cutoff satisfies it easily.
            acc = acc + term;
            out = acc;
            return true;
        }
        if (mag > prev_mag) return false;  // asymptotic floor above tolerance
        prev_mag = mag;
        acc = acc + term;
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k);
        npow = npow * n2inv;
        if (k > 4 * wd + 100) return false;
    }
}

}  // namespace

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
    if (s.im.is_zero() && s.re == 1L) throw PoleError("zeta: pole at s = 1");
    long wd = ctx.work_digits() + 5;
    mpfr_prec_t prec = bits_for_digits(wd);
    Complex ss = s.round_to(prec);
    double t_abs = std::fabs(ss.im.to_double());
    long N = (long)std::ceil(8.0 + 0.5 * (double)wd + 0.28 * t_abs);
    for (int tries = 0; tries < 6; ++tries) {
        Complex out(prec);
        if (zeta_em_pass(ss, N, wd, prec, out)) return out;
        N *= 2;
    }
    throw std::runtime_error("zeta: Euler-Maclaurin failed to converge");
}

Real hardy_theta(const Real& t, const PrecisionContext& ctx) {
    long wd = ctx.work_digits() + 5;
    mpfr_prec_t prec = bits_for_digits(wd);
    Real tt = t.round_to(prec);
    Complex z(Real(0.25, prec), tt / 2L);
    Complex lg = log_gamma(z, ctx);
    Real pi = const_pi(prec);
    return lg.im - tt * 0.5 * log(pi);
}

Real hardy_z(const Real& t, const PrecisionContext& ctx) {
    long wd = ctx.work_digits() + 5;
    mpfr_prec_t prec = bits_for_digits(wd);
    Real tt = t.round_to(prec);
    Real th = hardy_theta(tt, ctx);
    Complex zval = zeta(Complex(Real(0.5, prec), tt), ctx);
    // Re(e^{i theta} zeta): the imaginary part vanishes identically.
    return cos(th) * zval.re - sin(th) * zval.im;
}

}  // namespace seczeta
