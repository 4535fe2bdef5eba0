#include "seczeta/terms.hpp"

#include "seczeta/arith.hpp"
#include "seczeta/specials.hpp"
#include "seczeta/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace seczeta {

namespace {

constexpr long kMaxZeroTerms = 200000;
constexpr long kMaxPrimeTerms = 2000000;
constexpr long kMaxExpTerms = 100000;
constexpr long kMaxSingTerms = 100000;

// True iff s is exactly a real integer of sane size; *k receives it.
bool exact_real_integer(const Complex& s, long* k) {
    if (!s.im.is_zero() || !s.re.is_finite()) return false;
    Real r = round_nearest(s.re);
    if (!(r == s.re)) return false;
    double d = r.to_double();
    if (d < -1.0e15 || d > 1.0e15) return false;
    *k = r.to_long();
    return true;
}

// Never lose bits of the caller's s: the exact binary value of s is the
// definition of the evaluation point (it may encode a tiny offset from an
// integer that a truncation would erase).
Complex widen(const Complex& s, mpfr_prec_t prec) {
    return s.prec() >= prec ? s : s.round_to(prec);
}

// log Gamma(shape) computed once per series, fat enough that the incomplete
// gamma complement branch (including its argument-shift chain when
// Re shape < 1/2) can reuse it at every summand instead of recomputing.
Complex fat_lgamma(const Complex& shape, long wd) {
    double mag = abs(shape).to_double();
    if (!(mag >= 0.0)) mag = 0.0;
    double re = shape.re.to_double();
    long m = re < 0.5 ? static_cast<long>(std::ceil(0.5 - re)) : 0;
    long hw = (3 * (wd + 5)) / 2 + static_cast<long>(std::ceil(0.44 * mag)) + 4 * m + 30;
    long cap = max_digits_cap();
    if (hw > cap) hw = cap;  // the hint is an optimization; callees that need
                             // more recompute internally and stay correct
    PrecisionContext hctx = PrecisionContext::make(hw, 0);
    return log_gamma(widen(shape, hctx.bits()), hctx);
}

Real zero_error(mpfr_prec_t bits) { return Real(0L, bits); }

}  // namespace

TermResult term_A(const EvalParams& p) {
    const PrecisionContext& ctx = p.ctx;
    const mpfr_prec_t prec = ctx.bits();
    const Complex sw = widen(p.s, prec);
    const Complex s2w = sw / 2L;

    TermResult out;
    if (is_gamma_pole(s2w)) {
        // 1/Gamma(s/2) vanishes, so every regularized-gamma summand is an
        // exact zero; report the single (trivial) probe.
        out.value = Complex(prec);
        out.terms_used = 1;
        out.error_estimate = zero_error(64);
        return out;
    }

    const long wd = ctx.work_digits();
    const long zd = wd + 6;  // ordinate digits: headroom over the summand needs
    const Real tol = ctx.series_epsilon();
    const Real ra(p.a, prec);

    const Complex hint = fat_lgamma(s2w, wd);
    const Complex lgs2 = hint.round_to(prec);

    Complex totsum(prec);
    Complex term(prec);  // previous term; the loop adds it before computing
                         // the next, so the final below-threshold probe is
                         // evaluated and counted but never added
    Real gamm(prec);
    Real mg(prec);
    long n = 0;
    StopReason reason = StopReason::below_epsilon;
    while (true) {
        totsum = totsum + term;
        ++n;
        if (n > kMaxZeroTerms) {
            --n;
            reason = StopReason::exhausted;
            break;
        }
        gamm = zero_ordinate(n, zd);
        Real x = ra * gamm * gamm;
        Complex lng = log_upper_gamma(s2w, x, ctx, &hint);
        term = exp(lng - lgs2 - sw * log(gamm));
        if (!term.is_finite())
            throw std::runtime_error("zero-ordinate series: non-finite summand at n = " +
                                     std::to_string(n));
        mg = abs(term);
        if (!(mg > tol)) break;
    }

    out.value = totsum.round_to(prec);
    out.terms_used = n;
    out.reason = reason;
    if (reason == StopReason::exhausted) {
        out.error_estimate = mg;
        return out;
    }

    // Smoothed-tail heuristic at the stopping ordinate, evaluated at low
    // precision (it only needs an order of magnitude).
    PrecisionContext ectx = PrecisionContext::make(20, 5);
    const mpfr_prec_t ep = ectx.bits();
    Real sg = sw.re.round_to(ep);
    Real ea(p.a, ep);
    Real gN = gamm.round_to(ep);
    Real x = ea * gN * gN;
    Real twopi = const_pi(ep) * 2L;
    Real err = fmax(sg, Real(1L, ep)) / twopi * pow(ea, sg - 0.5) * log(gN / twopi) *
               upper_gamma_real(Real(-0.5, ep), x) * exp(-hint.re.round_to(ep));
    out.error_estimate = abs(err);
    return out;
}

TermResult term_P(const EvalParams& p) {
    const PrecisionContext& ctx = p.ctx;
    const mpfr_prec_t prec = ctx.bits();
    const Complex sw = widen(p.s, prec);
    const Complex s2w = sw / 2L;

    TermResult out;
    if (is_gamma_pole(s2w)) {
        // Same trivial zero as the main sum; the scan's enforced minimum
        // stopping point stands in for the count.
        out.value = Complex(prec);
        out.terms_used = 9;
        out.error_estimate = zero_error(64);
        return out;
    }

    const long wd = ctx.work_digits();
    const Real tol = ctx.series_epsilon();
    const Real ra(p.a, prec);
    const Real r4a = ra * 4L;

    const Complex w = (Real(1L, prec) - sw) / 2L;
    const bool w_pole = is_gamma_pole(w);  // s an odd integer > 1: the
                                           // incomplete gamma handles the
                                           // nonpositive-integer shape itself
    Complex whint;
    if (!w_pole) whint = fat_lgamma(w, wd);

    const Complex lgs2 = log_gamma(s2w, ctx);
    const Real half_rsqpi = Real(0.5, prec) / sqrt(const_pi(prec));

    Complex totsum(prec);
    Complex term(prec);
    Real mg(prec);
    bool mg_valid = false;  // false plays the role of an infinite magnitude
    long n = 1;
    StopReason reason = StopReason::below_epsilon;
    while (true) {
        totsum = totsum + term;
        ++n;
        if (n > kMaxPrimeTerms) {
            --n;
            reason = StopReason::exhausted;
            break;
        }
        auto pp = von_mangoldt(static_cast<unsigned long>(n));
        if (!pp) {
            term = Complex(prec);
            mg_valid = false;
        } else {
            Real ln_n = log(Real(n, prec));
            Real x = ln_n * ln_n / r4a;
            Complex lgw = log_upper_gamma(w, x, ctx, w_pole ? nullptr : &whint);
            Complex lnt = lgw + (sw - 1L) * log(ln_n / 2L) - lgs2;
            Real weight = log(Real(pp->p, prec)) / sqrt(Real(n, prec)) * half_rsqpi;
            term = exp(lnt) * weight;
            if (!term.is_finite())
                throw std::runtime_error("prime-power series: non-finite summand at n = " +
                                         std::to_string(n));
            mg = abs(term);
            mg_valid = true;
        }
        if (mg_valid && !(mg > tol) && n >= 9) break;
    }

    out.value = totsum.round_to(prec);
    out.terms_used = n;
    out.reason = reason;
    out.error_estimate = mg_valid ? mg : Real(0L, 64);
    return out;
}

TermResult term_E(const EvalParams& p) {
    const PrecisionContext& ctx = p.ctx;
    const mpfr_prec_t prec = ctx.bits();
    const Complex sw = widen(p.s, prec);

    TermResult out;
    long k = 0;
    if (exact_real_integer(sw, &k) && k <= 0 && k % 2 == 0) {
        // Limit of the series' lattice pole against the gamma factor's zero:
        // E(-2m) = (-1)^m / 4^m, exact in binary.
        long m = -k / 2;
        Real v = pow(Real(4L, prec), -m);
        if (m % 2 != 0) v = -v;
        out.value = Complex(v);
        out.terms_used = 0;
        out.error_estimate = zero_error(64);
        return out;
    }

    const Complex s2w = sw / 2L;
    const Real tol = ctx.series_epsilon();
    const Real ra(p.a, prec);
    const Real a4 = ra / 4L;

    // For s near a negative even integer one denominator s/2 + n nearly
    // vanishes and that single summand towers over its neighbors (the
    // reciprocal-gamma prefactor cancels the blow-up in the product). The
    // scan must not stop short of that index, or the dominant summand of
    // the limit is lost.
    long n_res = 0;
    if (std::fabs(p.s.im.to_double()) < 1.0) {
        long cand = std::lround(-0.5 * p.s.re.to_double());
        if (cand >= 1 &&
            std::fabs(0.5 * p.s.re.to_double() + static_cast<double>(cand)) < 0.5) {
            n_res = cand;
        }
    }

    Complex totsum(prec);
    Real q(1L, prec);  // (a/4)^n / n!
    Complex term = q / (s2w + 0L);
    Real mg(prec);
    long n = 0;
    StopReason reason = StopReason::below_epsilon;
    while (true) {
        // the first summand is added unconditionally (its magnitude is not
        // consulted); every later one is probed before the next add
        totsum = totsum + term;
        ++n;
        if (n > kMaxExpTerms) {
            --n;
            reason = StopReason::exhausted;
            break;
        }
        q = q * a4 / n;
        term = q / (s2w + n);
        if (!term.is_finite())
            throw std::runtime_error("exponential series: non-finite summand at n = " +
                                     std::to_string(n));
        mg = abs(term);
        if (!(mg > tol) && n > n_res) break;
    }

    Complex pref = pow_real_base(ra, s2w) * recip_gamma(s2w, ctx);
    out.value = (pref * totsum).round_to(prec);
    out.terms_used = n;
    out.reason = reason;
    out.error_estimate = abs(pref) * mg;
    return out;
}

TermResult term_S(const EvalParams& p) {
    const PrecisionContext& ctx = p.ctx;
    const mpfr_prec_t prec = ctx.bits();

    TermResult out;
    long k = 0;
    if (exact_real_integer(p.s, &k)) {
        if (k == 1) throw PoleError("singular term: double pole at s = 1");
        if (k < 0 && k % 2 != 0)
            throw PoleError("singular term: simple pole at s = " + std::to_string(k));
        if (k <= 0) {
            // Limit of the brace series' pole against the gamma factor's
            // zero: S(-2m) = (-1)^m E_{2m} / (8 * 4^m), exact rational.
            long m = -k / 2;
            mpq_class q(euler_number(static_cast<unsigned>(2 * m)));
            mpz_class den(8);
            den <<= static_cast<unsigned long>(2 * m);
            q /= den;
            if (m % 2 != 0) q = -q;
            out.value = Complex(rational_to_real(q, prec));
            out.terms_used = 0;
            out.error_estimate = zero_error(64);
            return out;
        }
        // positive integers >= 2 take the general path
    }

    // The prefactor can be enormous (1/Gamma(s/2) off the critical strip);
    // raise the series' working precision by its magnitude so the brace sum
    // keeps full relative accuracy after the multiplication.
    double magF;
    {
        PrecisionContext pc = PrecisionContext::make(20, 5);
        Complex s2p = widen(p.s, pc.bits()) / 2L;
        Complex lgp = log_gamma(s2p, pc);
        const double ln10 = 2.302585092994045684;
        magF = 0.5 * (p.s.re.to_double() - 1.0) * std::log10(p.a) -
               std::log10(4.0 * std::sqrt(3.141592653589793)) - lgp.re.to_double() / ln10;
    }
    const PrecisionContext sctx = ctx.bump(magF > 0.0 ? static_cast<long>(std::ceil(magF)) : 0);
    const mpfr_prec_t sprec = sctx.bits();

    const Complex sw = widen(p.s, sprec);
    const Complex s2w = sw / 2L;
    const Complex sm1 = sw - 1L;
    const Real tol = sctx.series_epsilon();
    const Real ra(p.a, sprec);
    const Real pi = const_pi(sprec);

    const Complex lgs2 = log_gamma(s2w, sctx);
    const Complex factor = exp((sm1 * log(ra)) / 2L - log(sqrt(pi) * 4L) - lgs2);
    const Real absF = abs(factor);

    const Real sa4 = sqrt(ra) * 4L;  // (4 sqrt a)^n grows from here
    long n = 1;
    Real pw = sa4;
    Real fct(1L, sprec);
    auto eval_term = [&]() -> Complex {
        Real bp = rational_to_real(bernoulli_poly_three_quarters(static_cast<unsigned>(n)), sprec);
        Real gh = gamma_real(Real(n, sprec) / 2L);
        Complex t = (bp * pw * gh) / ((sw + (n - 1)) * fct);
        if (!t.is_finite())
            throw std::runtime_error("singular series: non-finite term at n = " +
                                     std::to_string(n));
        return t;
    };
    auto advance = [&]() {
        ++n;
        pw = pw * sa4;
        fct = fct * n;
    };

    // Each term carries the denominator s + n - 1, so for s near a
    // nonpositive integer exactly one index is amplified by a nearby simple
    // pole (the prefactor's gamma zero cancels it in the product). That
    // spike says nothing about the asymptotic floor: the monitor sees it
    // scaled back by the distance to the pole, and the scan never stops
    // before passing it, so its full contribution always joins the sum.
    long n_res = 0;
    {
        double tim = std::fabs(p.s.im.to_double());
        if (tim < 0.5) {
            long cand = std::lround(1.0 - p.s.re.to_double());
            if (cand >= 1 &&
                std::hypot(p.s.re.to_double() + static_cast<double>(cand) - 1.0,
                           tim) < 0.5) {
                n_res = cand;
            }
        }
    }
    auto monitor_mag = [&](const Complex& t) -> Real {
        Real m = abs(t);
        if (n == n_res) {
            Real d = abs(sw + (n - 1));
            if (d < 1L) m = m * d;
        }
        return m;
    };

    // Asymptotic series: add odd/even pairs while the odd-indexed magnitudes
    // keep falling; they dominate their even neighbors, so they are the
    // monitor. The final monitored term joins the sum on exit either way.
    Complex totsum(sprec);
    Complex term = eval_term();
    Real mg1(sprec);
    bool have_mg1 = false;
    Real mg2 = monitor_mag(term);
    bool exhausted = false;
    while (((mg2 > tol) && (!have_mg1 || mg2 <= mg1)) || n <= n_res) {
        totsum = totsum + term;
        advance();
        term = eval_term();
        totsum = totsum + term;
        advance();
        term = eval_term();
        mg1 = mg2;
        have_mg1 = true;
        mg2 = monitor_mag(term);
        if (n > kMaxSingTerms) {
            exhausted = true;
            break;
        }
    }
    totsum = totsum + term;

    Complex pole = (-2L) / (sm1 * sm1) + (const_euler(sprec) + log(pi * pi * ra * 16L)) / sm1;
    out.value = (factor * (pole + totsum)).round_to(prec);
    out.terms_used = n;

    if (exhausted) {
        out.reason = StopReason::exhausted;
        out.error_estimate = absF * mg2;
    } else if (!(mg2 > tol)) {
        out.reason = StopReason::below_epsilon;
        out.error_estimate = absF * tol;
    } else {
        out.reason = StopReason::terms_increasing;
        out.error_estimate = absF * mg1;
        // The series bottomed out before reaching the threshold. That is
        // normal when its floor sits far below the requested accuracy; it is
        // a genuine failure only when the floor intrudes on the target.
        Real budget = exp10(Real(-(ctx.target_digits + 2), 64));
        if (out.error_estimate > budget) {
            throw AsymptoticFailure(
                "singular series bottoms out near absolute error " +
                out.error_estimate.to_string(3) + " at a = " + std::to_string(p.a) +
                "; a smaller a is required for this target accuracy");
        }
    }
    out.error_estimate = fmax(out.error_estimate, sctx.series_epsilon());
    return out;
}

}  // namespace seczeta
