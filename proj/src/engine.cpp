#include "seczeta/engine.hpp"

#include "seczeta/arith.hpp"
#include "seczeta/specials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace seczeta {

namespace {

constexpr double kLadder[] = {0.015, 0.005, 0.0025};

// Distance from s to the pole at integer k, saturating instead of
// underflowing (only the order of magnitude matters here).
double pole_distance(const Complex& s, long k) {
    double d = hypot(s.re - k, s.im).to_double();
    return d > 1e-280 ? d : 1e-280;
}

// The singular term's pole parts grow like distance^-order; the working
// precision has to absorb that on top of the cancellation magnitude.
double pole_boost(const Complex& s) {
    double re = s.re.to_double();
    double best = pole_distance(s, 1);
    int order = 2;
    if (re < 0.0 && re > -4.0e18) {
        long o = std::llround(re);
        for (long k : {o - 1, o, o + 1}) {
            if (k < 0 && k % 2 != 0) {
                double d = pole_distance(s, k);
                if (d < best) {
                    best = d;
                    order = 1;
                }
            }
        }
    }
    if (!(best < 1.0)) return 0.0;
    return -order * std::log10(best);
}

// Escalation estimate: the exponential term dominates the cancellation off
// the real axis, the singular prefactor (driven by 1/Gamma(s/2)) can exceed
// it slightly, and pole proximity inflates the singular term further. Only
// exponents matter, so 20 digits suffice.
double magnitude_probe(const Complex& s, double a) {
    PrecisionContext pctx = PrecisionContext::make(20, 10);
    TermResult ep = term_E({s, a, pctx});
    double magE = magnitude_log10(ep.value);
    double magPf = 0.0;
    Complex s2 = s / 2L;
    if (!is_gamma_pole(s2)) {
        PrecisionContext pc = PrecisionContext::make(20, 5);
        Complex lg = log_gamma(s2.prec() >= pc.bits() ? s2 : s2.round_to(pc.bits()), pc);
        const double ln10 = 2.302585092994045684;
        magPf = 0.5 * (s.re.to_double() - 1.0) * std::log10(a) -
                std::log10(4.0 * std::sqrt(3.141592653589793)) - lg.re.to_double() / ln10;
    }
    double m = std::max(magE, magPf + pole_boost(s));
    return m > 0.0 ? m : 0.0;
}

EvalResult eval_once(const Complex& s, long target, double a) {
    PrecisionContext ctx = PrecisionContext::make(target, 10).escalate(magnitude_probe(s, a));
    EvalParams p{s, a, ctx};
    // S first: it is cheap and the only term that can reject this a
    TermResult S = term_S(p);
    TermResult E = term_E(p);
    TermResult P = term_P(p);
    TermResult A = term_A(p);

    EvalResult r;
    r.breakdown.A = A.value;
    r.breakdown.P = P.value;
    r.breakdown.E = E.value;
    r.breakdown.S = S.value;
    r.breakdown.zeros_used = A.terms_used;
    r.breakdown.lambdas_used = P.terms_used;
    r.breakdown.err_A = A.error_estimate;
    r.breakdown.err_P = P.error_estimate;
    r.breakdown.err_E = E.error_estimate;
    r.breakdown.err_S = S.error_estimate;
    r.z = ((A.value - P.value) + E.value) - S.value;
    r.error_estimate =
        A.error_estimate + P.error_estimate + E.error_estimate + S.error_estimate;
    r.a_used = a;
    r.work_digits = ctx.work_digits();
    return r;
}

double pick_second_a(double a1) {
    if (a1 == 0.015) return 0.005;
    if (a1 == 0.005) return 0.0025;
    if (a1 == 0.0025) return 0.005;
    return a1 / 3.0;
}

}  // namespace

std::optional<PoleInfo> pole_near(const Complex& s, long target_digits) {
    Real g = exp10(Real(-target_digits, 64));
    auto check = [&](long k, int order) -> std::optional<PoleInfo> {
        Real d = hypot(s.re - k, s.im);
        if (d < g) return PoleInfo{k, order};
        return std::nullopt;
    };
    if (auto p = check(1, 2)) return p;
    double re = s.re.to_double();
    if (re < 0.0 && re > -4.0e18) {
        long o = std::llround(re);
        for (long k : {o - 1, o, o + 1})
            if (k < 0 && k % 2 != 0)
                if (auto p = check(k, 1)) return p;
    }
    return std::nullopt;
}

EvalResult secondzeta(const Complex& s, long target_digits, const EvalOptions& opt) {
    if (target_digits < 1) throw std::invalid_argument("target_digits must be >= 1");
    if (!s.is_finite()) throw std::invalid_argument("s must be finite");
    if (opt.a && !(*opt.a > 0.0 && *opt.a < 1.0))
        throw std::invalid_argument("smoothing parameter a must lie in (0,1)");

    if (auto pi = pole_near(s, target_digits)) {
        std::string msg = pi->order == 2
                              ? std::string("Z has a double pole at s = 1")
                              : "Z has a simple pole at s = " + std::to_string(pi->location);
        throw PoleProximity(msg + "; the evaluation point lies within 10^-" +
                                std::to_string(target_digits) +
                                " of it (ask for the finite part or residue instead)",
                            *pi);
    }

    std::vector<double> ladder;
    if (opt.a)
        ladder = {*opt.a};
    else
        ladder.assign(std::begin(kLadder), std::end(kLadder));

    Real budget = exp10(Real(-target_digits, 64));
    std::string failures;
    std::optional<EvalResult> best;
    for (double a : ladder) {
        try {
            EvalResult r = eval_once(s, target_digits, a);
            if (!(r.error_estimate > budget)) {
                best = r;
                break;
            }
            // Budget missed: keep the best attempt, try a smaller a.
            if (!best || r.error_estimate < best->error_estimate) best = r;
            failures += "a = " + std::to_string(a) + ": estimated error " +
                        r.error_estimate.to_string(3) + "; ";
        } catch (const AsymptoticFailure& e) {
            failures += std::string(e.what()) + "; ";
        }
    }
    if (!best)
        throw AsymptoticFailure("no smoothing parameter reached the target: " + failures);

    EvalResult r = *best;
    if (opt.verify) {
        double a2 = opt.verify_a > 0.0 ? opt.verify_a : pick_second_a(r.a_used);
        EvalResult r2 = eval_once(s, target_digits, a2);
        r.agreed_digits = agreed_digits(r.z, r2.z, target_digits + 10);
    }
    return r;
}

long agreed_digits(const Complex& x, const Complex& y, long cap) {
    auto comp = [&](const Real& u, const Real& v) -> long {
        Real d = abs(u - v);
        if (d.is_zero()) return cap;
        Real scale = fmax(abs(u), abs(v));
        if (scale.is_zero()) return cap;
        double r = log10(scale / d).to_double();
        if (!(r > 0.0)) return 0;
        long n = static_cast<long>(std::floor(r));
        return n > cap ? cap : n;
    };
    return std::min(comp(x.re, y.re), comp(x.im, y.im));
}

long verify_two_a(const Complex& s, long target_digits, double a1, double a2) {
    if (!(a1 > 0.0 && a1 < 1.0) || !(a2 > 0.0 && a2 < 1.0))
        throw std::invalid_argument("both smoothing parameters must lie in (0,1)");
    if (a1 == a2)
        throw std::invalid_argument("the two smoothing parameters must differ");
    EvalOptions o1, o2;
    o1.a = a1;
    o2.a = a2;
    EvalResult r1 = secondzeta(s, target_digits, o1);
    EvalResult r2 = secondzeta(s, target_digits, o2);
    return agreed_digits(r1.z, r2.z, target_digits + 10);
}

namespace {

// Neville extrapolation to 0 of (x_i, f_i), i = 0..n-1; *err receives the
// difference between the last two tableau levels.
Real neville_to_zero(const std::vector<Real>& x, std::vector<Real> f, Real* err) {
    const size_t n = x.size();
    Real prev = f[0];
    for (size_t level = 1; level < n; ++level) {
        prev = f[0];
        for (size_t i = 0; i + level < n; ++i)
            f[i] = (x[i + level] * f[i] - x[i] * f[i + 1]) / (x[i + level] - x[i]);
    }
    *err = abs(f[0] - prev);
    return f[0];
}

}  // namespace

FinitePart finite_part(long pole_s, long target_digits) {
    const bool dbl = (pole_s == 1);
    if (!dbl && !(pole_s < 0 && pole_s % 2 != 0))
        throw std::invalid_argument("Z is regular at s = " + std::to_string(pole_s) +
                                    "; finite parts live at 1 and the negative odd integers");
    const long di = target_digits + 20;
    const mpfr_prec_t prec = bits_for_digits(di + 10);
    const double hs[3] = {1e-3, 1e-4, 1e-5};

    std::vector<Real> x, f;
    for (double h : hs) {
        Real hp(h, prec);
        Complex sp(Real(pole_s, prec) + hp);
        Complex sm(Real(pole_s, prec) - hp);
        Real mean = (secondzeta(sp, di).z.re + secondzeta(sm, di).z.re) / 2L;
        if (dbl) mean = mean - 1L / (const_pi(prec) * 2L * hp * hp);
        x.push_back(hp * hp);  // the symmetric mean is even in h
        f.push_back(mean);
    }
    FinitePart out;
    out.value = neville_to_zero(x, f, &out.error_estimate);
    return out;
}

FinitePart residue_at(long pole_s, long target_digits) {
    if (!(pole_s < 0 && pole_s % 2 != 0))
        throw std::invalid_argument("s = " + std::to_string(pole_s) +
                                    " is not a simple pole of Z");
    const long di = target_digits + 20;
    const mpfr_prec_t prec = bits_for_digits(di + 10);
    const double hs[3] = {1e-3, 1e-4, 1e-5};

    // g(h) = h Z(p+h) = r + c0 h + c1 h^2 + ...; the symmetric mean
    // (g(h) + g(-h))/2 = r + c1 h^2 + O(h^4) kills every odd order, so the
    // extrapolation runs in h^2 and three nodes leave O((h1 h2 h3)^2).
    std::vector<Real> x, f;
    for (double h : hs) {
        Real hp(h, prec);
        Real gp = hp * secondzeta(Complex(Real(pole_s, prec) + hp), di).z.re;
        Real gm = -(hp * secondzeta(Complex(Real(pole_s, prec) - hp), di).z.re);
        x.push_back(hp * hp);
        f.push_back((gp + gm) / 2L);
    }
    FinitePart out;
    out.value = neville_to_zero(x, f, &out.error_estimate);
    return out;
}

Real residue_closed_form(long pole_s, mpfr_prec_t prec) {
    if (!(pole_s < 0 && pole_s % 2 != 0))
        throw std::invalid_argument("s = " + std::to_string(pole_s) +
                                    " is not a simple pole of Z");
    const long n = (1 - pole_s) / 2;
    // (-1)^n (1 - 2^{1-2n}) B_{2n} / (4 pi n)
    mpq_class half_pow(mpz_class(1), mpz_class(1) << static_cast<unsigned long>(2 * n - 1));
    mpq_class q = bernoulli_number(static_cast<unsigned>(2 * n)) *
                  (mpq_class(1) - half_pow) / mpq_class(n);
    Real r = rational_to_real(q, prec) / (const_pi(prec) * 4L);
    return n % 2 != 0 ? -r : r;
}

std::pair<Real, Real> double_pole_main_part(long target_digits) {
    const long di = target_digits + 20;
    const mpfr_prec_t prec = bits_for_digits(di + 10);
    const double hs[3] = {1e-3, 1e-4, 1e-5};

    // u(h) = h^2 Z(1+h) = c2 + c1 h + c0 h^2 + ... is a full power series;
    // its even part carries c2 and its odd part carries c1, each with only
    // even corrections, so both extrapolations run in h^2.
    std::vector<Real> x, fe, fo;
    for (double h : hs) {
        Real hp(h, prec);
        Real up = hp * hp * secondzeta(Complex(Real(1L, prec) + hp), di).z.re;
        Real um = hp * hp * secondzeta(Complex(Real(1L, prec) - hp), di).z.re;
        x.push_back(hp * hp);
        fe.push_back((up + um) / 2L);
        fo.push_back((up - um) / (hp * 2L));
    }
    Real err;
    Real c2 = neville_to_zero(x, fe, &err);
    Real c1 = neville_to_zero(x, fo, &err);
    return {c2, c1};
}

}  // namespace seczeta
