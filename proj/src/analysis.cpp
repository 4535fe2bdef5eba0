// Identity checks and critical-point finders. The two sides of every check
// are computed along disjoint paths: the heat-kernel identity pits the zero
// ordinates against the prime powers plus the Phi transform, and Phi itself
// is computed both as a digamma integral and in its closed integral form.
// The finders work on top of the evaluator only (no symbolic derivative of
// the four-term decomposition exists); derivatives are central differences
// at an escalated working precision.
#include "seczeta/analysis.hpp"

#include "seczeta/arith.hpp"
#include "seczeta/quadrature.hpp"
#include "seczeta/specials.hpp"
#include "seczeta/zeros.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace seczeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

// ---------------------------------------------------------------------------
// Pole bookkeeping for the real-axis finders
// ---------------------------------------------------------------------------

struct NearbyPole {
    long location;
    int order;  // 2 at s = 1, 1 at the negative odd integers
};

std::optional<NearbyPole> pole_within(double x, double radius) {
    if (std::abs(x - 1.0) <= radius) return NearbyPole{1, 2};
    if (x < 0.0) {
        long odd = 2 * static_cast<long>(std::llround((x + 1.0) / 2.0)) - 1;
        if (odd <= -1 && std::abs(x - static_cast<double>(odd)) <= radius)
            return NearbyPole{odd, 1};
    }
    return std::nullopt;
}

Real real_axis_z(const Real& x, long digits) {
    return secondzeta(Complex(x), digits).z.re;
}

// Z on the real axis, deflated by (x - p)^order when a pole is nearby: the
// deflated function is analytic through the pole, so brackets may straddle
// it and zeros hugging it stay resolvable.
struct LineFn {
    std::optional<NearbyPole> pole;
    long digits;

    Real operator()(const Real& x) const {
        Real f = real_axis_z(x, digits);
        if (pole) {
            Real d = x - pole->location;
            f = f * d;
            if (pole->order == 2) f = f * d;
        }
        return f;
    }
};

struct Bracket {
    Real lo, hi;
    Real flo, fhi;
};

// Evaluate g outward from x0 on the grid x0 + k*step (k = 0, +-1, +-2, ...)
// until two adjacent points change sign. Points within `avoid` of a pole are
// nudged off it (the deflated g is finite there, but the evaluator refuses
// the exact pole). Throws when max_steps exhausts without a sign change.
Bracket scan_bracket(const std::function<Real(const Real&)>& g, const Real& x0,
                     const Real& step, long max_steps,
                     const std::optional<NearbyPole>& pole, const Real& avoid,
                     const char* what) {
    auto place = [&](long k) -> Real {
        Real x = x0 + step * k;
        if (pole) {
            Real d = x - pole->location;
            if (abs(d) < avoid) {
                // push to the far side of the avoidance radius, outward
                Real off = k >= 0 ? avoid : -avoid;
                x = Real(pole->location, x.prec()) + off;
            }
        }
        return x;
    };
    struct Sample {
        Real x, f;
        bool have = false;
    };
    std::vector<Sample> right(static_cast<size_t>(max_steps) + 1);
    std::vector<Sample> left(static_cast<size_t>(max_steps) + 1);
    auto eval_at = [&](Sample& s, long k) {
        s.x = place(k);
        s.f = g(s.x);
        s.have = true;
    };
    eval_at(right[0], 0);
    left[0] = right[0];
    if (right[0].f.sign() == 0)
        return Bracket{right[0].x, right[0].x, right[0].f, right[0].f};
    for (long k = 1; k <= max_steps; ++k) {
        eval_at(right[static_cast<size_t>(k)], k);
        const Sample& a = right[static_cast<size_t>(k - 1)];
        const Sample& b = right[static_cast<size_t>(k)];
        if (b.f.sign() == 0) return Bracket{b.x, b.x, b.f, b.f};
        if (a.f.sign() * b.f.sign() < 0) return Bracket{a.x, b.x, a.f, b.f};
        eval_at(left[static_cast<size_t>(k)], -k);
        const Sample& c = left[static_cast<size_t>(k)];
        const Sample& d = left[static_cast<size_t>(k - 1)];
        if (c.f.sign() == 0) return Bracket{c.x, c.x, c.f, c.f};
        if (c.f.sign() * d.f.sign() < 0) return Bracket{c.x, d.x, c.f, d.f};
    }
    throw std::runtime_error(std::string(what) +
                             ": no bracketing sign change found near the "
                             "starting point");
}

// Bracketed secant/bisection hybrid. Maintains a sign-changing interval;
// secant steps are taken when they land safely inside, with a bisection
// every third iteration to guarantee shrinkage. Midpoints that would fall
// within `avoid` of a straddled pole are shifted off it without leaving the
// interval. Stops when the interval is below xtol or (if on_value is given)
// when on_value(x, f) says so.
Real refine_root(const std::function<Real(const Real&)>& g, Bracket br,
                 const Real& xtol, const std::optional<NearbyPole>& pole,
                 const Real& avoid,
                 const std::function<bool(const Real&, const Real&)>& stop_early =
                     nullptr) {
    if (br.flo.sign() == 0) return br.lo;
    if (br.fhi.sign() == 0) return br.hi;
    if (br.hi < br.lo) {
        swap(br.lo, br.hi);
        swap(br.flo, br.fhi);
    }
    Real best = abs(br.flo) < abs(br.fhi) ? br.lo : br.hi;
    for (int it = 0; it < 160; ++it) {
        Real width = br.hi - br.lo;
        if (width < xtol) break;
        Real cand(br.lo.prec());
        bool use_secant = (it % 3) != 2 && !(br.fhi == br.flo);
        if (use_secant) {
            cand = br.hi - br.fhi * (br.hi - br.lo) / (br.fhi - br.flo);
            Real margin = width / 64L;
            if (!(cand > br.lo + margin) || !(cand < br.hi - margin))
                use_secant = false;
        }
        if (!use_secant) cand = br.lo + width / 2L;
        if (pole) {
            Real d = cand - pole->location;
            if (abs(d) < avoid) {
                // shift toward whichever side of the interval has room
                Real up = cand + avoid * 2L;
                Real down = cand - avoid * 2L;
                cand = (up < br.hi) ? up : down;
                if (!(cand > br.lo && cand < br.hi)) cand = br.lo + width / 2L;
            }
        }
        Real fc = g(cand);
        if (fc.sign() == 0) return cand;
        if (stop_early && stop_early(cand, fc)) return cand;
        if (fc.sign() * br.flo.sign() < 0) {
            br.hi = cand;
            br.fhi = fc;
        } else {
            br.lo = cand;
            br.flo = fc;
        }
        best = abs(br.flo) < abs(br.fhi) ? br.lo : br.hi;
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Phi and the heat-kernel identity
// ---------------------------------------------------------------------------

Real phi_closed_form(double x, const PrecisionContext& ctx) {
    if (!(x > 0.0)) throw std::domain_error("phi_closed_form: x must be > 0");
    const long wd = ctx.work_digits();
    const long qd = wd + 5;
    const mpfr_prec_t prec = bits_for_digits(wd + 10);
    const Real rx(x, prec);
    const Real pi = const_pi(prec);
    const Real sqrt_pix = sqrt(pi * rx);
    const Real lead = (const_euler(prec) + log(pi * pi * rx * 16L)) / (sqrt_pix * 8L);

    // Coefficients of the small-u branch: the direct form
    // 1/u - e^{3u/4}/(e^u - 1) cancels catastrophically as u -> 0, but it
    // equals -sum_{n>=1} B_n(3/4) u^{n-1} / n! with radius 2*pi, so the
    // series is used on [0, 1] (terms there shrink like (1/2pi)^n).
    const long nser =
        static_cast<long>(std::ceil((wd + 8) * kLn10 / 1.8378770664093453)) + 4;
    std::vector<Real> coef;
    coef.reserve(static_cast<size_t>(nser));
    mpq_class fact = 1;
    for (long n = 1; n <= nser; ++n) {
        fact *= n;
        coef.push_back(rational_to_real(
            bernoulli_poly_three_quarters(static_cast<unsigned>(n)) / fact, prec));
    }
    auto g = [&](const Real& u) -> Real {
        if (u <= 1.0) {
            Real acc = coef[static_cast<size_t>(nser - 1)];
            for (long i = nser - 1; i >= 1; --i)
                acc = acc * u + coef[static_cast<size_t>(i - 1)];
            return -acc;
        }
        // 1/u - e^{-u/4} / (1 - e^{-u}), both terms O(1) and shrinking
        return 1L / u - exp(-(u / 4L)) / (-expm1(-u));
    };

    // Truncate where the Gaussian alone is below the working epsilon;
    // |g| <= 1/4 + decay beyond u = 1.
    const double T = 4.0 * std::sqrt(x * (wd + 8) * kLn10);
    std::vector<double> edges;
    for (double e : {0.0, 1.0, 4.0, 12.0})
        if (e < T) edges.push_back(e);
    edges.push_back(T);

    Real integral(0L, prec);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        auto f = [&](const Real& u) { return exp(-(u * u) / (rx * 16L)) * g(u); };
        integral =
            integral + tanh_sinh(f, Real(edges[i], prec), Real(edges[i + 1], prec), qd);
    }
    return lead - integral / (sqrt_pix * 4L);
}

long check_phi_equality(double x, const PrecisionContext& ctx) {
    if (!(x >= 0.01 && x <= 1.0))
        throw std::domain_error("check_phi_equality: x must lie in [0.01, 1]");
    const Real closed = phi_closed_form(x, ctx);

    const long wd = ctx.work_digits();
    const long qd = wd + 5;
    const mpfr_prec_t prec = bits_for_digits(wd + 10);
    const Real rx(x, prec);
    const Real pi = const_pi(prec);
    const Real log2pi = log(pi * 2L);
    const Real half(0.5, prec);
    const PrecisionContext dctx = PrecisionContext::make(wd + 5, 8);

    auto integrand = [&](const Real& t) -> Real {
        Complex dg = digamma(Complex(half, t.round_to(prec)), dctx);
        Real psi = log2pi + pi / (cosh(pi * t) * 2L) - dg.re;
        return exp(-(rx * t * t)) * psi;
    };

    // Psi grows only logarithmically, so the Gaussian picks the cutoff.
    const double T = std::sqrt((wd + 8) * kLn10 / x);
    std::vector<double> edges;
    for (double e : {0.0, 1.0, 4.0, 16.0})
        if (e < T) edges.push_back(e);
    edges.push_back(T);

    Real integral(0L, prec);
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        integral = integral +
                   tanh_sinh(integrand, Real(edges[i], prec), Real(edges[i + 1], prec), qd);
    const Real psi_form = integral / (pi * 2L);
    return agreed_digits(Complex(psi_form), Complex(closed), wd);
}

ModularCheck check_modular(double x, long n_zeros, long n_primes,
                           const PrecisionContext& ctx) {
    if (!(x >= 0.01 && x <= 1.0))
        throw std::domain_error("check_modular: x must lie in [0.01, 1]");
    if (n_zeros < 1) throw std::invalid_argument("check_modular: n_zeros must be >= 1");
    if (n_primes < 2) throw std::invalid_argument("check_modular: n_primes must be >= 2");

    const long wd = ctx.work_digits();
    const mpfr_prec_t prec = bits_for_digits(wd + 10);
    const Real rx(x, prec);
    const Real pi = const_pi(prec);
    // Reported digits floor at 10^-(wd-5); tails must stay below it so the
    // agreement count is governed by the identity, not the truncation.
    const double tail_budget_log10 = -static_cast<double>(wd - 5) - 0.7;

    // ---- zero side -------------------------------------------------------
    const long zd = wd + 12;
    zeros_ensure(n_zeros, zd);
    Real lhs(0L, prec);
    for (long n = 1; n <= n_zeros; ++n) {
        Real gn = zero_ordinate(n, zd);
        lhs = lhs + exp(-(gn * gn * rx));
    }
    {
        const double gN = zero_ordinate(n_zeros, zd).to_double();
        // ~log(g)/2pi ordinates per unit height; Gaussian integral tail bound
        const double tail_log10 =
            (std::log(std::log(gN) + 8.0) + std::log(4.0 / (gN * x)) - gN * gN * x) / kLn10;
        if (tail_log10 > tail_budget_log10)
            throw std::domain_error(
                "check_modular: zero-side tail exceeds the working epsilon; "
                "increase n_zeros");
    }

    // ---- prime side ------------------------------------------------------
    // log10 of the tail bound past log n = u0: integral of u e^{u/2 - u^2/4x}
    auto prime_tail_log10 = [&](double u0) -> double {
        const double r = u0 / (2.0 * x) - 0.5;
        if (r <= 0.0) return 300.0;
        return (std::log(4.0 * u0 / r) + u0 / 2.0 - u0 * u0 / (4.0 * x)) / kLn10;
    };
    mangoldt_ensure(static_cast<unsigned long>(n_primes));
    Real psum(0L, prec);
    const Real four_x = rx * 4L;
    long last_n = n_primes;
    for (long n = 2; n <= n_primes; ++n) {
        if (n > 50 &&
            prime_tail_log10(std::log(static_cast<double>(n))) <
                -static_cast<double>(wd + 9)) {
            last_n = n;
            break;
        }
        auto pp = von_mangoldt(static_cast<unsigned long>(n));
        if (!pp) continue;
        const Real rn(static_cast<unsigned long>(n), prec);
        const Real ln = log(rn);
        psum = psum + log(Real(pp->p, prec)) / sqrt(rn) * exp(-(ln * ln) / four_x);
    }
    if (prime_tail_log10(std::log(static_cast<double>(last_n))) > tail_budget_log10)
        throw std::domain_error(
            "check_modular: prime-side tail exceeds the working epsilon; "
            "increase n_primes");

    const Real rhs =
        exp(rx / 4L) - psum / (sqrt(pi * rx) * 2L) - phi_closed_form(x, ctx);

    ModularCheck out{lhs, rhs, 0};
    const Real d = abs(lhs - rhs) + exp10(Real(-(wd - 5), 64));
    const double da = -log10(d).to_double();
    out.digits_agreed = da > 0.0 ? static_cast<long>(std::floor(da)) : 0;
    return out;
}

// ---------------------------------------------------------------------------
// Special values
// ---------------------------------------------------------------------------

SpecialValue special_value_check(long n, long digits) {
    if (n < 1) throw std::invalid_argument("special_value_check: n must be >= 1");
    SpecialValue sv;
    const mpq_class& e2n = euler_number(static_cast<unsigned>(2 * n));
    sv.exact = (mpq_class(8) - e2n) / mpq_class(mpz_class(1) << (2 * n + 3));
    if (n % 2 != 0) sv.exact = -sv.exact;
    const mpfr_prec_t prec = bits_for_digits(digits + 10);
    sv.computed = secondzeta(Complex(Real(-2 * n, prec)), digits).z;
    return sv;
}

// ---------------------------------------------------------------------------
// Real-axis finders
// ---------------------------------------------------------------------------

const char* critical_kind_name(CriticalPoint::Kind k) {
    switch (k) {
        case CriticalPoint::Kind::zero_of_Z: return "zero_of_Z";
        case CriticalPoint::Kind::extremum_min: return "extremum_min";
        case CriticalPoint::Kind::extremum_max: return "extremum_max";
        case CriticalPoint::Kind::derivative_zero: return "derivative_zero";
    }
    return "unknown";
}

CriticalPoint find_real_zero_near(double x0, long digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    const auto pole = pole_within(x0, 0.6);
    const long wd1 = digits + 12;
    const mpfr_prec_t prec1 = bits_for_digits(wd1 + 15);
    const Real avoid1 = exp10(Real(-(digits + 6), 64));

    LineFn g1{pole, wd1};
    auto g1f = [&](const Real& x) { return g1(x); };
    Bracket br = scan_bracket(g1f, Real(x0, prec1), Real(0.05, prec1), 10, pole,
                              avoid1, "find_real_zero_near");
    Real root = refine_root(g1f, br, exp10(Real(-(digits + 4), 64)), pole, avoid1);

    // The location is now good to ~10^-(digits+3), but for a zero hugging a
    // pole that is not enough for |Z| itself to be small: |Z| ~ |Z'| * err
    // and |Z'| ~ |residue| / dist^2. Re-polish at a precision that covers
    // the blow-up until the direct residual clears the reporting threshold.
    long extra = 0;
    if (pole) {
        const double dist = std::abs(root.to_double() - static_cast<double>(pole->location));
        if (dist > 0.0 && dist < 1.0)
            extra = pole->order * (static_cast<long>(std::ceil(-std::log10(dist))) + 1);
    }
    const long wd2 = digits + extra + 14;
    const mpfr_prec_t prec2 = bits_for_digits(wd2 + 15);
    LineFn g2{pole, wd2};
    auto g2f = [&](const Real& x) { return g2(x); };

    // |Z| target: an order of magnitude under the reporting threshold
    const Real resid_target = exp10(Real(-(digits - 2) - 1, 64));
    auto small_enough = [&](const Real& x, const Real& f) -> bool {
        if (!pole) return abs(f) < resid_target;
        Real d = abs(x - pole->location);
        Real denom = pole->order == 2 ? d * d : d;
        return abs(f) < resid_target * denom;
    };

    Real lo = root.round_to(prec2) - exp10(Real(-(digits + 1), prec2));
    Real hi = root.round_to(prec2) + exp10(Real(-(digits + 1), prec2));
    Real flo = g2f(lo), fhi = g2f(hi);
    if (flo.sign() * fhi.sign() < 0) {
        root = refine_root(g2f, Bracket{lo, hi, flo, fhi},
                           exp10(Real(-(digits + extra + 8), 64)), pole,
                           exp10(Real(-(wd2 + 4), 64)), small_enough);
    }

    CriticalPoint cp;
    cp.kind = CriticalPoint::Kind::zero_of_Z;
    cp.location = root.round_to(prec2);
    cp.value = real_axis_z(cp.location, wd2);
    return cp;
}

CriticalPoint find_extremum_near(double x0, long digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    const auto pole = pole_within(x0, 0.6);
    // Central difference at step 10^-(wd/3) keeps the difference error and
    // the evaluator noise balanced at ~10^-(2wd/3); wd = 3*digits/2 then
    // delivers `digits` correct digits of the location.
    const long wd = (3 * digits) / 2 + 12;
    const mpfr_prec_t prec = bits_for_digits(wd + 15);
    const Real h = exp10(Real(-((wd + 2) / 3), prec));

    auto deriv = [&](const Real& x) -> Real {
        return (real_axis_z(x + h, wd) - real_axis_z(x - h, wd)) / (h * 2L);
    };

    double dist0 = 1.0;
    if (pole) dist0 = std::abs(x0 - static_cast<double>(pole->location));
    const double step = (pole && dist0 < 0.1) ? dist0 / 8.0 : 0.02;
    const Real avoid = fmax(h * 8L, exp10(Real(-(wd + 4), 64)));

    Bracket br = scan_bracket(deriv, Real(x0, prec), Real(step, prec), 14, pole,
                              avoid, "find_extremum_near");
    Real loc = refine_root(deriv, br, exp10(Real(-(digits + 3), 64)), pole, avoid);

    CriticalPoint cp;
    cp.location = loc.round_to(prec);
    const Real f0 = real_axis_z(cp.location, wd);
    const Real fp = real_axis_z(cp.location + h, wd);
    const Real fm = real_axis_z(cp.location - h, wd);
    const Real s2 = (fp - f0 * 2L + fm) / (h * h);
    // Evaluator noise through the second difference: ~4 * 10^-wd * max|f| / h^2
    const Real noise =
        fmax(abs(f0), Real(1L, prec)) * exp10(Real(-((wd + 2) / 3) + 4, prec));
    if (abs(s2) < noise)
        cp.kind = CriticalPoint::Kind::derivative_zero;
    else
        cp.kind = s2.sign() > 0 ? CriticalPoint::Kind::extremum_min
                                : CriticalPoint::Kind::extremum_max;
    cp.value = f0;
    return cp;
}

// ---------------------------------------------------------------------------
// Pole-free cosine form
// ---------------------------------------------------------------------------

namespace {
// Exact integer detection (imaginary part exactly zero, real part an exact
// integer of moderate size).
bool exact_real_int(const Complex& s, long* out) {
    if (!s.im.is_zero() || !s.re.is_finite()) return false;
    Real r = round_nearest(s.re);
    if (!(r == s.re)) return false;
    double d = r.to_double();
    if (std::abs(d) > 1.0e15) return false;
    *out = static_cast<long>(d);
    return true;
}
}  // namespace

Complex z_cos_form(const Complex& s, long digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    const mpfr_prec_t prec = bits_for_digits(digits + 12);
    long k = 0;
    if (exact_real_int(s, &k)) {
        if (k == 1)
            throw PoleProximity(
                "2 Z(s) cos(pi s/2) keeps the double pole at s = 1: cos(pi/2) has "
                "only a simple zero there",
                PoleInfo{1, 2});
        if (k <= -1 && (-k) % 2 == 1) {
            // cos(pi s/2) vanishes simply, Z has a simple pole: the product
            // tends to 2 * Res * d/ds[cos(pi s/2)] = (-1)^(n+1) pi Res
            const long n = (1 - k) / 2;
            Real v = const_pi(prec) * residue_closed_form(k, prec);
            if (n % 2 == 0) v = -v;
            return Complex(v);
        }
    }
    const EvalResult zr = secondzeta(s, digits + 5);
    const Real half_pi = const_pi(zr.z.prec() > prec ? zr.z.prec() : prec) / 2L;
    const Complex c = cos(Complex(s.re * half_pi, s.im * half_pi));
    return (zr.z * c) * 2L;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

std::string critical_point_to_json(const CriticalPoint& cp, long digits) {
    nlohmann::ordered_json j;
    j["kind"] = critical_kind_name(cp.kind);
    j["location"] = cp.location.to_string_fixed(static_cast<size_t>(digits));
    j["value"] = cp.value.to_string_fixed(static_cast<size_t>(digits));
    j["digits"] = digits;
    return j.dump();
}

}  // namespace seczeta
