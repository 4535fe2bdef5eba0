#include "doctest.h"

#include "seczeta/arith.hpp"
#include "seczeta/quadrature.hpp"
#include "seczeta/specials.hpp"
#include "seczeta/terms.hpp"
#include "seczeta/zeros.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace seczeta;

namespace {

Complex C(double re, double im, long digits = 40) {
    return Complex(re, im, bits_for_digits(digits));
}

double crel(const Complex& got, const Complex& want) {
    return (abs(got - want) / abs(want)).to_double();
}

}  // namespace

TEST_CASE("zero-ordinate sum against its closed-form summands at s = 4") {
    // At s = 4 the smoothing weight is the regularized Gamma(2, a g^2),
    // whose closed form is (1 + x) e^{-x}: the whole series can be rebuilt
    // from scratch with nothing but exp.
    PrecisionContext ctx = PrecisionContext::make(30);
    EvalParams p{C(4, 0, 45), 0.02, ctx};
    TermResult got = term_A(p);

    mpfr_prec_t prec = bits_for_digits(46);
    Real a(0.02, prec);
    Complex want(prec);
    for (long n = 1; n <= 40; ++n) {
        Real g = zero_ordinate(n, 46);
        Real x = a * g * g;
        Real summand = (1L + x) * exp(-x) / pow(g, 4L);
        want.re = want.re + summand;
    }
    CHECK(crel(got.value, want) < 1e-23);
    CHECK(got.terms_used > 5);
    CHECK(got.terms_used < 40);
    CHECK(got.error_estimate >= 0.0);
    CHECK(got.reason == StopReason::below_epsilon);
}

TEST_CASE("zero-ordinate sum: conjugation and the trivial lattice zeros") {
    PrecisionContext ctx = PrecisionContext::make(20);
    Complex s = C(2.5, 7);
    Complex a = term_A({s, 0.015, ctx}).value;
    Complex b = conj(term_A({conj(s), 0.015, ctx}).value);
    CHECK(abs(a - b).to_double() < 1e-18 * std::max(1.0, abs(a).to_double()));

    TermResult lattice = term_A({C(-2, 0), 0.015, ctx});
    CHECK(lattice.value.re.is_zero());
    CHECK(lattice.value.im.is_zero());
    CHECK(lattice.terms_used == 1);
}

TEST_CASE("prime-power sum against the erfc closed form at s = 2") {
    // At s = 2 the shape is Gamma(-1/2, x) = 2 (e^{-x}/sqrt x - sqrt pi
    // erfc sqrt x): again the series rebuilds from elementary pieces.
    PrecisionContext ctx = PrecisionContext::make(30);
    EvalParams p{C(2, 0, 45), 0.015, ctx};
    TermResult got = term_P(p);

    mpfr_prec_t prec = bits_for_digits(50);
    Real a(0.015, prec);
    Real pi = const_pi(prec);
    Complex want(prec);
    for (unsigned long n = 2; n <= 120; ++n) {
        auto pp = von_mangoldt(n);
        if (!pp) continue;
        Real ln = log(Real(static_cast<long>(n), prec));
        Real x = ln * ln / (a * 4L);
        Real g_half = (exp(-x) / sqrt(x) - sqrt(pi) * erfc_real(sqrt(x))) * 2L;
        Real summand = log(Real(static_cast<long>(pp->p), prec)) /
                       sqrt(Real(static_cast<long>(n), prec)) * g_half * (ln / 2L);
        want.re = want.re + summand;
    }
    want = want / (sqrt(pi) * 2L);
    CHECK(crel(got.value, want) < 1e-21);
    CHECK(got.terms_used >= 9);
}

TEST_CASE("prime-power sum: scan floor and trivial lattice zeros") {
    PrecisionContext ctx = PrecisionContext::make(15);
    // the scan never stops before n = 9 even when terms are already tiny
    CHECK(term_P({C(6, 0), 0.015, ctx}).terms_used >= 9);

    TermResult lattice = term_P({C(-4, 0), 0.015, ctx});
    CHECK(lattice.value.re.is_zero());
    CHECK(lattice.terms_used == 9);

    Complex s = C(2.5, 7);
    Complex a = term_P({s, 0.015, ctx}).value;
    Complex b = conj(term_P({conj(s), 0.015, ctx}).value);
    CHECK(abs(a - b).to_double() < 1e-14 * std::max(1.0, abs(a).to_double()));
}

TEST_CASE("exponential series against direct quadrature") {
    // E(s) = 4^{s/2} / Gamma(s/2) * integral_0^{a/4} t^{s/2 - 1} e^t dt
    PrecisionContext ctx = PrecisionContext::make(25);
    double a = 0.015;
    Complex s = C(3, 2, 40);
    TermResult got = term_E({s, a, ctx});

    long d = 25;
    mpfr_prec_t prec = bits_for_digits(d + 10);
    Complex s2m1 = s.round_to(prec) / 2L - 1L;
    Complex integral = tanh_sinh_complex(
        [&](const Real& t) { return pow_real_base(t, s2m1) * exp(t); },
        Real(0L, prec), Real(a / 4.0, prec), d);
    Complex want = pow_real_base(Real(2L, prec), s.round_to(prec)) *
                   recip_gamma(s.round_to(prec) / 2L, ctx) * integral;
    CHECK(crel(got.value, want) < 1e-18);
}

TEST_CASE("exponential series: exact lattice values and continuity through them") {
    PrecisionContext ctx = PrecisionContext::make(30);
    TermResult e2 = term_E({C(-2, 0), 0.015, ctx});
    CHECK(e2.value.re == -0.25);  // exact dyadic
    CHECK(e2.value.im.is_zero());
    CHECK(e2.terms_used == 0);
    CHECK(term_E({C(-4, 0), 0.015, ctx}).value.re == 0.0625);

    // the lattice value is the limit of the generic path
    mpfr_prec_t prec = 256;
    Complex near(Real(-2L, prec) + Real("1e-25", prec), Real(0L, prec));
    TermResult cont = term_E({near, 0.015, ctx});
    CHECK(abs(cont.value.re + 0.25).to_double() < 1e-12);

    Complex s = C(2.5, 7);
    Complex a = term_E({s, 0.015, ctx}).value;
    Complex b = conj(term_E({conj(s), 0.015, ctx}).value);
    CHECK(abs(a - b).to_double() < 1e-25 * std::max(1.0, abs(a).to_double()));
}

TEST_CASE("singular term: poles throw, lattice values are exact rationals") {
    PrecisionContext ctx = PrecisionContext::make(20);
    CHECK_THROWS_AS(term_S({C(1, 0), 0.015, ctx}), PoleError);
    CHECK_THROWS_AS(term_S({C(-3, 0), 0.015, ctx}), PoleError);
    CHECK_THROWS_AS(term_S({C(-7, 0), 0.015, ctx}), PoleError);

    // S(-2m) = (-1)^m E_{2m} / (8 * 4^m): 1/32 and 5/128 are exact dyadics
    TermResult s2 = term_S({C(-2, 0), 0.015, ctx});
    CHECK(s2.value.re == 0.03125);
    CHECK(s2.terms_used == 0);
    CHECK(term_S({C(-4, 0), 0.015, ctx}).value.re == 0.0390625);
}

TEST_CASE("singular term: conjugation and honest asymptotic failure") {
    PrecisionContext ctx = PrecisionContext::make(20);
    Complex s = C(2, 5);
    Complex a = term_S({s, 0.015, ctx}).value;
    Complex b = conj(term_S({conj(s), 0.015, ctx}).value);
    CHECK(abs(a - b).to_double() < 1e-18 * std::max(1.0, abs(a).to_double()));

    // at a = 0.5 the asymptotic floor sits far above 30 digits: the series
    // must refuse rather than return garbage
    PrecisionContext hungry = PrecisionContext::make(30);
    CHECK_THROWS_AS(term_S({C(0.5, 3), 0.5, hungry}), AsymptoticFailure);
}

TEST_CASE("singular term reports a usable stop at the flagship geometry") {
    PrecisionContext ctx = PrecisionContext::make(15).escalate(32.0);
    TermResult r = term_S({C(0.5, 100, 60), 0.015, ctx});
    CHECK(r.value.is_finite());
    CHECK(r.reason != StopReason::exhausted);
    CHECK(r.error_estimate >= 0.0);
}
