#include "doctest.h"

#include "seczeta/quadrature.hpp"
#include "seczeta/specials.hpp"
#include "test_util.hpp"

#include <random>

using namespace seczeta;

namespace {

const PrecisionContext kCtx = PrecisionContext::make(30);

Complex C(double re, double im, long digits = 40) {
    return Complex(re, im, bits_for_digits(digits));
}

double cdiff(const Complex& a, const Complex& b) {
    return abs(a - b).to_double();
}

}  // namespace

TEST_CASE("gamma pole detection is exact") {
    CHECK(is_gamma_pole(C(0, 0)));
    CHECK(is_gamma_pole(C(-1, 0)));
    CHECK(is_gamma_pole(C(-7, 0)));
    CHECK_FALSE(is_gamma_pole(C(0.5, 0)));
    CHECK_FALSE(is_gamma_pole(C(-1, 1e-12)));
    CHECK_FALSE(is_gamma_pole(C(-1.0000001, 0)));
    Complex nearly(Real(-1L, 256) + Real("1e-40", 256), Real(0L, 256));
    CHECK_FALSE(is_gamma_pole(nearly));
}

TEST_CASE("log gamma matches the real-axis special cases") {
    // exp(lgamma(6)) = 120
    Complex lg6 = log_gamma(C(6, 0), kCtx);
    CHECK(lg6.im.is_zero());
    CHECK(abs(exp(lg6.re) - 120L).to_double() < 1e-24);
    // against MPFR's real lgamma on a grid
    for (double x : {0.5, 1.0, 2.5, 7.25}) {
        Complex lg = log_gamma(C(x, 0), kCtx);
        Real want = lgamma_real(Real(x, kCtx.bits()));
        CHECK(abs(lg.re - want).to_double() < 1e-26);
        CHECK(lg.im.is_zero());
    }
}

TEST_CASE("log gamma: conjugation, recurrence, duplication") {
    Complex z = C(2.5, 3.7);
    Complex a = log_gamma(conj(z), kCtx);
    Complex b = conj(log_gamma(z, kCtx));
    CHECK(cdiff(a, b) < 1e-26);

    // lgamma(z+1) = lgamma(z) + log z, exact on the principal branch
    for (auto zz : {C(0.8, 3), C(2, 0.5), C(5.5, -2), C(0.6, -40)}) {
        Complex lhs = log_gamma(zz + 1L, kCtx);
        Complex rhs = log_gamma(zz, kCtx) + log(zz);
        CHECK(cdiff(lhs, rhs) < 1e-24);
    }

    // duplication, compared multiplicatively to stay branch-free:
    // Gamma(2z) = Gamma(z) Gamma(z+1/2) 2^{2z-1} / sqrt(pi)
    Complex zz = C(1.25, 0.75);
    Complex lhs = exp(log_gamma(zz * 2L, kCtx));
    Complex two_pow = pow_real_base(Real(2L, kCtx.bits()), zz * 2L - 1L);
    Complex rhs = exp(log_gamma(zz, kCtx) + log_gamma(zz + Real(0.5, kCtx.bits()), kCtx)) *
                  two_pow / sqrt(const_pi(kCtx.bits()));
    CHECK((abs(lhs - rhs) / abs(lhs)).to_double() < 1e-24);

    CHECK_THROWS_AS(log_gamma(C(0, 0), kCtx), PoleError);
    CHECK_THROWS_AS(log_gamma(C(-4, 0), kCtx), PoleError);
}

TEST_CASE("digamma: known values, recurrence, conjugation") {
    mpfr_prec_t p = kCtx.bits();
    // psi(1) = -euler_gamma, psi(1/2) = -euler_gamma - 2 log 2
    CHECK(abs(digamma(C(1, 0), kCtx).re + const_euler(p)).to_double() < 1e-26);
    CHECK(abs(digamma(C(0.5, 0), kCtx).re + const_euler(p) + const_ln2(p) * 2L)
              .to_double() < 1e-26);
    // against MPFR's real digamma
    CHECK(abs(digamma(C(3.75, 0), kCtx).re - digamma_real(Real(3.75, p))).to_double() <
          1e-26);
    // psi(z+1) = psi(z) + 1/z
    for (auto zz : {C(0.7, 2), C(3, -5), C(0.5, 30)}) {
        Complex lhs = digamma(zz + 1L, kCtx);
        Complex rhs = digamma(zz, kCtx) + 1L / zz;
        CHECK(cdiff(lhs, rhs) < 1e-24);
    }
    Complex z = C(1.5, 2.5);
    CHECK(cdiff(digamma(conj(z), kCtx), conj(digamma(z, kCtx))) < 1e-26);
    CHECK_THROWS_AS(digamma(C(0, 0), kCtx), PoleError);
    CHECK_THROWS_AS(digamma(C(-2, 0), kCtx), PoleError);
}

TEST_CASE("reciprocal gamma vanishes exactly at the poles") {
    CHECK(recip_gamma(C(0, 0), kCtx).re.is_zero());
    CHECK(recip_gamma(C(-3, 0), kCtx).re.is_zero());
    CHECK(recip_gamma(C(-3, 0), kCtx).im.is_zero());
    Real want = 1L / sqrt(const_pi(kCtx.bits()));
    CHECK(abs(recip_gamma(C(0.5, 0), kCtx).re - want).to_double() < 1e-26);
}

TEST_CASE("upper incomplete gamma: closed forms at small integer shapes") {
    mpfr_prec_t p = kCtx.bits();
    Real x5(5L, p), x3(3L, p);
    CHECK(abs(upper_gamma(C(1, 0), x5, kCtx).re - exp(-x5)).to_double() < 1e-28);
    CHECK(abs(upper_gamma(C(2, 0), x3, kCtx).re - exp(-x3) * 4L).to_double() < 1e-27);
    // Gamma(1/2, x) = sqrt(pi) erfc(sqrt x)
    for (double xv : {0.25, 2.0, 30.0}) {
        Real x(xv, p);
        Real want = sqrt(const_pi(p)) * erfc_real(sqrt(x));
        Real got = upper_gamma(C(0.5, 0), x, kCtx).re;
        CHECK((abs(got - want) / want).to_double() < 1e-25);
    }
}

TEST_CASE("upper incomplete gamma agrees with MPFR for real shapes") {
    mpfr_prec_t p = kCtx.bits();
    for (double sv : {-2.5, -0.75, 0.5, 1.0, 3.25}) {
        for (double xv : {0.3, 4.0, 25.0}) {
            Real want = upper_gamma_real(Real(sv, p), Real(xv, p));
            Complex got = upper_gamma(C(sv, 0), Real(xv, p), kCtx);
            CHECK(got.im.is_zero());
            CHECK((abs(got.re - want) / abs(want)).to_double() < 1e-24);
        }
    }
}

TEST_CASE("upper incomplete gamma satisfies the shape recurrence on a random grid") {
    // Gamma(s+1, x) = s Gamma(s, x) + x^s e^{-x}
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re_s(-3.0, 4.0), im_s(-50.0, 50.0),
        xs(0.1, 60.0);
    mpfr_prec_t p = kCtx.bits();
    for (int i = 0; i < 25; ++i) {
        Complex s = C(re_s(rng), im_s(rng));
        Real x(xs(rng), p);
        Complex lhs = upper_gamma(s + 1L, x, kCtx);
        Complex term = pow_real_base(x, s) * exp(-x);
        Complex rhs = s * upper_gamma(s, x, kCtx) + term;
        double scale = std::max({abs(lhs).to_double(), abs(term).to_double(), 1e-300});
        CHECK(abs(lhs - rhs).to_double() / scale < 1e-20);
    }
}

TEST_CASE("upper incomplete gamma against direct quadrature") {
    // Gamma(0, 2) = E_1(2) = integral_2^inf e^-t / t dt (tail beyond 62 is
    // below 2e-29)
    long d = 22;
    mpfr_prec_t p = bits_for_digits(d + 10);
    Real e1 = tanh_sinh([](const Real& t) { return exp(-t) / t; }, Real(2L, p),
                        Real(62L, p), d);
    Complex got0 = upper_gamma(C(0, 0), Real(2L, p), kCtx);
    CHECK((abs(got0.re - e1) / e1).to_double() < 1e-19);
    CHECK(got0.im.is_zero());

    // an oscillatory complex shape of the kind the zero-ordinate series uses
    Complex s = C(0.5, 40, d + 10);
    Complex sm1 = s - 1L;
    Complex want = tanh_sinh_complex(
        [&](const Real& t) { return exp(sm1 * Complex(log(t)) - Complex(t)); },
        Real(2L, p), Real(72L, p), d);
    Complex got = upper_gamma(s, Real(2L, p), kCtx);
    CHECK((abs(got - want) / abs(got)).to_double() < 1e-17);
}

TEST_CASE("log form is consistent with the direct form, with and without hint") {
    Complex s = C(0.25, 50);  // the shape family the evaluator feeds it
    for (double xv : {1.5, 3.0, 10.0}) {
        Real x(xv, kCtx.bits());
        Complex direct = upper_gamma(s, x, kCtx);
        Complex viaLog = exp(log_upper_gamma(s, x, kCtx));
        CHECK((abs(direct - viaLog) / abs(direct)).to_double() < 1e-22);

        PrecisionContext fat = PrecisionContext::make(60);
        Complex hint = log_gamma(s.round_to(fat.bits()), fat);
        Complex viaHint = exp(log_upper_gamma(s, x, kCtx, &hint));
        CHECK((abs(direct - viaHint) / abs(direct)).to_double() < 1e-22);
    }
}
