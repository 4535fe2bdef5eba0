// Complex numbers over the arbitrary-precision Real type.
//
// Plain value semantics: a Complex is a pair of Reals. Elementary complex
// functions (exp, log, pow, sqrt) are built from the MPFR real kernels; at
// these precisions the naive formulas are accurate because the exponent
// range is effectively unbounded (no premature over/underflow).
#pragma once

#include "seczeta/real.hpp"

namespace seczeta {

struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(Real(0L, r.prec())) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
    explicit Complex(mpfr_prec_t prec) : re(0L, prec), im(0L, prec) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_real() const { return im.is_zero(); }

    Complex round_to(mpfr_prec_t p) const { return Complex(re.round_to(p), im.round_to(p)); }

    std::string to_string(size_t digits) const {
        std::string s = re.to_string(digits);
        std::string t = im.to_string(digits);
        if (!t.empty() && t[0] == '-') return s + " - " + t.substr(1) + "i";
        return s + " + " + t + "i";
    }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
inline Complex operator+(const Real& a, const Complex& b) { return b + a; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
inline Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Real& a, const Complex& b) { return b * a; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Real& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {a * b.re / d, -(a * b.im) / d};
}
inline Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
inline Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
inline Complex operator*(long a, const Complex& b) { return b * a; }
inline Complex operator/(long a, const Complex& b) { return Real(a, b.prec()) / b; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real e = exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

// Principal branch: log z = log|z| + i arg z, arg in (-pi, pi].
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex sqrt(const Complex& z) {
    // principal square root via polar form
    Real r = abs(z);
    if (r.is_zero()) return Complex(z.prec());
    Real half(0.5, z.prec());
    Real m = sqrt(r);
    Real a = arg(z) * half;
    return {m * cos(a), m * sin(a)};
}

inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }
inline Complex pow(const Complex& z, const Real& w) { return exp(w * log(z)); }

// x^w for positive real x and complex w, avoiding the complex log.
inline Complex pow_real_base(const Real& x, const Complex& w) {
    Real lx = log(x);
    Real mod = exp(w.re * lx);
    Real a = w.im * lx;
    return {mod * cos(a), mod * sin(a)};
}

inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}
inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// Cheap log10|z| estimate from binary exponents (for escalation decisions).
inline double magnitude_log10(const Complex& z) {
    double a = z.re.magnitude_log10(), b = z.im.magnitude_log10();
    return a > b ? a : b;
}

}  // namespace seczeta
