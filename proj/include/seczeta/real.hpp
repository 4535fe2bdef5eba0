// Arbitrary-precision real numbers: a thin RAII wrapper over MPFR.
//
// Every value carries its own precision (in bits), set explicitly at
// construction. There is no global default precision and no mutable shared
// state, so values can be built and combined freely from concurrent threads.
// Binary operations produce results at the larger of the two operand
// precisions; rounding is always to nearest.
#pragma once

#include <mpfr.h>
#include <gmp.h>

#include <cstdlib>
#include <string>
#include <stdexcept>
#include <utility>

namespace seczeta {

// Decimal digits -> binary precision with a small safety margin.
inline mpfr_prec_t bits_for_digits(long digits) {
    // ceil(digits * log2(10)) + 4
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1.0) + 4;
}

class Real {
  public:
    // Default-constructed value is NaN at minimal precision; it exists only
    // so containers work. Assigning into it adopts the source precision.
    Real() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_nan(v_); }

    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }

    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, x, MPFR_RNDN); }

    // Parse a decimal string at the given precision. Throws on garbage.
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("Real: cannot parse '" + s + "'");
        }
    }

    // Exact rational -> real, rounded once at the target precision.
    static Real from_mpq(const mpq_t q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, q, MPFR_RNDN);
        return r;
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    // A copy rounded to a different precision.
    Real round_to(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool fits_long() const { return mpfr_fits_slong_p(v_, MPFR_RNDN) != 0; }

    // Base-2 exponent of the leading bit (mpfr convention: 0.5 <= |m| < 1).
    // Only meaningful for finite nonzero values.
    long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

    // Cheap upper-ish estimate of log10|x|, good to ~0.31: driven by the
    // binary exponent alone. Returns very negative for zero.
    double magnitude_log10() const {
        if (is_zero() || !is_finite()) return -1.0e18;
        return (static_cast<double>(exponent2())) * 0.30102999566398120;
    }

    // Decimal rendering with `digits` significant digits. Positional format
    // when the exponent is moderate, scientific otherwise. Deterministic.
    std::string to_string(size_t digits) const;

    // Like to_string but always emits exactly `digits` significant digits
    // (no trailing-zero stripping). Used where byte-stable round trips
    // matter: the zero cache file and JSON output.
    std::string to_string_fixed(size_t digits) const;

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

  private:
    mpfr_t v_;
};

inline mpfr_prec_t max_prec(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

// ---- arithmetic -----------------------------------------------------------

inline Real operator+(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real operator-(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real operator*(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real operator/(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real operator-(const Real& a) {
    Real r(a.prec()); mpfr_neg(r.get(), a.get(), MPFR_RNDN); return r;
}

// Mixed ops with machine integers/doubles: the scalar is exact, result keeps
// the Real operand's precision.
inline Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN); return r; }

inline Real operator+(const Real& a, double b) { Real r(a.prec()); mpfr_add_d(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator+(double a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, double b) { Real r(a.prec()); mpfr_sub_d(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator-(double a, const Real& b) { Real r(b.prec()); mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, double b) { Real r(a.prec()); mpfr_mul_d(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator*(double a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, double b) { Real r(a.prec()); mpfr_div_d(r.get(), a.get(), b, MPFR_RNDN); return r; }
inline Real operator/(double a, const Real& b) { Real r(b.prec()); mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN); return r; }

// ---- comparisons (NaN compares false, as with doubles) --------------------

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }

inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) < 0 && !a.is_nan(); }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) > 0 && !a.is_nan(); }
inline bool operator<=(const Real& a, double b) { return !a.is_nan() && mpfr_cmp_d(a.get(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return !a.is_nan() && mpfr_cmp_d(a.get(), b) >= 0; }
inline bool operator==(const Real& a, double b) { return !a.is_nan() && mpfr_cmp_d(a.get(), b) == 0; }
inline bool operator==(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) == 0; }

// ---- elementary functions --------------------------------------------------

#define SECZETA_REAL_UNARY(name, mpfr_fn)                                     \
    inline Real name(const Real& x) {                                        \
        Real r(x.prec()); mpfr_fn(r.get(), x.get(), MPFR_RNDN); return r;    \
    }

SECZETA_REAL_UNARY(abs, mpfr_abs)
SECZETA_REAL_UNARY(sqrt, mpfr_sqrt)
SECZETA_REAL_UNARY(exp, mpfr_exp)
SECZETA_REAL_UNARY(expm1, mpfr_expm1)
SECZETA_REAL_UNARY(exp10, mpfr_exp10)
SECZETA_REAL_UNARY(log, mpfr_log)
SECZETA_REAL_UNARY(log10, mpfr_log10)
SECZETA_REAL_UNARY(sin, mpfr_sin)
SECZETA_REAL_UNARY(cos, mpfr_cos)
SECZETA_REAL_UNARY(tan, mpfr_tan)
SECZETA_REAL_UNARY(atan, mpfr_atan)
SECZETA_REAL_UNARY(sinh, mpfr_sinh)
SECZETA_REAL_UNARY(cosh, mpfr_cosh)
SECZETA_REAL_UNARY(tanh, mpfr_tanh)
// floor/ceil/round are 2-argument macros in mpfr.h; spell out the rint forms
inline Real floor(const Real& x) {
    Real r(x.prec()); mpfr_rint(r.get(), x.get(), MPFR_RNDD); return r;
}
inline Real ceil(const Real& x) {
    Real r(x.prec()); mpfr_rint(r.get(), x.get(), MPFR_RNDU); return r;
}
inline Real round_nearest(const Real& x) {
    Real r(x.prec()); mpfr_rint(r.get(), x.get(), MPFR_RNDNA); return r;
}
SECZETA_REAL_UNARY(gamma_real, mpfr_gamma)
SECZETA_REAL_UNARY(digamma_real, mpfr_digamma)
SECZETA_REAL_UNARY(zeta_real, mpfr_zeta)
SECZETA_REAL_UNARY(erfc_real, mpfr_erfc)

#undef SECZETA_REAL_UNARY

inline Real pow(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, long b) {
    Real r(a.prec()); mpfr_pow_si(r.get(), a.get(), b, MPFR_RNDN); return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(max_prec(y, x)); mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN); return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(max_prec(y, x)); mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN); return r;
}
inline Real fmax(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_max(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}
inline Real fmin(const Real& a, const Real& b) {
    Real r(max_prec(a, b)); mpfr_min(r.get(), a.get(), b.get(), MPFR_RNDN); return r;
}

// log|Gamma(x)| plus the sign of Gamma(x), for real x away from poles.
inline Real lgamma_real(const Real& x, int* sign_out = nullptr) {
    Real r(x.prec());
    int sg = 0;
    mpfr_lgamma(r.get(), &sg, x.get(), MPFR_RNDN);
    if (sign_out) *sign_out = sg;
    return r;
}

// Upper incomplete gamma for real shape/argument (used by error estimates
// and as a test oracle; the complex version lives in specials).
inline Real upper_gamma_real(const Real& s, const Real& x) {
    Real r(max_prec(s, x)); mpfr_gamma_inc(r.get(), s.get(), x.get(), MPFR_RNDN); return r;
}

// ---- constants -------------------------------------------------------------

inline Real const_pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.get(), MPFR_RNDN); return r; }
inline Real const_euler(mpfr_prec_t prec) { Real r(prec); mpfr_const_euler(r.get(), MPFR_RNDN); return r; }
inline Real const_ln2(mpfr_prec_t prec) { Real r(prec); mpfr_const_log2(r.get(), MPFR_RNDN); return r; }

// ---- rendering --------------------------------------------------------------

namespace detail {
inline std::string render_real(mpfr_srcptr v, size_t digits, bool strip_zeros) {
    if (digits == 0) digits = 1;
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v)) return strip_zeros ? std::string("0")
                                           : "0." + std::string(digits - 1, '0');
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, digits, v, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = false;
    if (!mant.empty() && mant[0] == '-') { neg = true; mant.erase(0, 1); }
    // mant is `digits` digits d1 d2 ... ; value = 0.d1d2... * 10^e10
    std::string out;
    long e = static_cast<long>(e10);
    long nd = static_cast<long>(mant.size());
    if (e > 0 && e <= nd + 6 && e <= 64) {
        // positional, decimal point inside or shortly after the digits
        if (e >= nd) {
            out = mant + std::string(e - nd, '0');
        } else {
            out = mant.substr(0, e) + "." + mant.substr(e);
        }
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(-e, '0') + mant;
    } else {
        // scientific: d1.d2... e (e10-1)
        out = mant.substr(0, 1);
        if (nd > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    // strip trailing zeros after a decimal point (but keep at least one digit)
    if (strip_zeros && out.find('.') != std::string::npos &&
        out.find('e') == std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') last--;
        out.erase(last + 1);
    }
    return neg ? "-" + out : out;
}
}  // namespace detail

inline std::string Real::to_string(size_t digits) const {
    return detail::render_real(v_, digits, true);
}

inline std::string Real::to_string_fixed(size_t digits) const {
    return detail::render_real(v_, digits, false);
}

}  // namespace seczeta
