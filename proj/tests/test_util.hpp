// Shared helpers for the test suite: reference-string parsing and
// digit-agreement predicates.
#pragma once

#include "seczeta/complexnum.hpp"
#include "seczeta/real.hpp"

#include <cmath>
#include <string>

namespace tst {

using seczeta::Real;
using seczeta::Complex;

// Parse a reference literal at (more than) enough precision for any
// comparison in this suite.
inline Real ref(const std::string& s) { return Real(s, seczeta::bits_for_digits(90)); }

// |x - ref| as a double (safe for the magnitudes this suite compares).
inline double abs_err(const Real& x, const std::string& rs) {
    return seczeta::abs(x - ref(rs)).to_double();
}

// |x - ref| / |ref| as a double.
inline double rel_err(const Real& x, const std::string& rs) {
    Real r = ref(rs);
    return (seczeta::abs(x - r) / seczeta::abs(r)).to_double();
}

// Decimal exponent E of a nonzero value written as D.DDD... x 10^E.
inline long dec_exponent(const Real& r) {
    return static_cast<long>(std::floor(log10(seczeta::abs(r)).to_double() + 1e-12));
}

// True iff x reproduces the first `ndigits` significant digits of the
// reference literal, allowing `ulps` units in the last of those digits.
inline bool match_digits(const Real& x, const std::string& rs, long ndigits,
                         double ulps = 2.0) {
    Real r = ref(rs);
    long e = dec_exponent(r);
    Real tol = exp10(Real(static_cast<double>(e - ndigits + 1), 64)) * ulps;
    return seczeta::abs(x - r) <= tol;
}

// Count of significant digits in a decimal literal (sign, point and leading
// zeros excluded; exponent suffixes are not supported).
inline long shown_digits(const std::string& s) {
    long n = 0;
    bool seen_nonzero = false;
    for (char c : s) {
        if (c < '0' || c > '9') continue;
        if (c != '0') seen_nonzero = true;
        if (seen_nonzero) ++n;
    }
    return n;
}

// True iff x matches every digit the literal shows (last one +/- ulps).
inline bool match_shown(const Real& x, const std::string& rs, double ulps = 2.0) {
    return match_digits(x, rs, shown_digits(rs), ulps);
}

// Run f and report whether it threw an E whose message contains `substr`.
template <class E, class F>
bool throws_containing(F&& f, const std::string& substr) {
    try {
        f();
    } catch (const E& e) {
        return std::string(e.what()).find(substr) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace tst
