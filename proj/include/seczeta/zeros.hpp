// Ordinates of the nontrivial zeta zeros on the critical line.
//
// Counting uses the argument principle (theta(T)/pi + 1 plus the argument
// variation of zeta along 2 -> 2+iT -> 1/2+iT with adaptive subdivision).
// Location uses Gram-point-guided sign-change bracketing of the Hardy Z
// function, with recursive subdivision where Gram's law fails, followed by
// bisection+secant refinement. Every table fill is certified: the number of
// sign changes found below the certification height must equal the
// argument-principle count.
//
// A process-wide table caches ordinates at the highest precision requested
// so far (plus headroom); it can be saved to and loaded from a checksummed
// text cache file.
#pragma once

#include "seczeta/precision.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace seczeta {

class CacheError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// N(T): number of zeros with 0 < Im rho <= T. T must not itself be a zero
// ordinate. The context only caps the internal working precision; counting
// needs ~15 digits regardless of the caller's target.
long count_zeros(const Real& T, const PrecisionContext& ctx);

// Compute the first `count` ordinates at `digits` significant digits,
// independent of the cache. `parallel` toggles the OpenMP bracket-refinement
// kernel; results are bit-identical either way. certified_T (if non-null)
// receives the height below which the count was certified.
std::vector<Real> compute_zero_ordinates(long count, long digits, bool parallel,
                                         double* certified_T = nullptr);

// Cached accessors. zero_ordinate(n, digits) returns the n-th ordinate
// (n >= 1) rounded to `digits` worth of bits, extending/recomputing the
// shared table as needed (the table keeps 20% more digits than the largest
// request seen, so repeat queries are cheap).
Real zero_ordinate(long n, long digits);
void zeros_ensure(long n, long digits);

struct ZeroCacheInfo {
    long count = 0;
    long digits = 0;
    double certified_through = 0.0;
};
ZeroCacheInfo zero_cache_info();

// Text cache: header "SECZETA-ZEROS v1 <digits> <count>", one
// "<index> <ordinate>" line per zero with exactly <digits> significant
// digits, and a trailing "CRC32 <hex>" over all preceding bytes. load
// throws CacheError on any corruption; a file whose digit count is below a
// later request is simply recomputed (reported as a miss by the caller).
void save_zero_cache(const std::string& path);
void load_zero_cache(const std::string& path);

}  // namespace seczeta
