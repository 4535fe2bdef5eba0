// Exact integer/rational number theory: von Mangoldt values as symbolic
// prime powers, Bernoulli and Euler numbers, Bernoulli polynomials at 3/4.
//
// Everything here is exact; callers materialize values at whatever binary
// precision they need. Caches are append-only and guarded for concurrent
// readers.
#pragma once

#include "seczeta/real.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace seczeta {

struct PrimePower {
    unsigned long p;  // prime
    unsigned k;       // exponent, n = p^k
};

// Lambda(n) = log p if n = p^k, else 0. Sieve-backed lookup below the table
// limit (default 10^6, extended on demand), trial division beyond it.
std::optional<PrimePower> von_mangoldt(unsigned long n);

// Pre-extend the sieve so subsequent von_mangoldt calls up to `n` are
// lock-cheap (useful before parallel sections).
void mangoldt_ensure(unsigned long n);

// Materialize Lambda(n) at `prec` bits (0 if n is not a prime power).
Real von_mangoldt_value(unsigned long n, mpfr_prec_t prec);

// Exact Bernoulli number B_n (B_1 = -1/2 convention; odd n >= 3 gives 0).
const mpq_class& bernoulli_number(unsigned n);

// Exact Euler number E_n (integer-valued; odd n gives 0).
const mpq_class& euler_number(unsigned n);

// Exact Bernoulli polynomial value B_n(3/4).
mpq_class bernoulli_poly_three_quarters(unsigned n);

// Exact binomial coefficient.
mpz_class binomial(unsigned long n, unsigned long k);

// mpq -> Real at the given precision (single rounding).
inline Real rational_to_real(const mpq_class& q, mpfr_prec_t prec) {
    return Real::from_mpq(q.get_mpq_t(), prec);
}

}  // namespace seczeta
