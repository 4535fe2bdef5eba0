#include "seczeta/arith.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace seczeta {

namespace {

// Smallest-prime-factor table. spf[n] == 0 marks "prime" (including n < 2
// slots, which are never queried as composites).
struct SpfTable {
    unsigned long limit = 0;
    std::vector<uint32_t> spf;  // spf[n] = smallest prime factor < n, or 0
};

std::shared_mutex g_mangoldt_mutex;
SpfTable g_spf;

constexpr unsigned long kDefaultLimit = 1000000;

// Sieve [2, limit] in ~256 KiB segments using the primes found so far.
// Only composite n get spf[n] set; primes keep 0.
SpfTable build_spf(unsigned long limit) {
    SpfTable t;
    t.limit = limit;
    t.spf.assign(limit + 1, 0);
    const unsigned long seg = 1u << 18;
    std::vector<unsigned long> primes;  // primes found so far, ascending
    for (unsigned long lo = 2; lo <= limit; lo += seg) {
        unsigned long hi = std::min(limit, lo + seg - 1);
        // Mark composites in [lo, hi] with primes p <= sqrt(hi). All such
        // primes are < lo (segments are processed in order), except in the
        // very first segment where we discover them as we scan.
        for (unsigned long p : primes) {
            if (p * p > hi) break;
            unsigned long start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (unsigned long m = start; m <= hi; m += p)
                if (t.spf[m] == 0) t.spf[m] = (uint32_t)p;
        }
        for (unsigned long n = lo; n <= hi; ++n) {
            if (t.spf[n] == 0) {  // prime
                primes.push_back(n);
                if (n * n <= hi)
                    for (unsigned long m = n * n; m <= hi; m += n)
                        if (t.spf[m] == 0) t.spf[m] = (uint32_t)n;
            }
        }
    }
    return t;
}

// Prime-power test via the table: n <= limit.
std::optional<PrimePower> table_prime_power(const SpfTable& t, unsigned long n) {
    if (n < 2) return std::nullopt;
    unsigned long p = t.spf[n] ? t.spf[n] : n;
    unsigned k = 0;
    unsigned long m = n;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return std::nullopt;
    return PrimePower{p, k};
}

// Trial-division prime-power test for n beyond the table.
std::optional<PrimePower> direct_prime_power(unsigned long n) {
    if (n < 2) return std::nullopt;
    unsigned long p = 0;
    if (n % 2 == 0) p = 2;
    else {
        for (unsigned long d = 3; d * d <= n; d += 2)
            if (n % d == 0) { p = d; break; }
        if (p == 0) return PrimePower{n, 1};  // n itself is prime
    }
    unsigned k = 0;
    unsigned long m = n;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return std::nullopt;
    return PrimePower{p, k};
}

}  // namespace

void mangoldt_ensure(unsigned long n) {
    {
        std::shared_lock lk(g_mangoldt_mutex);
        if (g_spf.limit >= n) return;
    }
    std::unique_lock lk(g_mangoldt_mutex);
    if (g_spf.limit >= n) return;
    unsigned long limit = std::max(kDefaultLimit, g_spf.limit ? g_spf.limit : 1);
    while (limit < n) limit *= 2;
    g_spf = build_spf(limit);
}

std::optional<PrimePower> von_mangoldt(unsigned long n) {
    if (n < 2) return std::nullopt;
    {
        std::shared_lock lk(g_mangoldt_mutex);
        if (g_spf.limit >= n) return table_prime_power(g_spf, n);
    }
    if (n <= kDefaultLimit) {
        mangoldt_ensure(kDefaultLimit);
        std::shared_lock lk(g_mangoldt_mutex);
        return table_prime_power(g_spf, n);
    }
    return direct_prime_power(n);
}

Real von_mangoldt_value(unsigned long n, mpfr_prec_t prec) {
    auto pp = von_mangoldt(n);
    if (!pp) return Real(0.0, prec);
    return log(Real((long)pp->p, prec));
}

namespace {

std::shared_mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli;  // B_0, B_1, ...

std::shared_mutex g_euler_mutex;
std::vector<mpq_class> g_euler;  // E_0, E_1, ...

}  // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// B_m from the defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 (m >= 1).
const mpq_class& bernoulli_number(unsigned n) {
    {
        std::shared_lock lk(g_bernoulli_mutex);
        if (n < g_bernoulli.size()) return g_bernoulli[n];
    }
    std::unique_lock lk(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    for (unsigned m = (unsigned)g_bernoulli.size(); m <= n; ++m) {
        if (m > 2 && m % 2 == 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        mpq_class acc(0);
        for (unsigned k = 0; k < m; ++k) {
            if (g_bernoulli[k] == 0) continue;
            acc += mpq_class(binomial(m + 1, k)) * g_bernoulli[k];
        }
        acc /= mpq_class(m + 1);
        g_bernoulli.emplace_back(-acc);
    }
    return g_bernoulli[n];
}

// E_{2m} from sum_{k=0}^{m} C(2m,2k) E_{2k} = 0 (m >= 1); odd-index E are 0.
const mpq_class& euler_number(unsigned n) {
    {
        std::shared_lock lk(g_euler_mutex);
        if (n < g_euler.size()) return g_euler[n];
    }
    std::unique_lock lk(g_euler_mutex);
    if (g_euler.empty()) g_euler.emplace_back(1);
    for (unsigned m = (unsigned)g_euler.size(); m <= n; ++m) {
        if (m % 2 == 1) {
            g_euler.emplace_back(0);
            continue;
        }
        mpq_class acc(0);
        for (unsigned k = 0; k + 2 <= m; k += 2)
            acc += mpq_class(binomial(m, k)) * g_euler[k];
        g_euler.emplace_back(-acc);
    }
    return g_euler[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k} evaluated exactly at x = 3/4.
mpq_class bernoulli_poly_three_quarters(unsigned n) {
    bernoulli_number(n);  // fill cache through n
    mpq_class x(3, 4);
    mpq_class xpow(1);  // x^{n-k}, built from the k = n end downward
    mpq_class acc(0);
    // Walk k = n down to 0 so the power of x grows by one each step.
    for (unsigned k = n + 1; k-- > 0;) {
        const mpq_class& bk = bernoulli_number(k);
        if (bk != 0) acc += mpq_class(binomial(n, k)) * bk * xpow;
        if (k > 0) xpow *= x;
    }
    return acc;
}

}  // namespace seczeta
