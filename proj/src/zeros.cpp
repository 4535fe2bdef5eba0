#include "seczeta/zeros.hpp"

#include "seczeta/parallel.hpp"
#include "seczeta/zetafn.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace seczeta {

namespace {

constexpr double kPi = 3.141592653589793238462643;

// Machine-precision Riemann-Siegel theta asymptotic; only used to place
// Gram points, which merely guide the bracketing grid.
double theta_approx(double t) {
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 +
           1.0 / (48.0 * t);
}

// Gram point g_k: theta(g_k) = k pi, bisected on the increasing branch.
double gram_point(long k) {
    double target = (double)k * kPi;
    double lo = 8.0, hi = 20.0;
    while (theta_approx(hi) < target) hi *= 1.6;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (theta_approx(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Continuous argument change of zeta along 2+iT -> sigma_b+iT by recursive
// subdivision: a segment is accepted once the principal argument of the
// endpoint ratio is safely below pi/2.
double arg_variation(const Complex& za, double sa, const Complex& zb, double sb,
                     const Real& T, const PrecisionContext& ictx, int depth) {
    Complex ratio = zb / za;
    double d = std::atan2(ratio.im.to_double(), ratio.re.to_double());
    if (std::fabs(d) < 0.5 * kPi - 0.2) return d;
    if (depth > 42)
        throw std::runtime_error(
            "count_zeros: argument walk did not stabilize (T too close to a zero?)");
    double sm = 0.5 * (sa + sb);
    Complex zm = zeta(Complex(Real(sm, T.prec()), T), ictx);
    return arg_variation(za, sa, zm, sm, T, ictx, depth + 1) +
           arg_variation(zm, sm, zb, sb, T, ictx, depth + 1);
}

}  // namespace

long count_zeros(const Real& T, const PrecisionContext& ctx) {
    (void)ctx;  // counting needs a fixed modest precision regardless of target
    PrecisionContext ictx = PrecisionContext::make(18, 6);
    mpfr_prec_t prec = ictx.bits();
    Real Tt = T.round_to(prec);
    if (!(Tt > 2.0)) return 0;
    Real th = hardy_theta(Tt, ictx);
    Complex z2 = zeta(Complex(Real(2.0, prec), Tt), ictx);
    // On sigma = 2 the Dirichlet series keeps Re zeta > 2 - pi^2/6 > 0, so
    // the argument along the vertical segment is the principal argument.
    double total = std::atan2(z2.im.to_double(), z2.re.to_double());
    Complex zh = zeta(Complex(Real(0.5, prec), Tt), ictx);
    total += arg_variation(z2, 2.0, zh, 0.5, Tt, ictx, 0);
    double nf = th.to_double() / kPi + 1.0 + total / kPi;
    long n = std::lround(nf);
    if (std::fabs(nf - (double)n) > 0.25)
        throw std::runtime_error("count_zeros: count did not resolve to an integer");
    return n;
}

namespace {

struct BracketScan {
    std::vector<std::pair<double, double>> brackets;
    double certified_T = 0.0;
};

// Sign of Z(t) at scanning precision. Exact zeros (never observed on this
// grid) count as positive.
int z_sign(double t, const PrecisionContext& sctx) {
    Real z = hardy_z(Real(t, sctx.bits()), sctx);
    return z.sign() < 0 ? -1 : 1;
}

BracketScan scan_brackets(long count) {
    PrecisionContext sctx = PrecisionContext::make(16, 4);
    // Certification height: just above the expected position of zero #count,
    // nudged upward if it happens to sit too close to a zero to count there.
    double T = gram_point(count + 1) + 0.6;
    long C = 0;
    for (int attempt = 0;; ++attempt) {
        try {
            C = count_zeros(Real(T, 64), sctx);
        } catch (const std::runtime_error&) {
            T += 0.37;
            if (attempt > 12) throw;
            continue;
        }
        if (C >= count) break;
        T = gram_point(count + 2 + attempt * 2) + 0.6;
        if (attempt > 12)
            throw std::runtime_error("zeros: certification height search failed");
    }
    // Grid: 10, then Gram points up to T (Gram's law puts about one zero per
    // interval), then T itself.
    std::vector<std::pair<double, int>> pts;
    pts.emplace_back(10.0, z_sign(10.0, sctx));
    for (long k = 0;; ++k) {
        double g = gram_point(k);
        if (g >= T) break;
        pts.emplace_back(g, z_sign(g, sctx));
    }
    pts.emplace_back(T, z_sign(T, sctx));

    auto changes = [&]() {
        long c = 0;
        for (size_t i = 1; i < pts.size(); ++i)
            if (pts[i].second != pts[i - 1].second) ++c;
        return c;
    };
    // Where Gram's law fails, split the quiet intervals until every zero
    // shows up as a sign change. Counting certifies completeness.
    for (int depth = 0; changes() < C; ++depth) {
        if (depth > 14)
            throw std::runtime_error("zeros: sign changes missing below certified height");
        std::vector<std::pair<double, int>> next;
        next.reserve(pts.size() * 2);
        for (size_t i = 0; i < pts.size(); ++i) {
            next.push_back(pts[i]);
            if (i + 1 < pts.size() && pts[i].second == pts[i + 1].second) {
                double mid = 0.5 * (pts[i].first + pts[i + 1].first);
                next.emplace_back(mid, z_sign(mid, sctx));
            }
        }
        // keep sorted order: interleaving above preserves it except the final
        // push ordering; rebuild sorted to be safe
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        pts.swap(next);
    }
    if (changes() != C)
        throw std::runtime_error("zeros: more sign changes than counted zeros");

    BracketScan out;
    out.certified_T = T;
    for (size_t i = 1; i < pts.size() && (long)out.brackets.size() < count; ++i)
        if (pts[i].second != pts[i - 1].second)
            out.brackets.emplace_back(pts[i - 1].first, pts[i].first);
    return out;
}

Real refine_zero(double lo, double hi, long digits) {
    // Cheap bisection narrows the bracket before full-precision secant.
    PrecisionContext sctx = PrecisionContext::make(16, 4);
    int slo = z_sign(lo, sctx);
    for (int i = 0; i < 9; ++i) {
        double mid = 0.5 * (lo + hi);
        if (z_sign(mid, sctx) == slo) lo = mid; else hi = mid;
    }
    PrecisionContext fctx = PrecisionContext::make(digits + 2, 6);
    mpfr_prec_t prec = fctx.bits();
    Real L(lo, prec), H(hi, prec);
    Real x0 = L, x1 = H;
    Real f0 = hardy_z(x0, fctx), f1 = hardy_z(x1, fctx);
    int sL = f0.sign() < 0 ? -1 : 1;
    Real tol = exp10(Real(-(digits + 2), prec));
    for (int it = 0; it < 300; ++it) {
        Real x2(prec);
        if (!(f1 - f0).is_zero()) x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if ((f1 - f0).is_zero() || !(x2 > L && x2 < H))
            x2 = (L + H) / 2L;
        Real f2 = hardy_z(x2, fctx);
        if ((f2.sign() < 0 ? -1 : 1) == sL) L = x2; else H = x2;
        Real step = abs(x2 - x1);
        x0 = x1; f0 = f1; x1 = x2; f1 = f2;
        if (step < tol * fmax(Real(1L, prec), abs(x1))) return x1;
    }
    throw std::runtime_error("zeros: refinement did not converge");
}

}  // namespace

std::vector<Real> compute_zero_ordinates(long count, long digits, bool parallel,
                                         double* certified_T) {
    if (count <= 0) return {};
    BracketScan scan = scan_brackets(count);
    if (certified_T) *certified_T = scan.certified_T;
    std::vector<Real> out((size_t)count);
    parallel_for(count, [&](long i) {
        out[(size_t)i] =
            refine_zero(scan.brackets[(size_t)i].first,
                        scan.brackets[(size_t)i].second, digits);
    }, parallel);
    // Sanity: strictly increasing, first ordinate in its known window.
    if (!(out[0] > 14.0 && out[0] < 14.2))
        throw std::runtime_error("zeros: first ordinate out of its known window");
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw std::runtime_error("zeros: ordinates not strictly increasing");
    return out;
}

namespace {

struct ZeroTableState {
    std::vector<Real> ord;
    long digits = 0;        // significant digits each ordinate is good to
    long high_water = 0;    // largest digit request seen
    double certified = 0.0;
};

std::shared_mutex g_zeros_mutex;
ZeroTableState g_zeros;

}  // namespace

void zeros_ensure(long n, long digits) {
    if (n < 1) throw std::invalid_argument("zeros_ensure: n must be >= 1");
    {
        std::shared_lock lk(g_zeros_mutex);
        if (g_zeros.digits >= digits && (long)g_zeros.ord.size() >= n) return;
    }
    std::unique_lock lk(g_zeros_mutex);
    if (g_zeros.digits >= digits && (long)g_zeros.ord.size() >= n) return;
    g_zeros.high_water = std::max(g_zeros.high_water, digits);
    // Store 20% above the largest request, and grow the count geometrically
    // so incremental deepening does not rescan per zero.
    long store_digits = (g_zeros.high_water * 6 + 4) / 5;
    long store_count =
        std::max(n, (long)((double)g_zeros.ord.size() * 1.5) + 8);
    double cert = 0.0;
    auto fresh = compute_zero_ordinates(store_count, store_digits, true, &cert);
    g_zeros.ord = std::move(fresh);
    g_zeros.digits = store_digits;
    g_zeros.certified = cert;
}

Real zero_ordinate(long n, long digits) {
    zeros_ensure(n, digits);
    std::shared_lock lk(g_zeros_mutex);
    return g_zeros.ord[(size_t)(n - 1)].round_to(bits_for_digits(digits));
}

ZeroCacheInfo zero_cache_info() {
    std::shared_lock lk(g_zeros_mutex);
    return {(long)g_zeros.ord.size(), g_zeros.digits, g_zeros.certified};
}

void save_zero_cache(const std::string& path) {
    std::string body;
    {
        std::shared_lock lk(g_zeros_mutex);
        if (g_zeros.ord.empty())
            throw CacheError("save_zero_cache: table is empty");
        std::ostringstream os;
        os << "SECZETA-ZEROS v1 " << g_zeros.digits << " " << g_zeros.ord.size()
           << "\n";
        for (size_t i = 0; i < g_zeros.ord.size(); ++i)
            os << (i + 1) << " "
               << g_zeros.ord[i].to_string_fixed((size_t)g_zeros.digits) << "\n";
        body = os.str();
    }
    unsigned long crc = crc32(0L, (const Bytef*)body.data(), (uInt)body.size());
    char hex[16];
    std::snprintf(hex, sizeof hex, "%08lx", crc & 0xffffffffUL);
    body += "CRC32 ";
    body += hex;
    body += "\n";
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw CacheError("save_zero_cache: cannot open " + path);
    f.write(body.data(), (std::streamsize)body.size());
    if (!f) throw CacheError("save_zero_cache: write failed for " + path);
}

void load_zero_cache(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CacheError("load_zero_cache: cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string data = buf.str();
    size_t tail = data.rfind("CRC32 ");
    if (tail == std::string::npos || tail == 0)
        throw CacheError("load_zero_cache: missing checksum line");
    std::string prefix = data.substr(0, tail);
    std::string crcline = data.substr(tail);
    unsigned long stated = 0;
    if (std::sscanf(crcline.c_str(), "CRC32 %lx", &stated) != 1)
        throw CacheError("load_zero_cache: malformed checksum line");
    unsigned long actual =
        crc32(0L, (const Bytef*)prefix.data(), (uInt)prefix.size());
    if ((actual & 0xffffffffUL) != (stated & 0xffffffffUL))
        throw CacheError("load_zero_cache: checksum mismatch");

    std::istringstream is(prefix);
    std::string magic, version;
    long digits = 0, count = 0;
    if (!(is >> magic >> version >> digits >> count) ||
        magic != "SECZETA-ZEROS" || version != "v1" || digits < 1 || count < 1)
        throw CacheError("load_zero_cache: bad header");
    std::vector<Real> ord;
    ord.reserve((size_t)count);
    mpfr_prec_t prec = bits_for_digits(digits) + 8;
    for (long i = 1; i <= count; ++i) {
        long idx = 0;
        std::string num;
        if (!(is >> idx >> num) || idx != i)
            throw CacheError("load_zero_cache: bad or out-of-order index line");
        Real v(num, prec);
        if (!ord.empty() && !(v > ord.back()))
            throw CacheError("load_zero_cache: ordinates not increasing");
        ord.push_back(std::move(v));
    }
    if (!(ord[0] > 14.0 && ord[0] < 14.2))
        throw CacheError("load_zero_cache: first ordinate implausible");
    // Recount independently so a stale or foreign file cannot poison results.
    double T = ord.back().to_double() + 0.45;
    PrecisionContext ictx = PrecisionContext::make(16, 4);
    long recount = 0;
    for (int attempt = 0;; ++attempt) {
        try {
            recount = count_zeros(Real(T, 64), ictx);
            break;
        } catch (const std::runtime_error&) {
            T += 0.31;
            if (attempt > 8) throw CacheError("load_zero_cache: recount failed");
        }
    }
    if (recount != count)
        throw CacheError("load_zero_cache: contents fail an independent recount");

    std::unique_lock lk(g_zeros_mutex);
    if (digits >= g_zeros.digits && count >= (long)g_zeros.ord.size()) {
        g_zeros.ord = std::move(ord);
        g_zeros.digits = digits;
        g_zeros.high_water = std::max(g_zeros.high_water, digits);
        g_zeros.certified = T;
    }
}

}  // namespace seczeta
