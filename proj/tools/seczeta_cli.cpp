// Command-line surface for the secondary zeta library: evaluation with error
// reporting and term breakdown, zero-table management, X-ray curve export,
// critical-point search, modular-identity checks, finite parts, and a
// reduced-scale self test.
//
// Exit codes: 0 success, 1 parse/argument errors, 2 evaluation at (or too
// near) a pole, 3 infeasible precision (SECZETA_MAX_DIGITS cap), 4 zero-cache
// errors.
#include "seczeta/analysis.hpp"
#include "seczeta/arith.hpp"
#include "seczeta/engine.hpp"
#include "seczeta/precision.hpp"
#include "seczeta/xray.hpp"
#include "seczeta/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

using namespace seczeta;
using nlohmann::ordered_json;

// ---- complex input ---------------------------------------------------------

// Parse "RE", "RE+IMj", "RE-IMj", or "IMj" with decimal-string components at
// full precision; machine floats never touch the digits.
Complex parse_complex(const std::string& text, long digits) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    const mpfr_prec_t prec =
        bits_for_digits(std::max<long>(digits + 10, static_cast<long>(s.size())));
    if (s.back() != 'j' && s.back() != 'J') {
        return Complex(Real(s, prec), Real(0L, prec));
    }
    s.pop_back();
    // Split before the sign of the imaginary part: the last '+'/'-' that is
    // neither leading nor an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        char c = s[i];
        if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_str, im_str;
    if (split == std::string::npos) {
        im_str = s;
    } else {
        re_str = s.substr(0, split);
        im_str = s.substr(split);
    }
    Real re = re_str.empty() ? Real(0L, prec) : Real(re_str, prec);
    Real im;
    if (im_str.empty() || im_str == "+")
        im = Real(1L, prec);
    else if (im_str == "-")
        im = Real(-1L, prec);
    else
        im = Real(im_str, prec);
    return Complex(re, im);
}

std::string cformat(const Complex& z, long digits) {
    std::string re = z.re.to_string(static_cast<std::size_t>(digits));
    std::string im = z.im.to_string(static_cast<std::size_t>(digits));
    if (!im.empty() && im[0] == '-') return re + " - " + im.substr(1) + "j";
    return re + " + " + im + "j";
}

std::string dformat(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
    std::string s_text = "0.5+100j";
    long digits = 15;
    double a = 0.0;  // 0 = ladder default
    bool breakdown = false;
    bool error = false;
    std::string output = "text";
};

ordered_json eval_json(const Complex& s, const EvalResult& r, long digits) {
    const long wd = r.work_digits;
    auto c = [](const Complex& z, long d) {
        return ordered_json{{"re", z.re.to_string(static_cast<std::size_t>(d))},
                            {"im", z.im.to_string(static_cast<std::size_t>(d))}};
    };
    ordered_json j;
    j["s"] = c(s, digits + 10);
    j["a"] = dformat(r.a_used);
    j["digits"] = digits;
    j["z"] = c(r.z, digits);
    j["terms"] = ordered_json{{"A", c(r.breakdown.A, wd)},
                              {"P", c(r.breakdown.P, wd)},
                              {"E", c(r.breakdown.E, wd)},
                              {"S", c(r.breakdown.S, wd)}};
    j["zeros_used"] = r.breakdown.zeros_used;
    j["lambdas_used"] = r.breakdown.lambdas_used;
    j["error_estimate"] = r.error_estimate.to_string(3);
    if (r.agreed_digits)
        j["agreed_digits"] = *r.agreed_digits;
    else
        j["agreed_digits"] = nullptr;
    return j;
}

int run_eval(const EvalArgs& args) {
    Complex s = parse_complex(args.s_text, args.digits);
    EvalOptions opt;
    if (args.a > 0.0) opt.a = args.a;
    opt.verify = args.error;
    EvalResult r = secondzeta(s, args.digits, opt);

    if (args.output == "json") {
        std::printf("%s\n", eval_json(s, r, args.digits).dump(2).c_str());
        return 0;
    }
    if (args.output == "csv") {
        std::string agreed =
            r.agreed_digits ? std::to_string(*r.agreed_digits) : std::string();
        std::printf("s_re,s_im,a,digits,z_re,z_im,error_estimate,agreed_digits\n");
        std::printf("%s,%s,%s,%ld,%s,%s,%s,%s\n",
                    s.re.to_string(static_cast<std::size_t>(args.digits + 10)).c_str(),
                    s.im.to_string(static_cast<std::size_t>(args.digits + 10)).c_str(),
                    dformat(r.a_used).c_str(), args.digits,
                    r.z.re.to_string(static_cast<std::size_t>(args.digits)).c_str(),
                    r.z.im.to_string(static_cast<std::size_t>(args.digits)).c_str(),
                    r.error_estimate.to_string(3).c_str(), agreed.c_str());
        return 0;
    }
    std::printf("s      = %s\n", cformat(s, args.digits + 10).c_str());
    std::printf("a      = %s\n", dformat(r.a_used).c_str());
    std::printf("digits = %ld\n", args.digits);
    std::printf("Z      = %s\n", cformat(r.z, args.digits).c_str());
    if (args.error) {
        std::printf("error estimate <= %s\n", r.error_estimate.to_string(3).c_str());
        if (r.agreed_digits)
            std::printf("agreed digits (two-a cross-check) = %ld\n", *r.agreed_digits);
    }
    if (args.breakdown) {
        const long wd = r.work_digits;
        std::printf("working digits = %ld\n", wd);
        std::printf("A = %s\n", cformat(r.breakdown.A, wd).c_str());
        std::printf("P = %s\n", cformat(r.breakdown.P, wd).c_str());
        std::printf("E = %s\n", cformat(r.breakdown.E, wd).c_str());
        std::printf("S = %s\n", cformat(r.breakdown.S, wd).c_str());
        std::printf("zeros_used   = %ld\n", r.breakdown.zeros_used);
        std::printf("lambdas_used = %ld\n", r.breakdown.lambdas_used);
    }
    return 0;
}

// ---- zeros -----------------------------------------------------------------

int run_zeros(long count, long digits, bool serial, const std::string& cache,
              const std::string& output) {
    if (!cache.empty() && std::filesystem::exists(cache)) load_zero_cache(cache);
    std::vector<Real> zs = compute_zero_ordinates(count, digits, !serial);
    if (!cache.empty()) save_zero_cache(cache);
    if (output == "json") {
        ordered_json j;
        j["digits"] = digits;
        j["count"] = count;
        ordered_json arr = ordered_json::array();
        for (const Real& g : zs)
            arr.push_back(g.to_string(static_cast<std::size_t>(digits)));
        j["zeros"] = std::move(arr);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (output == "csv") {
        std::printf("n,gamma\n");
        for (long n = 0; n < count; ++n)
            std::printf("%ld,%s\n", n + 1,
                        zs[static_cast<std::size_t>(n)]
                            .to_string(static_cast<std::size_t>(digits))
                            .c_str());
    } else {
        for (long n = 0; n < count; ++n)
            std::printf("gamma_%ld = %s\n", n + 1,
                        zs[static_cast<std::size_t>(n)]
                            .to_string(static_cast<std::size_t>(digits))
                            .c_str());
    }
    return 0;
}

// ---- xray ------------------------------------------------------------------

int run_xray(const XRayRegion& region, long nx, long ny, long digits,
             const std::string& output) {
    XRayCurves xc = trace_xray(region, nx, ny, PrecisionContext::make(digits));
    if (output == "json") {
        std::printf("%s", xray_to_json(xc).c_str());
    } else if (output == "text") {
        std::printf("region [%g, %g] x [%g, %g], grid %ldx%ld\n",
                    region.sigma_min, region.sigma_max, region.t_min,
                    region.t_max, nx, ny);
        std::printf("real curves (Im Z = 0): %zu\n", xc.real_curves.size());
        for (std::size_t i = 0; i < xc.real_curves.size(); ++i)
            std::printf("  [%zu] %zu points%s\n", i, xc.real_curves[i].pts.size(),
                        xc.real_curves[i].closed ? ", closed" : "");
        std::printf("imag curves (Re Z = 0): %zu\n", xc.imag_curves.size());
        for (std::size_t i = 0; i < xc.imag_curves.size(); ++i)
            std::printf("  [%zu] %zu points%s\n", i, xc.imag_curves[i].pts.size(),
                        xc.imag_curves[i].closed ? ", closed" : "");
        std::printf("pole cells: %zu, crossing tolerance: %.3g\n",
                    xc.pole_cells.size(), xc.crossing_tol);
    } else {
        std::printf("%s", xray_to_csv(xc).c_str());
    }
    return 0;
}

// ---- critical --------------------------------------------------------------

int run_critical(double near, long digits, const std::string& kind,
                 const std::string& output) {
    CriticalPoint cp = (kind == "extremum") ? find_extremum_near(near, digits)
                                            : find_real_zero_near(near, digits);
    if (output == "json") {
        std::printf("%s\n", critical_point_to_json(cp, digits).c_str());
    } else {
        std::printf("kind     = %s\n", critical_kind_name(cp.kind));
        std::printf("location = %s\n",
                    cp.location.to_string(static_cast<std::size_t>(digits)).c_str());
        std::printf("value    = %s\n",
                    cp.value.to_string(static_cast<std::size_t>(digits)).c_str());
    }
    return 0;
}

// ---- modular-check ---------------------------------------------------------

int run_modular(double x, long n_zeros, long n_primes, long digits, bool phi,
                const std::string& output) {
    PrecisionContext ctx = PrecisionContext::make(digits);
    if (phi) {
        long agreed = check_phi_equality(x, ctx);
        if (output == "json") {
            ordered_json j;
            j["x"] = dformat(x);
            j["digits_agreed"] = agreed;
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("phi-form agreement at x = %s: %ld digits\n",
                        dformat(x).c_str(), agreed);
        }
        return 0;
    }
    ModularCheck mc = check_modular(x, n_zeros, n_primes, ctx);
    if (output == "json") {
        ordered_json j;
        j["x"] = dformat(x);
        j["n_zeros"] = n_zeros;
        j["n_primes"] = n_primes;
        j["lhs"] = mc.lhs.to_string(static_cast<std::size_t>(ctx.work_digits()));
        j["rhs"] = mc.rhs.to_string(static_cast<std::size_t>(ctx.work_digits()));
        j["digits_agreed"] = mc.digits_agreed;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("lhs (zero side)  = %s\n",
                    mc.lhs.to_string(static_cast<std::size_t>(ctx.work_digits())).c_str());
        std::printf("rhs (prime side) = %s\n",
                    mc.rhs.to_string(static_cast<std::size_t>(ctx.work_digits())).c_str());
        std::printf("agreed digits    = %ld\n", mc.digits_agreed);
    }
    return 0;
}

// ---- finite-part -----------------------------------------------------------

int run_finite_part(long pole_s, long digits, const std::string& output) {
    FinitePart fp = finite_part(pole_s, digits);
    if (output == "json") {
        ordered_json j;
        j["s"] = pole_s;
        j["digits"] = digits;
        j["finite_part"] = fp.value.to_string(static_cast<std::size_t>(digits));
        j["error_estimate"] = fp.error_estimate.to_string(3);
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("finite part of Z at s = %ld:\n", pole_s);
        std::printf("value          = %s\n",
                    fp.value.to_string(static_cast<std::size_t>(digits)).c_str());
        std::printf("error estimate = %s\n", fp.error_estimate.to_string(3).c_str());
    }
    return 0;
}

// ---- selftest ---------------------------------------------------------------

struct Selftest {
    int passed = 0;
    int failed = 0;
    double t0 = 0.0;

    static double now() {
        using namespace std::chrono;
        return duration<double>(steady_clock::now().time_since_epoch()).count();
    }
    void report(bool ok, const std::string& name, const std::string& detail) {
        std::printf("[%s] %-38s %s  (%.1f s)\n", ok ? "ok  " : "FAIL",
                    name.c_str(), detail.c_str(), now() - t0);
        std::fflush(stdout);
        (ok ? passed : failed)++;
    }
    template <class F>
    void check(const std::string& name, F&& body) {
        try {
            auto [ok, detail] = body();
            report(ok, name, detail);
        } catch (const std::exception& e) {
            report(false, name, std::string("exception: ") + e.what());
        }
    }
};

int run_selftest(const std::string& cache) {
    Selftest st;
    st.t0 = Selftest::now();
    const long cap = max_digits_cap();

    if (!cache.empty()) {
        // Certify a user-provided zero cache; corruption must fail the run.
        st.check("zero cache certification", [&] {
            load_zero_cache(cache);
            ZeroCacheInfo info = zero_cache_info();
            return std::pair(true, std::to_string(info.count) + " zeros at " +
                                       std::to_string(info.digits) + " digits");
        });
        if (st.failed) {
            std::printf("selftest: %d/%d checks passed\n", st.passed,
                        st.passed + st.failed);
            return 4;
        }
    }

    if (cap < 60) {
        // The digit cap forbids the real suite; exercise the refusal path and
        // what still fits under the cap.
        st.check("infeasible-precision refusal", [&] {
            try {
                secondzeta(Complex(2.0, 0.0, 64), 100);
                return std::pair(false, std::string("100-digit request was not refused"));
            } catch (const InfeasiblePrecision&) {
                return std::pair(true, std::string("100-digit request refused under cap ") +
                                           std::to_string(cap));
            }
        });
        if (cap >= 20) {
            st.check("lattice value under cap", [&] {
                EvalResult r = secondzeta(Complex(-2.0, 0.0, 64), 8);
                Real ref(-0.28125, 64);
                bool ok = abs(r.z.re - ref).to_double() < 1e-7 &&
                          r.z.im.is_zero();
                return std::pair(ok, "Z(-2) = " + r.z.re.to_string(8));
            });
        }
        st.check("cache corruption detection", [&] {
            std::string tmp = "/tmp/seczeta_selftest_cache.txt";
            zeros_ensure(3, 15);
            save_zero_cache(tmp);
            std::string bad = tmp + ".bad";
            {
                std::FILE* in = std::fopen(tmp.c_str(), "rb");
                std::FILE* out = std::fopen(bad.c_str(), "wb");
                if (!in || !out) return std::pair(false, std::string("tmp io failed"));
                std::string data;
                char buf[4096];
                std::size_t n;
                while ((n = std::fread(buf, 1, sizeof buf, in)) > 0)
                    data.append(buf, n);
                data[data.size() / 2] ^= 0x20;
                std::fwrite(data.data(), 1, data.size(), out);
                std::fclose(in);
                std::fclose(out);
            }
            try {
                load_zero_cache(bad);
                return std::pair(false, std::string("corrupted cache was accepted"));
            } catch (const CacheError&) {
                return std::pair(true, std::string("corruption raised CacheError"));
            }
        });
        std::printf("selftest: %d/%d checks passed (digit cap %ld; reduced set)\n",
                    st.passed, st.passed + st.failed, cap);
        return st.failed ? 1 : 0;
    }

    const Complex s_head(0.5, 100.0, 128);

    st.check("headline two-a agreement", [&] {
        EvalOptions o1, o2;
        o1.a = 0.015;
        o2.a = 0.005;
        EvalResult r1 = secondzeta(s_head, 13, o1);
        EvalResult r2 = secondzeta(s_head, 13, o2);
        long agreed = agreed_digits(r1.z, r2.z, 23);
        Real ref("-0.216272011276717589566800529884", bits_for_digits(40));
        bool ok = agreed >= 12 && abs(r1.z.re - ref).to_double() < 1e-12;
        return std::pair(ok, "agreed " + std::to_string(agreed) +
                                 " digits, Re = " + r1.z.re.to_string(13));
    });

    st.check("breakdown counts", [&] {
        EvalOptions o;
        o.a = 0.015;
        EvalResult r = secondzeta(s_head, 13, o);
        bool ok = r.breakdown.zeros_used >= 30 && r.breakdown.zeros_used <= 42 &&
                  r.breakdown.lambdas_used >= 22 && r.breakdown.lambdas_used <= 36;
        return std::pair(ok, "zeros_used " + std::to_string(r.breakdown.zeros_used) +
                                 ", lambdas_used " +
                                 std::to_string(r.breakdown.lambdas_used));
    });

    st.check("lattice special values", [&] {
        for (long n = 1; n <= 3; ++n) {
            SpecialValue sv = special_value_check(n, 20);
            Real exact = rational_to_real(sv.exact, bits_for_digits(30));
            if (abs(sv.computed.re - exact).to_double() >
                    1e-18 * std::max(1.0, std::fabs(exact.to_double())) ||
                !sv.computed.im.is_zero())
                return std::pair(false, "mismatch at n = " + std::to_string(n));
        }
        return std::pair(true, std::string("n = 1..3 match the exact rationals"));
    });

    st.check("real zero near -2", [&] {
        CriticalPoint cp = find_real_zero_near(-2.0, 15);
        Real ref("-1.87934753430942316", bits_for_digits(25));
        double diff = abs(cp.location - ref).to_double();
        return std::pair(diff < 1e-14, "a2 = " + cp.location.to_string(16));
    });

    st.check("extremum near -3.5", [&] {
        CriticalPoint cp = find_extremum_near(-3.5, 10);
        Real ref_loc("-3.5054329756", bits_for_digits(20));
        Real ref_val("-8.5349210063", bits_for_digits(20));
        bool ok = cp.kind == CriticalPoint::Kind::extremum_min &&
                  abs(cp.location - ref_loc).to_double() < 2e-9 &&
                  abs(cp.value - ref_val).to_double() < 2e-9;
        return std::pair(ok, "b3 = " + cp.location.to_string(12) +
                                 ", Z(b3) = " + cp.value.to_string(12));
    });

    st.check("pole structure", [&] {
        auto [c2, c1] = double_pole_main_part(12);
        Real pi = const_pi(bits_for_digits(30));
        Real c2_ref = 1L / (pi * 2L);
        Real c1_ref = -log(pi * 2L) / (pi * 2L);
        Real res1 = residue_at(-1, 12).value;
        Real res1_ref = residue_closed_form(-1, bits_for_digits(30));
        bool ok = abs(c2 - c2_ref).to_double() < 1e-10 &&
                  abs(c1 - c1_ref).to_double() < 1e-10 &&
                  abs(res1 - res1_ref).to_double() < 1e-10 && res1 < 0.0;
        return std::pair(ok, "c2 = " + c2.to_string(11) + ", c1 = " + c1.to_string(11) +
                                 ", res(-1) = " + res1.to_string(11));
    });

    st.check("modular identity x = 0.1", [&] {
        ModularCheck mc = check_modular(0.1, 60, 5000, PrecisionContext::make(25));
        return std::pair(mc.digits_agreed >= 20,
                         std::to_string(mc.digits_agreed) + " digits (>= 20)");
    });

    st.check("phi-form equality x = 0.25", [&] {
        long agreed = check_phi_equality(0.25, PrecisionContext::make(25));
        return std::pair(agreed >= 18, std::to_string(agreed) + " digits (>= 18)");
    });

    st.check("zero count N(100)", [&] {
        long n = count_zeros(Real(100.0, 64), PrecisionContext::make(15));
        return std::pair(n == 29, "N(100) = " + std::to_string(n));
    });

    st.check("JSON round-trip", [&] {
        EvalOptions o;
        o.verify = true;
        EvalResult r = secondzeta(Complex(-2.0, 0.0, 64), 15, o);
        std::string once = eval_json(Complex(-2.0, 0.0, 64), r, 15).dump(2);
        std::string twice = ordered_json::parse(once).dump(2);
        return std::pair(once == twice, once == twice
                                            ? std::string("byte-identical")
                                            : std::string("re-render differs"));
    });

    st.check("cache round-trip and corruption", [&] {
        std::string tmp = "/tmp/seczeta_selftest_cache.txt";
        zeros_ensure(5, 20);
        save_zero_cache(tmp);
        load_zero_cache(tmp);
        if (zero_cache_info().count < 5)
            return std::pair(false, std::string("cache lost zeros"));
        std::string bad = tmp + ".bad";
        {
            std::FILE* in = std::fopen(tmp.c_str(), "rb");
            std::FILE* out = std::fopen(bad.c_str(), "wb");
            if (!in || !out) return std::pair(false, std::string("tmp io failed"));
            std::string data;
            char buf[4096];
            std::size_t n;
            while ((n = std::fread(buf, 1, sizeof buf, in)) > 0) data.append(buf, n);
            data[data.size() / 2] ^= 0x20;
            std::fwrite(data.data(), 1, data.size(), out);
            std::fclose(in);
            std::fclose(out);
        }
        try {
            load_zero_cache(bad);
            return std::pair(false, std::string("corrupted cache was accepted"));
        } catch (const CacheError&) {
            return std::pair(true, std::string("round-trip ok, corruption detected"));
        }
    });

    st.check("x-ray axis segment", [&] {
        XRayRegion region{1.4, 3.0, -1.0, 1.0};
        XRayCurves xc = trace_xray(region, 9, 9, PrecisionContext::make(8));
        // Z is real on (1, 3): axis vertices must cover the sigma range.
        double lo = 1e9, hi = -1e9;
        long on_axis = 0;
        for (const auto& pl : xc.real_curves)
            for (const auto& p : pl.pts)
                if (std::fabs(p.t) < 1e-9) {
                    ++on_axis;
                    lo = std::min(lo, p.sigma);
                    hi = std::max(hi, p.sigma);
                }
        bool ok = on_axis >= 5 && lo < 1.7 && hi > 2.7;
        return std::pair(ok, std::to_string(on_axis) + " axis vertices on [" +
                                 dformat(lo) + ", " + dformat(hi) + "]");
    });

    st.check("infeasible-precision refusal (subprocess)", [&] {
        char self[4096];
        ssize_t n = readlink("/proc/self/exe", self, sizeof self - 1);
        if (n <= 0) return std::pair(false, std::string("cannot resolve own binary"));
        self[n] = '\0';
        std::string cmd = std::string("SECZETA_MAX_DIGITS=20 '") + self +
                          "' eval -s 2 -d 100 >/dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        int code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
        return std::pair(code == 3,
                         "capped 100-digit eval exited " + std::to_string(code) +
                             " (want 3)");
    });

    std::printf("selftest: %d/%d checks passed in %.1f s\n", st.passed,
                st.passed + st.failed, Selftest::now() - st.t0);
    return st.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secondary zeta function Z(s) = sum gamma_n^(-s) over the "
                 "ordinates of the nontrivial zeros of the Riemann zeta function"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    EvalArgs ev;
    auto add_eval_opts = [&](CLI::App* cmd) {
        cmd->add_option("-s,--point", ev.s_text,
                        "evaluation point, e.g. 0.5+100j or -2");
        cmd->add_option("-d,--digits", ev.digits, "target digits (>= 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("-a,--smoothing", ev.a,
                        "smoothing parameter in (0,1); default: built-in ladder")
            ->check(CLI::Range(1e-12, 0.999999999999));
        cmd->add_option("-o,--output", ev.output, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate Z(s)");
    add_eval_opts(c_eval);
    c_eval->add_flag("--breakdown", ev.breakdown, "print the A, P, E, S terms");
    c_eval->add_flag("--error", ev.error,
                     "print the error estimate and two-a agreed digits");
    CLI::App* c_break =
        app.add_subcommand("breakdown", "evaluate Z(s) and print the four terms");
    add_eval_opts(c_break);

    long z_count = 10, z_digits = 30;
    bool z_serial = false;
    std::string z_cache, z_output = "text";
    CLI::App* c_zeros =
        app.add_subcommand("zeros", "compute ordinates of the zeta zeros");
    c_zeros->add_option("-n,--count", z_count, "how many ordinates")
        ->check(CLI::PositiveNumber);
    c_zeros->add_option("-d,--digits", z_digits, "digits per ordinate")
        ->check(CLI::PositiveNumber);
    c_zeros->add_flag("--serial", z_serial, "use the serial reference kernel");
    c_zeros->add_option("--cache", z_cache, "zero-cache file to load/save");
    c_zeros->add_option("-o,--output", z_output, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    XRayRegion xr{-6.0, 3.0, -10.0, 10.0};
    long x_nx = 201, x_ny = 201, x_digits = 10;
    std::string x_output = "csv";
    CLI::App* c_xray = app.add_subcommand("xray", "trace Im Z = 0 / Re Z = 0 curves");
    c_xray->add_option("--sigma-min", xr.sigma_min, "left edge");
    c_xray->add_option("--sigma-max", xr.sigma_max, "right edge");
    c_xray->add_option("--t-min", xr.t_min, "bottom edge");
    c_xray->add_option("--t-max", xr.t_max, "top edge");
    c_xray->add_option("--nx", x_nx, "grid points along sigma")
        ->check(CLI::Range(2L, 100000L));
    c_xray->add_option("--ny", x_ny, "grid points along t")
        ->check(CLI::Range(2L, 100000L));
    c_xray->add_option("-d,--digits", x_digits, "digits per grid point")
        ->check(CLI::PositiveNumber);
    c_xray->add_option("-o,--output", x_output, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    double cr_near = -2.0;
    long cr_digits = 18;
    std::string cr_kind = "zero", cr_output = "text";
    CLI::App* c_crit =
        app.add_subcommand("critical", "locate a real zero or extremum of Z");
    c_crit->add_option("--near", cr_near, "starting abscissa")->required();
    c_crit->add_option("-d,--digits", cr_digits, "target digits")
        ->check(CLI::PositiveNumber);
    c_crit->add_option("--kind", cr_kind, "zero or extremum")
        ->check(CLI::IsMember({"zero", "extremum"}));
    c_crit->add_option("-o,--output", cr_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    double m_x = 0.1;
    long m_zeros = 200, m_primes = 1000000, m_digits = 30;
    bool m_phi = false;
    std::string m_output = "text";
    CLI::App* c_mod = app.add_subcommand(
        "modular-check", "compare the zero and prime sides of the modular identity");
    c_mod->add_option("-x", m_x, "heat parameter x in [0.01, 1]")->required();
    c_mod->add_option("--zeros", m_zeros, "zero-side terms")
        ->check(CLI::PositiveNumber);
    c_mod->add_option("--primes", m_primes, "prime-side terms")
        ->check(CLI::Range(2L, 1000000000L));
    c_mod->add_option("-d,--digits", m_digits, "target digits")
        ->check(CLI::PositiveNumber);
    c_mod->add_flag("--phi", m_phi,
                    "check the two forms of Phi(x) against each other instead");
    c_mod->add_option("-o,--output", m_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    long f_pole = 1, f_digits = 20;
    std::string f_output = "text";
    CLI::App* c_fin =
        app.add_subcommand("finite-part", "finite part of Z at a pole");
    c_fin->add_option("-s,--pole", f_pole, "pole location: 1 or a negative odd integer");
    c_fin->add_option("-d,--digits", f_digits, "target digits")
        ->check(CLI::PositiveNumber);
    c_fin->add_option("-o,--output", f_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string st_cache;
    CLI::App* c_self =
        app.add_subcommand("selftest", "reduced-scale acceptance checks");
    c_self->add_option("--cache", st_cache, "zero-cache file to certify first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (c_eval->parsed()) return run_eval(ev);
        if (c_break->parsed()) {
            ev.breakdown = true;
            return run_eval(ev);
        }
        if (c_zeros->parsed())
            return run_zeros(z_count, z_digits, z_serial, z_cache, z_output);
        if (c_xray->parsed()) return run_xray(xr, x_nx, x_ny, x_digits, x_output);
        if (c_crit->parsed())
            return run_critical(cr_near, cr_digits, cr_kind, cr_output);
        if (c_mod->parsed())
            return run_modular(m_x, m_zeros, m_primes, m_digits, m_phi, m_output);
        if (c_fin->parsed()) return run_finite_part(f_pole, f_digits, f_output);
        if (c_self->parsed()) return run_selftest(st_cache);
    } catch (const PoleProximity& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InfeasiblePrecision& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const CacheError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
