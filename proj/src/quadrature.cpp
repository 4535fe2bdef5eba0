#include "seczeta/quadrature.hpp"

#include <stdexcept>

namespace seczeta {

namespace {

// Abscissa map: x(t) = mid + (b-a)/2 tanh(u), u = (pi/2) sinh t. We keep the
// distance from the nearer endpoint,
//   half(t) = (b-a) e^{-2u} / (1 + e^{-2u}),
// which stays fully accurate when tanh(u) is within one ulp of 1, and the
// weight w(t) = (b-a)/2 (pi/2) cosh t sech^2(u).
std::vector<QuadNode> level_nodes(const Real& width, const Real& pi, int level,
                                  long digits, mpfr_prec_t prec) {
    std::vector<QuadNode> nodes;
    Real h(1L, prec);
    for (int i = 0; i < level; ++i) h = h / 2L;
    // Tail cutoff: nodes stop once the endpoint distance drops below
    // 10^{-2(digits+9)}. The doubled exponent keeps the un-sampled tail mass
    // below tolerance even for an integrable endpoint blow-up as strong as
    // x^{-1/2} (whose truncated mass scales like the square root of the
    // cutoff), not just for bounded or logarithmic integrands.
    Real eps_half = exp10(Real(-2 * (digits + 9), prec)) * width;
    long k = (level == 0) ? 0 : 1;
    long step = (level == 0) ? 1 : 2;
    for (;; k += step) {
        Real t = h * k;
        // e^{-2u} reaches eps_half by t = asinh(2 (digits+9) ln10 / pi),
        // which stays below 11 for any digit count up to the precision cap;
        // past 16 the target is unreachable and the level would only grow
        // without bound.
        if (t.to_double() > 16.0)
            throw std::runtime_error("tanh_sinh: node generation ran away");
        Real u = pi * 0.5 * sinh(t);
        Real em = exp(u * (-2L));
        Real opem = em + 1L;
        Real half = width * em / opem;
        if (k > 0 && half < eps_half) break;
        Real w = width * 0.5 * (pi * 0.5) * cosh(t) * (4L * em) / (opem * opem);
        QuadNode n;
        n.x_from_a = half;
        n.x_from_b = half;
        n.weight = w;
        nodes.push_back(std::move(n));
    }
    return nodes;
}

}  // namespace

std::vector<std::vector<QuadNode>> tanh_sinh_nodes(const Real& a, const Real& b,
                                                   long digits, int levels) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real width = b.round_to(prec) - a.round_to(prec);
    Real pi = const_pi(prec);
    std::vector<std::vector<QuadNode>> out;
    for (int m = 0; m <= levels; ++m)
        out.push_back(level_nodes(width, pi, m, digits, prec));
    return out;
}

namespace {

inline Real zero_like(mpfr_prec_t p, const Real*) { return Real(0L, p); }
inline Complex zero_like(mpfr_prec_t p, const Complex*) { return Complex(p); }

// Shared driver: T is Real or Complex.
template <class T, class F>
T integrate(const F& f, const Real& a, const Real& b, long digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real aa = a.round_to(prec), bb = b.round_to(prec);
    const int kMaxLevel = 11;
    auto levels = tanh_sinh_nodes(aa, bb, digits, kMaxLevel);
    Real tol = exp10(Real(-(digits + 2), prec));
    Real h(1L, prec);

    auto eval_nodes = [&](const std::vector<QuadNode>& nodes, bool has_center) {
        T acc = zero_like(prec, static_cast<const T*>(nullptr));
        for (size_t i = 0; i < nodes.size(); ++i) {
            const QuadNode& n = nodes[i];
            if (has_center && i == 0) {
                acc = acc + f(aa + n.x_from_a) * n.weight;  // midpoint, once
            } else {
                acc = acc + (f(aa + n.x_from_a) + f(bb - n.x_from_b)) * n.weight;
            }
        }
        return acc;
    };

    T total = eval_nodes(levels[0], true) * h;
    for (int m = 1; m <= kMaxLevel; ++m) {
        h = h / 2L;
        T refinement = eval_nodes(levels[m], false) * h;
        T next = total / 2L + refinement;
        Real diff = abs(next - total);
        total = next;
        Real scale = fmax(Real(1L, prec), abs(total));
        if (m >= 3 && diff < tol * scale) return total;
    }
    throw std::runtime_error("tanh_sinh: did not converge within the level budget");
}

}  // namespace

Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a,
               const Real& b, long digits) {
    return integrate<Real>(f, a, b, digits);
}

Complex tanh_sinh_complex(const std::function<Complex(const Real&)>& f,
                          const Real& a, const Real& b, long digits) {
    return integrate<Complex>(f, a, b, digits);
}

}  // namespace seczeta
