// Tanh-sinh (double-exponential) quadrature on finite intervals.
//
// Nodes cluster double-exponentially toward the endpoints, so integrands
// with integrable endpoint blow-ups converge fast. Used for the heat-kernel
// transform of the zero-counting density, for its digamma-based twin, and
// as the independent oracle for several special-function tests.
#pragma once

#include "seczeta/complexnum.hpp"

#include <functional>
#include <vector>

namespace seczeta {

struct QuadNode {
    Real x_from_a;  // node position as offset from the left endpoint
    Real x_from_b;  // and as (negative-side) offset from the right endpoint
    Real weight;
};

// All nodes for levels 0..levels at working digit count `digits`, scaled to
// [a, b]. Level m contributes the nodes at odd multiples of 2^-m (level 0:
// integer abscissas including 0). Exposed for reuse; most callers want
// tanh_sinh below.
std::vector<std::vector<QuadNode>> tanh_sinh_nodes(const Real& a, const Real& b,
                                                   long digits, int levels);

// Integrate f over [a, b] aiming for `digits` correct digits. Throws
// std::runtime_error if the level-to-level differences fail to shrink.
Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a,
               const Real& b, long digits);

Complex tanh_sinh_complex(const std::function<Complex(const Real&)>& f,
                          const Real& a, const Real& b, long digits);

}  // namespace seczeta
