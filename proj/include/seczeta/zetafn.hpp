// The Riemann zeta function for complex argument (Euler-Maclaurin with an
// explicit remainder check), and the Riemann-Siegel theta / Hardy Z pair
// used for locating zeros on the critical line.
#pragma once

#include "seczeta/complexnum.hpp"
#include "seczeta/precision.hpp"
#include "seczeta/specials.hpp"

namespace seczeta {

// zeta(s) for complex s != 1. Accurate for moderate |Im s| (thousands) and
// any fixed vertical strip; cost grows linearly with |Im s|. Throws
// PoleError at s = 1.
Complex zeta(const Complex& s, const PrecisionContext& ctx);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, continuous branch.
Real hardy_theta(const Real& t, const PrecisionContext& ctx);

// Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
Real hardy_z(const Real& t, const PrecisionContext& ctx);

}  // namespace seczeta
