// X-ray tracing: the level curves Im Z = 0 (where Z is real; the solid
// curves in the classical pictures) and Re Z = 0 (where Z is purely
// imaginary; the dotted ones) over a rectangle of the s-plane.
//
// The rectangle is sampled on an (nx x ny) grid -- the grid fill is the
// OpenMP-parallel kernel, with a serial fill kept as the reference; both
// write independent slots and are bit-identical -- and the curves are
// extracted by marching squares with one bisection refinement per crossing
// edge. Cells containing a pole of Z (s = 1 and the negative odd integers)
// or a refused evaluation are flagged and never traced through, so curves
// terminate at their boundaries.
#pragma once

#include "seczeta/precision.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seczeta {

struct XRayRegion {
    double sigma_min = 0.0, sigma_max = 0.0;
    double t_min = 0.0, t_max = 0.0;
};

struct XRayPoint {
    double sigma = 0.0, t = 0.0;
};

struct XRayPolyline {
    std::vector<XRayPoint> pts;
    bool closed = false;  // cycle; first point repeated at the end
};

struct XRayGridValue {
    double re = 0.0, im = 0.0;
    bool pole = false;  // evaluation refused (pole guard) or failed
};

struct XRayCurves {
    XRayRegion region{};
    long nx = 0, ny = 0;
    std::vector<XRayPolyline> real_curves;  // Im Z = 0: Z real there
    std::vector<XRayPolyline> imag_curves;  // Re Z = 0: Z purely imaginary
    // Lower-left grid indices (i, j) of cells containing a pole or a refused
    // corner; marching squares skips them.
    std::vector<std::pair<long, long>> pole_cells;
    // Largest |field value| remaining at a refined edge endpoint: every
    // reported vertex sits between endpoints at least this close to zero.
    double crossing_tol = 0.0;
};

// Z on the grid, row-major (index j*nx + i; sigma varies fastest). `digits`
// is the per-point evaluation target; `parallel` selects the OpenMP kernel
// or the serial reference. Both fill independent slots: results are
// bit-identical. Points where the evaluator refuses (pole guard) or fails
// are flagged `pole` rather than throwing.
std::vector<XRayGridValue> xray_grid_eval(const XRayRegion& region, long nx,
                                          long ny, long digits, bool parallel);

// Full trace at ctx.target_digits per grid point. Throws std::domain_error
// when every cell is a pole cell (region inside the pole guard) and
// std::invalid_argument for a degenerate region or grid.
XRayCurves trace_xray(const XRayRegion& region, long nx, long ny,
                      const PrecisionContext& ctx);

// "curve_id,kind,sigma,t" rows; kind is "real" or "imag".
std::string xray_to_csv(const XRayCurves& curves);

// Region, grid, pole cells, and the polylines with kind tags.
std::string xray_to_json(const XRayCurves& curves);

}  // namespace seczeta
