#include "seczeta/xray.hpp"

#include "seczeta/engine.hpp"
#include "seczeta/parallel.hpp"
#include "seczeta/specials.hpp"
#include "seczeta/terms.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seczeta {

namespace {

bool eval_point(double sigma, double t, long digits, XRayGridValue& out) {
    try {
        EvalResult r = secondzeta(Complex(sigma, t, 64), digits);
        out.re = r.z.re.to_double();
        out.im = r.z.im.to_double();
        if (!std::isfinite(out.re) || !std::isfinite(out.im)) {
            out.pole = true;
        }
    } catch (const PoleError&) {
        out.pole = true;
    } catch (const AsymptoticFailure&) {
        out.pole = true;
    }
    return !out.pole;
}

void check_region(const XRayRegion& region, long nx, long ny) {
    if (!(region.sigma_min < region.sigma_max) ||
        !(region.t_min < region.t_max)) {
        throw std::invalid_argument("x-ray region is degenerate");
    }
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("x-ray grid needs at least 2x2 points");
    }
}

// True poles of Z on the real axis within [lo-1, hi+1]: s = 1 and the
// negative odd integers.
std::vector<long> poles_in(double lo, double hi) {
    std::vector<long> ps;
    if (1.0 >= lo - 1.0 && 1.0 <= hi + 1.0) ps.push_back(1);
    for (long p = -1; static_cast<double>(p) >= lo - 1.0; p -= 2) {
        if (static_cast<double>(p) <= hi + 1.0) ps.push_back(p);
    }
    return ps;
}

struct GridAxis {
    std::vector<double> pos;
};

GridAxis make_axis(double lo, double hi, long n) {
    GridAxis ax;
    ax.pos.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        ax.pos[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return ax;
}

struct Tracer {
    const XRayRegion& region;
    long nx, ny;
    long digits;
    const std::vector<XRayGridValue>& grid;
    const GridAxis& xs;
    const GridAxis& ys;
    bool want_im;  // true: trace Im Z = 0; false: trace Re Z = 0
    double crossing_tol = 0.0;

    double field(long i, long j) const {
        const XRayGridValue& v =
            grid[static_cast<std::size_t>(j * nx + i)];
        return want_im ? v.im : v.re;
    }
    bool bad(long i, long j) const {
        return grid[static_cast<std::size_t>(j * nx + i)].pole;
    }
    static bool positive(double v) { return v >= 0.0; }

    // Vertex ids per crossing edge, created on demand. Horizontal edge
    // (i, j): between grid points (i, j) and (i+1, j). Vertical edge (i, j):
    // between (i, j) and (i, j+1).
    std::vector<long> hvert, vvert;
    std::vector<XRayPoint> verts;
    // Vertex ids for grid points that lie exactly on the level set.
    std::vector<long> cvert;

    bool eval_mid(double sigma, double t, double& out) const {
        XRayGridValue v;
        if (!eval_point(sigma, t, digits, v)) return false;
        out = want_im ? v.im : v.re;
        return std::isfinite(out);
    }

    long vertex_on(bool horizontal, long i, long j) {
        long& slot = horizontal
                         ? hvert[static_cast<std::size_t>(j * (nx - 1) + i)]
                         : vvert[static_cast<std::size_t>(j * nx + i)];
        if (slot >= 0) return slot;
        double s1 = xs.pos[static_cast<std::size_t>(i)];
        double t1 = ys.pos[static_cast<std::size_t>(j)];
        double s2 = horizontal ? xs.pos[static_cast<std::size_t>(i + 1)] : s1;
        double t2 = horizontal ? t1 : ys.pos[static_cast<std::size_t>(j + 1)];
        double f1 = field(i, j);
        double f2 = horizontal ? field(i + 1, j) : field(i, j + 1);
        // One bisection step: replace the endpoint on the same side as the
        // midpoint value, then place the vertex by linear interpolation.
        double fm = 0.0;
        if (eval_mid(0.5 * (s1 + s2), 0.5 * (t1 + t2), fm)) {
            if (positive(fm) == positive(f1)) {
                s1 = 0.5 * (s1 + s2);
                t1 = 0.5 * (t1 + t2);
                f1 = fm;
            } else {
                s2 = 0.5 * (s1 + s2);
                t2 = 0.5 * (t1 + t2);
                f2 = fm;
            }
        }
        double denom = f1 - f2;
        double u = (denom != 0.0) ? f1 / denom : 0.5;
        if (!(u >= 0.0)) u = 0.0;
        if (!(u <= 1.0)) u = 1.0;
        XRayPoint p;
        p.sigma = s1 + u * (s2 - s1);
        p.t = t1 + u * (t2 - t1);
        double res = std::fmin(std::fabs(f1), std::fabs(f2));
        if (res > crossing_tol) crossing_tol = res;
        slot = static_cast<long>(verts.size());
        verts.push_back(p);
        return slot;
    }

    long vertex_at(long i, long j) {
        long& slot = cvert[static_cast<std::size_t>(j * nx + i)];
        if (slot >= 0) return slot;
        XRayPoint p;
        p.sigma = xs.pos[static_cast<std::size_t>(i)];
        p.t = ys.pos[static_cast<std::size_t>(j)];
        slot = static_cast<long>(verts.size());
        verts.push_back(p);
        return slot;
    }

    std::vector<XRayPolyline> run(const std::vector<bool>& pole_cell) {
        hvert.assign(static_cast<std::size_t>((nx - 1) * ny), -1);
        vvert.assign(static_cast<std::size_t>(nx * (ny - 1)), -1);
        verts.clear();

        // Segments between edge vertices, cell by cell in row-major order.
        std::vector<std::pair<long, long>> segs;
        for (long j = 0; j + 1 < ny; ++j) {
            for (long i = 0; i + 1 < nx; ++i) {
                if (pole_cell[static_cast<std::size_t>(j * (nx - 1) + i)]) {
                    continue;
                }
                double f0 = field(i, j);          // bottom-left
                double f1c = field(i + 1, j);     // bottom-right
                double f2c = field(i + 1, j + 1); // top-right
                double f3 = field(i, j + 1);      // top-left
                int mask = (positive(f0) ? 1 : 0) | (positive(f1c) ? 2 : 0) |
                           (positive(f2c) ? 4 : 0) | (positive(f3) ? 8 : 0);
                if (mask == 0 || mask == 15) continue;
                // Edge codes: 0 bottom H(i,j), 1 right V(i+1,j),
                // 2 top H(i,j+1), 3 left V(i,j).
                auto edge_vertex = [&](int e) -> long {
                    switch (e) {
                        case 0: return vertex_on(true, i, j);
                        case 1: return vertex_on(false, i + 1, j);
                        case 2: return vertex_on(true, i, j + 1);
                        default: return vertex_on(false, i, j);
                    }
                };
                auto emit = [&](int ea, int eb) {
                    segs.emplace_back(edge_vertex(ea), edge_vertex(eb));
                };
                switch (mask) {
                    case 1: case 14: emit(3, 0); break;
                    case 2: case 13: emit(0, 1); break;
                    case 3: case 12: emit(3, 1); break;
                    case 4: case 11: emit(1, 2); break;
                    case 6: case 9:  emit(0, 2); break;
                    case 7: case 8:  emit(3, 2); break;
                    case 5: case 10: {
                        // Saddle cell: split by the sign at the center.
                        double fm = 0.0;
                        double cs = 0.5 * (xs.pos[static_cast<std::size_t>(i)] +
                                           xs.pos[static_cast<std::size_t>(i + 1)]);
                        double ct = 0.5 * (ys.pos[static_cast<std::size_t>(j)] +
                                           ys.pos[static_cast<std::size_t>(j + 1)]);
                        bool center_pos;
                        if (eval_mid(cs, ct, fm)) {
                            center_pos = positive(fm);
                        } else {
                            center_pos =
                                positive(0.25 * (f0 + f1c + f2c + f3));
                        }
                        bool diag_pos = (mask == 5);  // corners 0 and 2 positive
                        if (center_pos == diag_pos) {
                            // Center joins the diagonal corners: hug the
                            // other two.
                            emit(0, 1);
                            emit(3, 2);
                        } else {
                            emit(3, 0);
                            emit(1, 2);
                        }
                        break;
                    }
                    default: break;
                }
            }
        }

        // A grid edge whose endpoints both evaluate to exactly zero lies on
        // the level set itself; the canonical case is the real axis away
        // from the poles, where Z is real and Im Z vanishes along the whole
        // row. Such an edge never shows a sign change, so the marching pass
        // above cannot represent it; emit it directly as a segment joining
        // its two grid points. Edges bordering the pole guard stay out, so
        // a degenerate run never bridges a pole.
        cvert.assign(static_cast<std::size_t>(nx * ny), -1);
        auto on_level_set = [&](long i, long j) {
            return !bad(i, j) && field(i, j) == 0.0;
        };
        auto fenced = [&](long ci, long cj) {
            if (ci < 0 || cj < 0 || ci + 1 >= nx || cj + 1 >= ny) return false;
            return static_cast<bool>(
                pole_cell[static_cast<std::size_t>(cj * (nx - 1) + ci)]);
        };
        for (long j = 0; j < ny; ++j) {
            for (long i = 0; i + 1 < nx; ++i) {
                if (on_level_set(i, j) && on_level_set(i + 1, j) &&
                    !fenced(i, j - 1) && !fenced(i, j)) {
                    segs.emplace_back(vertex_at(i, j), vertex_at(i + 1, j));
                }
            }
        }
        for (long j = 0; j + 1 < ny; ++j) {
            for (long i = 0; i < nx; ++i) {
                if (on_level_set(i, j) && on_level_set(i, j + 1) &&
                    !fenced(i - 1, j) && !fenced(i, j)) {
                    segs.emplace_back(vertex_at(i, j), vertex_at(i, j + 1));
                }
            }
        }

        // Stitch segments into polylines: open chains first (walking from
        // degree-1 vertices in id order), then the remaining cycles.
        std::vector<std::vector<long>> adj(verts.size());
        for (long k = 0; k < static_cast<long>(segs.size()); ++k) {
            adj[static_cast<std::size_t>(segs[static_cast<std::size_t>(k)].first)]
                .push_back(k);
            adj[static_cast<std::size_t>(segs[static_cast<std::size_t>(k)].second)]
                .push_back(k);
        }
        std::vector<bool> used(segs.size(), false);
        std::vector<XRayPolyline> out;
        auto walk = [&](long start_vertex, bool closed) {
            XRayPolyline pl;
            pl.closed = closed;
            long v = start_vertex;
            pl.pts.push_back(verts[static_cast<std::size_t>(v)]);
            for (;;) {
                long next_seg = -1;
                for (long k : adj[static_cast<std::size_t>(v)]) {
                    if (!used[static_cast<std::size_t>(k)]) {
                        next_seg = k;
                        break;
                    }
                }
                if (next_seg < 0) break;
                used[static_cast<std::size_t>(next_seg)] = true;
                const auto& sg = segs[static_cast<std::size_t>(next_seg)];
                v = (sg.first == v) ? sg.second : sg.first;
                pl.pts.push_back(verts[static_cast<std::size_t>(v)]);
                if (closed && v == start_vertex) break;
            }
            out.push_back(std::move(pl));
        };
        for (long v = 0; v < static_cast<long>(verts.size()); ++v) {
            if (adj[static_cast<std::size_t>(v)].size() != 1) continue;
            bool pending = false;
            for (long k : adj[static_cast<std::size_t>(v)]) {
                if (!used[static_cast<std::size_t>(k)]) pending = true;
            }
            if (pending) walk(v, false);
        }
        for (long k = 0; k < static_cast<long>(segs.size()); ++k) {
            if (!used[static_cast<std::size_t>(k)]) {
                walk(segs[static_cast<std::size_t>(k)].first, true);
            }
        }
        return out;
    }
};

}  // namespace

std::vector<XRayGridValue> xray_grid_eval(const XRayRegion& region, long nx,
                                          long ny, long digits,
                                          bool parallel) {
    check_region(region, nx, ny);
    GridAxis xs = make_axis(region.sigma_min, region.sigma_max, nx);
    GridAxis ys = make_axis(region.t_min, region.t_max, ny);
    std::vector<XRayGridValue> grid(static_cast<std::size_t>(nx * ny));
    parallel_for(
        nx * ny,
        [&](long k) {
            long i = k % nx;
            long j = k / nx;
            eval_point(xs.pos[static_cast<std::size_t>(i)],
                       ys.pos[static_cast<std::size_t>(j)], digits,
                       grid[static_cast<std::size_t>(k)]);
        },
        parallel);
    return grid;
}

XRayCurves trace_xray(const XRayRegion& region, long nx, long ny,
                      const PrecisionContext& ctx) {
    check_region(region, nx, ny);
    const long digits = ctx.target_digits;
    GridAxis xs = make_axis(region.sigma_min, region.sigma_max, nx);
    GridAxis ys = make_axis(region.t_min, region.t_max, ny);
    std::vector<XRayGridValue> grid =
        xray_grid_eval(region, nx, ny, digits, true);

    XRayCurves curves;
    curves.region = region;
    curves.nx = nx;
    curves.ny = ny;

    // A cell is a pole cell when a true pole of Z lies inside its closed
    // rectangle or any of its corners was refused.
    std::vector<long> poles = poles_in(region.sigma_min, region.sigma_max);
    std::vector<bool> pole_cell(static_cast<std::size_t>((nx - 1) * (ny - 1)),
                                false);
    long n_pole_cells = 0;
    for (long j = 0; j + 1 < ny; ++j) {
        for (long i = 0; i + 1 < nx; ++i) {
            bool flag = false;
            for (long k = 0; k < 4 && !flag; ++k) {
                long ci = i + (k & 1);
                long cj = j + (k >> 1);
                flag = grid[static_cast<std::size_t>(cj * nx + ci)].pole;
            }
            if (!flag && ys.pos[static_cast<std::size_t>(j)] <= 0.0 &&
                ys.pos[static_cast<std::size_t>(j + 1)] >= 0.0) {
                for (long p : poles) {
                    if (xs.pos[static_cast<std::size_t>(i)] <=
                            static_cast<double>(p) &&
                        static_cast<double>(p) <=
                            xs.pos[static_cast<std::size_t>(i + 1)]) {
                        flag = true;
                        break;
                    }
                }
            }
            if (flag) {
                pole_cell[static_cast<std::size_t>(j * (nx - 1) + i)] = true;
                curves.pole_cells.emplace_back(i, j);
                ++n_pole_cells;
            }
        }
    }
    if (n_pole_cells == (nx - 1) * (ny - 1)) {
        throw std::domain_error(
            "every cell of the x-ray region lies inside the pole guard");
    }

    Tracer tr{region, nx,   ny,   digits, grid,
              xs,     ys,   true, 0.0,    {},
              {},     {}};
    curves.real_curves = tr.run(pole_cell);
    double tol = tr.crossing_tol;
    tr.want_im = false;
    tr.crossing_tol = 0.0;
    curves.imag_curves = tr.run(pole_cell);
    curves.crossing_tol = std::fmax(tol, tr.crossing_tol);
    return curves;
}

std::string xray_to_csv(const XRayCurves& curves) {
    std::string out = "curve_id,kind,sigma,t\n";
    char buf[128];
    long id = 0;
    auto dump = [&](const std::vector<XRayPolyline>& pls, const char* kind) {
        for (const XRayPolyline& pl : pls) {
            for (const XRayPoint& p : pl.pts) {
                std::snprintf(buf, sizeof buf, "%ld,%s,%.12g,%.12g\n", id,
                              kind, p.sigma, p.t);
                out += buf;
            }
            ++id;
        }
    };
    dump(curves.real_curves, "real");
    dump(curves.imag_curves, "imag");
    return out;
}

std::string xray_to_json(const XRayCurves& curves) {
    nlohmann::ordered_json j;
    j["region"] = {{"sigma_min", curves.region.sigma_min},
                   {"sigma_max", curves.region.sigma_max},
                   {"t_min", curves.region.t_min},
                   {"t_max", curves.region.t_max}};
    j["nx"] = curves.nx;
    j["ny"] = curves.ny;
    j["crossing_tol"] = curves.crossing_tol;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& c : curves.pole_cells) {
        cells.push_back({c.first, c.second});
    }
    j["pole_cells"] = std::move(cells);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    long id = 0;
    auto dump = [&](const std::vector<XRayPolyline>& pls, const char* kind) {
        for (const XRayPolyline& pl : pls) {
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (const XRayPoint& p : pl.pts) {
                pts.push_back({p.sigma, p.t});
            }
            arr.push_back({{"id", id},
                           {"kind", kind},
                           {"closed", pl.closed},
                           {"points", std::move(pts)}});
            ++id;
        }
    };
    dump(curves.real_curves, "real");
    dump(curves.imag_curves, "imag");
    j["curves"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace seczeta
