#pragma once

#include <functional>
#include <vector>

#include "darboux/cplx_linalg.hpp"

namespace darboux {

using Field2D = std::function<cplx(double x, double t)>;
using RealFn1D = std::function<double(double)>;

struct ResidualReport {
    double sup_norm = 0.0;
    double l2_norm = 0.0;   // root mean square over the sample points
    double grid_step = 0.0; // the stencil step h
    long points = 0;        // number of interior sample points
};

/// Rectangular (x,t) window with the sample lattice the norms run over.
/// The finite-difference stencils use the separate step h, so sample density
/// and discretization error are independent knobs.
struct Window {
    double x0, x1, t0, t1;
    int nx = 21;
    int nt = 9;
};

/// Norms of i r_t + r_xx + 2|r|^2 r under centered differences of step h,
/// evaluated at the window's interior sample points.
ResidualReport nls_residual(const Field2D& field, const Window& win, double h);

struct Interval {
    double a, b;
    int n = 201;
};

/// Norms of -psi'' + u psi - lambda psi under the centered 3-point stencil.
ResidualReport sl_residual(const RealFn1D& psi, const RealFn1D& u, double lambda,
                           const Interval& iv, double h);

/// Trapezoidal integral of |r(x,t)|^2 dx over [x0, x1] at fixed t, compensated
/// summation. Requires |r| < 1e-8 at both window ends (window_error otherwise).
double mass(const Field2D& field, double t, double x0, double x1, double step);

struct Peak {
    double x;
    double height;
};

struct PeakReport {
    std::vector<Peak> peaks; // sorted by x ascending
    double t = 0.0;
};

/// Local maxima of |r(.,t)| over [x0, x1], scanned at `resolution` and refined
/// by golden section to 1e-10 in x. Ties take the leftmost coarse sample.
/// Maxima below rel_floor times the largest sample are treated as evaluation
/// noise and dropped; an empty report is a valid outcome, not an error.
PeakReport peak_scan(const Field2D& field, double t, double x0, double x1,
                     double resolution, double rel_floor = 1e-9);

} // namespace darboux
