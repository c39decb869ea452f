#include "darboux/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

// Neumaier-compensated accumulator; the mass quadrature adds ~4e4 terms and
// plain summation would eat into the 1e-8 tolerance.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

cplx eval_field(const Field2D& field, double x, double t) {
    try {
        return field(x, t);
    } catch (const singularity_error&) {
        throw; // already carries its point
    } catch (const std::runtime_error& e) {
        throw numeric_range_error(std::string(e.what()) + " [while evaluating field at (x=" +
                                  std::to_string(x) + ", t=" + std::to_string(t) + ")]");
    }
}

double linspace_at(double a, double b, int n, int i) {
    return (n == 1) ? a : a + (b - a) * static_cast<double>(i) / (n - 1);
}

} // namespace

ResidualReport nls_residual(const Field2D& field, const Window& win, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("nls_residual: h must be positive");
    if (!(win.x1 > win.x0) || !(win.t1 > win.t0))
        throw std::invalid_argument("nls_residual: empty window");
    if (!(win.x1 - win.x0 > 2 * h) || !(win.t1 - win.t0 > 2 * h))
        throw std::invalid_argument("nls_residual: window too small for centered stencils");
    if (win.nx < 3 || win.nt < 3)
        throw std::invalid_argument("nls_residual: need at least a 3x3 sample lattice");

    ResidualReport rep;
    rep.grid_step = h;
    double sum_sq = 0.0;
    for (int j = 0; j < win.nt; ++j) {
        const double t = linspace_at(win.t0 + h, win.t1 - h, win.nt, j);
        for (int i = 0; i < win.nx; ++i) {
            const double x = linspace_at(win.x0 + h, win.x1 - h, win.nx, i);
            const cplx r0 = eval_field(field, x, t);
            const cplx rxp = eval_field(field, x + h, t);
            const cplx rxm = eval_field(field, x - h, t);
            const cplx rtp = eval_field(field, x, t + h);
            const cplx rtm = eval_field(field, x, t - h);
            const cplx res = cplx(0.0, 1.0) * (rtp - rtm) / (2.0 * h) +
                             (rxp - 2.0 * r0 + rxm) / (h * h) +
                             2.0 * std::norm(r0) * r0;
            const double a = std::abs(res);
            rep.sup_norm = std::max(rep.sup_norm, a);
            sum_sq += a * a;
            ++rep.points;
        }
    }
    rep.l2_norm = std::sqrt(sum_sq / static_cast<double>(rep.points));
    return rep;
}

ResidualReport sl_residual(const RealFn1D& psi, const RealFn1D& u, double lambda,
                           const Interval& iv, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("sl_residual: h must be positive");
    if (!(iv.b - iv.a > 2 * h))
        throw std::invalid_argument("sl_residual: interval too small for centered stencils");
    if (iv.n < 9)
        throw std::invalid_argument("sl_residual: need at least 9 sample points");

    ResidualReport rep;
    rep.grid_step = h;
    double sum_sq = 0.0;
    for (int i = 0; i < iv.n; ++i) {
        const double x = linspace_at(iv.a + h, iv.b - h, iv.n, i);
        const double d2 = (psi(x + h) - 2.0 * psi(x) + psi(x - h)) / (h * h);
        const double res = -d2 + u(x) * psi(x) - lambda * psi(x);
        const double a = std::abs(res);
        rep.sup_norm = std::max(rep.sup_norm, a);
        sum_sq += a * a;
        ++rep.points;
    }
    rep.l2_norm = std::sqrt(sum_sq / static_cast<double>(rep.points));
    return rep;
}

double mass(const Field2D& field, double t, double x0, double x1, double step) {
    if (!(step > 0.0) || !(x1 > x0))
        throw std::invalid_argument("mass: need x1 > x0 and a positive step");
    const int n = std::max(2, static_cast<int>(std::lround((x1 - x0) / step)) + 1);
    const double dx = (x1 - x0) / (n - 1);

    const double edge0 = std::abs(eval_field(field, x0, t));
    const double edge1 = std::abs(eval_field(field, x1, t));
    if (edge0 >= 1e-8 || edge1 >= 1e-8)
        throw window_error("mass: |r| must fall below 1e-8 at both window ends "
                           "(got " + std::to_string(edge0) + " and " +
                           std::to_string(edge1) + ")");

    CompensatedSum acc;
    acc.add(0.5 * edge0 * edge0);
    acc.add(0.5 * edge1 * edge1);
    for (int i = 1; i < n - 1; ++i)
        acc.add(std::norm(eval_field(field, x0 + i * dx, t)));
    return dx * acc.value();
}

namespace {

double golden_max(const std::function<double(double)>& f, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

PeakReport peak_scan(const Field2D& field, double t, double x0, double x1,
                     double resolution, double rel_floor) {
    if (!(resolution > 0.0))
        throw std::invalid_argument("peak_scan: resolution must be positive");
    if (!(x1 > x0))
        throw std::invalid_argument("peak_scan: empty window");

    const int n = std::max(3, static_cast<int>(std::ceil((x1 - x0) / resolution)) + 1);
    const double dx = (x1 - x0) / (n - 1);
    std::vector<double> v(static_cast<size_t>(n));
    double vmax = 0.0;
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i)] = std::abs(eval_field(field, x0 + i * dx, t));
        vmax = std::max(vmax, v[static_cast<size_t>(i)]);
    }

    PeakReport rep;
    rep.t = t;
    if (vmax == 0.0)
        return rep;
    const double floor = rel_floor * vmax;

    const auto height = [&](double x) { return std::abs(eval_field(field, x, t)); };
    for (int i = 1; i + 1 < n; ++i) {
        // strict left, lax right: a flat-topped plateau reports its leftmost sample
        if (v[i] > v[i - 1] && v[i] >= v[i + 1] && v[i] > floor) {
            const double xp = golden_max(height, x0 + (i - 1) * dx, x0 + (i + 1) * dx);
            rep.peaks.push_back(Peak{xp, height(xp)});
        }
    }
    std::sort(rep.peaks.begin(), rep.peaks.end(),
              [](const Peak& a, const Peak& b) { return a.x < b.x; });
    return rep;
}

} // namespace darboux
