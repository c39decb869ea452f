#pragma once

#include <functional>
#include <vector>

namespace darboux {

using RealFn = std::function<double(double)>;

/// Scalar seed with analytically supplied derivatives. Nothing in this module
/// differentiates a seed numerically; derivs[k] must be the (k+1)-th derivative.
struct SturmSeed {
    RealFn value;
    std::vector<RealFn> derivs;
    double lambda = 0.0; // eigenvalue of -d^2/dx^2 + u0 on the seed's background
};

/// Seed library, derivative chains supplied through order 8.
/// Eigenvalues are for the zero background: -psi'' = lambda psi.
SturmSeed exp_seed(double k);  // e^{kx},    lambda = -k^2
SturmSeed cosh_seed(double k); // cosh(kx),  lambda = -k^2
SturmSeed sinh_seed(double k); // sinh(kx),  lambda = -k^2
SturmSeed cos_seed(double k);  // cos(kx),   lambda = +k^2
SturmSeed sin_seed(double k);  // sin(kx),   lambda = +k^2

/// Derivative of any order (0 = the value itself); throws arity_error when the
/// seed does not carry enough derivatives.
double seed_deriv(const SturmSeed& seed, int order, double x);

/// Wronskian determinant: entry (p, j) is the p-th derivative of seed j,
/// p = 0 .. count-1.
double wronskian(const std::vector<SturmSeed>& seeds, double x);

/// Single Darboux step: psi_deriv - (seed'(x)/seed(x)) * psi_value.
/// Throws node_error where the seed vanishes.
double darboux_once(const SturmSeed& seed, double psi_value, double psi_deriv, double x);

/// N-fold transform as a Wronskian ratio:
///   psi[N](x) = W(seed_1, ..., seed_N, psi) / W(seed_1, ..., seed_N).
/// target_value_and_derivs holds psi, psi', ..., psi^{(N)} at x (N+1 numbers).
double crum_psi(const std::vector<SturmSeed>& seeds,
                const std::vector<double>& target_value_and_derivs, double x);

/// Transformed potential u[N](x) = u0(x) - 2 (ln|W|)''(x), with the second
/// derivative taken by the 5-point centered stencil of step h (O(h^4)).
/// The Wronskian must be nonzero with one sign across the whole stencil.
double crum_potential(const std::vector<SturmSeed>& seeds, const RealFn& u0,
                      double x, double h);

struct CrumCoefficients {
    std::vector<double> s; // s_1 .. s_N
};

/// Coefficients of the N-th order Darboux operator
///   D[N] psi = psi^{(N)} + s_1 psi^{(N-1)} + ... + s_N psi
/// determined (by Cramer's rule) so that D[N] annihilates every seed at x.
CrumCoefficients crum_coefficients(const std::vector<SturmSeed>& seeds, double x);

} // namespace darboux
