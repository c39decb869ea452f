#pragma once

#include "darboux/zs_seeds.hpp"

namespace darboux {

/// Eigenvalue combinations entering the explicit 2-soliton expression:
///   rho  = conj(lambda1) - conj(lambda3)   (so conj(rho) = lambda1 - lambda3)
///   beta = lambda1 - conj(lambda3)
/// rho vanishes iff the eigenvalues coincide, which is rejected.
struct TwoSolitonParams {
    cplx rho;
    cplx beta;
};

TwoSolitonParams two_soliton_params(const SpectralParam& p1, const SpectralParam& p3);

/// Explicit 1-soliton field
///   r(x,t) = -2i Im(lambda) e^{-2i Re(theta)} / cosh(2 Im(theta) - phi2),
/// theta = lambda x + 2 t lambda^2. Equals the N=1 determinant field pointwise;
/// phi1 cancels out of the determinant ratio and so does not appear.
cplx one_soliton(const SpectralParam& p, double x, double t);

/// Explicit 2-soliton field; agrees with the N=2 determinant field pointwise
/// (see the implementation for the full expression). phi2 of each parameter
/// enters as theta -> theta - i phi2/2; phi1 cancels as in the 1-soliton.
cplx two_soliton(const SpectralParam& p1, const SpectralParam& p3, double x, double t);

} // namespace darboux
