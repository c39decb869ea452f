#pragma once

#include <vector>

#include "darboux/cplx_linalg.hpp"
#include "darboux/zs_seeds.hpp"

namespace darboux {

inline constexpr int kMaxDressingOrder = 8;

/// Ordered spectral data for an N-fold transformation, N in 1..8.
/// Eigenvalues must be pairwise distinct; a repeated eigenvalue would make the
/// denominator determinant vanish identically, so it is rejected up front.
class DressingSystem {
public:
    explicit DressingSystem(std::vector<SpectralParam> params);

    const std::vector<SpectralParam>& params() const { return params_; }
    int order() const { return static_cast<int>(params_.size()); }

private:
    std::vector<SpectralParam> params_;
};

/// The 2N x 2N determinant matrices at one (x,t) point. `delta` and `s21`
/// differ only in the top row; `delta` and `s12` only in the second row.
/// The same col_scales apply to corresponding columns of all three matrices.
struct CrumMatrices {
    CMat delta;                     // rows, top down: l^{N-1}psi, l^{N-1}phi, ..., psi, phi
    CMat s21;                       // row 0 replaced by l^N phi
    CMat s12;                       // row 1 replaced by l^N psi
    std::vector<double> col_scales; // e^{|Im theta_i|}, shared by each conjugate pair
};

/// Builds the matrices from the seed columns. Column 2k holds the eigenvalue
/// lambda_k seed, column 2k+1 its conjugate partner. Throws numeric_range_error
/// (naming the column) when an entry is not finite after scaling.
CrumMatrices assemble(const DressingSystem& sys, double x, double t);

/// The N-soliton field r[N](x,t) = -2 det(S21')/det(Delta').
/// The potential update is additive over the seed background; the trivial
/// seed used here contributes zero, so dressing a nonzero background would
/// only add its field to this value.
cplx r_field(const DressingSystem& sys, double x, double t);

/// The conjugate-partner potential q[N](x,t) = +2 det(S12')/det(Delta').
/// For the conjugation pairing used here this equals conj(r_field(sys,x,t));
/// the equality is enforced by tests, not assumed by the implementation.
cplx q_field(const DressingSystem& sys, double x, double t);

} // namespace darboux
