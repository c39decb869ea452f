#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace darboux {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, only as big as the dressing needs (<= 16x16
/// in practice, but nothing here depends on that).
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> entries; // rows*cols, row-major

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    static CMat identity(int n);

    cplx& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const cplx& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols && rows >= 1; }
};

/// (x,t) tag attached to singularity reports by callers that have one.
struct EvalPoint {
    double x = 0;
    double t = 0;
};

/// Determinant by LU with partial pivoting on complex modulus.
/// Ties keep the lowest row index, so the result is deterministic.
cplx det(const CMat& m);

/// det(num')/det(den') where column j of both matrices has been divided by
/// col_scales[j]. The scalings cancel algebraically in the ratio; they exist
/// to keep the two determinants inside double range.
///
/// Throws singularity_error when |det(den')| < 1e-300, carrying `where` if
/// the caller supplied one.
cplx det_ratio_scaled(const CMat& num, const CMat& den,
                      const std::vector<double>& col_scales,
                      std::optional<EvalPoint> where = std::nullopt);

} // namespace darboux
