#include "darboux/dressing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

DressingSystem::DressingSystem(std::vector<SpectralParam> params)
    : params_(std::move(params)) {
    const int n = static_cast<int>(params_.size());
    if (n < 1 || n > kMaxDressingOrder)
        throw std::invalid_argument("DressingSystem: need 1.." +
                                    std::to_string(kMaxDressingOrder) +
                                    " spectral parameters, got " + std::to_string(n));
    for (const auto& p : params_)
        validate(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (params_[i].lambda == params_[j].lambda)
                throw std::invalid_argument(
                    "DressingSystem: eigenvalues must be distinct (positions " +
                    std::to_string(i) + " and " + std::to_string(j) + ")");
}

CrumMatrices assemble(const DressingSystem& sys, double x, double t) {
    const int N = sys.order();
    const int n = 2 * N;

    CrumMatrices out;
    out.delta = CMat(n, n);
    out.s21 = CMat(n, n);
    out.s12 = CMat(n, n);
    out.col_scales.assign(static_cast<size_t>(n), 1.0);

    for (int k = 0; k < N; ++k) {
        const SpectralParam& p = sys.params()[k];
        const SeedPair cols = seed_pair(p, x, t);
        const double abs_im = std::abs(theta(p.lambda, x, t).value.imag());
        if (abs_im > 709.0)
            throw numeric_range_error("assemble: column scale e^{|Im theta|} overflows "
                                      "in column " + std::to_string(2 * k));
        const double scale = std::exp(abs_im);

        const cplx lam[2] = {p.lambda, std::conj(p.lambda)};
        const SeedColumn col[2] = {cols.odd, cols.even};
        for (int c = 0; c < 2; ++c) {
            const int j = 2 * k + c;
            out.col_scales[j] = scale;

            // powers lambda^0 .. lambda^N
            std::vector<cplx> pow(static_cast<size_t>(N) + 1);
            pow[0] = 1.0;
            for (int q = 1; q <= N; ++q)
                pow[q] = pow[q - 1] * lam[c];

            int row = 0;
            for (int q = N - 1; q >= 0; --q, row += 2) {
                out.delta.at(row, j) = pow[q] * col[c].psi;
                out.delta.at(row + 1, j) = pow[q] * col[c].phi;
            }
            for (int r = 0; r < n; ++r) {
                out.s21.at(r, j) = out.delta.at(r, j);
                out.s12.at(r, j) = out.delta.at(r, j);
            }
            out.s21.at(0, j) = pow[N] * col[c].phi;
            out.s12.at(1, j) = pow[N] * col[c].psi;
        }
    }

    for (int j = 0; j < n; ++j) {
        const double s = out.col_scales[j];
        for (int i = 0; i < n; ++i) {
            const cplx a = out.delta.at(i, j) / s;
            const cplx b = out.s21.at(i, j) / s;
            const cplx c = out.s12.at(i, j) / s;
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
                !std::isfinite(b.real()) || !std::isfinite(b.imag()) ||
                !std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw numeric_range_error("assemble: non-finite scaled entry in column " +
                                          std::to_string(j));
        }
    }
    return out;
}

cplx r_field(const DressingSystem& sys, double x, double t) {
    const CrumMatrices m = assemble(sys, x, t);
    return -2.0 * det_ratio_scaled(m.s21, m.delta, m.col_scales, EvalPoint{x, t});
}

cplx q_field(const DressingSystem& sys, double x, double t) {
    const CrumMatrices m = assemble(sys, x, t);
    return 2.0 * det_ratio_scaled(m.s12, m.delta, m.col_scales, EvalPoint{x, t});
}

} // namespace darboux
