#include "darboux/cplx_linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1.0;
    return m;
}

namespace {

void require_square(const CMat& m, const char* who) {
    if (!m.square())
        throw dimension_error(std::string(who) + ": matrix must be square, got " +
                              std::to_string(m.rows) + "x" + std::to_string(m.cols));
    if (m.entries.size() != static_cast<size_t>(m.rows) * m.cols)
        throw dimension_error(std::string(who) + ": entry count does not match shape");
}

} // namespace

cplx det(const CMat& m) {
    require_square(m, "det");
    const int n = m.rows;
    std::vector<cplx> a = m.entries;
    auto e = [&](int i, int j) -> cplx& { return a[static_cast<size_t>(i) * n + j]; };

    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(e(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(e(i, k));
            if (v > best) { // strict: ties keep the lowest row
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0)
            return 0.0;
        if (pivot != k) {
            for (int j = k; j < n; ++j)
                std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        const cplx pk = e(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = e(i, k) / pk;
            e(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j)
                e(i, j) -= f * e(k, j);
        }
    }

    cplx d = (sign > 0) ? cplx(1.0) : cplx(-1.0);
    for (int k = 0; k < n; ++k)
        d *= e(k, k);
    return d;
}

cplx det_ratio_scaled(const CMat& num, const CMat& den,
                      const std::vector<double>& col_scales,
                      std::optional<EvalPoint> where) {
    require_square(num, "det_ratio_scaled");
    require_square(den, "det_ratio_scaled");
    if (num.rows != den.rows)
        throw dimension_error("det_ratio_scaled: numerator is " + std::to_string(num.rows) +
                              "x" + std::to_string(num.cols) + " but denominator is " +
                              std::to_string(den.rows) + "x" + std::to_string(den.cols));
    const int n = num.rows;
    if (static_cast<int>(col_scales.size()) != n)
        throw dimension_error("det_ratio_scaled: expected " + std::to_string(n) +
                              " column scales, got " + std::to_string(col_scales.size()));
    for (double s : col_scales)
        if (!(s > 0.0) || !std::isfinite(s))
            throw dimension_error("det_ratio_scaled: column scales must be positive and finite");

    CMat ns = num, ds = den;
    for (int j = 0; j < n; ++j) {
        const double s = col_scales[j];
        for (int i = 0; i < n; ++i) {
            ns.at(i, j) /= s;
            ds.at(i, j) /= s;
        }
    }

    const cplx dd = det(ds);
    if (std::abs(dd) < 1e-300) {
        if (where)
            throw singularity_error("det_ratio_scaled: singular scaled denominator",
                                    where->x, where->t);
        throw singularity_error("det_ratio_scaled: singular scaled denominator");
    }
    return det(ns) / dd;
}

} // namespace darboux
