#include "oracles.hpp"

namespace oracles {

cplx cofactor_det(const CMat& m) {
    const int n = m.rows;
    if (n == 1)
        return m.at(0, 0);
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        CMat minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        const cplx term = m.at(0, j) * cofactor_det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

CMat random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat m(n, n);
    for (auto& e : m.entries)
        e = cplx(u(rng), u(rng));
    return m;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / d;
}

} // namespace oracles
