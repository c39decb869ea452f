#include "darboux/sturm_crum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "darboux/cplx_linalg.hpp"
#include "darboux/errors.hpp"

namespace darboux {

namespace {

constexpr int kSeedDerivOrder = 8;

// det() works entrywise on real inputs: with zero imaginary parts everywhere,
// every LU operation keeps them zero.
double real_det(const CMat& m) { return det(m).real(); }

} // namespace

SturmSeed exp_seed(double k) {
    SturmSeed s;
    s.value = [k](double x) { return std::exp(k * x); };
    double km = 1.0;
    for (int m = 1; m <= kSeedDerivOrder; ++m) {
        km *= k;
        s.derivs.push_back([k, km](double x) { return km * std::exp(k * x); });
    }
    s.lambda = -k * k;
    return s;
}

SturmSeed cosh_seed(double k) {
    SturmSeed s;
    s.value = [k](double x) { return std::cosh(k * x); };
    double km = 1.0;
    for (int m = 1; m <= kSeedDerivOrder; ++m) {
        km *= k;
        if (m % 2 == 1)
            s.derivs.push_back([k, km](double x) { return km * std::sinh(k * x); });
        else
            s.derivs.push_back([k, km](double x) { return km * std::cosh(k * x); });
    }
    s.lambda = -k * k;
    return s;
}

SturmSeed sinh_seed(double k) {
    SturmSeed s;
    s.value = [k](double x) { return std::sinh(k * x); };
    double km = 1.0;
    for (int m = 1; m <= kSeedDerivOrder; ++m) {
        km *= k;
        if (m % 2 == 1)
            s.derivs.push_back([k, km](double x) { return km * std::cosh(k * x); });
        else
            s.derivs.push_back([k, km](double x) { return km * std::sinh(k * x); });
    }
    s.lambda = -k * k;
    return s;
}

SturmSeed cos_seed(double k) {
    SturmSeed s;
    s.value = [k](double x) { return std::cos(k * x); };
    double km = 1.0;
    for (int m = 1; m <= kSeedDerivOrder; ++m) {
        km *= k;
        switch (m % 4) {
        case 1: s.derivs.push_back([k, km](double x) { return -km * std::sin(k * x); }); break;
        case 2: s.derivs.push_back([k, km](double x) { return -km * std::cos(k * x); }); break;
        case 3: s.derivs.push_back([k, km](double x) { return km * std::sin(k * x); }); break;
        default: s.derivs.push_back([k, km](double x) { return km * std::cos(k * x); }); break;
        }
    }
    s.lambda = k * k;
    return s;
}

SturmSeed sin_seed(double k) {
    SturmSeed s;
    s.value = [k](double x) { return std::sin(k * x); };
    double km = 1.0;
    for (int m = 1; m <= kSeedDerivOrder; ++m) {
        km *= k;
        switch (m % 4) {
        case 1: s.derivs.push_back([k, km](double x) { return km * std::cos(k * x); }); break;
        case 2: s.derivs.push_back([k, km](double x) { return -km * std::sin(k * x); }); break;
        case 3: s.derivs.push_back([k, km](double x) { return -km * std::cos(k * x); }); break;
        default: s.derivs.push_back([k, km](double x) { return km * std::sin(k * x); }); break;
        }
    }
    s.lambda = k * k;
    return s;
}

double seed_deriv(const SturmSeed& seed, int order, double x) {
    if (order == 0)
        return seed.value(x);
    if (order < 0 || static_cast<size_t>(order) > seed.derivs.size())
        throw arity_error("seed carries derivatives to order " +
                          std::to_string(seed.derivs.size()) + ", order " +
                          std::to_string(order) + " requested");
    return seed.derivs[static_cast<size_t>(order) - 1](x);
}

double wronskian(const std::vector<SturmSeed>& seeds, double x) {
    const int n = static_cast<int>(seeds.size());
    if (n < 1)
        throw dimension_error("wronskian: need at least one seed");
    CMat m(n, n);
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p)
            m.at(p, j) = seed_deriv(seeds[j], p, x);
    return real_det(m);
}

double darboux_once(const SturmSeed& seed, double psi_value, double psi_deriv, double x) {
    const double v = seed.value(x);
    if (v == 0.0)
        throw node_error("darboux_once: seed vanishes", x);
    return psi_deriv - (seed_deriv(seed, 1, x) / v) * psi_value;
}

double crum_psi(const std::vector<SturmSeed>& seeds,
                const std::vector<double>& target_value_and_derivs, double x) {
    const int n = static_cast<int>(seeds.size());
    if (n < 1)
        throw dimension_error("crum_psi: need at least one seed");
    if (static_cast<int>(target_value_and_derivs.size()) != n + 1)
        throw dimension_error("crum_psi: target must supply value plus derivatives "
                              "to order " + std::to_string(n));

    const double den = wronskian(seeds, x);
    if (std::abs(den) < 1e-300)
        throw node_error("crum_psi: seed Wronskian vanishes", x);

    CMat num(n + 1, n + 1);
    for (int j = 0; j < n; ++j)
        for (int p = 0; p <= n; ++p)
            num.at(p, j) = seed_deriv(seeds[j], p, x);
    for (int p = 0; p <= n; ++p)
        num.at(p, n) = target_value_and_derivs[static_cast<size_t>(p)];
    return real_det(num) / den;
}

double crum_potential(const std::vector<SturmSeed>& seeds, const RealFn& u0,
                      double x, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("crum_potential: h must be positive");
    double w[5];
    for (int k = -2; k <= 2; ++k)
        w[k + 2] = wronskian(seeds, x + k * h);
    for (int k = 0; k < 5; ++k)
        if (w[k] == 0.0 || (w[k] > 0.0) != (w[2] > 0.0))
            throw node_error("crum_potential: Wronskian vanishes or changes sign "
                             "across the stencil", x + (k - 2) * h);
    // ln W(x+kh) - ln W(x) as log of the ratio: the stencil coefficients sum
    // to zero, and differencing the ratios instead of large ln W values keeps
    // the rounding floor ~1e-10 instead of ~1e-8
    double g[5];
    for (int k = 0; k < 5; ++k)
        g[k] = std::log(w[k] / w[2]);
    const double d2 = (-g[0] + 16.0 * g[1] + 16.0 * g[3] - g[4]) / (12.0 * h * h);
    return u0(x) - 2.0 * d2;
}

CrumCoefficients crum_coefficients(const std::vector<SturmSeed>& seeds, double x) {
    const int n = static_cast<int>(seeds.size());
    if (n < 1)
        throw dimension_error("crum_coefficients: need at least one seed");

    // row j: [ psi_j^{(N-1)}, ..., psi_j ] * (s_1 .. s_N)^T = -psi_j^{(N)}
    CMat m(n, n);
    std::vector<double> rhs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int c = 0; c < n; ++c)
            m.at(j, c) = seed_deriv(seeds[static_cast<size_t>(j)], n - 1 - c, x);
        rhs[static_cast<size_t>(j)] = -seed_deriv(seeds[static_cast<size_t>(j)], n, x);
    }

    const double d0 = real_det(m);
    if (std::abs(d0) < 1e-300)
        throw node_error("crum_coefficients: singular coefficient system", x);

    CrumCoefficients out;
    out.s.resize(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        CMat mc = m;
        for (int j = 0; j < n; ++j)
            mc.at(j, c) = rhs[static_cast<size_t>(j)];
        out.s[static_cast<size_t>(c)] = real_det(mc) / d0;
    }
    return out;
}

} // namespace darboux
