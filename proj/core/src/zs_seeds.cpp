#include "darboux/zs_seeds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

// exp keeps finite up to ~709.78 in the real part of the exponent
constexpr double kExpRangeLimit = 709.0;

// Column entries as single exponentials, so no intermediate can overflow
// before the final exp: psi = e^{phi2/2 - Im th + i(phi1/2 + Re th)},
// phi = e^{-phi2/2 + Im th + i(phi1/2 - Re th)}. `shift` subtracts a common
// real offset from both exponents.
SeedPair columns_with_shift(const SpectralParam& p, const Theta& th, double shift) {
    const double re = th.value.real();
    const double im = th.value.imag();
    SeedPair out;
    out.odd.psi = std::exp(cplx(p.phi2 / 2 - im - shift, p.phi1 / 2 + re));
    out.odd.phi = std::exp(cplx(-p.phi2 / 2 + im - shift, p.phi1 / 2 - re));
    out.even.psi = -std::conj(out.odd.phi);
    out.even.phi = std::conj(out.odd.psi);
    return out;
}

} // namespace

void validate(const SpectralParam& p) {
    if (!std::isfinite(p.lambda.real()) || !std::isfinite(p.lambda.imag()) ||
        !std::isfinite(p.phi1) || !std::isfinite(p.phi2))
        throw std::invalid_argument("SpectralParam: fields must be finite");
    if (!(p.lambda.imag() > 0.0))
        throw std::invalid_argument("SpectralParam: Im(lambda) must be > 0, got " +
                                    std::to_string(p.lambda.imag()));
}

Theta theta(cplx lambda, double x, double t) {
    return Theta{lambda * x + 2.0 * t * (lambda * lambda)};
}

SeedPair seed_pair(const SpectralParam& p, double x, double t) {
    validate(p);
    if (!std::isfinite(x) || !std::isfinite(t))
        throw std::invalid_argument("seed_pair: x and t must be finite");
    const Theta th = theta(p.lambda, x, t);
    const double im = th.value.imag();
    if (std::abs(im) + std::abs(p.phi2) / 2 > kExpRangeLimit)
        throw numeric_range_error(
            "seed_pair: e^{|Im theta|} exceeds double range (|Im theta| = " +
            std::to_string(std::abs(im)) + "); use seed_pair_scaled");
    return columns_with_shift(p, th, 0.0);
}

ScaledSeedPair seed_pair_scaled(const SpectralParam& p, double x, double t) {
    validate(p);
    if (!std::isfinite(x) || !std::isfinite(t))
        throw std::invalid_argument("seed_pair_scaled: x and t must be finite");
    const Theta th = theta(p.lambda, x, t);
    const double s = std::abs(th.value.imag());
    const SeedPair cols = columns_with_shift(p, th, s);
    return ScaledSeedPair{cols.odd, cols.even, s};
}

} // namespace darboux
