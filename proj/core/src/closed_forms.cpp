#include "darboux/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace darboux {

TwoSolitonParams two_soliton_params(const SpectralParam& p1, const SpectralParam& p3) {
    validate(p1);
    validate(p3);
    if (p1.lambda == p3.lambda)
        throw std::invalid_argument("two_soliton_params: eigenvalues must differ");
    return TwoSolitonParams{std::conj(p1.lambda) - std::conj(p3.lambda),
                            p1.lambda - std::conj(p3.lambda)};
}

cplx one_soliton(const SpectralParam& p, double x, double t) {
    validate(p);
    const cplx th = theta(p.lambda, x, t).value;
    const double denom = std::cosh(2.0 * th.imag() - p.phi2);
    if (std::isinf(denom))
        return 0.0; // deep tail; 1/cosh underflows cleanly
    const cplx phase = std::exp(cplx(0.0, -2.0 * th.real()));
    return cplx(0.0, -2.0 * p.lambda.imag()) * phase / denom;
}

// r[2] = -2i [ b1 e^{-2i Re th} (rho beta e^{-2 Im al} + rho* beta* e^{+2 Im al})
//            + b3 e^{-2i Re al} (rho beta* e^{-2 Im th} + rho* beta e^{+2 Im th}) ]
//      / [ |rho|^2 cosh(2(Im th + Im al)) + |beta|^2 cosh(2(Im th - Im al))
//            - 4 b1 b3 cos(2(Re th - Re al)) ]
// with rho* = l1 - l3, beta = l1 - l3*, th = theta(l1) - i phi2_1/2,
// al = theta(l3) - i phi2_3/2. Numerator and denominator are both damped by
// e^{-2(|Im th| + |Im al|)} so the dominant cosh term sits at e^0 and the
// quotient stays representable for any (x,t).
cplx two_soliton(const SpectralParam& p1, const SpectralParam& p3, double x, double t) {
    const TwoSolitonParams c = two_soliton_params(p1, p3);
    const cplx rho = c.rho;
    const cplx rho_c = std::conj(rho);
    const cplx beta = c.beta;
    const cplx beta_c = std::conj(beta);

    const cplx th = theta(p1.lambda, x, t).value - cplx(0.0, p1.phi2 / 2);
    const cplx al = theta(p3.lambda, x, t).value - cplx(0.0, p3.phi2 / 2);
    const double b1 = p1.lambda.imag();
    const double b3 = p3.lambda.imag();
    const double iT = th.imag(), rT = th.real();
    const double iA = al.imag(), rA = al.real();

    const double shift = 2.0 * (std::abs(iT) + std::abs(iA));
    const auto damped = [shift](double e) { return std::exp(e - shift); };

    const cplx phase_th = std::exp(cplx(0.0, -2.0 * rT));
    const cplx phase_al = std::exp(cplx(0.0, -2.0 * rA));
    const cplx num =
        cplx(0.0, -2.0) *
        (b1 * phase_th * (rho * beta * damped(-2.0 * iA) + rho_c * beta_c * damped(2.0 * iA)) +
         b3 * phase_al * (rho * beta_c * damped(-2.0 * iT) + rho_c * beta * damped(2.0 * iT)));

    const double cosh_sum = 0.5 * (damped(2.0 * (iT + iA)) + damped(-2.0 * (iT + iA)));
    const double cosh_diff = 0.5 * (damped(2.0 * (iT - iA)) + damped(-2.0 * (iT - iA)));
    const double den = std::norm(rho) * cosh_sum + std::norm(beta) * cosh_diff -
                       4.0 * b1 * b3 * std::cos(2.0 * (rT - rA)) * damped(0.0);

    return num / den;
}

} // namespace darboux
