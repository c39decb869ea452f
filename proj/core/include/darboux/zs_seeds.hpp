#pragma once

#include "darboux/cplx_linalg.hpp"

namespace darboux {

/// One discrete eigenvalue plus its two real seed constants. The partner
/// eigenvalue is always conj(lambda); it is derived where needed, never stored.
struct SpectralParam {
    cplx lambda;       // Im(lambda) > 0
    double phi1 = 0.0; // phase constant (a global column phase; cancels in r[N])
    double phi2 = 0.0; // offset constant (shifts the soliton center)
};

/// Throws std::invalid_argument unless Im(lambda) > 0 and all fields are finite.
void validate(const SpectralParam& p);

/// theta = lambda*x + 2*t*lambda^2
struct Theta {
    cplx value;
};

Theta theta(cplx lambda, double x, double t);

/// One column (psi, phi) of the seed solution at a point.
struct SeedColumn {
    cplx psi;
    cplx phi;
};

struct SeedPair {
    SeedColumn odd;  // eigenvalue lambda:      psi = A e^{i theta}, phi = B e^{-i theta}
    SeedColumn even; // eigenvalue conj(lambda): (-conj(phi), conj(psi))
};

/// Seed columns with A = e^{(phi2 + i phi1)/2}, B = e^{(-phi2 + i phi1)/2}.
/// Throws numeric_range_error when e^{|Im theta|} would leave double range;
/// use seed_pair_scaled in that regime.
SeedPair seed_pair(const SpectralParam& p, double x, double t);

/// Both columns multiplied by e^{-log_scale} with log_scale = |Im theta|.
/// Entries stay finite for any (x,t); the caller owns the scale bookkeeping.
struct ScaledSeedPair {
    SeedColumn odd;
    SeedColumn even;
    double log_scale;
};

ScaledSeedPair seed_pair_scaled(const SpectralParam& p, double x, double t);

} // namespace darboux
