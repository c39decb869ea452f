#pragma once

#include <random>
#include <vector>

#include "darboux/cplx_linalg.hpp"

// Independent reference implementations for the tests. Nothing here may call
// the code paths it is used to check.
namespace oracles {

using darboux::CMat;
using darboux::cplx;

/// O(n!) Laplace cofactor expansion along the first row.
cplx cofactor_det(const CMat& m);

/// Entries uniform in [-1,1]^2.
CMat random_matrix(std::mt19937_64& rng, int n);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace oracles
