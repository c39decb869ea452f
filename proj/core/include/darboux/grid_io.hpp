#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "darboux/cplx_linalg.hpp"
#include "darboux/verify.hpp"

namespace darboux {

struct GridSpec {
    double x0, x1, t0, t1;
    std::uint32_t nx, nt; // >= 2 each
};

/// Rectangular lattice of field samples, row-major with x fastest:
/// values[i + j*nx] = field(x_i, t_j).
struct FieldGrid {
    double x0 = 0, x1 = 0, t0 = 0, t1 = 0;
    std::uint32_t nx = 0, nt = 0;
    std::vector<cplx> values;

    double x_at(std::uint32_t i) const { return x0 + (x1 - x0) * i / (nx - 1); }
    double t_at(std::uint32_t j) const { return t0 + (t1 - t0) * j / (nt - 1); }
};

FieldGrid sample(const Field2D& field, const GridSpec& spec);

/// CSV with header "x,t,re,im,abs", one row per sample in storage order,
/// 17 significant digits, LF line endings.
void write_csv(const FieldGrid& g, std::ostream& out);

/// Binary layout, all little-endian: magic "NLSG", u32 version = 1,
/// f64 x0,x1,t0,t1, u32 nx,nt, then nx*nt (re,im) f64 pairs in storage order.
void write_binary(const FieldGrid& g, std::ostream& out);

/// Inverse of write_binary; throws std::runtime_error on malformed input.
FieldGrid read_binary(std::istream& in);

/// 8-bit PGM (P5) of |r|: pixel = round(255 * (|r|/max|r|)^gamma), t increasing
/// downward. An all-zero grid renders as all-black.
void write_pgm(const FieldGrid& g, double gamma, std::ostream& out);

} // namespace darboux
