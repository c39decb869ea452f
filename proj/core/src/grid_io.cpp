#include "darboux/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

void validate_spec(double x0, double x1, double t0, double t1,
                   std::uint32_t nx, std::uint32_t nt) {
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(t0) || !std::isfinite(t1))
        throw std::invalid_argument("grid: bounds must be finite");
    if (!(x1 > x0) || !(t1 > t0))
        throw std::invalid_argument("grid: need x1 > x0 and t1 > t0");
    if (nx < 2 || nt < 2)
        throw std::invalid_argument("grid: need nx >= 2 and nt >= 2");
}

void put_u32_le(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_f64_le(std::ostream& out, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint32_t get_u32_le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in)
        throw std::runtime_error("read_binary: truncated stream");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

double get_f64_le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in)
        throw std::runtime_error("read_binary: truncated stream");
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i)
        u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

} // namespace

FieldGrid sample(const Field2D& field, const GridSpec& spec) {
    validate_spec(spec.x0, spec.x1, spec.t0, spec.t1, spec.nx, spec.nt);
    FieldGrid g;
    g.x0 = spec.x0;
    g.x1 = spec.x1;
    g.t0 = spec.t0;
    g.t1 = spec.t1;
    g.nx = spec.nx;
    g.nt = spec.nt;
    g.values.resize(static_cast<size_t>(spec.nx) * spec.nt);
    for (std::uint32_t j = 0; j < spec.nt; ++j) {
        const double t = g.t_at(j);
        for (std::uint32_t i = 0; i < spec.nx; ++i) {
            const double x = g.x_at(i);
            try {
                g.values[i + static_cast<size_t>(j) * spec.nx] = field(x, t);
            } catch (const std::runtime_error& e) {
                throw numeric_range_error(std::string(e.what()) + " [at grid point (" +
                                          std::to_string(i) + "," + std::to_string(j) +
                                          "), x=" + std::to_string(x) +
                                          ", t=" + std::to_string(t) + "]");
            }
        }
    }
    return g;
}

void write_csv(const FieldGrid& g, std::ostream& out) {
    out << "x,t,re,im,abs\n";
    char buf[512];
    for (std::uint32_t j = 0; j < g.nt; ++j) {
        const double t = g.t_at(j);
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const cplx v = g.values[i + static_cast<size_t>(j) * g.nx];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          g.x_at(i), t, v.real(), v.imag(), std::abs(v));
            out << buf;
        }
    }
}

void write_binary(const FieldGrid& g, std::ostream& out) {
    out.write("NLSG", 4);
    put_u32_le(out, 1);
    put_f64_le(out, g.x0);
    put_f64_le(out, g.x1);
    put_f64_le(out, g.t0);
    put_f64_le(out, g.t1);
    put_u32_le(out, g.nx);
    put_u32_le(out, g.nt);
    for (const cplx& v : g.values) {
        put_f64_le(out, v.real());
        put_f64_le(out, v.imag());
    }
}

FieldGrid read_binary(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "NLSG", 4) != 0)
        throw std::runtime_error("read_binary: bad magic");
    const std::uint32_t version = get_u32_le(in);
    if (version != 1)
        throw std::runtime_error("read_binary: unsupported version " + std::to_string(version));
    FieldGrid g;
    g.x0 = get_f64_le(in);
    g.x1 = get_f64_le(in);
    g.t0 = get_f64_le(in);
    g.t1 = get_f64_le(in);
    g.nx = get_u32_le(in);
    g.nt = get_u32_le(in);
    if (g.nx < 2 || g.nt < 2 || static_cast<std::uint64_t>(g.nx) * g.nt > (1u << 28))
        throw std::runtime_error("read_binary: implausible grid shape");
    g.values.resize(static_cast<size_t>(g.nx) * g.nt);
    for (cplx& v : g.values) {
        const double re = get_f64_le(in);
        const double im = get_f64_le(in);
        v = cplx(re, im);
    }
    return g;
}

void write_pgm(const FieldGrid& g, double gamma, std::ostream& out) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("write_pgm: gamma must be positive");
    double vmax = 0.0;
    for (const cplx& v : g.values)
        vmax = std::max(vmax, std::abs(v));

    out << "P5\n" << g.nx << " " << g.nt << "\n255\n";
    std::vector<char> row(g.nx);
    for (std::uint32_t j = 0; j < g.nt; ++j) { // t increases downward
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            double p = 0.0;
            if (vmax > 0.0)
                p = std::pow(std::abs(g.values[i + static_cast<size_t>(j) * g.nx]) / vmax,
                             gamma);
            row[i] = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * p)));
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

} // namespace darboux
