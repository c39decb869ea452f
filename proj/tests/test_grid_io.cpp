#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/closed_forms.hpp"
#include "darboux/grid_io.hpp"

using namespace darboux;

namespace {

FieldGrid soliton_grid(std::uint32_t nx = 201, std::uint32_t nt = 81) {
    const SpectralParam p{cplx(0, 1)};
    const auto field = [&](double x, double t) { return one_soliton(p, x, t); };
    return sample(field, GridSpec{-5, 5, -2, 2, nx, nt});
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        const size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

} // namespace

TEST_CASE("sample: zero field and validation") {
    const auto zero = [](double, double) { return cplx(0, 0); };
    const FieldGrid g = sample(zero, GridSpec{0, 1, 0, 1, 3, 3});
    REQUIRE(g.values.size() == 9);
    for (const cplx& v : g.values)
        CHECK(v == cplx(0, 0));

    CHECK_THROWS_AS(sample(zero, GridSpec{0, 1, 0, 1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(sample(zero, GridSpec{1, 0, 0, 1, 3, 3}), std::invalid_argument);
}

TEST_CASE("sample: layout is row-major with x fastest") {
    const auto field = [](double x, double t) { return cplx(x, t); };
    const FieldGrid g = sample(field, GridSpec{0, 1, 10, 11, 3, 2});
    CHECK(g.values[0] == cplx(0.0, 10.0));
    CHECK(g.values[1] == cplx(0.5, 10.0));
    CHECK(g.values[2] == cplx(1.0, 10.0));
    CHECK(g.values[3] == cplx(0.0, 11.0));
}

TEST_CASE("sample: 1-soliton grid max is the amplitude, up to grid granularity") {
    const FieldGrid g = soliton_grid();
    double vmax = 0;
    for (const cplx& v : g.values)
        vmax = std::max(vmax, std::abs(v));
    CHECK(std::abs(vmax - 2.0) <= 1e-3);
}

TEST_CASE("csv: header, row count, zero grid") {
    const auto zero = [](double, double) { return cplx(0, 0); };
    const FieldGrid g = sample(zero, GridSpec{0, 1, 0, 1, 2, 2});
    std::ostringstream os;
    write_csv(g, os);
    const std::string text = os.str();
    auto lines = split(text, '\n');
    REQUIRE(lines.size() == 6); // header + 4 rows + trailing empty
    CHECK(lines[0] == "x,t,re,im,abs");
    CHECK(lines[5].empty());
    CHECK(split(lines[1], ',').size() == 5);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("csv: re-parse reproduces the samples exactly") {
    const FieldGrid g = soliton_grid(41, 17);
    std::ostringstream os;
    write_csv(g, os);
    auto lines = split(os.str(), '\n');
    REQUIRE(lines.size() == 2 + 41 * 17);
    for (std::uint32_t j = 0; j < g.nt; ++j) {
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const auto cells = split(lines[1 + i + j * g.nx], ',');
            REQUIRE(cells.size() == 5);
            const cplx v = g.values[i + j * g.nx];
            CHECK(std::strtod(cells[0].c_str(), nullptr) == g.x_at(i));
            CHECK(std::strtod(cells[1].c_str(), nullptr) == g.t_at(j));
            CHECK(std::strtod(cells[2].c_str(), nullptr) == v.real());
            CHECK(std::strtod(cells[3].c_str(), nullptr) == v.imag());
            CHECK(std::strtod(cells[4].c_str(), nullptr) == std::abs(v));
        }
    }
}

TEST_CASE("binary: round trip is bit-exact") {
    const FieldGrid g = soliton_grid(31, 11);
    std::stringstream ss(std::ios::in | std::ios::out | std::ios::binary);
    write_binary(g, ss);
    const FieldGrid back = read_binary(ss);
    CHECK(back.x0 == g.x0);
    CHECK(back.x1 == g.x1);
    CHECK(back.t0 == g.t0);
    CHECK(back.t1 == g.t1);
    CHECK(back.nx == g.nx);
    CHECK(back.nt == g.nt);
    REQUIRE(back.values.size() == g.values.size());
    for (size_t k = 0; k < g.values.size(); ++k)
        CHECK(back.values[k] == g.values[k]);
}

TEST_CASE("binary: header layout and malformed input") {
    const FieldGrid g = soliton_grid(2, 2);
    std::ostringstream os(std::ios::binary);
    write_binary(g, os);
    const std::string bytes = os.str();
    REQUIRE(bytes.size() == 4 + 4 + 4 * 8 + 2 * 4 + 4 * 16);
    CHECK(bytes.substr(0, 4) == "NLSG");
    CHECK(bytes[4] == 1); // version, little-endian

    std::istringstream bad(std::string("XXXX") + bytes.substr(4), std::ios::binary);
    CHECK_THROWS_AS(read_binary(bad), std::runtime_error);
    std::istringstream truncated(bytes.substr(0, 20), std::ios::binary);
    CHECK_THROWS_AS(read_binary(truncated), std::runtime_error);
}

TEST_CASE("pgm: header, max pixel 255, brightest column at the peak") {
    const FieldGrid g = soliton_grid(101, 9);
    std::ostringstream os(std::ios::binary);
    write_pgm(g, 0.5, os);
    const std::string bytes = os.str();
    const std::string header = "P5\n101 9\n255\n";
    REQUIRE(bytes.substr(0, header.size()) == header);
    REQUIRE(bytes.size() == header.size() + 101 * 9);

    unsigned char best = 0;
    size_t best_at = 0;
    const size_t mid_row = header.size() + 4 * 101; // t = 0 row
    for (size_t i = 0; i < 101; ++i) {
        const auto px = static_cast<unsigned char>(bytes[mid_row + i]);
        if (px > best) {
            best = px;
            best_at = i;
        }
    }
    CHECK(best == 255);
    CHECK(best_at == 50); // x = 0 column

    const auto zero = [](double, double) { return cplx(0, 0); };
    const FieldGrid gz = sample(zero, GridSpec{0, 1, 0, 1, 2, 2});
    std::ostringstream oz(std::ios::binary);
    write_pgm(gz, 0.5, oz);
    const std::string zbytes = oz.str();
    for (size_t k = zbytes.size() - 4; k < zbytes.size(); ++k)
        CHECK(zbytes[k] == 0);

    CHECK_THROWS_AS(write_pgm(g, 0.0, os), std::invalid_argument);
}
