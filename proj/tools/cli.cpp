#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "darboux/closed_forms.hpp"
#include "darboux/dressing.hpp"
#include "darboux/errors.hpp"
#include "darboux/grid_io.hpp"
#include "darboux/sturm_crum.hpp"
#include "darboux/verify.hpp"
#include "darboux/zs_seeds.hpp"

namespace darboux::cli {

namespace {

using json = nlohmann::json;

double parse_double(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument(what + ": cannot parse number '" + text + "'");
    return v;
}

} // namespace

cplx parse_complex(const std::string& text) {
    const std::string what = "eigenvalue '" + text + "'";
    std::string s = text;
    if (s.empty())
        throw std::invalid_argument(what + ": empty");

    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // split at the last +/- that does not follow an exponent marker
        size_t split = std::string::npos;
        for (size_t p = 1; p < s.size(); ++p) {
            if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E')
                split = p;
        }
        if (split == std::string::npos) {
            std::string im = s;
            if (im.empty() || im == "+")
                im = "1";
            else if (im == "-")
                im = "-1";
            return cplx(0.0, parse_double(im, what));
        }
        std::string re = s.substr(0, split);
        std::string im = s.substr(split);
        if (im == "+")
            im = "1";
        else if (im == "-")
            im = "-1";
        return cplx(parse_double(re, what), parse_double(im, what));
    }
    return cplx(parse_double(s, what), 0.0);
}

Range parse_range(const std::string& text) {
    const std::string what = "range '" + text + "'";
    const size_t c1 = text.find(':');
    const size_t c2 = (c1 == std::string::npos) ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument(what + ": expected start:stop:count");
    Range r;
    r.start = parse_double(text.substr(0, c1), what);
    r.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1), what);
    const std::string cnt = text.substr(c2 + 1);
    char* end = nullptr;
    const long n = std::strtol(cnt.c_str(), &end, 10);
    if (end == cnt.c_str() || *end != '\0')
        throw std::invalid_argument(what + ": cannot parse count '" + cnt + "'");
    if (n < 2)
        throw std::invalid_argument(what + ": count must be >= 2");
    if (!(r.stop > r.start))
        throw std::invalid_argument(what + ": need stop > start");
    r.count = static_cast<int>(n);
    return r;
}

namespace {

std::vector<SpectralParam> make_params(const std::vector<std::string>& lambdas,
                                       const std::vector<double>& phi1s,
                                       const std::vector<double>& phi2s) {
    if (lambdas.empty())
        throw std::invalid_argument("at least one --lambda is required");
    const size_t n = lambdas.size();
    if (!phi1s.empty() && phi1s.size() != n)
        throw std::invalid_argument("--phi1 must be given once per --lambda or not at all");
    if (!phi2s.empty() && phi2s.size() != n)
        throw std::invalid_argument("--phi2 must be given once per --lambda or not at all");
    std::vector<SpectralParam> out(n);
    for (size_t k = 0; k < n; ++k) {
        out[k].lambda = parse_complex(lambdas[k]);
        out[k].phi1 = phi1s.empty() ? 0.0 : phi1s[k];
        out[k].phi2 = phi2s.empty() ? 0.0 : phi2s[k];
        validate(out[k]);
    }
    return out;
}

SturmSeed make_seed(const std::string& spec) {
    std::string kind = spec;
    double k = 1.0;
    if (const size_t c = spec.find(':'); c != std::string::npos) {
        kind = spec.substr(0, c);
        k = parse_double(spec.substr(c + 1), "seed '" + spec + "'");
    }
    if (kind == "exp") return exp_seed(k);
    if (kind == "cosh") return cosh_seed(k);
    if (kind == "sinh") return sinh_seed(k);
    if (kind == "cos") return cos_seed(k);
    if (kind == "sin") return sin_seed(k);
    throw std::invalid_argument("seed '" + spec +
                                "': unknown kind (use exp|cosh|sinh|cos|sin[:k])");
}

GridSpec make_grid_spec(const Range& xr, const Range& tr) {
    return GridSpec{xr.start, xr.stop, tr.start, tr.stop,
                    static_cast<std::uint32_t>(xr.count),
                    static_cast<std::uint32_t>(tr.count)};
}

void write_grid(const FieldGrid& grid, const std::string& format, double gamma,
                const std::string& path, std::ostream& fallback) {
    const auto emit = [&](std::ostream& os) {
        if (format == "csv")
            write_csv(grid, os);
        else if (format == "bin")
            write_binary(grid, os);
        else if (format == "pgm")
            write_pgm(grid, gamma, os);
        else
            throw std::invalid_argument("format must be csv, bin or pgm, got '" + format + "'");
    };
    if (path.empty()) {
        emit(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file '" + path + "'");
    emit(f);
    if (!f)
        throw std::runtime_error("failed writing output file '" + path + "'");
}

struct FieldArgs {
    std::vector<std::string> lambdas;
    std::vector<double> phi1s, phi2s;
    std::string x_range = "-5:5:201";
    std::string t_range = "-2:2:81";
    std::string output;
    std::string format = "csv";
    double gamma = 0.5;
};

void add_field_options(CLI::App* cmd, FieldArgs& a, bool with_format) {
    cmd->add_option("--lambda", a.lambdas,
                    "discrete eigenvalue as 'a+bi' (repeat for multisolitons)")
        ->required();
    cmd->add_option("--phi1", a.phi1s, "phase constant per eigenvalue (default 0)");
    cmd->add_option("--phi2", a.phi2s, "offset constant per eigenvalue (default 0)");
    cmd->add_option("--x", a.x_range, "x lattice as start:stop:count");
    cmd->add_option("--t", a.t_range, "t lattice as start:stop:count");
    cmd->add_option("-o,--output", a.output, "output file (stdout when omitted)");
    if (with_format) {
        cmd->add_option("--format", a.format, "csv | bin | pgm");
        cmd->add_option("--gamma", a.gamma, "PGM gamma correction");
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"multisoliton fields of the focusing NLS equation via "
                 "Darboux/Crum dressing, plus independent numerical checks"};
    app.require_subcommand(1);

    FieldArgs soliton_args, closed_args, render_args, reconcile_args, verify_args;

    auto* soliton = app.add_subcommand(
        "soliton", "sample the N-soliton determinant field r[N] on a grid");
    add_field_options(soliton, soliton_args, true);

    auto* closed = app.add_subcommand(
        "closed", "sample the explicit 1- or 2-soliton closed form on a grid");
    add_field_options(closed, closed_args, true);

    auto* render = app.add_subcommand("render", "write a PGM heatmap of |r[N]|");
    add_field_options(render, render_args, false);
    render->add_option("--gamma", render_args.gamma, "PGM gamma correction");

    auto* reconcile = app.add_subcommand(
        "reconcile", "closed form vs determinant field: JSON difference report");
    add_field_options(reconcile, reconcile_args, false);

    verify_args.x_range = "-6:6:21";
    verify_args.t_range = "-1:1:9";
    auto* verify = app.add_subcommand(
        "verify", "PDE residual, convergence ratio, mass drift and peaks as JSON");
    verify->set_help_flag("--help", "print help"); // frees -h; the step flag is --h
    verify->add_option("--lambda", verify_args.lambdas, "eigenvalue(s) as 'a+bi'")->required();
    verify->add_option("--phi1", verify_args.phi1s, "phase constant per eigenvalue");
    verify->add_option("--phi2", verify_args.phi2s, "offset constant per eigenvalue");
    verify->add_option("--x", verify_args.x_range, "residual window as start:stop:samples");
    verify->add_option("--t", verify_args.t_range, "residual window as start:stop:samples");
    double verify_h = 1e-3;
    verify->add_option("--h", verify_h, "finite-difference step");

    struct SturmArgs {
        std::vector<std::string> seeds;
        std::string target;
        std::string x_range = "-5:5:201";
        double h = 1e-3;
        std::string output;
    } sturm_args;
    auto* sturm = app.add_subcommand(
        "sturm", "tabulate the Crum-transformed potential (zero background) as CSV");
    sturm->set_help_flag("--help", "print help");
    sturm->add_option("--seed", sturm_args.seeds, "seed as kind[:k], kind in exp|cosh|sinh|cos|sin")
        ->required();
    sturm->add_option("--target", sturm_args.target,
                      "also tabulate the transformed eigenfunction of this seed");
    sturm->add_option("--x", sturm_args.x_range, "x lattice as start:stop:count");
    sturm->add_option("--h", sturm_args.h, "stencil step for the potential");
    sturm->add_option("-o,--output", sturm_args.output, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (soliton->parsed()) {
            const DressingSystem sys(make_params(soliton_args.lambdas, soliton_args.phi1s,
                                                 soliton_args.phi2s));
            const auto field = [&](double x, double t) { return r_field(sys, x, t); };
            const FieldGrid grid = sample(field, make_grid_spec(parse_range(soliton_args.x_range),
                                                                parse_range(soliton_args.t_range)));
            write_grid(grid, soliton_args.format, soliton_args.gamma, soliton_args.output, out);
            return 0;
        }

        if (closed->parsed()) {
            const auto params = make_params(closed_args.lambdas, closed_args.phi1s,
                                            closed_args.phi2s);
            Field2D field;
            if (params.size() == 1)
                field = [&](double x, double t) { return one_soliton(params[0], x, t); };
            else if (params.size() == 2)
                field = [&](double x, double t) {
                    return two_soliton(params[0], params[1], x, t);
                };
            else
                throw std::invalid_argument("closed: explicit forms exist for 1 or 2 "
                                            "eigenvalues only");
            const FieldGrid grid = sample(field, make_grid_spec(parse_range(closed_args.x_range),
                                                                parse_range(closed_args.t_range)));
            write_grid(grid, closed_args.format, closed_args.gamma, closed_args.output, out);
            return 0;
        }

        if (render->parsed()) {
            const DressingSystem sys(make_params(render_args.lambdas, render_args.phi1s,
                                                 render_args.phi2s));
            const auto field = [&](double x, double t) { return r_field(sys, x, t); };
            const FieldGrid grid = sample(field, make_grid_spec(parse_range(render_args.x_range),
                                                                parse_range(render_args.t_range)));
            write_grid(grid, "pgm", render_args.gamma, render_args.output, out);
            return 0;
        }

        if (reconcile->parsed()) {
            const auto params = make_params(reconcile_args.lambdas, reconcile_args.phi1s,
                                            reconcile_args.phi2s);
            if (params.size() != 1 && params.size() != 2)
                throw std::invalid_argument("reconcile: closed forms exist for 1 or 2 "
                                            "eigenvalues only");
            const DressingSystem sys{params};
            const Range xr = parse_range(reconcile_args.x_range);
            const Range tr = parse_range(reconcile_args.t_range);

            double max_abs = 0.0, max_mod = 0.0, max_phase = 0.0;
            long points = 0;
            for (int j = 0; j < tr.count; ++j) {
                const double t = tr.start + (tr.stop - tr.start) * j / (tr.count - 1);
                for (int i = 0; i < xr.count; ++i) {
                    const double x = xr.start + (xr.stop - xr.start) * i / (xr.count - 1);
                    const cplx det_val = r_field(sys, x, t);
                    const cplx closed_val = (params.size() == 1)
                                                ? one_soliton(params[0], x, t)
                                                : two_soliton(params[0], params[1], x, t);
                    max_abs = std::max(max_abs, std::abs(closed_val - det_val));
                    max_mod = std::max(max_mod,
                                       std::abs(std::abs(closed_val) - std::abs(det_val)));
                    if (std::abs(det_val) > 1e-12 && std::abs(closed_val) > 1e-12)
                        max_phase = std::max(max_phase,
                                             std::abs(std::arg(closed_val / det_val)));
                    ++points;
                }
            }
            json rep;
            rep["n"] = params.size();
            rep["points"] = points;
            rep["max_abs_diff"] = max_abs;
            rep["max_mod_diff"] = max_mod;
            rep["max_phase_diff"] = max_phase;
            out << rep.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            const DressingSystem sys(make_params(verify_args.lambdas, verify_args.phi1s,
                                                 verify_args.phi2s));
            const auto field = [&](double x, double t) { return r_field(sys, x, t); };
            const Range xr = parse_range(verify_args.x_range);
            const Range tr = parse_range(verify_args.t_range);
            const Window win{xr.start, xr.stop, tr.start, tr.stop, xr.count, tr.count};

            const ResidualReport rh = nls_residual(field, win, verify_h);
            const ResidualReport rh2 = nls_residual(field, win, verify_h / 2);

            double m_min = 0.0, m_max = 0.0;
            for (int k = 0; k < 5; ++k) {
                const double t = tr.start + (tr.stop - tr.start) * k / 4.0;
                const double m = mass(field, t, -20.0, 20.0, 2e-3);
                if (k == 0)
                    m_min = m_max = m;
                m_min = std::min(m_min, m);
                m_max = std::max(m_max, m);
            }

            const double t_mid = 0.5 * (tr.start + tr.stop);
            const PeakReport peaks = peak_scan(field, t_mid, xr.start, xr.stop, 1e-3);

            json rep;
            rep["residual_sup"] = rh.sup_norm;
            rep["residual_l2"] = rh.l2_norm;
            rep["h"] = verify_h;
            rep["ratio_h_h2"] = (rh2.sup_norm > 0.0) ? rh.sup_norm / rh2.sup_norm : 0.0;
            rep["mass_drift_rel"] = (m_max > 0.0) ? (m_max - m_min) / m_max : 0.0;
            rep["peaks"] = json::array();
            for (const Peak& p : peaks.peaks)
                rep["peaks"].push_back(json{{"x", p.x}, {"height", p.height}});
            out << rep.dump(2) << "\n";
            return 0;
        }

        if (sturm->parsed()) {
            std::vector<SturmSeed> seeds;
            for (const auto& s : sturm_args.seeds)
                seeds.push_back(make_seed(s));
            const bool with_target = !sturm_args.target.empty();
            SturmSeed target;
            if (with_target)
                target = make_seed(sturm_args.target);
            const Range xr = parse_range(sturm_args.x_range);

            const auto emit = [&](std::ostream& os) {
                char buf[256];
                os << (with_target ? "x,u,psi\n" : "x,u\n");
                const auto u0 = [](double) { return 0.0; };
                for (int i = 0; i < xr.count; ++i) {
                    const double x = xr.start + (xr.stop - xr.start) * i / (xr.count - 1);
                    const double u = crum_potential(seeds, u0, x, sturm_args.h);
                    if (with_target) {
                        std::vector<double> tv;
                        for (size_t p = 0; p <= seeds.size(); ++p)
                            tv.push_back(seed_deriv(target, static_cast<int>(p), x));
                        const double psi = crum_psi(seeds, tv, x);
                        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, u, psi);
                    } else {
                        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, u);
                    }
                    os << buf;
                }
            };
            if (sturm_args.output.empty()) {
                emit(out);
            } else {
                std::ofstream f(sturm_args.output, std::ios::binary);
                if (!f)
                    throw std::runtime_error("cannot open output file '" +
                                             sturm_args.output + "'");
                emit(f);
            }
            return 0;
        }

        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace darboux::cli
