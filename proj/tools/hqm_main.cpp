#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hqm/fock.hpp"
#include "hqm/gauge.hpp"
#include "hqm/io.hpp"
#include "hqm/scalar_products.hpp"
#include "hqm/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out.push_back(c);
        if (c == '"') out.push_back('"');
    }
    out.push_back('"');
    return out;
}

std::string report_text(const std::vector<hqm::CheckResult>& rs) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name
           << "  max_dev=" << hqm::fmt17(r.max_dev) << "  tol=" << hqm::fmt17(r.tol);
        if (!r.note.empty()) os << "  # " << r.note;
        os << "\n";
    }
    const auto failed = std::count_if(rs.begin(), rs.end(),
                                      [](const hqm::CheckResult& r) { return !r.pass; });
    os << (failed == 0 ? "OK" : "FAILED") << " (" << rs.size() - failed << "/" << rs.size()
       << " checks passed)\n";
    return os.str();
}

std::string report_json(const std::string& suite, std::uint64_t seed,
                        const std::vector<hqm::CheckResult>& rs) {
    std::ostringstream os;
    os << "{\n  \"suite\": \"" << suite << "\",\n  \"seed\": " << seed << ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto& r = rs[i];
        os << "    {\"name\": \"" << json_escape(r.name)
           << "\", \"max_dev\": " << hqm::fmt17(r.max_dev) << ", \"tol\": " << hqm::fmt17(r.tol)
           << ", \"pass\": " << (r.pass ? "true" : "false") << ", \"note\": \""
           << json_escape(r.note) << "\"}" << (i + 1 < rs.size() ? "," : "") << "\n";
    }
    const bool all = std::all_of(rs.begin(), rs.end(),
                                 [](const hqm::CheckResult& r) { return r.pass; });
    os << "  ],\n  \"all_pass\": " << (all ? "true" : "false") << "\n}\n";
    return os.str();
}

std::string report_csv(const std::vector<hqm::CheckResult>& rs) {
    std::ostringstream os;
    os << "name,max_dev,tol,pass,note\n";
    for (const auto& r : rs)
        os << csv_quote(r.name) << "," << hqm::fmt17(r.max_dev) << "," << hqm::fmt17(r.tol)
           << "," << (r.pass ? "true" : "false") << "," << csv_quote(r.note) << "\n";
    return os.str();
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double tol_floor,
               const std::string& format, const std::string& out_path) {
    std::vector<hqm::CheckResult> rs;
    if (suite == "algebra")
        rs = hqm::verify_algebra(seed);
    else if (suite == "scalar")
        rs = hqm::verify_scalar(seed);
    else if (suite == "fock")
        rs = hqm::verify_fock(seed);
    else if (suite == "gauge")
        rs = hqm::verify_gauge(seed);
    else if (suite == "all")
        rs = hqm::verify_all(seed);
    else {
        std::cerr << "unknown suite '" << suite
                  << "' (expected algebra, scalar, fock, gauge or all)\n";
        return kExitUsage;
    }
    if (tol_floor > 0.0)
        for (auto& r : rs) {
            r.tol = std::max(r.tol, tol_floor);
            r.pass = r.max_dev <= r.tol;
        }

    std::string body;
    if (format == "json")
        body = report_json(suite, seed, rs);
    else if (format == "csv")
        body = report_csv(rs);
    else
        body = report_text(rs);
    std::cout << body;
    if (!out_path.empty()) hqm::write_file(out_path, body);

    const bool all = std::all_of(rs.begin(), rs.end(),
                                 [](const hqm::CheckResult& r) { return r.pass; });
    return all ? 0 : kExitFail;
}

int cmd_scalar(const std::string& product, const std::string& file_a,
               const std::string& file_b) {
    const hqm::StateVector f = hqm::parse_state_vector_json(hqm::read_file(file_a));
    const hqm::StateVector g = hqm::parse_state_vector_json(hqm::read_file(file_b));
    hqm::Element value(1);
    if (product == "real") {
        value[0] = hqm::sp_real(f, g);
    } else if (product == "complex") {
        value = hqm::sp_complex(f, g);
    } else if (product == "quaternion") {
        value = hqm::sp_quaternion(f, g);
    } else if (product == "quaternion-of-octonions") {
        value = hqm::sp_quaternion_of_octonions(f, g);
    } else {
        value = hqm::sp_octonion(f, g);
    }
    std::cout << hqm::element_json(value) << "\n";
    return 0;
}

int cmd_fock(int dim, const std::string& start, const std::vector<std::string>& ops) {
    if (dim != 4 && dim != 8) {
        std::cerr << "mode dimension must be 4 or 8\n";
        return kExitUsage;
    }
    hqm::FockColumn col;
    try {
        col = hqm::occupation_state(dim, start).blocks;
    } catch (const std::exception& e) {
        std::cerr << "unknown start state '" << start << "': " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& op : ops) {
        hqm::LadderKind kind;
        std::string digits;
        if (op.rfind("adag", 0) == 0) {
            kind = hqm::LadderKind::creation;
            digits = op.substr(4);
        } else if (op.rfind("a", 0) == 0) {
            kind = hqm::LadderKind::annihilation;
            digits = op.substr(1);
        } else {
            std::cerr << "bad operator '" << op << "' (expected a<i> or adag<i>)\n";
            return kExitUsage;
        }
        int index = 0;
        try {
            std::size_t used = 0;
            index = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            std::cerr << "bad operator '" << op << "' (expected a<i> or adag<i>)\n";
            return kExitUsage;
        }
        if (index < 1 || index >= dim) {
            std::cerr << "operator index " << index << " out of range 1.." << dim - 1 << "\n";
            return kExitUsage;
        }
        col = hqm::apply(hqm::ladder(dim, kind, index), col);
    }
    std::cout << hqm::column_json(col) << "\n";
    return 0;
}

bool parse_numbers(const std::string& text, std::vector<double>& out) {
    out.clear();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

bool finite_sample(const hqm::TrajectorySample& s) {
    for (int j = 0; j < 3; ++j)
        if (!std::isfinite(s.x[j]) || !std::isfinite(s.v[j])) return false;
    for (double c : s.I)
        if (!std::isfinite(c)) return false;
    return true;
}

int cmd_simulate(const std::string& config_path, double dt, int steps,
                 const std::string& out_path, double m, double g_particle,
                 const std::string& x0, const std::string& v0, const std::string& i0) {
    const hqm::GaugePotential pot = hqm::parse_potential_config(
        hqm::read_file(config_path),
        std::filesystem::path(config_path).parent_path().string());

    hqm::IsospinParticle p;
    p.m = m;
    p.g = g_particle;
    std::vector<double> xs, vs, is;
    if (!parse_numbers(x0, xs) || xs.size() != 3 || !parse_numbers(v0, vs) || vs.size() != 3) {
        std::cerr << "positions and velocities need three comma-separated components\n";
        return kExitUsage;
    }
    for (int j = 0; j < 3; ++j) {
        p.x[j] = xs[j];
        p.v[j] = vs[j];
    }
    if (i0.empty()) {
        p.I.assign(pot.a_dim(), 0.0);
        p.I[0] = 1.0;
    } else {
        if (!parse_numbers(i0, is)) {
            std::cerr << "isospin needs comma-separated components\n";
            return kExitUsage;
        }
        p.I = is;
    }

    const hqm::Trajectory traj = hqm::integrate(p, pot, dt, steps);

    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open output file: " + out_path);
    csv << hqm::trajectory_csv_header(pot.a_dim()) << "\n";
    for (const auto& s : traj.samples) {
        if (!finite_sample(s)) {
            csv.flush();
            std::cerr << "non-finite state at t=" << hqm::fmt17(s.t)
                      << "; partial file flushed\n";
            return kExitFail;
        }
        csv << hqm::trajectory_csv_row(s) << "\n";
    }
    csv.flush();
    std::cout << hqm::simulate_summary_json(traj, dt, pot.a_dim()) << "\n";
    return 0;
}

int cmd_fields(const std::string& config_path, const std::string& grid_text, double t,
               double dt) {
    const hqm::GaugePotential pot = hqm::parse_potential_config(
        hqm::read_file(config_path),
        std::filesystem::path(config_path).parent_path().string());

    std::vector<double> gs;
    if (!parse_numbers(grid_text, gs) || gs.size() != 7) {
        std::cerr << "grid needs nx,ny,nz,h,ox,oy,oz\n";
        return kExitUsage;
    }
    hqm::GridSpec grid;
    for (int d = 0; d < 3; ++d) {
        grid.n[d] = static_cast<int>(gs[d]);
        grid.origin[d] = gs[4 + d];
    }
    grid.h = gs[3];

    const auto fr = hqm::field_equation_residuals(pot, grid, t);
    const auto sr = hqm::source_densities(pot, grid, t);
    const auto cr = hqm::continuity_residual(pot, grid, t, dt);
    std::cout << hqm::field_report_json(fr, sr, cr, grid, t) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercomplex state algebra and classical gauge dynamics toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite;
    std::uint64_t seed = 12345;
    double tol_floor = 0.0;
    std::string format = "text";
    std::string out_path;
    verify->add_option("suite", suite, "algebra, scalar, fock, gauge or all")->required();
    verify->add_option("--seed", seed, "seed for the suite generator");
    verify->add_option("--tol", tol_floor, "raise per-check tolerances to at least this value");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "also write the report to a file");

    auto* scalar = app.add_subcommand("scalar", "evaluate a scalar product of two states");
    std::string product, file_a, file_b;
    scalar->add_option("product", product, "which product to apply")
        ->required()
        ->check(CLI::IsMember(
            {"real", "complex", "quaternion", "quaternion-of-octonions", "octonion"}));
    scalar->add_option("fileA", file_a, "left state JSON file")->required();
    scalar->add_option("fileB", file_b, "right state JSON file")->required();

    auto* fock = app.add_subcommand("fock", "apply ladder operators to an occupation state");
    int mode_dim = 4;
    std::string start;
    std::vector<std::string> ops;
    fock->add_option("dim", mode_dim, "mode dimension, 4 or 8")->required();
    fock->add_option("start", start, "start state label, e.g. vac1 or occ1:2")->required();
    fock->add_option("ops", ops, "operators a<i> / adag<i>, applied left to right");

    auto* simulate = app.add_subcommand("simulate", "integrate a charged particle trajectory");
    std::string sim_config, sim_out;
    double sim_dt = 1e-3;
    int sim_steps = 1000;
    double m = 1.0, g_particle = 1.0;
    std::string x0 = "0,0,0", v0 = "0,0,0", i0;
    simulate->add_option("--config", sim_config, "potential config JSON")->required();
    simulate->add_option("--dt", sim_dt, "time step")->required();
    simulate->add_option("--steps", sim_steps, "number of steps")->required();
    simulate->add_option("--out", sim_out, "trajectory CSV path")->required();
    simulate->add_option("--m", m, "particle mass");
    simulate->add_option("--g", g_particle, "coupling constant");
    simulate->add_option("--x", x0, "initial position x1,x2,x3");
    simulate->add_option("--v", v0, "initial velocity v1,v2,v3");
    simulate->add_option("--I", i0, "initial isospin components (default: first axis)");

    auto* fields = app.add_subcommand("fields", "field equation residual reports on a grid");
    std::string f_config, f_grid = "5,5,5,0.1,0,0,0";
    double f_t = 0.0, f_dt = 0.0;
    fields->add_option("--config", f_config, "potential config JSON")->required();
    fields->add_option("--grid", f_grid, "grid as nx,ny,nz,h,ox,oy,oz");
    fields->add_option("--t", f_t, "evaluation time");
    fields->add_option("--dt", f_dt, "time half-step for the continuity residual (0: h/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, seed, tol_floor, format, out_path);
        if (*scalar) return cmd_scalar(product, file_a, file_b);
        if (*fock) return cmd_fock(mode_dim, start, ops);
        if (*simulate)
            return cmd_simulate(sim_config, sim_dt, sim_steps, sim_out, m, g_particle, x0, v0,
                                i0);
        if (*fields) return cmd_fields(f_config, f_grid, f_t, f_dt);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
