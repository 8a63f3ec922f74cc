#include "hqm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hqm {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("invalid JSON");
    return j;
}

double number_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::runtime_error(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

int int_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::runtime_error(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw std::runtime_error(std::string("field '") + key + "' must be a number");
    return j.at(key).get<double>();
}

std::vector<double> number_list(const json& j, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            throw std::runtime_error(std::string(what) + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Element element_from_coeffs(const std::vector<double>& coeffs, int dim) {
    if (!valid_dim(dim)) throw std::runtime_error("dim must be one of 1, 2, 4, 8");
    if (static_cast<int>(coeffs.size()) != dim)
        throw std::runtime_error("coefficient count does not match dim");
    Element e(dim);
    for (int i = 0; i < dim; ++i) e[i] = coeffs[i];
    return e;
}

void append_list(std::string& out, const double* v, int count) {
    out += '[';
    for (int i = 0; i < count; ++i) {
        if (i) out += ", ";
        out += fmt17(v[i]);
    }
    out += ']';
}

}  // namespace

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // canonical zero, so -0.0 never leaks into reports
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string element_json(const Element& e) {
    std::string out = "{\"dim\": " + std::to_string(e.dim()) + ", \"coeffs\": ";
    std::vector<double> c(e.dim());
    for (int i = 0; i < e.dim(); ++i) c[i] = e[i];
    append_list(out, c.data(), e.dim());
    out += '}';
    return out;
}

std::string column_json(const FockColumn& col) {
    const int dim = col[0].dim();
    const int bodies = col[0].bodies();
    std::string out = "{\"dim\": " + std::to_string(dim) +
                      ", \"bodies\": " + std::to_string(bodies) + ", \"blocks\": [";
    for (std::size_t b = 0; b < col.size(); ++b) {
        if (b) out += ", ";
        append_list(out, col[b].coeffs().data(), static_cast<int>(col[b].size()));
    }
    out += "]}";
    return out;
}

std::string trajectory_csv_header(int a_dim) {
    std::string out = "t,x1,x2,x3,v1,v2,v3";
    for (int a = 1; a <= a_dim; ++a) out += ",I" + std::to_string(a);
    return out;
}

std::string trajectory_csv_row(const TrajectorySample& s) {
    std::string out = fmt17(s.t);
    for (double c : s.x) out += "," + fmt17(c);
    for (double c : s.v) out += "," + fmt17(c);
    for (double c : s.I) out += "," + fmt17(c);
    return out;
}

std::string simulate_summary_json(const Trajectory& traj, double dt, int a_dim) {
    const auto& samples = traj.samples;
    if (samples.empty()) throw std::invalid_argument("empty trajectory");
    auto ke = [](const TrajectorySample& s) {
        return s.v[0] * s.v[0] + s.v[1] * s.v[1] + s.v[2] * s.v[2];
    };
    auto inorm = [](const TrajectorySample& s) {
        double n = 0.0;
        for (double c : s.I) n += c * c;
        return std::sqrt(n);
    };
    const double ke0 = ke(samples.front());
    const double i0 = inorm(samples.front());
    double ke_drift = 0.0, i_drift = 0.0;
    for (const auto& s : samples) {
        const double dk = ke0 > 0.0 ? std::abs(ke(s) / ke0 - 1.0) : std::abs(ke(s) - ke0);
        ke_drift = std::max(ke_drift, dk);
        i_drift = std::max(i_drift, std::abs(inorm(s) - i0));
    }
    const auto& fin = samples.back();
    std::string out = "{\"steps\": " + std::to_string(samples.size() - 1) +
                      ", \"dt\": " + fmt17(dt) + ", \"a_dim\": " + std::to_string(a_dim) +
                      ", \"kinetic_energy_rel_drift\": " + fmt17(ke_drift) +
                      ", \"isospin_norm_abs_drift\": " + fmt17(i_drift) +
                      ", \"final\": {\"t\": " + fmt17(fin.t) + ", \"x\": ";
    append_list(out, fin.x.data(), 3);
    out += ", \"v\": ";
    append_list(out, fin.v.data(), 3);
    out += ", \"I\": ";
    append_list(out, fin.I.data(), static_cast<int>(fin.I.size()));
    out += "}}";
    return out;
}

std::string field_report_json(const FieldResidualReport& fr, const SourceDensityReport& sr,
                              const ContinuityReport& cr, const GridSpec& grid, double t) {
    std::string out = "{\"grid\": {\"n\": [" + std::to_string(grid.n[0]) + ", " +
                      std::to_string(grid.n[1]) + ", " + std::to_string(grid.n[2]) +
                      "], \"h\": " + fmt17(grid.h) + ", \"origin\": ";
    append_list(out, grid.origin.data(), 3);
    out += "}, \"t\": " + fmt17(t);
    out += ", \"field_equation_residuals\": {\"gauss_max\": " + fmt17(fr.gauss_max) +
           ", \"gauss_mean\": " + fmt17(fr.gauss_mean) +
           ", \"faraday_max\": " + fmt17(fr.faraday_max) +
           ", \"faraday_mean\": " + fmt17(fr.faraday_mean) +
           ", \"samples\": " + std::to_string(fr.samples) + "}";
    out += ", \"source_densities\": {\"rho_max\": " + fmt17(sr.rho_max) +
           ", \"rho_mean\": " + fmt17(sr.rho_mean) + ", \"j_max\": " + fmt17(sr.j_max) +
           ", \"j_mean\": " + fmt17(sr.j_mean) +
           ", \"four_pi_applied\": " + (sr.four_pi_applied ? "true" : "false") +
           ", \"samples\": " + std::to_string(sr.samples) + "}";
    out += ", \"continuity_residual\": {\"max_abs\": " + fmt17(cr.max_abs) +
           ", \"mean_abs\": " + fmt17(cr.mean_abs) +
           ", \"exact_sources_used\": " + (cr.exact_sources_used ? "true" : "false") +
           ", \"samples\": " + std::to_string(cr.samples) + "}}";
    return out;
}

Element parse_element_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::runtime_error("element JSON must be {\"dim\":d,\"coeffs\":[...]}");
    return element_from_coeffs(number_list(j.at("coeffs"), "coeffs"), int_at(j, "dim"));
}

StateVector parse_state_vector_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("modes") || !j.at("modes").is_array() ||
        j.at("modes").empty())
        throw std::runtime_error("state JSON must be {\"dim\":d,\"modes\":[[...],...]}");
    const int dim = int_at(j, "dim");
    StateVector s;
    s.dim = dim;
    for (const auto& m : j.at("modes"))
        s.modes.push_back(element_from_coeffs(number_list(m, "mode"), dim));
    return s;
}

GaugePotential parse_potential_config(const std::string& text, const std::string& base_dir) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("preset") || !j.at("preset").is_string())
        throw std::runtime_error("potential config must carry a string 'preset'");
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "grid" && j.contains("file")) {
        if (!j.at("file").is_string()) throw std::runtime_error("'file' must be a string");
        std::filesystem::path p(j.at("file").get<std::string>());
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        j = parse_json(read_file(p.string()));
        if (!j.is_object()) throw std::runtime_error("grid file must hold a JSON object");
        preset = j.value("preset", "grid");
        if (preset != "grid") throw std::runtime_error("grid file must describe a grid preset");
    }
    const double g = number_or(j, "g", 1.0);
    try {
        if (preset == "zero") return GaugePotential::zero(j.value("a_dim", 1), g);
        if (preset == "uniform_b") return GaugePotential::uniform_b(g, number_at(j, "b0"));
        if (preset == "plane_wave")
            return GaugePotential::plane_wave(g, number_at(j, "amplitude"), number_at(j, "k"),
                                              number_at(j, "omega"), int_at(j, "axis_prop"),
                                              int_at(j, "axis_pol"));
        if (preset == "constant") {
            const int a_dim = int_at(j, "a_dim");
            if (!j.contains("components") || !j.at("components").is_object())
                throw std::runtime_error("constant preset needs a 'components' object");
            const json& comp = j.at("components");
            auto rows_by_a = [&](const char* key) {
                std::vector<std::array<double, 3>> by_a(a_dim, {0.0, 0.0, 0.0});
                const json& rows = comp.at(key);
                if (!rows.is_array() || rows.size() != 3)
                    throw std::runtime_error("components rows must be [A_1, A_2, A_3]");
                for (int jj = 0; jj < 3; ++jj) {
                    const auto row = number_list(rows.at(jj), "component row");
                    if (static_cast<int>(row.size()) != a_dim)
                        throw std::runtime_error("component row length must equal a_dim");
                    for (int a = 0; a < a_dim; ++a) by_a[a][jj] = row[a];
                }
                return by_a;
            };
            if (!comp.contains("A")) throw std::runtime_error("components needs field 'A'");
            std::vector<std::array<double, 3>> cdot;
            if (comp.contains("Adot")) cdot = rows_by_a("Adot");
            return GaugePotential::constant(a_dim, g, rows_by_a("A"), std::move(cdot));
        }
        if (preset == "grid") {
            const int a_dim = int_at(j, "a_dim");
            if (!j.contains("n") || !j.at("n").is_array() || j.at("n").size() != 3)
                throw std::runtime_error("grid preset needs n = [n1,n2,n3]");
            std::array<int, 3> n{};
            for (int i = 0; i < 3; ++i) {
                if (!j.at("n").at(i).is_number_integer())
                    throw std::runtime_error("grid sizes must be integers");
                n[i] = j.at("n").at(i).get<int>();
            }
            const auto og = number_list(j.at("origin"), "origin");
            if (og.size() != 3) throw std::runtime_error("origin must have three entries");
            if (!j.contains("values") || !j.at("values").is_array())
                throw std::runtime_error("grid preset needs 'values'");
            std::vector<std::vector<double>> values;
            for (const auto& row : j.at("values"))
                values.push_back(number_list(row, "values row"));
            return GaugePotential::grid(a_dim, g, n, number_at(j, "h"),
                                        Vec3{og[0], og[1], og[2]}, std::move(values),
                                        number_or(j, "c0", 1.0), number_or(j, "c1", 0.0));
        }
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
    throw std::runtime_error("unknown preset '" + preset + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace hqm
