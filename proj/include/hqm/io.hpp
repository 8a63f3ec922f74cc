#pragma once

#include <string>

#include "hqm/algebra.hpp"
#include "hqm/fock.hpp"
#include "hqm/gauge.hpp"
#include "hqm/scalar_products.hpp"

namespace hqm {

// All numeric output goes through fmt17 (printf "%.17g") so serialized
// reports are diff-stable and round-trip exactly.
std::string fmt17(double v);

std::string element_json(const Element& e);
std::string column_json(const FockColumn& col);

std::string trajectory_csv_header(int a_dim);
std::string trajectory_csv_row(const TrajectorySample& s);
std::string simulate_summary_json(const Trajectory& traj, double dt, int a_dim);

std::string field_report_json(const FieldResidualReport& fr, const SourceDensityReport& sr,
                              const ContinuityReport& cr, const GridSpec& grid, double t);

// Parsers throw std::runtime_error with a human-readable message on any
// schema violation; callers map that to the usage exit code.
Element parse_element_json(const std::string& text);
StateVector parse_state_vector_json(const std::string& text);

// Potential config. `base_dir` resolves a relative {"preset":"grid","file":..}
// reference against the location of the config file itself.
GaugePotential parse_potential_config(const std::string& text, const std::string& base_dir);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hqm
