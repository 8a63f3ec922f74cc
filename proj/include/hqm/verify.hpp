#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqm/rng.hpp"

namespace hqm {

// One verification line: worst observed deviation against the tolerance the
// check actually ran with. tol == 0 means exact equality was required.
struct CheckResult {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

CheckResult check_line(std::string name, double max_dev, double tol, std::string note = "");

// Granular checks. Randomized ones draw from the caller's generator, so a
// suite runs off a single seeded stream and every failure is reproducible.
namespace checks {

// algebra
CheckResult structure_table();
CheckResult table_products();
CheckResult admissible_dimensions();
CheckResult norm_composition(Rng& rng, int trials);
CheckResult moufang_identity(Rng& rng, int trials);
CheckResult nonassociativity_witness();
CheckResult alternativity(Rng& rng, int trials);
CheckResult conjugation_reversal(Rng& rng, int trials);
CheckResult span_closure(Rng& rng, int trials);
CheckResult pair_split_reconstruction(Rng& rng, int trials);

// scalar products
CheckResult real_product_values();
CheckResult real_part_recovery_quaternion(Rng& rng, int trials);
CheckResult real_part_recovery_octonion(Rng& rng, int trials);
CheckResult complex_projection_values(Rng& rng, int trials);
CheckResult hermitian_symmetry(Rng& rng, int trials);
CheckResult right_phase_linearity(Rng& rng, int trials);
CheckResult product_positivity(Rng& rng, int trials);
CheckResult unitary_invariance(Rng& rng, int trials);
CheckResult bracket_product_values();
CheckResult association_agreement(Rng& rng, int trials);

// fock space
CheckResult projector_algebra();
CheckResult projector_coefficients();
CheckResult kronecker_laws(Rng& rng, int trials);
CheckResult tensor_associativity(Rng& rng, int trials);
CheckResult column_state_values(Rng& rng);
CheckResult superposition_additivity(Rng& rng, int trials);
CheckResult product_factorization(Rng& rng, int trials);
CheckResult ladder_action_table(int mode_dim);
CheckResult sector_transitions();
CheckResult anticommutator_identity();
CheckResult anticommutator_classification();
CheckResult adjoint_pairing();
CheckResult occupation_gram();
CheckResult phase_relocation_property(Rng& rng, int trials);
CheckResult block_linear_operators(Rng& rng, int trials);

// gauge dynamics
CheckResult internal_tables();
CheckResult field_map_values();
CheckResult force_values();
CheckResult precession_orthogonality(Rng& rng, int trials);
CheckResult free_particle();
CheckResult cyclotron_period();
CheckResult kinetic_energy_drift();
CheckResult rk4_convergence_order();
CheckResult isospin_norm_conservation(int a_dim);
CheckResult residual_convergence();
CheckResult continuity_convergence();
CheckResult source_density_values();
CheckResult grid_density_convergence();
CheckResult adjoint_closure();
CheckResult jacobiator_values();

}  // namespace checks

std::vector<CheckResult> verify_algebra(std::uint64_t seed);
std::vector<CheckResult> verify_scalar(std::uint64_t seed);
std::vector<CheckResult> verify_fock(std::uint64_t seed);
std::vector<CheckResult> verify_gauge(std::uint64_t seed);
std::vector<CheckResult> verify_all(std::uint64_t seed);

}  // namespace hqm
