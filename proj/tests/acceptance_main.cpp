// Acceptance gate: thirteen numbered criteria, one verdict line each.
// Each criterion aggregates library checks; the printed deviation and
// tolerance belong to the tightest constituent.
#include <cstdio>
#include <string>
#include <vector>

#include "hqm/rng.hpp"
#include "hqm/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<hqm::CheckResult> parts;

    bool pass() const {
        for (const auto& p : parts)
            if (!p.pass) return false;
        return true;
    }
    const hqm::CheckResult& binding() const {
        const hqm::CheckResult* worst = &parts.front();
        for (const auto& p : parts)
            if (p.max_dev - p.tol > worst->max_dev - worst->tol) worst = &p;
        return *worst;
    }
};

}  // namespace

int main() {
    namespace ck = hqm::checks;
    std::vector<Criterion> cs;

    {
        Criterion c{1, "multiplication table fidelity", {}};
        c.parts.push_back(ck::structure_table());
        c.parts.push_back(ck::table_products());
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1001);
        Criterion c{2, "norm composition property", {}};
        c.parts.push_back(ck::norm_composition(rng, 10000));
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1002);
        Criterion c{3, "moufang identity and nonassociativity witness", {}};
        c.parts.push_back(ck::moufang_identity(rng, 10000));
        c.parts.push_back(ck::nonassociativity_witness());
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1003);
        Criterion c{4, "real part recovery by unit averaging", {}};
        c.parts.push_back(ck::real_part_recovery_quaternion(rng, 1000));
        c.parts.push_back(ck::real_part_recovery_octonion(rng, 1000));
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1004);
        Criterion c{5, "unitary invariance of the complex product", {}};
        c.parts.push_back(ck::unitary_invariance(rng, 1000));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{6, "projector algebra and displayed coefficients", {}};
        c.parts.push_back(ck::projector_algebra());
        c.parts.push_back(ck::projector_coefficients());
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1005);
        Criterion c{7, "many-body factorization and kronecker laws", {}};
        c.parts.push_back(ck::product_factorization(rng, 1000));
        c.parts.push_back(ck::kronecker_laws(rng, 200));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{8, "ladder operator tables and anticommutators", {}};
        c.parts.push_back(ck::ladder_action_table(4));
        c.parts.push_back(ck::ladder_action_table(8));
        c.parts.push_back(ck::sector_transitions());
        c.parts.push_back(ck::anticommutator_identity());
        cs.push_back(std::move(c));
    }
    {
        hqm::Rng rng(1006);
        Criterion c{9, "relative phase relocation across slots", {}};
        c.parts.push_back(ck::phase_relocation_property(rng, 1000));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{10, "cyclotron period and energy drift", {}};
        c.parts.push_back(ck::cyclotron_period());
        c.parts.push_back(ck::kinetic_energy_drift());
        cs.push_back(std::move(c));
    }
    {
        Criterion c{11, "isospin conservation and integrator order", {}};
        c.parts.push_back(ck::isospin_norm_conservation(3));
        c.parts.push_back(ck::isospin_norm_conservation(7));
        c.parts.push_back(ck::rk4_convergence_order());
        cs.push_back(std::move(c));
    }
    {
        Criterion c{12, "field equation residual convergence", {}};
        c.parts.push_back(ck::residual_convergence());
        c.parts.push_back(ck::continuity_convergence());
        cs.push_back(std::move(c));
    }
    {
        Criterion c{13, "algebraic obstruction report", {}};
        c.parts.push_back(ck::adjoint_closure());
        c.parts.push_back(ck::jacobiator_values());
        cs.push_back(std::move(c));
    }

    int failed = 0;
    for (const auto& c : cs) {
        const auto& b = c.binding();
        std::printf("%s criterion %d: %s (max dev %.3g, tol %.3g)\n",
                    c.pass() ? "PASS" : "FAIL", c.number, c.title.c_str(), b.max_dev, b.tol);
        if (!c.pass()) ++failed;
    }
    std::printf("%d/13 criteria passed\n", 13 - failed);
    return failed == 0 ? 0 : 1;
}
