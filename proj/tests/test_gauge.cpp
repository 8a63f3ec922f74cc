#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hqm/gauge.hpp"
#include "hqm/rng.hpp"

using hqm::GaugePotential;
using hqm::GridSpec;
using hqm::IsospinParticle;
using hqm::Vec3;

namespace {
GridSpec point_grid(const Vec3& x0, double h) {
    GridSpec g;
    g.n = {3, 3, 3};
    g.h = h;
    g.origin = {x0[0] - h, x0[1] - h, x0[2] - h};
    return g;
}
}  // namespace

TEST_CASE("internal structure tables") {
    const auto f1 = hqm::internal_structure(1);
    CHECK(f1.f(1, 1, 1) == 0.0);

    const auto f3 = hqm::internal_structure(3);
    CHECK(f3.f(1, 2, 3) == 1.0);
    CHECK(f3.f(2, 1, 3) == -1.0);
    CHECK(f3.f(1, 1, 2) == 0.0);

    const auto f7 = hqm::internal_structure(7);
    CHECK(f7.f(1, 2, 3) == 1.0);
    CHECK(f7.f(2, 5, 7) == 1.0);
    CHECK(f7.f(3, 4, 5) == -1.0);
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b)
            for (int c = 1; c <= 7; ++c)
                CHECK(f7.f(a, b, c) == hqm::structure_constant(a, b, c));

    CHECK_THROWS_AS(hqm::internal_structure(5), std::invalid_argument);
}

TEST_CASE("field map on closed form presets") {
    const Vec3 x{0.7, -0.3, 0.4};
    const auto zf = hqm::fields_from_potential(GaugePotential::zero(3, 0.5), x, 1.2);
    for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 3; ++a) {
            CHECK(zf.E[j][a] == 0.0);
            CHECK(zf.B[j][a] == 0.0);
        }

    const auto ub = hqm::fields_from_potential(GaugePotential::uniform_b(1.2, 2.5), x, 0.3);
    CHECK(ub.B[2][0] == 2.5);
    CHECK(ub.B[0][0] == 0.0);
    CHECK(ub.B[1][0] == 0.0);
    for (int j = 0; j < 3; ++j) CHECK(ub.E[j][0] == 0.0);
}

TEST_CASE("constant potential commutator field") {
    const double g = 0.8, c1 = 0.6, c2 = -0.7;
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    c[0] = {c1, 0.0, 0.0};
    c[1] = {0.0, c2, 0.0};
    const auto fp = hqm::fields_from_potential(GaugePotential::constant(3, g, c), {0, 0, 0}, 0.0);
    CHECK(fp.B[2][2] == doctest::Approx(g * c1 * c2).epsilon(1e-12));
    CHECK(fp.B[0][0] == 0.0);
    CHECK(fp.B[1][1] == 0.0);
}

TEST_CASE("time slope produces a constant electric field") {
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    std::vector<std::array<double, 3>> cdot(3, {0.0, 0.0, 0.0});
    cdot[1] = {0.5, 0.0, 0.0};
    const auto pot = GaugePotential::constant(3, 0.7, c, cdot);
    const auto fp = hqm::fields_from_potential(pot, {0.1, 0.2, 0.3}, 0.9);
    CHECK(fp.E[0][1] == -0.5);
    CHECK(fp.E[1][1] == 0.0);
}

TEST_CASE("wong precession pin") {
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    c[0] = {0.45, 0.0, 0.0};
    const auto pot = GaugePotential::constant(3, 1.1, c);
    IsospinParticle p;
    p.g = 1.1;
    p.v = {0.8, 0.0, 0.0};
    p.I = {0.0, 0.0, 1.7};
    const auto d = hqm::isospin_rhs(p, pot, 0.0);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == doctest::Approx(1.1 * 0.45 * 0.8 * 1.7).epsilon(1e-12));
    CHECK(d[2] == 0.0);
}

TEST_CASE("free particle stays on a straight line") {
    IsospinParticle p;
    p.m = 2.0;
    p.x = {1.0, 2.0, 3.0};
    p.v = {0.5, -0.25, 0.125};
    p.I = {1.0};
    const auto traj = hqm::integrate(p, GaugePotential::zero(1, 1.0), 0.125, 64);
    CHECK(traj.samples.size() == 65);
    for (const auto& s : traj.samples)
        for (int j = 0; j < 3; ++j) {
            CHECK(s.x[j] == p.x[j] + p.v[j] * s.t);
            CHECK(s.v[j] == p.v[j]);
        }
}

TEST_CASE("cyclotron period and energy") {
    IsospinParticle p;
    p.m = 1.3;
    p.g = 0.7;
    p.v = {0.9, 0.0, 0.0};
    p.I = {1.0};
    const auto pot = GaugePotential::uniform_b(0.7, 2.1);
    const double T = 2.0 * std::numbers::pi * p.m / (p.g * 2.1);
    const auto traj = hqm::integrate(p, pot, T / 1000.0, 1000);
    const auto& last = traj.samples.back();
    CHECK(std::abs(last.v[0] - 0.9) < 1e-6);
    CHECK(std::abs(last.v[1]) < 1e-6);
    for (const auto& s : traj.samples) {
        const double k = s.v[0] * s.v[0] + s.v[1] * s.v[1] + s.v[2] * s.v[2];
        CHECK(std::abs(k / (0.9 * 0.9) - 1.0) < 1e-8);
    }
}

TEST_CASE("isospin norm is conserved") {
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    c[0] = {0.8, 0.0, 0.0};
    c[1] = {0.0, -0.5, 0.0};
    c[2] = {0.0, 0.0, 0.3};
    IsospinParticle p;
    p.g = 0.4;
    p.v = {0.6, -0.2, 0.3};
    p.I = {0.6, 0.64, -0.48};
    const auto traj = hqm::integrate(p, GaugePotential::constant(3, 0.4, c), 1e-3, 2000);
    const double n0 = std::sqrt(0.6 * 0.6 + 0.64 * 0.64 + 0.48 * 0.48);
    for (const auto& s : traj.samples) {
        const double n = std::sqrt(s.I[0] * s.I[0] + s.I[1] * s.I[1] + s.I[2] * s.I[2]);
        CHECK(std::abs(n - n0) < 1e-9);
    }
}

TEST_CASE("plane wave residuals converge at second order") {
    const auto pot = GaugePotential::plane_wave(1.0, 1.0, 1.0, 1.0, 1, 3);
    const Vec3 x0{0.3, 0.1, 0.2};
    const auto r1 = hqm::field_equation_residuals(pot, point_grid(x0, 0.2), 0.25);
    const auto r2 = hqm::field_equation_residuals(pot, point_grid(x0, 0.1), 0.25);
    CHECK(r1.gauss_max == 0.0);
    CHECK(r2.gauss_max == 0.0);
    CHECK(r1.faraday_max / r2.faraday_max == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("continuity residual converges at second order") {
    const auto pot = GaugePotential::plane_wave(1.0, 1.0, 1.3, 1.0, 1, 1);
    const Vec3 x0{0.3, 0.1, 0.2};
    const auto c1 = hqm::continuity_residual(pot, point_grid(x0, 0.2), 0.25);
    const auto c2 = hqm::continuity_residual(pot, point_grid(x0, 0.1), 0.25);
    CHECK(c1.exact_sources_used);
    CHECK(c1.max_abs / c2.max_abs == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("constant field sources") {
    const double g = 0.7;
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    std::vector<std::array<double, 3>> cdot(3, {0.0, 0.0, 0.0});
    c[0] = {0.8, 0.0, 0.0};
    cdot[1] = {0.5, 0.0, 0.0};
    const auto pot = GaugePotential::constant(3, g, c, cdot);
    const auto rho = hqm::charge_density_point(pot, {0.2, -0.1, 0.3}, 0.0, 0.1);
    CHECK(rho[0] == 0.0);
    CHECK(rho[1] == 0.0);
    CHECK(rho[2] == doctest::Approx(g * 0.8 * (-0.5)).epsilon(1e-12));
}

TEST_CASE("abelian densities divide by four pi") {
    GridSpec grid;
    grid.n = {4, 4, 4};
    grid.h = 0.2;
    grid.origin = {-0.3, -0.3, -0.3};
    const auto ab = hqm::source_densities(GaugePotential::zero(1, 1.0), grid, 0.0);
    CHECK(ab.four_pi_applied);
    const auto na = hqm::source_densities(GaugePotential::zero(3, 1.0), grid, 0.0);
    CHECK_FALSE(na.four_pi_applied);
}

TEST_CASE("diagonal constant potential has zero gauss residual") {
    std::vector<std::array<double, 3>> c(3, {0.0, 0.0, 0.0});
    c[0] = {0.8, 0.0, 0.0};
    c[1] = {0.0, -0.5, 0.0};
    c[2] = {0.0, 0.0, 0.3};
    GridSpec grid;
    grid.n = {3, 3, 3};
    grid.h = 0.25;
    grid.origin = {0.0, 0.0, 0.0};
    const auto r = hqm::field_equation_residuals(GaugePotential::constant(3, 0.4, c), grid, 0.0);
    CHECK(r.gauss_max == 0.0);
}

TEST_CASE("grid preset interpolates node values") {
    const std::array<int, 3> n{3, 3, 3};
    const double h = 0.5;
    const Vec3 origin{0.0, 0.0, 0.0};
    std::vector<std::vector<double>> values(3, std::vector<double>(27, 0.0));
    for (int ix = 0; ix < 3; ++ix)
        for (int iy = 0; iy < 3; ++iy)
            for (int iz = 0; iz < 3; ++iz)
                values[0][(ix * 3 + iy) * 3 + iz] = ix * h + 2.0 * (iy * h);
    const auto pot = GaugePotential::grid(1, 1.0, n, h, origin, values, 1.0, 0.0);
    CHECK(pot.A(1, 1, {0.5, 0.5, 0.5}, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(pot.A(1, 1, {0.25, 0.0, 0.0}, 0.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pot.A(2, 1, {0.5, 0.5, 0.5}, 0.0) == 0.0);
}

TEST_CASE("algebra obstruction reports") {
    const auto r3 = hqm::isospin_algebra_check(3);
    CHECK_FALSE(r3.abelian);
    CHECK(r3.closure_max_dev == 0.0);
    CHECK(r3.jacobiator_max == 0.0);

    const auto r7 = hqm::isospin_algebra_check(7);
    CHECK(r7.jacobiator_1245 == -3.0);
    CHECK(r7.jacobiator_max == 3.0);

    const auto r1 = hqm::isospin_algebra_check(1);
    CHECK(r1.abelian);
}

TEST_CASE("integration input validation") {
    IsospinParticle p;
    p.I = {1.0, 0.0};
    CHECK_THROWS_AS(hqm::integrate(p, GaugePotential::zero(1, 1.0), 0.1, 10),
                    std::invalid_argument);
    IsospinParticle q;
    CHECK_THROWS_AS(hqm::integrate(q, GaugePotential::zero(1, 1.0), -0.1, 10),
                    std::invalid_argument);
    GridSpec tiny;
    tiny.n = {2, 3, 3};
    CHECK_THROWS_AS(hqm::field_equation_residuals(GaugePotential::zero(1, 1.0), tiny, 0.0),
                    std::invalid_argument);
}
