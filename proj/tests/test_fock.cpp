#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "hqm/fock.hpp"
#include "hqm/rng.hpp"
#include "hqm/scalar_products.hpp"

using hqm::CState;
using hqm::Element;
using hqm::FockColumn;
using hqm::LadderKind;
using hqm::Tensor;

namespace {
Element u4(int i) { return Element::unit(4, i); }

FockColumn occ(int mode_dim, const std::string& label) {
    return hqm::occupation_state(mode_dim, label).blocks;
}

std::string occ1(int i) { return "occ1:" + std::to_string(i); }
std::string occ2(int i) { return "occ2:" + std::to_string(i); }

Element complex_value(double re, double im) {
    Element v(2);
    v[0] = re;
    v[1] = im;
    return v;
}
}  // namespace

TEST_CASE("projector relations for one to four bodies") {
    for (int dim : {4, 8})
        for (int n = 1; n <= 4; ++n) {
            const auto zp = hqm::z_projectors(dim, n, 1);
            CHECK(hqm::max_abs_diff(zp.z0 * zp.z0, zp.z0) == 0.0);
            CHECK(hqm::max_abs_diff(zp.z1 * zp.z1, -zp.z0) == 0.0);
            CHECK(hqm::max_abs_diff(zp.z0 * zp.z1, zp.z1) == 0.0);
            CHECK(hqm::max_abs_diff(zp.z1 * zp.z0, zp.z1) == 0.0);
        }
    const auto zp7 = hqm::z_projectors(8, 2, 7);
    CHECK(hqm::max_abs_diff(zp7.z0 * zp7.z0, zp7.z0) == 0.0);
    CHECK(hqm::max_abs_diff(zp7.z1 * zp7.z1, -zp7.z0) == 0.0);
}

TEST_CASE("two body projector coefficients") {
    const auto zp = hqm::z_projectors(4, 2, 1);
    Tensor z0(4, 2), z1(4, 2);
    z0 += Tensor::basis(4, {0, 0});
    z0 -= Tensor::basis(4, {1, 1});
    z0 *= 0.5;
    z1 += Tensor::basis(4, {1, 0});
    z1 += Tensor::basis(4, {0, 1});
    z1 *= 0.5;
    CHECK(hqm::max_abs_diff(zp.z0, z0) == 0.0);
    CHECK(hqm::max_abs_diff(zp.z1, z1) == 0.0);
}

TEST_CASE("column state blocks carry per-bit right factors") {
    const CState s = hqm::build_cstate({u4(0), u4(0)});
    CHECK(s.blocks.size() == 4);
    CHECK(hqm::max_abs_diff(s.blocks[0], Tensor::basis(4, {0, 0}) * 0.5) == 0.0);
    CHECK(hqm::max_abs_diff(s.blocks[1], Tensor::basis(4, {1, 0}) * 0.5) == 0.0);
    CHECK(hqm::max_abs_diff(s.blocks[2], Tensor::basis(4, {0, 1}) * 0.5) == 0.0);
    CHECK(hqm::max_abs_diff(s.blocks[3], Tensor::basis(4, {1, 1}) * 0.5) == 0.0);
}

TEST_CASE("many body product pins") {
    const CState psi = hqm::build_cstate({u4(0), u4(0)});
    CHECK(hqm::max_abs_diff(hqm::sp_multi(psi, psi), complex_value(0.25, 0.0)) == 0.0);
    const CState g2 = hqm::build_cstate({u4(2), u4(0)});
    CHECK(hqm::max_abs_diff(hqm::sp_multi(g2, psi), complex_value(0.0, 0.0)) == 0.0);
}

TEST_CASE("many body product factorizes over modes") {
    hqm::Rng rng(41);
    for (int dim : {2, 4, 8})
        for (int t = 0; t < 100; ++t) {
            const Element f1 = rng.element(dim), f2 = rng.element(dim);
            const Element g1 = rng.element(dim), g2 = rng.element(dim);
            const Element got =
                hqm::sp_multi(hqm::build_cstate({f1, f2}), hqm::build_cstate({g1, g2}));
            const Element c1 = hqm::sp_complex(hqm::StateVector::of({f1}),
                                               hqm::StateVector::of({g1}));
            const Element c2 = hqm::sp_complex(hqm::StateVector::of({f2}),
                                               hqm::StateVector::of({g2}));
            const double re = 0.25 * (c1[0] * c2[0] - c1[1] * c2[1]);
            const double im = 0.25 * (c1[0] * c2[1] + c1[1] * c2[0]);
            CHECK(std::abs(got[0] - re) < 1e-12);
            CHECK(std::abs(got[1] - im) < 1e-12);
        }
}

TEST_CASE("phase relocation between slots") {
    hqm::Rng rng(42);
    for (int dim : {4, 8})
        for (int t = 0; t < 100; ++t)
            CHECK(hqm::phase_relocation_check(rng.element(dim), rng.element(dim),
                                              rng.element(dim), rng.element(dim),
                                              rng.unit_complex(dim)));
}

TEST_CASE("occupation state inventory") {
    CHECK(hqm::occupation_states(4).size() == 4);
    CHECK(hqm::occupation_states(8).size() == 16);
    CHECK_THROWS_AS(hqm::occupation_state(4, "vac2"), std::invalid_argument);
    CHECK_THROWS_AS(hqm::occupation_state(8, "occ3:1"), std::invalid_argument);
}

TEST_CASE("sector two coincides with signed partner states") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(hqm::column_max_abs_diff(occ(8, occ2(i)),
                                       hqm::column_scale(occ(8, occ1(i + 3)), -1.0)) == 0.0);
        CHECK(hqm::column_max_abs_diff(occ(8, occ2(i + 3)), occ(8, occ1(i))) == 0.0);
    }
}

TEST_CASE("annihilation table (mode dim 4)") {
    const FockColumn vac1 = occ(4, "vac1");
    for (int i = 1; i <= 3; ++i) {
        const auto a = hqm::ladder(4, LadderKind::annihilation, i);
        CHECK(hqm::column_is_zero(hqm::apply(a, vac1)));
        for (int j = 1; j <= 3; ++j) {
            const FockColumn got = hqm::apply(a, occ(4, occ1(j)));
            if (i == j)
                CHECK(hqm::column_max_abs_diff(got, vac1) == 0.0);
            else
                CHECK(hqm::column_is_zero(got));
        }
    }
}

TEST_CASE("creation table (mode dim 4)") {
    const FockColumn vac1 = occ(4, "vac1");
    for (int i = 1; i <= 3; ++i) {
        const auto ad = hqm::ladder(4, LadderKind::creation, i);
        CHECK(hqm::column_max_abs_diff(hqm::apply(ad, vac1), occ(4, occ1(i))) == 0.0);
        for (int j = 1; j <= 3; ++j)
            CHECK(hqm::column_is_zero(hqm::apply(ad, occ(4, occ1(j)))));
    }
}

TEST_CASE("annihilation table (mode dim 8)") {
    const FockColumn vac1 = occ(8, "vac1");
    const FockColumn vac2 = occ(8, "vac2");
    for (int i = 1; i <= 7; ++i) {
        const auto a = hqm::ladder(8, LadderKind::annihilation, i);
        CHECK(hqm::column_is_zero(hqm::apply(a, vac1)));
        CHECK(hqm::column_is_zero(hqm::apply(a, vac2)));
        CHECK(hqm::column_max_abs_diff(hqm::apply(a, occ(8, occ1(i))), vac1) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(a, occ(8, occ2(i))), vac2) == 0.0);
    }
}

TEST_CASE("sector transitions on paired modes") {
    const FockColumn vac1 = occ(8, "vac1");
    const FockColumn vac2 = occ(8, "vac2");
    for (int i = 1; i <= 3; ++i) {
        const auto a_i = hqm::ladder(8, LadderKind::annihilation, i);
        const auto a_p = hqm::ladder(8, LadderKind::annihilation, i + 3);
        CHECK(hqm::column_max_abs_diff(hqm::apply(a_p, occ(8, occ1(i))), vac2) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(a_i, occ(8, occ1(i + 3))),
                                       hqm::column_scale(vac2, -1.0)) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(a_i, occ(8, occ2(i + 3))), vac1) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(a_p, occ(8, occ2(i))),
                                       hqm::column_scale(vac1, -1.0)) == 0.0);
    }
}

TEST_CASE("composed sector relations") {
    for (int i = 1; i <= 3; ++i) {
        const auto a_i = hqm::ladder(8, LadderKind::annihilation, i);
        const auto a_p = hqm::ladder(8, LadderKind::annihilation, i + 3);
        const auto ad_i = hqm::ladder(8, LadderKind::creation, i);
        const auto ad_p = hqm::ladder(8, LadderKind::creation, i + 3);
        CHECK(hqm::column_max_abs_diff(hqm::apply(ad_i, hqm::apply(a_p, occ(8, occ1(i)))),
                                       occ(8, occ2(i))) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(ad_i, hqm::apply(a_p, occ(8, occ2(i)))),
                                       hqm::column_scale(occ(8, occ1(i)), -1.0)) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(ad_p, hqm::apply(a_i, occ(8, occ1(i + 3)))),
                                       hqm::column_scale(occ(8, occ2(i + 3)), -1.0)) == 0.0);
        CHECK(hqm::column_max_abs_diff(hqm::apply(ad_p, hqm::apply(a_i, occ(8, occ2(i + 3)))),
                                       occ(8, occ1(i + 3))) == 0.0);
        const auto m = hqm::compose(ad_i, a_p);
        CHECK(hqm::column_max_abs_diff(hqm::apply_matrix(m, occ(8, occ1(i))), occ(8, occ2(i))) ==
              0.0);
    }
}

TEST_CASE("anticommutator classification") {
    for (int mode_dim : {4, 8}) {
        const auto states = hqm::occupation_states(mode_dim);
        for (int i = 1; i < mode_dim; ++i)
            for (const auto& s : states) {
                const FockColumn got = hqm::anticommutator_on_basis(mode_dim, i, s.blocks);
                const int partner = i <= 3 ? i + 3 : (i <= 6 ? i - 3 : 0);
                const bool identity = s.index == 0 || s.index == i ||
                                      (mode_dim == 8 && i <= 6 && s.index == partner);
                if (identity)
                    CHECK(hqm::column_max_abs_diff(got, s.blocks) == 0.0);
                else
                    CHECK(hqm::column_is_zero(got));
            }
    }
}

TEST_CASE("occupation pairing table") {
    const Element half = complex_value(0.5, 0.0);
    const Element i_half = complex_value(0.0, 0.5);
    for (int mode_dim : {4, 8})
        for (const auto& s : hqm::occupation_states(mode_dim))
            CHECK(hqm::max_abs_diff(hqm::occupation_pairing(s.blocks, s.blocks), half) == 0.0);

    CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, "vac1"), occ(8, "vac2")), i_half) ==
          0.0);
    CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, "vac2"), occ(8, "vac1")), -i_half) ==
          0.0);
    for (int i = 1; i <= 7; ++i)
        CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, occ1(i)), occ(8, occ2(i))),
                                i_half) == 0.0);
    for (int i = 1; i <= 3; ++i) {
        CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, occ1(i)), occ(8, occ1(i + 3))),
                                -i_half) == 0.0);
        CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, occ1(i)), occ(8, occ2(i + 3))),
                                half) == 0.0);
        CHECK(hqm::max_abs_diff(hqm::occupation_pairing(occ(8, occ1(i + 3)), occ(8, occ2(i))),
                                -half) == 0.0);
    }
    CHECK(hqm::max_abs(hqm::occupation_pairing(occ(8, occ1(1)), occ(8, occ1(2)))) == 0.0);
    CHECK(hqm::max_abs(hqm::occupation_pairing(occ(8, "vac1"), occ(8, occ1(5)))) == 0.0);
}

TEST_CASE("creation pairs as the adjoint of annihilation") {
    for (int mode_dim : {4, 8}) {
        const auto states = hqm::occupation_states(mode_dim);
        for (int i = 1; i < mode_dim; ++i) {
            const auto a = hqm::ladder(mode_dim, LadderKind::annihilation, i);
            const auto ad = hqm::ladder(mode_dim, LadderKind::creation, i);
            for (const auto& su : states)
                for (const auto& sv : states)
                    CHECK(hqm::max_abs_diff(
                              hqm::occupation_pairing(hqm::apply(ad, su.blocks), sv.blocks),
                              hqm::occupation_pairing(su.blocks, hqm::apply(a, sv.blocks))) <
                          1e-12);
        }
    }
}

TEST_CASE("block operators commute with right factors") {
    hqm::Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const CState s = hqm::build_cstate({rng.element(4)});
        const auto az = hqm::complex_linear_op(rng.element(4), rng.element(4));
        const Element z = rng.unit_complex(4);
        const CState lhs = hqm::apply(az, hqm::cstate_right_multiply(s, z));
        const CState rhs = hqm::cstate_right_multiply(hqm::apply(az, s), z);
        for (int b = 0; b < 2; ++b)
            CHECK(hqm::max_abs_diff(lhs.blocks[b], rhs.blocks[b]) < 1e-12);

        const auto aq = hqm::quaternion_linear_op(rng.element(4));
        const Element q = rng.unit_element(4);
        const CState lq = hqm::apply(aq, hqm::cstate_right_multiply(s, q));
        const CState rq = hqm::cstate_right_multiply(hqm::apply(aq, s), q);
        for (int b = 0; b < 2; ++b)
            CHECK(hqm::max_abs_diff(lq.blocks[b], rq.blocks[b]) < 1e-12);
    }
}

TEST_CASE("quaternion block operator pin") {
    const CState s0 = hqm::build_cstate({u4(0)});
    const CState got = hqm::apply(hqm::quaternion_linear_op(u4(2)), s0);
    const double scale = s0.blocks[0][0];
    Tensor b0(4, 1), b1(4, 1);
    b0[2] = scale;
    b1[3] = -scale;
    CHECK(hqm::max_abs_diff(got.blocks[0], b0) == 0.0);
    CHECK(hqm::max_abs_diff(got.blocks[1], b1) == 0.0);
}
