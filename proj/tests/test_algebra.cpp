#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqm/algebra.hpp"
#include "hqm/rng.hpp"

using hqm::Element;

namespace {
Element u(int i) { return Element::unit(8, i); }
}  // namespace

TEST_CASE("admissible dimensions") {
    for (int d : {1, 2, 4, 8}) CHECK(hqm::valid_dim(d));
    for (int d : {0, 3, 5, 16}) CHECK_FALSE(hqm::valid_dim(d));
    for (long long n : {0, 1, 3, 7}) CHECK(hqm::check_hurwitz_dimension(n));
    for (long long n : {2, 4, 5, 6, 8, 100}) CHECK_FALSE(hqm::check_hurwitz_dimension(n));
}

TEST_CASE("structure table consistency") {
    CHECK(hqm::table_self_check() == 0);
}

TEST_CASE("seed triple products") {
    for (const auto& t : hqm::kSeedTriples) {
        CHECK(hqm::max_abs_diff(u(t[0]) * u(t[1]), u(t[2])) == 0.0);
        CHECK(hqm::max_abs_diff(u(t[1]) * u(t[0]), -u(t[2])) == 0.0);
        CHECK(hqm::max_abs_diff(u(t[1]) * u(t[2]), u(t[0])) == 0.0);
        CHECK(hqm::max_abs_diff(u(t[2]) * u(t[0]), u(t[1])) == 0.0);
    }
    for (int i = 1; i <= 3; ++i)
        CHECK(hqm::max_abs_diff(u(i + 3) * u(7), u(i)) == 0.0);
    CHECK(hqm::max_abs_diff(u(1) * u(7), -u(4)) == 0.0);
    CHECK(hqm::structure_constant(2, 5, 7) == 1.0);
    CHECK(hqm::structure_constant(3, 4, 5) == -1.0);
    CHECK(hqm::structure_constant(1, 2, 3) == 1.0);
    CHECK(hqm::structure_constant(1, 2, 4) == 0.0);
}

TEST_CASE("identity and squares") {
    for (int dim : {1, 2, 4, 8}) {
        const Element e0 = Element::unit(dim, 0);
        for (int i = 0; i < dim; ++i) {
            const Element ei = Element::unit(dim, i);
            CHECK(hqm::max_abs_diff(e0 * ei, ei) == 0.0);
            CHECK(hqm::max_abs_diff(ei * e0, ei) == 0.0);
            if (i > 0) CHECK(hqm::max_abs_diff(ei * ei, Element::scalar(dim, -1.0)) == 0.0);
        }
    }
}

TEST_CASE("quaternion subtable") {
    const Element e1 = Element::unit(4, 1), e2 = Element::unit(4, 2), e3 = Element::unit(4, 3);
    CHECK(hqm::max_abs_diff(e1 * e2, e3) == 0.0);
    CHECK(hqm::max_abs_diff(e2 * e3, e1) == 0.0);
    CHECK(hqm::max_abs_diff(e3 * e1, e2) == 0.0);
    CHECK(hqm::max_abs_diff(e2 * e1, -e3) == 0.0);
}

TEST_CASE("conjugation and norm") {
    hqm::Rng rng(11);
    for (int dim : {1, 2, 4, 8})
        for (int t = 0; t < 200; ++t) {
            const Element a = rng.element(dim), b = rng.element(dim);
            CHECK(hqm::max_abs_diff(hqm::conjugate(a * b),
                                    hqm::conjugate(b) * hqm::conjugate(a)) < 1e-12);
            const double rel = std::abs(hqm::norm(a * b) - hqm::norm(a) * hqm::norm(b)) /
                               std::max(1e-300, hqm::norm(a) * hqm::norm(b));
            CHECK(rel < 1e-9);
            CHECK(hqm::scalar_part(hqm::conjugate(a) * a) == doctest::Approx(hqm::norm(a)));
        }
}

TEST_CASE("associator witness") {
    CHECK(hqm::max_abs_diff(hqm::associator(u(1), u(2), u(4)), -2.0 * u(5)) == 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                CHECK(hqm::max_abs(hqm::associator(Element::unit(4, i), Element::unit(4, j),
                                                   Element::unit(4, k))) == 0.0);
}

TEST_CASE("moufang identity") {
    hqm::Rng rng(12);
    for (int t = 0; t < 500; ++t)
        CHECK(hqm::moufang_check(rng.unit_element(8), rng.unit_element(8),
                                 rng.unit_element(8)));
}

TEST_CASE("alternativity") {
    hqm::Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        const Element a = rng.unit_element(8), b = rng.unit_element(8);
        CHECK(hqm::max_abs(hqm::associator(a, a, b)) < 1e-12);
        CHECK(hqm::max_abs(hqm::associator(a, b, b)) < 1e-12);
    }
}

TEST_CASE("subalgebra span closure") {
    hqm::Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        Element a(8), b(8);
        for (int i = 0; i < 4; ++i) {
            a[i] = rng.symmetric();
            b[i] = rng.symmetric();
        }
        const Element q = a * b;
        for (int i = 4; i < 8; ++i) CHECK(q[i] == 0.0);
    }
}

TEST_CASE("octonion pair split") {
    const auto [p1, p2] = hqm::decompose_octonion(u(4));
    CHECK(hqm::max_abs(p1) == 0.0);
    CHECK(hqm::max_abs_diff(p2, -Element::unit(4, 1)) == 0.0);

    const auto [q1, q2] = hqm::decompose_octonion(u(2));
    CHECK(hqm::max_abs_diff(q1, Element::unit(4, 2)) == 0.0);
    CHECK(hqm::max_abs(q2) == 0.0);

    hqm::Rng rng(15);
    for (int t = 0; t < 200; ++t) {
        const Element f = rng.element(8);
        const auto [a, b] = hqm::decompose_octonion(f);
        CHECK(hqm::max_abs_diff(a.embedded(8) + b.embedded(8) * u(7), f) == 0.0);
    }
}

TEST_CASE("embedding widens the coefficient vector") {
    Element a(2);
    a[0] = 0.5;
    a[1] = -1.5;
    const Element w = a.embedded(8);
    CHECK(w.dim() == 8);
    CHECK(w[0] == 0.5);
    CHECK(w[1] == -1.5);
    for (int i = 2; i < 8; ++i) CHECK(w[i] == 0.0);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(Element::unit(4, 1) * Element::unit(8, 1), std::invalid_argument);
    CHECK_THROWS_AS(Element::unit(3, 0), std::invalid_argument);
}
