#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqm/rng.hpp"
#include "hqm/tensor.hpp"

using hqm::Element;
using hqm::Tensor;

namespace {
Tensor random_tensor(hqm::Rng& rng, int dim, int bodies) {
    Tensor t(dim, bodies);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = rng.symmetric();
    return t;
}
}  // namespace

TEST_CASE("basis indexing puts the first slot most significant") {
    const Tensor t = Tensor::basis(4, {1, 2});
    CHECK(t.size() == 16);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(t[k] == (k == 1u * 4 + 2 ? 1.0 : 0.0));
    CHECK(t.digit(1u * 4 + 2, 0) == 1);
    CHECK(t.digit(1u * 4 + 2, 1) == 2);
}

TEST_CASE("one body products match the element algebra") {
    hqm::Rng rng(21);
    for (int dim : {2, 4, 8})
        for (int t = 0; t < 100; ++t) {
            const Element a = rng.element(dim), b = rng.element(dim);
            const Tensor got = Tensor::from_element(a) * Tensor::from_element(b);
            CHECK(hqm::max_abs_diff(got, Tensor::from_element(a * b)) < 1e-12);
        }
}

TEST_CASE("trace picks the scalar coefficient") {
    Tensor t(4, 2);
    t[0] = 2.5;
    t[7] = -1.0;
    CHECK(t.trace() == 2.5);
}

TEST_CASE("conjugation negates odd imaginary counts") {
    const Tensor a = Tensor::basis(4, {1, 2});
    CHECK(hqm::max_abs_diff(hqm::conj(a), a) == 0.0);
    const Tensor b = Tensor::basis(4, {1, 0});
    CHECK(hqm::max_abs_diff(hqm::conj(b), -b) == 0.0);
    const Tensor c = Tensor::basis(4, {0, 0});
    CHECK(hqm::max_abs_diff(hqm::conj(c), c) == 0.0);
}

TEST_CASE("slot-wise product is associative through dim 4") {
    hqm::Rng rng(22);
    for (int dim : {2, 4})
        for (int t = 0; t < 50; ++t) {
            const Tensor a = random_tensor(rng, dim, 2);
            const Tensor b = random_tensor(rng, dim, 2);
            const Tensor c = random_tensor(rng, dim, 2);
            CHECK(hqm::max_abs_diff((a * b) * c, a * (b * c)) < 1e-12);
        }
}

TEST_CASE("kronecker laws") {
    hqm::Rng rng(23);
    for (int dim : {2, 4, 8})
        for (int t = 0; t < 30; ++t) {
            const Tensor a = random_tensor(rng, dim, 1), c = random_tensor(rng, dim, 1);
            const Tensor b = random_tensor(rng, dim, 2), d = random_tensor(rng, dim, 2);
            const Tensor ab = hqm::kron(a, b);
            CHECK(ab.size() == a.size() * b.size());
            CHECK(ab.bodies() == 3);
            CHECK(ab.trace() == doctest::Approx(a.trace() * b.trace()).epsilon(1e-12));
            CHECK(std::abs(hqm::norm(ab) - hqm::norm(a) * hqm::norm(b)) < 1e-12);
            CHECK(hqm::max_abs_diff(ab * hqm::kron(c, d), hqm::kron(a * c, b * d)) < 1e-12);
            CHECK(hqm::max_abs_diff(hqm::conj(ab), hqm::kron(hqm::conj(a), hqm::conj(b))) <
                  1e-12);
        }
}

TEST_CASE("kronecker trace is exact on basis tensors") {
    const Tensor a = Tensor::basis(4, {0});
    const Tensor b = Tensor::basis(4, {0, 0});
    CHECK(hqm::kron(a, b).trace() == 1.0);
    CHECK(hqm::kron(a, Tensor::basis(4, {1, 0})).trace() == 0.0);
}

TEST_CASE("shape mismatches are rejected") {
    Tensor a(4, 1), b(4, 2), c(2, 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}
