#pragma once

#include <cstddef>
#include <vector>

#include "hqm/algebra.hpp"

namespace hqm {

// Element of the N-fold Kronecker product of one composition algebra with
// itself.  Coefficients are stored densely, indexed row-major with the first
// factor most significant: flat = ((i_1*dim + i_2)*dim + ...)*dim + i_N.
class Tensor {
  public:
    Tensor() : dim_(1), bodies_(1), shift_(0), c_(1, 0.0) {}
    Tensor(int dim, int bodies);

    static Tensor basis(int dim, const std::vector<int>& digits);
    static Tensor from_element(const Element& e);

    int dim() const { return dim_; }
    int bodies() const { return bodies_; }
    std::size_t size() const { return c_.size(); }
    double operator[](std::size_t k) const { return c_[k]; }
    double& operator[](std::size_t k) { return c_[k]; }
    const std::vector<double>& coeffs() const { return c_; }

    int digit(std::size_t flat, int slot) const {
        return static_cast<int>((flat >> (shift_ * (bodies_ - 1 - slot))) & (dim_ - 1));
    }

    // e_0...e_0 coefficient; realizes the trace functional.
    double trace() const { return c_[0]; }

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double s);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, double s) { return a *= s; }
    friend Tensor operator*(double s, Tensor a) { return a *= s; }
    Tensor operator-() const { return *this * -1.0; }

    // Slot-wise product; inherits the left-association convention of chained
    // products from the scalar algebra.
    friend Tensor operator*(const Tensor& a, const Tensor& b);

  private:
    int dim_;
    int bodies_;
    int shift_;  // log2(dim_)
    std::vector<double> c_;
};

Tensor kron(const Tensor& a, const Tensor& b);
Tensor conj(const Tensor& a);
double norm(const Tensor& a);
double max_abs(const Tensor& a);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace hqm
