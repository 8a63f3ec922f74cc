#include "hqm/tensor.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hqm {

namespace {

std::size_t pow_size(int dim, int bodies) {
    std::size_t s = 1;
    for (int i = 0; i < bodies; ++i) s *= static_cast<std::size_t>(dim);
    return s;
}

void check_compatible(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim() || a.bodies() != b.bodies())
        throw std::invalid_argument("tensor shape mismatch");
}

}  // namespace

Tensor::Tensor(int dim, int bodies)
    : dim_(dim), bodies_(bodies), shift_(std::countr_zero(static_cast<unsigned>(dim))),
      c_(pow_size(dim, bodies), 0.0) {
    if (!valid_dim(dim) || dim == 1)
        throw std::invalid_argument("tensor dimension must be 2, 4 or 8");
    if (bodies < 1) throw std::invalid_argument("tensor body count must be >= 1");
}

Tensor Tensor::basis(int dim, const std::vector<int>& digits) {
    Tensor t(dim, static_cast<int>(digits.size()));
    std::size_t k = 0;
    for (int d : digits) {
        if (d < 0 || d >= dim) throw std::out_of_range("basis digit out of range");
        k = (k << t.shift_) | static_cast<std::size_t>(d);
    }
    t.c_[k] = 1.0;
    return t;
}

Tensor Tensor::from_element(const Element& e) {
    Tensor t(e.dim(), 1);
    for (int i = 0; i < e.dim(); ++i) t.c_[i] = e[i];
    return t;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_compatible(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_compatible(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    Tensor out(a.dim_, a.bodies_);
    const int shift = a.shift_;
    const std::size_t mask = static_cast<std::size_t>(a.dim_) - 1;
    const int n = a.bodies_;

    std::vector<std::size_t> nza, nzb;
    nza.reserve(a.c_.size());
    nzb.reserve(b.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        if (a.c_[k] != 0.0) nza.push_back(k);
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        if (b.c_[k] != 0.0) nzb.push_back(k);

    for (std::size_t ka : nza) {
        const double va = a.c_[ka];
        for (std::size_t kb : nzb) {
            double s = va * b.c_[kb];
            std::size_t k = 0;
            for (int slot = 0; slot < n; ++slot) {
                const int sh = shift * (n - 1 - slot);
                const int da = static_cast<int>((ka >> sh) & mask);
                const int db = static_cast<int>((kb >> sh) & mask);
                s *= kTable.sgn[da][db];
                k = (k << shift) | static_cast<std::size_t>(kTable.idx[da][db]);
            }
            out.c_[k] += s;
        }
    }
    return out;
}

Tensor kron(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("tensor dimension mismatch");
    Tensor out(a.dim(), a.bodies() + b.bodies());
    const std::size_t nb = b.size();
    for (std::size_t ka = 0; ka < a.size(); ++ka) {
        const double va = a[ka];
        if (va == 0.0) continue;
        for (std::size_t kb = 0; kb < nb; ++kb) {
            const double vb = b[kb];
            if (vb == 0.0) continue;
            out[ka * nb + kb] = va * vb;
        }
    }
    return out;
}

Tensor conj(const Tensor& a) {
    Tensor out = a;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (out[k] == 0.0) continue;
        int imag = 0;
        for (int slot = 0; slot < a.bodies(); ++slot)
            if (a.digit(k, slot) != 0) ++imag;
        if (imag % 2 != 0) out[k] = -out[k];
    }
    return out;
}

double norm(const Tensor& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * a[k];
    return s;
}

double max_abs(const Tensor& a) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k]));
    return m;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace hqm
