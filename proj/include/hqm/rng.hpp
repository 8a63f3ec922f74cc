#pragma once

#include <cstdint>
#include <random>

#include "hqm/algebra.hpp"

namespace hqm {

// Deterministic random source.  mt19937_64 output is specified bit-for-bit
// by the standard; the explicit 53-bit mapping avoids distribution objects,
// whose streams are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform01() - 1.0; }

    Element element(int dim) {
        Element e(dim);
        for (int i = 0; i < dim; ++i) e[i] = symmetric();
        return e;
    }

    Element unit_element(int dim) {
        Element e = element(dim);
        double n = abs(e);
        while (n < 1e-3) {
            e = element(dim);
            n = abs(e);
        }
        return e * (1.0 / n);
    }

    // Unit element of the complex span {e_0, e_1} inside dimension dim.
    Element unit_complex(int dim) {
        const double a = symmetric(), b = symmetric();
        const double n = std::sqrt(a * a + b * b);
        Element z(dim);
        if (n < 1e-6) {
            z[0] = 1.0;
            return z;
        }
        z[0] = a / n;
        z[1] = b / n;
        return z;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace hqm
