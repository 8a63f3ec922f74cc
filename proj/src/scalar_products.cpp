#include "hqm/scalar_products.hpp"

#include <cmath>
#include <stdexcept>

namespace hqm {

void check_pair(const StateVector& f, const StateVector& g) {
    if (f.dim != g.dim) throw std::invalid_argument("state dimension mismatch");
    if (f.modes.size() != g.modes.size())
        throw std::invalid_argument("state mode-count mismatch");
    if (f.modes.empty()) throw std::invalid_argument("state must have at least one mode");
    for (const auto& m : f.modes)
        if (m.dim() != f.dim) throw std::invalid_argument("mode dimension mismatch");
    for (const auto& m : g.modes)
        if (m.dim() != g.dim) throw std::invalid_argument("mode dimension mismatch");
}

Element bracket(const StateVector& f, const StateVector& g) {
    check_pair(f, g);
    Element acc(f.dim);
    for (std::size_t m = 0; m < f.modes.size(); ++m)
        acc = acc + conjugate(f.modes[m]) * g.modes[m];
    return acc;
}

double sp_real(const StateVector& f, const StateVector& g) {
    check_pair(f, g);
    double s = 0.0;
    for (std::size_t m = 0; m < f.modes.size(); ++m)
        for (int i = 0; i < f.dim; ++i) s += f.modes[m][i] * g.modes[m][i];
    return s;
}

double sp_real_projection_quaternion(const StateVector& f, const StateVector& g) {
    if (f.dim != 4) throw std::invalid_argument("quaternion projection requires dimension 4");
    const Element b = bracket(f, g);
    Element acc = b;
    for (int i = 1; i <= 3; ++i) {
        const Element ei = Element::unit(4, i);
        acc = acc - ei * (b * ei);
    }
    return scalar_part(acc * 0.25);
}

double sp_real_projection_octonion(const StateVector& f, const StateVector& g) {
    if (f.dim != 8) throw std::invalid_argument("octonion projection requires dimension 8");
    const Element b = bracket(f, g);
    Element corr = b;
    for (int i = 1; i <= 7; ++i) {
        const Element ei = Element::unit(8, i);
        corr = corr - ei * (b * ei);
    }
    const Element value = b * (1.0 / 3.0) + corr * (1.0 / 12.0);
    return scalar_part(value);
}

Element sp_complex(const StateVector& f, const StateVector& g) {
    if (f.dim < 2) throw std::invalid_argument("complex projection requires dimension >= 2");
    const Element b = bracket(f, g);
    const Element e1 = Element::unit(f.dim, 1);
    return (b - e1 * (b * e1)) * 0.5;
}

Element sp_quaternion(const StateVector& f, const StateVector& g) {
    if (f.dim != 4) throw std::invalid_argument("quaternion product requires dimension 4");
    return bracket(f, g);
}

Element sp_quaternion_of_octonions(const StateVector& f, const StateVector& g) {
    check_pair(f, g);
    if (f.dim != 8) throw std::invalid_argument("pair-split product requires dimension 8");
    Element acc(4);
    for (std::size_t m = 0; m < f.modes.size(); ++m) {
        const auto [p1, p2] = decompose_octonion(f.modes[m]);
        const auto [p3, p4] = decompose_octonion(g.modes[m]);
        acc = acc + conjugate(p1) * p3 + conjugate(p4) * p2;
    }
    return acc;
}

Element sp_octonion(const StateVector& f, const StateVector& g) {
    if (f.dim != 8) throw std::invalid_argument("octonion product requires dimension 8");
    return bracket(f, g);
}

bool u2_invariance_check(const StateVector& f, const StateVector& g,
                         const Element& q, const Element& z, double tol) {
    if (f.dim != 4) throw std::invalid_argument("invariance check requires dimension 4");
    if (std::abs(norm(q) - 1.0) > 1e-12) throw std::invalid_argument("q must be a unit quaternion");
    if (std::abs(norm(z) - 1.0) > 1e-12) throw std::invalid_argument("z must be a unit complex number");
    for (int i = 2; i < z.dim(); ++i)
        if (z[i] != 0.0) throw std::invalid_argument("z must lie in the complex span");

    const Element zq = z.dim() == 4 ? z : z.embedded(4);
    StateVector ft = f, gt = g;
    for (auto& m : ft.modes) m = (q * m) * zq;
    for (auto& m : gt.modes) m = (q * m) * zq;
    return max_abs_diff(sp_complex(ft, gt), sp_complex(f, g)) <= tol;
}

}  // namespace hqm
