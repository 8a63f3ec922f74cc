#pragma once

#include <vector>

#include "hqm/algebra.hpp"

namespace hqm {

// Multi-mode state: an ordered list of same-dimension algebra elements.
// A single mode recovers the one-particle formulas verbatim.
struct StateVector {
    int dim = 1;
    std::vector<Element> modes;

    static StateVector of(std::initializer_list<Element> ms) {
        StateVector s;
        s.modes.assign(ms);
        s.dim = s.modes.empty() ? 1 : s.modes.front().dim();
        return s;
    }
};

void check_pair(const StateVector& f, const StateVector& g);

// Sum over modes of conjugate(f_m) * g_m.
Element bracket(const StateVector& f, const StateVector& g);

// Componentwise real scalar product, the scalar part of the bracket.
double sp_real(const StateVector& f, const StateVector& g);

// Real scalar product recovered by averaging the bracket against the three
// imaginary quaternion units: 1/4 [b - sum_i e_i b e_i].  Must be purely
// real and equal sp_real; reports the value.
double sp_real_projection_quaternion(const StateVector& f, const StateVector& g);

// Octonionic counterpart: 1/3 b + 1/12 [b - sum_{i=1..7} e_i (b e_i)],
// evaluated with explicit right-first association.
double sp_real_projection_octonion(const StateVector& f, const StateVector& g);

// Projection of the bracket onto the span of {e_0, e_1}:
// 1/2 [b - e_1 (b e_1)].
Element sp_complex(const StateVector& f, const StateVector& g);

// Full quaternion-valued bracket (dimension 4).
Element sp_quaternion(const StateVector& f, const StateVector& g);

// Quaternion-valued product of octonion states through the pair split
// f = p1 + p2 e_7, g = p3 + p4 e_7: sum of conj(p1) p3 + conj(p4) p2.
Element sp_quaternion_of_octonions(const StateVector& f, const StateVector& g);

// Full octonion-valued bracket (dimension 8).
Element sp_octonion(const StateVector& f, const StateVector& g);

// Checks invariance of sp_complex under mode-wise f -> (q f) z with unit
// quaternion q and unit complex z.
bool u2_invariance_check(const StateVector& f, const StateVector& g,
                         const Element& q, const Element& z, double tol = 1e-9);

}  // namespace hqm
