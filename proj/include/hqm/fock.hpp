#pragma once

#include <array>
#include <string>
#include <vector>

#include "hqm/tensor.hpp"

namespace hqm {

// Column representation of an N-body state: 2^N tensor blocks, block b
// holding the product with a right e_1 factor in every slot whose bit is set
// in b (bit 0 = first slot), scaled by 2^(-N/2).
struct CState {
    int dim = 2;
    int bodies = 1;
    std::vector<Tensor> blocks;
};

CState build_cstate(const std::vector<Element>& fs);
CState cstate_right_multiply(const CState& s, const Element& z);
CState cstate_add(const CState& a, const CState& b);

struct ProjectorPair {
    int dim;
    int bodies;
    Tensor z0;
    Tensor z1;
};

// N-body projector pair over the chosen imaginary unit: Z0 collects even
// placement counts with alternating signs, Z1 odd ones; both scaled 2^(1-N).
// Satisfies Z0^2 = Z0, Z1^2 = -Z0, Z0 Z1 = Z1 Z0 = Z1 with dyadic entries.
ProjectorPair z_projectors(int dim, int bodies, int unit = 1);

// Many-body complex-valued scalar product: the block bracket traced against
// the projector pair, normalized so that product states factorize as
// 2^(-N) * prod_k sp_complex(f_k, g_k).  Returns a dimension-2 element.
Element sp_multi(const CState& psi, const CState& g);

// True iff moving a unit complex phase z from one tensor slot to another
// leaves sp_multi unchanged: (Psi(f1,f2), G(g1 z, g2)) = (Psi(f1,f2), G(g1, g2 z)).
bool phase_relocation_check(const Element& f1, const Element& f2,
                            const Element& g1, const Element& g2,
                            const Element& z, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Occupation-number machinery (two-body).
//
// States and ladder operators are built in the full octonion tensor algebra
// for both mode dimensions, with the two-body projectors taken over e_7.
// The mode set is {e_1..e_3} (mode_dim 4) or {e_1..e_7} (mode_dim 8); e_7 is
// the unit linking the paired mode sectors, since e_{i+3} e_7 = e_i.
// ---------------------------------------------------------------------------

inline constexpr int kSectorUnit = 7;

using FockColumn = std::array<Tensor, 4>;

struct OccupationState {
    int mode_dim;   // 4 or 8
    int sector;     // 1 or 2
    int index;      // 0 for a vacuum, else the occupied mode 1..mode_dim-1
    FockColumn blocks;
    std::string label;  // vac1, occ1:i, vac2, occ2:i
};

// vac1 and occ1:i for both mode dimensions; vac2 and occ2:i for mode_dim 8.
std::vector<OccupationState> occupation_states(int mode_dim);
OccupationState occupation_state(int mode_dim, const std::string& label);

enum class LadderKind { annihilation, creation };

struct LadderOperator {
    int mode_dim;
    LadderKind kind;
    int index;
    std::array<FockColumn, 4> rows;  // rows[r][c] multiplies block c into row r
};

LadderOperator ladder(int mode_dim, LadderKind kind, int index);

FockColumn apply(const LadderOperator& op, const FockColumn& col);
FockColumn column_zero();
FockColumn column_add(const FockColumn& a, const FockColumn& b);
FockColumn column_scale(const FockColumn& a, double s);
double column_max_abs_diff(const FockColumn& a, const FockColumn& b);
bool column_is_zero(const FockColumn& a);

// Block-matrix product of two ladder operators (left-associated entries).
std::array<FockColumn, 4> compose(const LadderOperator& a, const LadderOperator& b);
FockColumn apply_matrix(const std::array<FockColumn, 4>& m, const FockColumn& col);

// Sequential a_i(a_i^+ s) + a_i^+(a_i s).
FockColumn anticommutator_on_basis(int mode_dim, int index, const FockColumn& s);

// Pairing of two occupation columns by the same trace construction as
// sp_multi, over the projector unit of the construction.
Element occupation_pairing(const FockColumn& u, const FockColumn& v);

// One-body 2x2 block operators acting on CState columns by left
// multiplication: rows (a11, a12; -a12, a11).  The complex-linear form takes
// both entries; the quaternion-linear form is the diagonal special case.
struct LinearOp2 {
    Element a11;
    Element a12;
};

LinearOp2 complex_linear_op(const Element& a11, const Element& a12);
LinearOp2 quaternion_linear_op(const Element& a11);
CState apply(const LinearOp2& op, const CState& s);

}  // namespace hqm
