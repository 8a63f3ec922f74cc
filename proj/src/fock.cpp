#include "hqm/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hqm {

namespace {

int popcount(unsigned v) { return std::popcount(v); }

Tensor one_body(const Element& e) { return Tensor::from_element(e); }

void check_cstate_pair(const CState& a, const CState& b) {
    if (a.dim != b.dim || a.bodies != b.bodies || a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("cstate shape mismatch");
}

}  // namespace

CState build_cstate(const std::vector<Element>& fs) {
    if (fs.empty()) throw std::invalid_argument("cstate needs at least one mode");
    const int dim = fs.front().dim();
    if (dim < 2) throw std::invalid_argument("cstate requires dimension 2, 4 or 8");
    for (const auto& f : fs)
        if (f.dim() != dim) throw std::invalid_argument("mode dimension mismatch");

    const int n = static_cast<int>(fs.size());
    const Element e1 = Element::unit(dim, 1);
    const double scale = std::pow(2.0, -0.5 * n);

    CState s;
    s.dim = dim;
    s.bodies = n;
    s.blocks.reserve(1u << n);
    for (unsigned b = 0; b < (1u << n); ++b) {
        Tensor acc = one_body((b & 1u) ? fs[0] * e1 : fs[0]);
        for (int k = 1; k < n; ++k)
            acc = kron(acc, one_body((b >> k) & 1u ? fs[k] * e1 : fs[k]));
        s.blocks.push_back(acc * scale);
    }
    return s;
}

CState cstate_right_multiply(const CState& s, const Element& z) {
    const Tensor zt = Tensor::from_element(z.dim() == s.dim ? z : z.embedded(s.dim));
    CState out = s;
    for (auto& b : out.blocks) {
        if (s.bodies == 1) {
            b = b * zt;
        } else {
            throw std::invalid_argument("right multiplication implemented for one body");
        }
    }
    return out;
}

CState cstate_add(const CState& a, const CState& b) {
    check_cstate_pair(a, b);
    CState out = a;
    for (std::size_t i = 0; i < out.blocks.size(); ++i) out.blocks[i] += b.blocks[i];
    return out;
}

ProjectorPair z_projectors(int dim, int bodies, int unit) {
    if (bodies < 1) throw std::invalid_argument("projector body count must be >= 1");
    if (unit < 1 || unit >= dim) throw std::invalid_argument("projector unit out of range");
    Tensor z0(dim, bodies), z1(dim, bodies);
    std::vector<int> digits(bodies, 0);
    for (unsigned mask = 0; mask < (1u << bodies); ++mask) {
        for (int k = 0; k < bodies; ++k) digits[k] = (mask >> k) & 1u ? unit : 0;
        const int count = popcount(mask);
        const Tensor t = Tensor::basis(dim, digits);
        if (count % 2 == 0)
            z0 += ((count / 2) % 2 == 0 ? 1.0 : -1.0) * t;
        else
            z1 += (((count - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * t;
    }
    const double scale = std::pow(2.0, 1 - bodies);
    return ProjectorPair{dim, bodies, z0 * scale, z1 * scale};
}

namespace {

Element traces_to_element(double re, double im) {
    Element v(2);
    v[0] = re;
    v[1] = im;
    return v;
}

Element pair_by_trace(const std::vector<Tensor>& ub, const std::vector<Tensor>& vb,
                      const ProjectorPair& zp) {
    Tensor bracket(zp.z0.dim(), zp.z0.bodies());
    for (std::size_t i = 0; i < ub.size(); ++i) bracket += conj(ub[i]) * vb[i];
    const double re = 0.5 * (bracket * zp.z0).trace();
    const double im = -0.5 * (bracket * zp.z1).trace();
    return traces_to_element(re, im);
}

}  // namespace

Element sp_multi(const CState& psi, const CState& g) {
    check_cstate_pair(psi, g);
    const ProjectorPair zp = z_projectors(psi.dim, psi.bodies, 1);
    return pair_by_trace(psi.blocks, g.blocks, zp);
}

bool phase_relocation_check(const Element& f1, const Element& f2,
                            const Element& g1, const Element& g2,
                            const Element& z, double tol) {
    for (int i = 2; i < z.dim(); ++i)
        if (z[i] != 0.0) throw std::invalid_argument("phase must lie in the complex span");
    const Element zd = z.dim() == f1.dim() ? z : z.embedded(f1.dim());
    const CState psi = build_cstate({f1, f2});
    const CState ga = build_cstate({g1 * zd, g2});
    const CState gb = build_cstate({g1, g2 * zd});
    return max_abs_diff(sp_multi(psi, ga), sp_multi(psi, gb)) <= tol;
}

// ---------------------------------------------------------------------------
// Occupation machinery.
// ---------------------------------------------------------------------------

namespace {

constexpr int kAmbient = 8;

void check_mode_dim(int mode_dim) {
    if (mode_dim != 4 && mode_dim != 8)
        throw std::invalid_argument("mode dimension must be 4 or 8");
}

void check_mode_index(int mode_dim, int i) {
    if (i < 1 || i >= mode_dim) throw std::out_of_range("mode index out of range");
}

const ProjectorPair& sector_projectors() {
    static const ProjectorPair zp = z_projectors(kAmbient, 2, kSectorUnit);
    return zp;
}

Tensor mode_factor(int i) { return Tensor::basis(kAmbient, {i, 0}); }

Tensor zero2() { return Tensor(kAmbient, 2); }

}  // namespace

FockColumn column_zero() {
    return FockColumn{zero2(), zero2(), zero2(), zero2()};
}

std::vector<OccupationState> occupation_states(int mode_dim) {
    check_mode_dim(mode_dim);
    const auto& zp = sector_projectors();
    std::vector<OccupationState> out;

    OccupationState vac1{mode_dim, 1, 0, {zp.z0, zero2(), zp.z1, zero2()}, "vac1"};
    out.push_back(vac1);
    for (int i = 1; i < mode_dim; ++i) {
        const Tensor ei = mode_factor(i);
        out.push_back(OccupationState{mode_dim, 1, i,
                                      {zero2(), ei * zp.z0, zero2(), ei * zp.z1},
                                      "occ1:" + std::to_string(i)});
    }
    if (mode_dim == 8) {
        out.push_back(OccupationState{mode_dim, 2, 0,
                                      {zp.z1, zero2(), -zp.z0, zero2()}, "vac2"});
        for (int i = 1; i < mode_dim; ++i) {
            const Tensor ei = mode_factor(i);
            out.push_back(OccupationState{mode_dim, 2, i,
                                          {zero2(), ei * zp.z1, zero2(), -(ei * zp.z0)},
                                          "occ2:" + std::to_string(i)});
        }
    }
    return out;
}

OccupationState occupation_state(int mode_dim, const std::string& label) {
    for (auto& s : occupation_states(mode_dim))
        if (s.label == label) return s;
    throw std::invalid_argument("unknown occupation state label: " + label);
}

LadderOperator ladder(int mode_dim, LadderKind kind, int index) {
    check_mode_dim(mode_dim);
    check_mode_index(mode_dim, index);
    const auto& zp = sector_projectors();
    const Tensor ei = mode_factor(index);

    LadderOperator op{mode_dim, kind, index,
                      {column_zero(), column_zero(), column_zero(), column_zero()}};
    if (kind == LadderKind::annihilation) {
        op.rows[0][1] = -0.5 * (zp.z0 * ei);
        op.rows[0][3] = 0.5 * (zp.z1 * ei);
        op.rows[2][1] = -0.5 * (zp.z1 * ei);
        op.rows[2][3] = -0.5 * (zp.z0 * ei);
    } else {
        op.rows[1][0] = 0.5 * (ei * zp.z0);
        op.rows[1][2] = -0.5 * (ei * zp.z1);
        op.rows[3][0] = 0.5 * (ei * zp.z1);
        op.rows[3][2] = 0.5 * (ei * zp.z0);
    }
    return op;
}

FockColumn apply(const LadderOperator& op, const FockColumn& col) {
    return apply_matrix(op.rows, col);
}

FockColumn apply_matrix(const std::array<FockColumn, 4>& m, const FockColumn& col) {
    FockColumn out = column_zero();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += m[r][c] * col[c];
    return out;
}

std::array<FockColumn, 4> compose(const LadderOperator& a, const LadderOperator& b) {
    std::array<FockColumn, 4> out{column_zero(), column_zero(), column_zero(), column_zero()};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) out[r][c] += a.rows[r][k] * b.rows[k][c];
    return out;
}

FockColumn column_add(const FockColumn& a, const FockColumn& b) {
    FockColumn out = a;
    for (int r = 0; r < 4; ++r) out[r] += b[r];
    return out;
}

FockColumn column_scale(const FockColumn& a, double s) {
    FockColumn out = a;
    for (int r = 0; r < 4; ++r) out[r] *= s;
    return out;
}

double column_max_abs_diff(const FockColumn& a, const FockColumn& b) {
    double m = 0.0;
    for (int r = 0; r < 4; ++r) m = std::max(m, max_abs_diff(a[r], b[r]));
    return m;
}

bool column_is_zero(const FockColumn& a) {
    for (int r = 0; r < 4; ++r)
        if (max_abs(a[r]) != 0.0) return false;
    return true;
}

FockColumn anticommutator_on_basis(int mode_dim, int index, const FockColumn& s) {
    const LadderOperator a = ladder(mode_dim, LadderKind::annihilation, index);
    const LadderOperator ad = ladder(mode_dim, LadderKind::creation, index);
    return column_add(apply(a, apply(ad, s)), apply(ad, apply(a, s)));
}

Element occupation_pairing(const FockColumn& u, const FockColumn& v) {
    const auto& zp = sector_projectors();
    std::vector<Tensor> ub(u.begin(), u.end()), vb(v.begin(), v.end());
    return pair_by_trace(ub, vb, zp);
}

LinearOp2 complex_linear_op(const Element& a11, const Element& a12) {
    if (a11.dim() != a12.dim()) throw std::invalid_argument("entry dimension mismatch");
    return LinearOp2{a11, a12};
}

LinearOp2 quaternion_linear_op(const Element& a11) {
    return LinearOp2{a11, Element(a11.dim())};
}

CState apply(const LinearOp2& op, const CState& s) {
    if (s.bodies != 1 || s.blocks.size() != 2)
        throw std::invalid_argument("2x2 block operators act on one-body columns");
    if (op.a11.dim() != s.dim) throw std::invalid_argument("operator dimension mismatch");
    const Tensor a11 = Tensor::from_element(op.a11);
    const Tensor a12 = Tensor::from_element(op.a12);
    CState out = s;
    out.blocks[0] = a11 * s.blocks[0] + a12 * s.blocks[1];
    out.blocks[1] = -1.0 * (a12 * s.blocks[0]) + a11 * s.blocks[1];
    return out;
}

}  // namespace hqm
