#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hqm {

// Structure table of the octonion imaginary units e_1..e_7, generated from
// seven oriented triples.  Each triple (i,j,k) fixes e_i e_j = e_k together
// with its cyclic images; antisymmetry fixes the rest.  The quaternion
// (e_1,e_2,e_3), complex (e_1) and real subalgebras are closed restrictions
// of the same table.
struct StructureTable {
    std::array<std::array<std::int8_t, 8>, 8> idx{};
    std::array<std::array<std::int8_t, 8>, 8> sgn{};
};

constexpr std::array<std::array<int, 3>, 7> kSeedTriples{{
    {1, 2, 3}, {4, 7, 1}, {2, 5, 7}, {1, 6, 5}, {6, 2, 4}, {5, 4, 3}, {7, 3, 6},
}};

constexpr StructureTable make_structure_table() {
    StructureTable t{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i == 0) {
                t.idx[i][j] = static_cast<std::int8_t>(j);
                t.sgn[i][j] = 1;
            } else if (j == 0) {
                t.idx[i][j] = static_cast<std::int8_t>(i);
                t.sgn[i][j] = 1;
            } else if (i == j) {
                t.idx[i][j] = 0;
                t.sgn[i][j] = -1;
            }
        }
    }
    for (const auto& s : kSeedTriples) {
        const int i = s[0], j = s[1], k = s[2];
        // cyclic orientations carry +1, transpositions -1
        t.idx[i][j] = static_cast<std::int8_t>(k); t.sgn[i][j] = 1;
        t.idx[j][k] = static_cast<std::int8_t>(i); t.sgn[j][k] = 1;
        t.idx[k][i] = static_cast<std::int8_t>(j); t.sgn[k][i] = 1;
        t.idx[j][i] = static_cast<std::int8_t>(k); t.sgn[j][i] = -1;
        t.idx[k][j] = static_cast<std::int8_t>(i); t.sgn[k][j] = -1;
        t.idx[i][k] = static_cast<std::int8_t>(j); t.sgn[i][k] = -1;
    }
    return t;
}

inline constexpr StructureTable kTable = make_structure_table();

static_assert(kTable.idx[1][2] == 3 && kTable.sgn[1][2] == 1);
static_assert(kTable.idx[4][7] == 1 && kTable.sgn[4][7] == 1);
static_assert(kTable.idx[2][1] == 3 && kTable.sgn[2][1] == -1);
static_assert(kTable.idx[5][5] == 0 && kTable.sgn[5][5] == -1);

// f_{abc} with e_a e_b = f_{abc} e_c for distinct imaginary indices; 0 otherwise.
constexpr double structure_constant(int a, int b, int c) {
    if (a < 1 || a > 7 || b < 1 || b > 7 || c < 1 || c > 7) return 0.0;
    if (a == b || kTable.idx[a][b] != c) return 0.0;
    return static_cast<double>(kTable.sgn[a][b]);
}

inline bool valid_dim(int d) { return d == 1 || d == 2 || d == 4 || d == 8; }

// Roots of n(n-1)(n-3)(n-7) = 0, the admissible imaginary dimensions.
inline bool check_hurwitz_dimension(long long n) {
    return n == 0 || n == 1 || n == 3 || n == 7;
}

// A hypercomplex number of one of the four composition algebras.
// Coefficients outside the active dimension are kept at zero.
class Element {
  public:
    Element() : dim_(1) { c_.fill(0.0); }
    explicit Element(int dim) : dim_(dim) {
        require_dim(dim);
        c_.fill(0.0);
    }
    Element(int dim, std::array<double, 8> coeffs) : c_(coeffs), dim_(dim) {
        require_dim(dim);
        for (int i = dim; i < 8; ++i) c_[i] = 0.0;
    }

    static Element unit(int dim, int i) {
        Element e(dim);
        if (i < 0 || i >= dim) throw std::out_of_range("basis index out of range");
        e.c_[i] = 1.0;
        return e;
    }
    static Element scalar(int dim, double v) {
        Element e(dim);
        e.c_[0] = v;
        return e;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return c_[i]; }
    double& operator[](int i) { return c_[i]; }
    const std::array<double, 8>& coeffs() const { return c_; }

    Element embedded(int dim) const {
        if (dim < dim_) throw std::invalid_argument("embedding must not shrink dimension");
        Element out(dim);
        out.c_ = c_;
        return out;
    }

    friend Element operator+(const Element& a, const Element& b) {
        Element out(check_same(a, b));
        for (int i = 0; i < out.dim_; ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }
    friend Element operator-(const Element& a, const Element& b) {
        Element out(check_same(a, b));
        for (int i = 0; i < out.dim_; ++i) out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }
    friend Element operator*(const Element& a, double s) {
        Element out = a;
        for (int i = 0; i < out.dim_; ++i) out.c_[i] *= s;
        return out;
    }
    friend Element operator*(double s, const Element& a) { return a * s; }
    Element operator-() const { return *this * -1.0; }

    friend Element operator*(const Element& a, const Element& b) {
        Element out(check_same(a, b));
        for (int i = 0; i < a.dim_; ++i) {
            const double ai = a.c_[i];
            if (ai == 0.0) continue;
            for (int j = 0; j < b.dim_; ++j) {
                const double bj = b.c_[j];
                if (bj == 0.0) continue;
                out.c_[kTable.idx[i][j]] += kTable.sgn[i][j] * ai * bj;
            }
        }
        return out;
    }

  private:
    static void require_dim(int d) {
        if (!valid_dim(d)) throw std::invalid_argument("algebra dimension must be 1, 2, 4 or 8");
    }
    static int check_same(const Element& a, const Element& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("algebra dimension mismatch");
        return a.dim_;
    }

    std::array<double, 8> c_;
    int dim_;
};

// Rebuilds the multiplication table from the seed triples at runtime and
// compares it entry for entry against the compile-time table. Returns the
// number of disagreements (0 when consistent).
int table_self_check();

inline Element conjugate(const Element& a) {
    Element out = a;
    for (int i = 1; i < a.dim(); ++i) out[i] = -out[i];
    return out;
}

inline double scalar_part(const Element& a) { return a[0]; }

// Quadratic norm N(a) = sum of squared coefficients; multiplicative.
inline double norm(const Element& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * a[i];
    return s;
}

inline double abs(const Element& a) { return std::sqrt(norm(a)); }

inline double max_abs(const Element& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

inline double max_abs_diff(const Element& a, const Element& b) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Element associator(const Element& a, const Element& b, const Element& c) {
    return (a * b) * c - a * (b * c);
}

inline bool moufang_check(const Element& a, const Element& x, const Element& y,
                          double tol = 1e-12) {
    const Element lhs = (a * x) * (y * a);
    const Element rhs = (a * (x * y)) * a;
    const double scale = 1.0 + norm(a) * abs(x) * abs(y);
    return max_abs_diff(lhs, rhs) <= tol * scale;
}

// Splits an octonion as f = p1 + p2 * e_7 with quaternionic p1, p2.
// The coefficient signs follow from solving the reconstruction identity
// with the structure table: p2 = f7 e0 - f4 e1 - f5 e2 - f6 e3.
inline std::pair<Element, Element> decompose_octonion(const Element& f) {
    if (f.dim() != 8) throw std::invalid_argument("decompose_octonion requires dimension 8");
    Element p1(4), p2(4);
    p1[0] = f[0]; p1[1] = f[1]; p1[2] = f[2]; p1[3] = f[3];
    p2[0] = f[7]; p2[1] = -f[4]; p2[2] = -f[5]; p2[3] = -f[6];
    return {p1, p2};
}

}  // namespace hqm
