#include "hqm/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace hqm {

namespace {

constexpr double kFourPi = 4.0 * 3.14159265358979323846;

double levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0.0;
    if ((a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
        (a == 3 && b == 1 && c == 2))
        return 1.0;
    return -1.0;
}

void check_axis(int j) {
    if (j < 1 || j > 3) throw std::out_of_range("space index out of range");
}

}  // namespace

double InternalStructure::f(int a, int b, int c) const {
    if (a < 1 || a > a_dim || b < 1 || b > a_dim || c < 1 || c > a_dim)
        throw std::out_of_range("internal index out of range");
    switch (a_dim) {
        case 1: return 0.0;
        case 3: return levi_civita(a, b, c);
        case 7: return structure_constant(a, b, c);
        default: throw std::invalid_argument("internal dimension must be 1, 3 or 7");
    }
}

InternalStructure internal_structure(int a_dim) {
    if (a_dim != 1 && a_dim != 3 && a_dim != 7)
        throw std::invalid_argument("internal dimension must be 1, 3 or 7");
    return InternalStructure{a_dim};
}

GaugePotential::GaugePotential(Kind kind, int a_dim, double g)
    : kind_(kind), a_dim_(a_dim), g_(g), fs_(internal_structure(a_dim)) {}

GaugePotential GaugePotential::zero(int a_dim, double g) {
    return GaugePotential(Kind::zero, a_dim, g);
}

GaugePotential GaugePotential::uniform_b(double g, double b0) {
    GaugePotential p(Kind::uniform_b, 1, g);
    p.b0_ = b0;
    return p;
}

GaugePotential GaugePotential::plane_wave(double g, double amplitude, double k,
                                          double omega, int axis_prop, int axis_pol) {
    check_axis(axis_prop);
    check_axis(axis_pol);
    GaugePotential p(Kind::plane_wave, 1, g);
    p.amp_ = amplitude;
    p.k_ = k;
    p.omega_ = omega;
    p.axis_prop_ = axis_prop - 1;
    p.axis_pol_ = axis_pol - 1;
    return p;
}

GaugePotential GaugePotential::constant(int a_dim, double g,
                                        std::vector<std::array<double, 3>> c_by_a,
                                        std::vector<std::array<double, 3>> cdot_by_a) {
    GaugePotential p(Kind::constant, a_dim, g);
    if (static_cast<int>(c_by_a.size()) != a_dim)
        throw std::invalid_argument("constant preset needs one 3-vector per internal index");
    if (cdot_by_a.empty()) cdot_by_a.assign(c_by_a.size(), {0.0, 0.0, 0.0});
    if (cdot_by_a.size() != c_by_a.size())
        throw std::invalid_argument("time-slope table shape mismatch");
    p.c_ = std::move(c_by_a);
    p.cdot_ = std::move(cdot_by_a);
    return p;
}

GaugePotential GaugePotential::grid(int a_dim, double g, std::array<int, 3> n, double h,
                                    Vec3 origin, std::vector<std::vector<double>> values,
                                    double c0, double c1) {
    GaugePotential p(Kind::grid, a_dim, g);
    if (n[0] < 2 || n[1] < 2 || n[2] < 2) throw std::invalid_argument("grid too small");
    if (h <= 0.0) throw std::invalid_argument("grid spacing must be positive");
    const std::size_t nodes =
        static_cast<std::size_t>(n[0]) * n[1] * n[2];
    if (values.size() != static_cast<std::size_t>(3 * a_dim))
        throw std::invalid_argument("grid needs one node table per (j,a)");
    for (const auto& v : values)
        if (v.size() != nodes) throw std::invalid_argument("grid node table size mismatch");
    p.n_ = n;
    p.h_ = h;
    p.origin_ = origin;
    p.values_ = std::move(values);
    p.c0_ = c0;
    p.c1_ = c1;
    return p;
}

double GaugePotential::grid_value(int j, int a, const Vec3& x) const {
    // trilinear interpolation, clamped to the grid box
    double f[3];
    int i0[3];
    for (int d = 0; d < 3; ++d) {
        double u = (x[d] - origin_[d]) / h_;
        u = std::min(std::max(u, 0.0), static_cast<double>(n_[d] - 1));
        i0[d] = std::min(static_cast<int>(u), n_[d] - 2);
        f[d] = u - i0[d];
    }
    const auto& v = values_[static_cast<std::size_t>(j - 1) * a_dim_ + (a - 1)];
    auto at = [&](int ix, int iy, int iz) {
        return v[(static_cast<std::size_t>(ix) * n_[1] + iy) * n_[2] + iz];
    };
    double acc = 0.0;
    for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy)
            for (int dz = 0; dz < 2; ++dz) {
                const double w = (dx ? f[0] : 1 - f[0]) * (dy ? f[1] : 1 - f[1]) *
                                 (dz ? f[2] : 1 - f[2]);
                acc += w * at(i0[0] + dx, i0[1] + dy, i0[2] + dz);
            }
    return acc;
}

double GaugePotential::A(int j, int a, const Vec3& x, double t) const {
    check_axis(j);
    if (a < 1 || a > a_dim_) throw std::out_of_range("internal index out of range");
    switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::uniform_b: return j == 2 ? b0_ * x[0] : 0.0;
        case Kind::plane_wave:
            return j - 1 == axis_pol_ ? amp_ * std::sin(k_ * x[axis_prop_] - omega_ * t)
                                      : 0.0;
        case Kind::constant: return c_[a - 1][j - 1] + cdot_[a - 1][j - 1] * t;
        case Kind::grid: return grid_value(j, a, x) * (c0_ + c1_ * t);
    }
    return 0.0;
}

double GaugePotential::dA_dx(int j, int a, int k, const Vec3& x, double t) const {
    check_axis(j);
    check_axis(k);
    switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::uniform_b: return (j == 2 && k == 1) ? b0_ : 0.0;
        case Kind::plane_wave:
            return (j - 1 == axis_pol_ && k - 1 == axis_prop_)
                       ? amp_ * k_ * std::cos(k_ * x[axis_prop_] - omega_ * t)
                       : 0.0;
        case Kind::constant: return 0.0;
        case Kind::grid: {
            Vec3 xp = x, xm = x;
            xp[k - 1] += h_;
            xm[k - 1] -= h_;
            return (grid_value(j, a, xp) - grid_value(j, a, xm)) / (2.0 * h_) *
                   (c0_ + c1_ * t);
        }
    }
    return 0.0;
}

double GaugePotential::dA_dt(int j, int a, const Vec3& x, double t) const {
    check_axis(j);
    switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::uniform_b: return 0.0;
        case Kind::plane_wave:
            return j - 1 == axis_pol_
                       ? -amp_ * omega_ * std::cos(k_ * x[axis_prop_] - omega_ * t)
                       : 0.0;
        case Kind::constant: return cdot_[a - 1][j - 1];
        case Kind::grid: return grid_value(j, a, x) * c1_;
    }
    return 0.0;
}

bool GaugePotential::has_exact_sources() const {
    return kind_ == Kind::zero || kind_ == Kind::plane_wave;
}

void GaugePotential::exact_sources(const Vec3& x, double t, std::vector<double>& rho,
                                   std::array<std::vector<double>, 3>& j) const {
    rho.assign(a_dim_, 0.0);
    for (auto& ji : j) ji.assign(a_dim_, 0.0);
    if (kind_ == Kind::zero) return;
    if (kind_ != Kind::plane_wave)
        throw std::logic_error("exact sources unavailable for this preset");

    const double u = k_ * x[axis_prop_] - omega_ * t;
    const double s = std::sin(u);
    if (axis_pol_ == axis_prop_) {
        rho[0] = -amp_ * omega_ * k_ * s / kFourPi;
        j[axis_pol_][0] = -amp_ * omega_ * omega_ * s / kFourPi;
    } else {
        j[axis_pol_][0] = amp_ * (k_ * k_ - omega_ * omega_) * s / kFourPi;
    }
}

FieldPoint fields_from_potential(const GaugePotential& pot, const Vec3& x, double t) {
    const int ad = pot.a_dim();
    const InternalStructure fs = internal_structure(ad);
    const double g = pot.g();
    FieldPoint fp;
    fp.a_dim = ad;
    for (int j = 1; j <= 3; ++j) {
        fp.E[j - 1].assign(ad, 0.0);
        fp.B[j - 1].assign(ad, 0.0);
        for (int a = 1; a <= ad; ++a) fp.E[j - 1][a - 1] = -pot.dA_dt(j, a, x, t);
    }
    for (int i = 1; i <= 3; ++i)
        for (int a = 1; a <= ad; ++a) {
            double acc = 0.0;
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    const double eps = levi_civita(i, j, k);
                    if (eps == 0.0) continue;
                    double term = pot.dA_dx(k, a, j, x, t);
                    for (int b = 1; b <= ad; ++b)
                        for (int c = 1; c <= ad; ++c) {
                            const double f = fs.f(a, b, c);
                            if (f == 0.0) continue;
                            term += 0.5 * g * f * pot.A(j, b, x, t) * pot.A(k, c, x, t);
                        }
                    acc += eps * term;
                }
            fp.B[i - 1][a - 1] = acc;
        }
    return fp;
}

Vec3 lorentz_force(const IsospinParticle& p, const FieldPoint& fp) {
    const int ad = fp.a_dim;
    if (static_cast<int>(p.I.size()) != ad)
        throw std::invalid_argument("isospin dimension mismatch");
    Vec3 F{0.0, 0.0, 0.0};
    std::array<double, 3> Ec{0.0, 0.0, 0.0}, Bc{0.0, 0.0, 0.0};
    for (int j = 0; j < 3; ++j)
        for (int a = 0; a < ad; ++a) {
            Ec[j] += fp.E[j][a] * p.I[a];
            Bc[j] += fp.B[j][a] * p.I[a];
        }
    for (int j = 1; j <= 3; ++j) {
        double acc = p.g * Ec[j - 1];
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                acc += p.g * levi_civita(j, k, l) * p.v[k - 1] * Bc[l - 1];
        F[j - 1] = acc;
    }
    return F;
}

std::vector<double> isospin_rhs(const IsospinParticle& p, const GaugePotential& pot,
                                double t) {
    const int ad = pot.a_dim();
    if (static_cast<int>(p.I.size()) != ad)
        throw std::invalid_argument("isospin dimension mismatch");
    const InternalStructure fs = internal_structure(ad);
    std::vector<double> dI(ad, 0.0);
    if (ad == 1) return dI;
    for (int a = 1; a <= ad; ++a) {
        double acc = 0.0;
        for (int b = 1; b <= ad; ++b)
            for (int c = 1; c <= ad; ++c) {
                const double f = fs.f(a, b, c);
                if (f == 0.0) continue;
                for (int j = 1; j <= 3; ++j)
                    acc -= pot.g() * f * pot.A(j, b, p.x, t) * p.I[c - 1] * p.v[j - 1];
            }
        dI[a - 1] = acc;
    }
    return dI;
}

namespace {

struct Deriv {
    Vec3 dx;
    Vec3 dv;
    std::vector<double> dI;
};

Deriv rhs(const IsospinParticle& base, const GaugePotential& pot, const Vec3& x,
          const Vec3& v, const std::vector<double>& I, double t) {
    IsospinParticle p = base;
    p.x = x;
    p.v = v;
    p.I = I;
    const FieldPoint fp = fields_from_potential(pot, x, t);
    const Vec3 F = lorentz_force(p, fp);
    Deriv d;
    d.dx = v;
    for (int j = 0; j < 3; ++j) d.dv[j] = F[j] / p.m;
    d.dI = isospin_rhs(p, pot, t);
    return d;
}

bool all_finite(const TrajectorySample& s) {
    for (double v : s.x)
        if (!std::isfinite(v)) return false;
    for (double v : s.v)
        if (!std::isfinite(v)) return false;
    for (double v : s.I)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace

Trajectory integrate(const IsospinParticle& p0, const GaugePotential& pot, double dt,
                     int steps) {
    if (dt <= 0.0) throw std::invalid_argument("time step must be positive");
    if (steps < 1) throw std::invalid_argument("step count must be >= 1");
    if (static_cast<int>(p0.I.size()) != pot.a_dim())
        throw std::invalid_argument("isospin dimension mismatch");

    Trajectory traj;
    traj.dt = dt;
    traj.samples.reserve(steps + 1);

    Vec3 x = p0.x, v = p0.v;
    std::vector<double> I = p0.I;
    const int ad = pot.a_dim();
    traj.samples.push_back({0.0, x, v, I});

    for (int s = 0; s < steps; ++s) {
        const double t = s * dt;
        const Deriv k1 = rhs(p0, pot, x, v, I, t);

        Vec3 x2, v2;
        std::vector<double> I2(ad);
        for (int j = 0; j < 3; ++j) {
            x2[j] = x[j] + 0.5 * dt * k1.dx[j];
            v2[j] = v[j] + 0.5 * dt * k1.dv[j];
        }
        for (int a = 0; a < ad; ++a) I2[a] = I[a] + 0.5 * dt * k1.dI[a];
        const Deriv k2 = rhs(p0, pot, x2, v2, I2, t + 0.5 * dt);

        Vec3 x3, v3;
        std::vector<double> I3(ad);
        for (int j = 0; j < 3; ++j) {
            x3[j] = x[j] + 0.5 * dt * k2.dx[j];
            v3[j] = v[j] + 0.5 * dt * k2.dv[j];
        }
        for (int a = 0; a < ad; ++a) I3[a] = I[a] + 0.5 * dt * k2.dI[a];
        const Deriv k3 = rhs(p0, pot, x3, v3, I3, t + 0.5 * dt);

        Vec3 x4, v4;
        std::vector<double> I4(ad);
        for (int j = 0; j < 3; ++j) {
            x4[j] = x[j] + dt * k3.dx[j];
            v4[j] = v[j] + dt * k3.dv[j];
        }
        for (int a = 0; a < ad; ++a) I4[a] = I[a] + dt * k3.dI[a];
        const Deriv k4 = rhs(p0, pot, x4, v4, I4, t + dt);

        for (int j = 0; j < 3; ++j) {
            x[j] += dt / 6.0 * (k1.dx[j] + 2 * k2.dx[j] + 2 * k3.dx[j] + k4.dx[j]);
            v[j] += dt / 6.0 * (k1.dv[j] + 2 * k2.dv[j] + 2 * k3.dv[j] + k4.dv[j]);
        }
        for (int a = 0; a < ad; ++a)
            I[a] += dt / 6.0 * (k1.dI[a] + 2 * k2.dI[a] + 2 * k3.dI[a] + k4.dI[a]);

        TrajectorySample sample{(s + 1) * dt, x, v, I};
        if (!all_finite(sample))
            throw std::runtime_error("non-finite state at step " + std::to_string(s + 1));
        traj.samples.push_back(std::move(sample));
    }
    return traj;
}

namespace {

// Covariant-term helper: g f_abc U_i^b V_i^c summed over i (or a single i).
double structure_bilinear(const InternalStructure& fs, double g, int a,
                          const std::vector<double>& U, const std::vector<double>& V) {
    double acc = 0.0;
    for (int b = 1; b <= fs.a_dim; ++b)
        for (int c = 1; c <= fs.a_dim; ++c) {
            const double f = fs.f(a, b, c);
            if (f == 0.0) continue;
            acc += g * f * U[b - 1] * V[c - 1];
        }
    return acc;
}

std::vector<double> A_at(const GaugePotential& pot, int j, const Vec3& x, double t) {
    std::vector<double> out(pot.a_dim());
    for (int a = 1; a <= pot.a_dim(); ++a) out[a - 1] = pot.A(j, a, x, t);
    return out;
}

Vec3 shifted(const Vec3& x, int axis, double d) {
    Vec3 out = x;
    out[axis] += d;
    return out;
}

}  // namespace

FieldResidualReport field_equation_residuals(const GaugePotential& pot,
                                             const GridSpec& grid, double t) {
    if (grid.n[0] < 3 || grid.n[1] < 3 || grid.n[2] < 3)
        throw std::invalid_argument("grid too small for central differences");
    const int ad = pot.a_dim();
    const InternalStructure fs = internal_structure(ad);
    const double h = grid.h;
    const double tau = 0.5 * h;
    const double g = pot.g();

    FieldResidualReport rep;
    double gauss_sum = 0.0, faraday_sum = 0.0;
    int gauss_n = 0, faraday_n = 0;

    for (int ix = 1; ix < grid.n[0] - 1; ++ix)
        for (int iy = 1; iy < grid.n[1] - 1; ++iy)
            for (int iz = 1; iz < grid.n[2] - 1; ++iz) {
                const Vec3 x{grid.origin[0] + ix * h, grid.origin[1] + iy * h,
                             grid.origin[2] + iz * h};
                const FieldPoint here = fields_from_potential(pot, x, t);
                const FieldPoint tp = fields_from_potential(pot, x, t + tau);
                const FieldPoint tm = fields_from_potential(pot, x, t - tau);
                std::array<FieldPoint, 3> xp, xm;
                for (int d = 0; d < 3; ++d) {
                    xp[d] = fields_from_potential(pot, shifted(x, d, h), t);
                    xm[d] = fields_from_potential(pot, shifted(x, d, -h), t);
                }

                for (int a = 1; a <= ad; ++a) {
                    double gauss = 0.0;
                    for (int i = 0; i < 3; ++i)
                        gauss += (xp[i].B[i][a - 1] - xm[i].B[i][a - 1]) / (2.0 * h);
                    for (int i = 1; i <= 3; ++i) {
                        std::vector<double> Bi(ad);
                        for (int b = 0; b < ad; ++b) Bi[b] = here.B[i - 1][b];
                        gauss += structure_bilinear(fs, g, a, A_at(pot, i, x, t), Bi);
                    }
                    gauss_sum += std::abs(gauss);
                    rep.gauss_max = std::max(rep.gauss_max, std::abs(gauss));
                    ++gauss_n;

                    for (int i = 1; i <= 3; ++i) {
                        double r = (tp.B[i - 1][a - 1] - tm.B[i - 1][a - 1]) / (2.0 * tau);
                        for (int j = 1; j <= 3; ++j)
                            for (int k = 1; k <= 3; ++k) {
                                const double eps = levi_civita(i, j, k);
                                if (eps == 0.0) continue;
                                double term = (xp[j - 1].E[k - 1][a - 1] -
                                               xm[j - 1].E[k - 1][a - 1]) /
                                              (2.0 * h);
                                std::vector<double> Ek(ad);
                                for (int b = 0; b < ad; ++b) Ek[b] = here.E[k - 1][b];
                                term += structure_bilinear(fs, g, a, A_at(pot, j, x, t), Ek);
                                r += eps * term;
                            }
                        faraday_sum += std::abs(r);
                        rep.faraday_max = std::max(rep.faraday_max, std::abs(r));
                        ++faraday_n;
                    }
                }
                ++rep.samples;
            }
    if (gauss_n > 0) rep.gauss_mean = gauss_sum / gauss_n;
    if (faraday_n > 0) rep.faraday_mean = faraday_sum / faraday_n;
    return rep;
}

std::vector<double> charge_density_point(const GaugePotential& pot, const Vec3& x,
                                         double t, double h) {
    const int ad = pot.a_dim();
    const InternalStructure fs = internal_structure(ad);
    const FieldPoint here = fields_from_potential(pot, x, t);
    std::vector<double> rho(ad, 0.0);
    for (int a = 1; a <= ad; ++a) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            const FieldPoint fp = fields_from_potential(pot, shifted(x, i, h), t);
            const FieldPoint fm = fields_from_potential(pot, shifted(x, i, -h), t);
            acc += (fp.E[i][a - 1] - fm.E[i][a - 1]) / (2.0 * h);
        }
        for (int i = 1; i <= 3; ++i) {
            std::vector<double> Ei(ad);
            for (int b = 0; b < ad; ++b) Ei[b] = here.E[i - 1][b];
            acc += structure_bilinear(fs, pot.g(), a, A_at(pot, i, x, t), Ei);
        }
        rho[a - 1] = ad == 1 ? acc / kFourPi : acc;
    }
    return rho;
}

std::array<std::vector<double>, 3> current_density_point(const GaugePotential& pot,
                                                         const Vec3& x, double t,
                                                         double h) {
    const int ad = pot.a_dim();
    const InternalStructure fs = internal_structure(ad);
    const double tau = 0.5 * h;
    const FieldPoint here = fields_from_potential(pot, x, t);
    const FieldPoint tp = fields_from_potential(pot, x, t + tau);
    const FieldPoint tm = fields_from_potential(pot, x, t - tau);

    std::array<std::vector<double>, 3> j;
    for (auto& ji : j) ji.assign(ad, 0.0);
    for (int a = 1; a <= ad; ++a)
        for (int i = 1; i <= 3; ++i) {
            double acc = -(tp.E[i - 1][a - 1] - tm.E[i - 1][a - 1]) / (2.0 * tau);
            for (int jj = 1; jj <= 3; ++jj)
                for (int k = 1; k <= 3; ++k) {
                    const double eps = levi_civita(i, jj, k);
                    if (eps == 0.0) continue;
                    const FieldPoint fp = fields_from_potential(pot, shifted(x, jj - 1, h), t);
                    const FieldPoint fm = fields_from_potential(pot, shifted(x, jj - 1, -h), t);
                    double term = (fp.B[k - 1][a - 1] - fm.B[k - 1][a - 1]) / (2.0 * h);
                    std::vector<double> Bk(ad);
                    for (int b = 0; b < ad; ++b) Bk[b] = here.B[k - 1][b];
                    term += structure_bilinear(fs, pot.g(), a, A_at(pot, jj, x, t), Bk);
                    acc += eps * term;
                }
            j[i - 1][a - 1] = ad == 1 ? acc / kFourPi : acc;
        }
    return j;
}

SourceDensityReport source_densities(const GaugePotential& pot, const GridSpec& grid,
                                     double t) {
    if (grid.n[0] < 3 || grid.n[1] < 3 || grid.n[2] < 3)
        throw std::invalid_argument("grid too small for central differences");
    const int ad = pot.a_dim();
    SourceDensityReport rep;
    rep.four_pi_applied = (ad == 1);
    double rho_sum = 0.0, j_sum = 0.0;
    int rho_n = 0, j_n = 0;

    for (int ix = 1; ix < grid.n[0] - 1; ++ix)
        for (int iy = 1; iy < grid.n[1] - 1; ++iy)
            for (int iz = 1; iz < grid.n[2] - 1; ++iz) {
                const Vec3 x{grid.origin[0] + ix * grid.h, grid.origin[1] + iy * grid.h,
                             grid.origin[2] + iz * grid.h};
                const auto rho = charge_density_point(pot, x, t, grid.h);
                const auto j = current_density_point(pot, x, t, grid.h);
                for (int a = 0; a < ad; ++a) {
                    rho_sum += std::abs(rho[a]);
                    rep.rho_max = std::max(rep.rho_max, std::abs(rho[a]));
                    ++rho_n;
                    for (int i = 0; i < 3; ++i) {
                        j_sum += std::abs(j[i][a]);
                        rep.j_max = std::max(rep.j_max, std::abs(j[i][a]));
                        ++j_n;
                    }
                }
                ++rep.samples;
            }
    if (rho_n > 0) rep.rho_mean = rho_sum / rho_n;
    if (j_n > 0) rep.j_mean = j_sum / j_n;
    return rep;
}

ContinuityReport continuity_residual(const GaugePotential& pot, const GridSpec& grid,
                                     double t, double dt) {
    if (grid.n[0] < 3 || grid.n[1] < 3 || grid.n[2] < 3)
        throw std::invalid_argument("grid too small for central differences");
    const int ad = pot.a_dim();
    const double h = grid.h;
    const double tau = dt > 0.0 ? dt : 0.5 * h;

    ContinuityReport rep;
    rep.exact_sources_used = pot.has_exact_sources();
    double sum = 0.0;
    int count = 0;

    std::vector<double> rho_p(ad), rho_m(ad), scratch(ad);
    std::array<std::vector<double>, 3> j_p, j_m, j_scr;

    auto sources_at = [&](const Vec3& x, double tt, std::vector<double>& rho,
                          std::array<std::vector<double>, 3>& j) {
        if (rep.exact_sources_used) {
            pot.exact_sources(x, tt, rho, j);
        } else {
            rho = charge_density_point(pot, x, tt, h);
            j = current_density_point(pot, x, tt, h);
        }
    };

    for (int ix = 1; ix < grid.n[0] - 1; ++ix)
        for (int iy = 1; iy < grid.n[1] - 1; ++iy)
            for (int iz = 1; iz < grid.n[2] - 1; ++iz) {
                const Vec3 x{grid.origin[0] + ix * h, grid.origin[1] + iy * h,
                             grid.origin[2] + iz * h};
                sources_at(x, t + tau, rho_p, j_p);
                sources_at(x, t - tau, rho_m, j_m);
                std::vector<double> res(ad);
                for (int a = 0; a < ad; ++a)
                    res[a] = (rho_p[a] - rho_m[a]) / (2.0 * tau);
                for (int d = 0; d < 3; ++d) {
                    sources_at(shifted(x, d, h), t, scratch, j_p);
                    sources_at(shifted(x, d, -h), t, rho_m, j_m);
                    for (int a = 0; a < ad; ++a)
                        res[a] += (j_p[d][a] - j_m[d][a]) / (2.0 * h);
                }
                for (int a = 0; a < ad; ++a) {
                    sum += std::abs(res[a]);
                    rep.max_abs = std::max(rep.max_abs, std::abs(res[a]));
                    ++count;
                }
                ++rep.samples;
            }
    if (count > 0) rep.mean_abs = sum / count;
    return rep;
}

AlgebraObstructionReport isospin_algebra_check(int a_dim) {
    AlgebraObstructionReport rep;
    rep.a_dim = a_dim;
    if (a_dim == 1) {
        rep.abelian = true;
        return rep;
    }
    const InternalStructure fs = internal_structure(a_dim);
    if (a_dim == 3) {
        // adjoint matrices (T_a)_{bc} = -f_abc; closure [T_a,T_b] = f_abc T_c
        double worst = 0.0;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int r = 1; r <= 3; ++r)
                    for (int s = 1; s <= 3; ++s) {
                        double comm = 0.0;
                        for (int k = 1; k <= 3; ++k)
                            comm += (-fs.f(a, r, k)) * (-fs.f(b, k, s)) -
                                    (-fs.f(b, r, k)) * (-fs.f(a, k, s));
                        double rhs = 0.0;
                        for (int c = 1; c <= 3; ++c) rhs += fs.f(a, b, c) * (-fs.f(c, r, s));
                        worst = std::max(worst, std::abs(comm - rhs));
                    }
        rep.closure_max_dev = worst;
        return rep;
    }
    // a_dim == 7: Jacobiator J_abcd = f_abe f_ecd + f_bce f_ead + f_cae f_ebd
    auto jac = [&](int a, int b, int c, int d) {
        double acc = 0.0;
        for (int e = 1; e <= 7; ++e)
            acc += fs.f(a, b, e) * fs.f(e, c, d) + fs.f(b, c, e) * fs.f(e, a, d) +
                   fs.f(c, a, e) * fs.f(e, b, d);
        return acc;
    };
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b)
            for (int c = 1; c <= 7; ++c)
                for (int d = 1; d <= 7; ++d)
                    rep.jacobiator_max = std::max(rep.jacobiator_max, std::abs(jac(a, b, c, d)));
    rep.jacobiator_1245 = jac(1, 2, 4, 5);
    return rep;
}

}  // namespace hqm
