#include "topocs/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "topocs/errors.hpp"

namespace topocs {

namespace {

constexpr double kSingularCos = 1e-9;

void check_nonsingular(const TorusShape& shape, double theta) {
    (void)shape;
    if (std::abs(std::cos(theta)) < kSingularCos) {
        throw SingularityError("coordinate singularity at cos(theta) = 0");
    }
}

// Reduced Mobius mass matrix in (phi, z0), R from the shape.
Eigen::Matrix2d mobius_mass(const TorusShape& shape, double phi) {
    const double c2 = std::cos(phi / 2.0);
    const double rho = shape.R + shape.r * c2;
    Eigen::Matrix2d mm;
    mm(0, 0) = shape.m * (rho * rho + shape.r * shape.r / 4.0);
    mm(0, 1) = -shape.m * shape.r * c2 / 2.0;
    mm(1, 0) = mm(0, 1);
    mm(1, 1) = shape.m;
    return mm;
}

Eigen::Matrix2d mobius_mass_dphi(const TorusShape& shape, double phi) {
    const double s2 = std::sin(phi / 2.0);
    const double c2 = std::cos(phi / 2.0);
    const double rho = shape.R + shape.r * c2;
    Eigen::Matrix2d dm;
    dm(0, 0) = -shape.m * shape.r * rho * s2;
    dm(0, 1) = shape.m * shape.r * s2 / 4.0;
    dm(1, 0) = dm(0, 1);
    dm(1, 1) = 0.0;
    return dm;
}

}  // namespace

void TorusShape::validate() const {
    if (R <= 0.0 || r <= 0.0 || r >= R || m <= 0.0) {
        throw std::invalid_argument("TorusShape: requires R > 0, 0 < r < R, m > 0");
    }
}

Point3 torus_embed(const TorusShape& shape, double theta, double phi) {
    const double s = std::sin(theta);
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);
    return {shape.R * cphi + shape.r * s * cphi,
            shape.R * sphi + shape.r * s * sphi,
            shape.l + shape.r * std::cos(theta)};
}

double mobius_constraint(double phi) {
    return (phi + std::numbers::pi) / 2.0;
}

Point3 mobius_embed(double r, double l, double phi) {
    const double c2 = std::cos(phi / 2.0);
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);
    // Z carries the composed sign cos((phi+pi)/2) = -sin(phi/2).
    return {cphi + r * c2 * cphi, sphi + r * c2 * sphi, l - r * std::sin(phi / 2.0)};
}

double lagrangian_embedding(const TorusShape& shape, const Coords& q, const Velocities& qdot) {
    const double s = std::sin(q.theta);
    const double rho = shape.R + shape.r * s;
    return 0.5 * shape.m *
               (rho * rho * qdot.phi * qdot.phi + shape.r * shape.r * qdot.theta * qdot.theta +
                qdot.z0 * qdot.z0) -
           shape.m * shape.r * s * qdot.theta * qdot.z0;
}

double lagrangian_torus_printed(const TorusShape& shape, const Coords& q, const Velocities& qdot) {
    const double s = std::sin(q.theta);
    const double rho = shape.R + shape.r * s;
    return 0.5 * shape.m * qdot.phi * qdot.phi * (rho * rho + shape.r * shape.r / 4.0) +
           0.5 * shape.m * shape.r * shape.r * qdot.theta * qdot.theta -
           shape.m * shape.r * s * qdot.z0 * qdot.theta +
           0.5 * shape.m * qdot.z0 * qdot.z0;
}

Eigen::Matrix3d mass_matrix(const TorusShape& shape, const Coords& q) {
    const double s = std::sin(q.theta);
    const double rho = shape.R + shape.r * s;
    Eigen::Matrix3d mm = Eigen::Matrix3d::Zero();
    mm(0, 0) = shape.m * shape.r * shape.r;
    mm(0, 2) = -shape.m * shape.r * s;
    mm(2, 0) = mm(0, 2);
    mm(1, 1) = shape.m * rho * rho;
    mm(2, 2) = shape.m;
    return mm;
}

Momenta legendre(const TorusShape& shape, const Coords& q, const Velocities& qdot) {
    const Eigen::Matrix3d mm = mass_matrix(shape, q);
    const Eigen::Vector3d v(qdot.theta, qdot.phi, qdot.z0);
    const Eigen::Vector3d p = mm * v;
    return {p(0), p(1), p(2)};
}

Momenta legendre_printed(const TorusShape& shape, const Coords& q, const Velocities& qdot) {
    const double s = std::sin(q.theta);
    const double rho = shape.R + shape.r * s;
    Momenta p;
    p.p_phi = shape.m * qdot.phi * (rho * rho + shape.r * shape.r / 4.0);
    p.p_z = shape.m * (-shape.r * s * qdot.theta + qdot.z0);
    p.p_theta = shape.m * (shape.r * shape.r * qdot.theta - shape.r * s * qdot.z0);
    return p;
}

Velocities velocities_from_momenta(const TorusShape& shape, const Coords& q, const Momenta& p) {
    check_nonsingular(shape, q.theta);
    const Eigen::Matrix3d mm = mass_matrix(shape, q);
    const Eigen::Vector3d pv(p.p_theta, p.p_phi, p.p_z);
    const Eigen::Vector3d v = mm.ldlt().solve(pv);
    return {v(0), v(1), v(2)};
}

double hamiltonian_oracle(const TorusShape& shape, const Coords& q, const Momenta& p) {
    check_nonsingular(shape, q.theta);
    const Eigen::Matrix3d mm = mass_matrix(shape, q);
    const Eigen::Vector3d pv(p.p_theta, p.p_phi, p.p_z);
    return 0.5 * pv.dot(mm.ldlt().solve(pv));
}

double hamiltonian_printed(const TorusShape& shape, const Coords& q, const Momenta& p) {
    const double s = std::sin(q.theta);
    const double c = std::cos(q.theta);
    if (std::abs(c) < kSingularCos) {
        throw SingularityError("hamiltonian_printed: (r cos theta)^-2 pole");
    }
    const double rho = shape.R + shape.r * s;
    const double num = p.p_theta + shape.r * s * p.p_z;
    return 0.5 / shape.m *
           (p.p_phi * p.p_phi / (rho * rho) + num * num / (shape.r * c * shape.r * c) +
            p.p_z * p.p_z);
}

namespace {

// Surface (theta, phi) geodesic system, z0 frozen.
struct SurfaceState {
    double theta, phi, p_theta, p_phi;
};

SurfaceState surface_rhs(const TorusShape& shape, const SurfaceState& s) {
    const double rho = shape.R + shape.r * std::sin(s.theta);
    SurfaceState d;
    d.theta = s.p_theta / (shape.m * shape.r * shape.r);
    d.phi = s.p_phi / (shape.m * rho * rho);
    d.p_theta = s.p_phi * s.p_phi * shape.r * std::cos(s.theta) / (shape.m * rho * rho * rho);
    d.p_phi = 0.0;
    return d;
}

double surface_energy(const TorusShape& shape, const SurfaceState& s) {
    const double rho = shape.R + shape.r * std::sin(s.theta);
    return s.p_theta * s.p_theta / (2.0 * shape.m * shape.r * shape.r) +
           s.p_phi * s.p_phi / (2.0 * shape.m * rho * rho);
}

// Reduced Mobius (phi, z0) system.
struct MobiusState {
    double phi, z0, p_phi, p_z;
};

MobiusState mobius_rhs(const TorusShape& shape, const MobiusState& s) {
    const Eigen::Matrix2d mm = mobius_mass(shape, s.phi);
    const Eigen::Matrix2d inv = mm.inverse();
    const Eigen::Vector2d p(s.p_phi, s.p_z);
    const Eigen::Vector2d v = inv * p;
    // dH/dphi = -1/2 p^T A M' A p with A = M^{-1}
    const Eigen::Matrix2d dm = mobius_mass_dphi(shape, s.phi);
    const double dH = -0.5 * v.dot(dm * v);
    MobiusState d;
    d.phi = v(0);
    d.z0 = v(1);
    d.p_phi = -dH;
    d.p_z = 0.0;
    return d;
}

double mobius_energy(const TorusShape& shape, const MobiusState& s) {
    const Eigen::Matrix2d mm = mobius_mass(shape, s.phi);
    const Eigen::Vector2d p(s.p_phi, s.p_z);
    return 0.5 * p.dot(mm.inverse() * p);
}

SurfaceState surface_initial(const TorusShape& shape, const Coords& q, const Velocities& v) {
    const double rho = shape.R + shape.r * std::sin(q.theta);
    return {q.theta, q.phi, shape.m * shape.r * shape.r * v.theta, shape.m * rho * rho * v.phi};
}

MobiusState mobius_initial(const TorusShape& shape, const Coords& q, const Velocities& v) {
    const Eigen::Matrix2d mm = mobius_mass(shape, q.phi);
    const Eigen::Vector2d p0 = mm * Eigen::Vector2d(v.phi, v.z0);
    return {q.phi, q.z0, p0(0), p0(1)};
}

template <typename State, typename Rhs>
State rk4_step(const Rhs& rhs, const State& s, double dt, auto axpy) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, k1, dt / 2.0));
    const State k3 = rhs(axpy(s, k2, dt / 2.0));
    const State k4 = rhs(axpy(s, k3, dt));
    State out = s;
    out = axpy(out, k1, dt / 6.0);
    out = axpy(out, k2, dt / 3.0);
    out = axpy(out, k3, dt / 3.0);
    out = axpy(out, k4, dt / 6.0);
    return out;
}

// Steps until phi crosses phi_target, then solves the final step length so
// the last sample lands on the crossing (Newton on phi(dt), three sweeps).
template <typename State>
Trajectory run_to_phi(State s, double dt, double phi_target, auto rhs, auto axpy, auto phi_of,
                      auto sample_of) {
    constexpr long kStepLimit = 200000000;
    Trajectory traj;
    double t = 0.0;
    long guard = 0;
    while (true) {
        const TrajectorySample smp = sample_of(t, s);
        if (!std::isfinite(smp.energy)) {
            traj.truncated = true;
            return traj;
        }
        traj.samples.push_back(smp);
        if (rhs(s).phi <= 0.0) {
            throw std::domain_error("integrate_to_phi: phi is not monotonically increasing");
        }
        const State nxt = rk4_step(rhs, s, dt, axpy);
        if (phi_of(nxt) >= phi_target) break;
        s = nxt;
        t += dt;
        if (++guard > kStepLimit) {
            throw std::domain_error("integrate_to_phi: step limit exceeded");
        }
    }
    double dtf = (phi_target - phi_of(s)) / rhs(s).phi;
    State fin = s;
    for (int it = 0; it < 3; ++it) {
        fin = rk4_step(rhs, s, dtf, axpy);
        dtf -= (phi_of(fin) - phi_target) / rhs(fin).phi;
    }
    fin = rk4_step(rhs, s, dtf, axpy);
    traj.samples.push_back(sample_of(t + dtf, fin));
    return traj;
}

}  // namespace

Trajectory integrate(const TorusShape& shape, Constraint constraint, const Coords& initial,
                     const Velocities& initial_velocity, double dt, int steps) {
    shape.validate();
    if (dt <= 0.0 || steps < 1) {
        throw std::invalid_argument("integrate: requires dt > 0 and steps >= 1");
    }

    Trajectory traj;
    traj.samples.reserve(static_cast<size_t>(steps) + 1);

    if (constraint == Constraint::None) {
        SurfaceState s{initial.theta, initial.phi,
                       shape.m * shape.r * shape.r * initial_velocity.theta, 0.0};
        {
            const double rho = shape.R + shape.r * std::sin(initial.theta);
            s.p_phi = shape.m * rho * rho * initial_velocity.phi;
        }
        const auto axpy = [](const SurfaceState& a, const SurfaceState& b, double h) {
            return SurfaceState{a.theta + h * b.theta, a.phi + h * b.phi,
                                a.p_theta + h * b.p_theta, a.p_phi + h * b.p_phi};
        };
        const auto rhs = [&shape](const SurfaceState& st) { return surface_rhs(shape, st); };
        TorusShape embed_shape = shape;
        embed_shape.l = initial.z0;
        for (int i = 0; i <= steps; ++i) {
            TrajectorySample sample;
            sample.t = i * dt;
            sample.q = {s.theta, s.phi, initial.z0};
            sample.pos = torus_embed(embed_shape, s.theta, s.phi);
            sample.energy = surface_energy(shape, s);
            if (!std::isfinite(sample.energy)) {
                traj.truncated = true;
                break;
            }
            traj.samples.push_back(sample);
            if (i < steps) {
                s = rk4_step(rhs, s, dt, axpy);
            }
        }
    } else {
        const Eigen::Matrix2d mm = mobius_mass(shape, initial.phi);
        const Eigen::Vector2d p0 = mm * Eigen::Vector2d(initial_velocity.phi, initial_velocity.z0);
        MobiusState s{initial.phi, initial.z0, p0(0), p0(1)};
        const auto axpy = [](const MobiusState& a, const MobiusState& b, double h) {
            return MobiusState{a.phi + h * b.phi, a.z0 + h * b.z0, a.p_phi + h * b.p_phi,
                               a.p_z + h * b.p_z};
        };
        const auto rhs = [&shape](const MobiusState& st) { return mobius_rhs(shape, st); };
        for (int i = 0; i <= steps; ++i) {
            TrajectorySample sample;
            sample.t = i * dt;
            sample.q = {mobius_constraint(s.phi), s.phi, s.z0};
            sample.pos = mobius_embed(shape.r, s.z0, s.phi);
            sample.energy = mobius_energy(shape, s);
            if (!std::isfinite(sample.energy)) {
                traj.truncated = true;
                break;
            }
            traj.samples.push_back(sample);
            if (i < steps) {
                s = rk4_step(rhs, s, dt, axpy);
            }
        }
    }
    return traj;
}

Trajectory integrate_to_phi(const TorusShape& shape, Constraint constraint, const Coords& initial,
                            const Velocities& initial_velocity, double dt, double phi_span) {
    shape.validate();
    if (dt <= 0.0 || phi_span <= 0.0) {
        throw std::invalid_argument("integrate_to_phi: requires dt > 0 and phi_span > 0");
    }
    const double target = initial.phi + phi_span;

    if (constraint == Constraint::None) {
        const SurfaceState s0 = surface_initial(shape, initial, initial_velocity);
        TorusShape embed_shape = shape;
        embed_shape.l = initial.z0;
        const double z0 = initial.z0;
        return run_to_phi(
            s0, dt, target, [&shape](const SurfaceState& st) { return surface_rhs(shape, st); },
            [](const SurfaceState& a, const SurfaceState& b, double h) {
                return SurfaceState{a.theta + h * b.theta, a.phi + h * b.phi,
                                    a.p_theta + h * b.p_theta, a.p_phi + h * b.p_phi};
            },
            [](const SurfaceState& st) { return st.phi; },
            [&](double t, const SurfaceState& st) {
                TrajectorySample smp;
                smp.t = t;
                smp.q = {st.theta, st.phi, z0};
                smp.pos = torus_embed(embed_shape, st.theta, st.phi);
                smp.energy = surface_energy(shape, st);
                return smp;
            });
    }

    const MobiusState s0 =
        mobius_initial(shape, {mobius_constraint(initial.phi), initial.phi, initial.z0},
                       initial_velocity);
    return run_to_phi(
        s0, dt, target, [&shape](const MobiusState& st) { return mobius_rhs(shape, st); },
        [](const MobiusState& a, const MobiusState& b, double h) {
            return MobiusState{a.phi + h * b.phi, a.z0 + h * b.z0, a.p_phi + h * b.p_phi,
                               a.p_z + h * b.p_z};
        },
        [](const MobiusState& st) { return st.phi; },
        [&shape](double t, const MobiusState& st) {
            TrajectorySample smp;
            smp.t = t;
            smp.q = {mobius_constraint(st.phi), st.phi, st.z0};
            smp.pos = mobius_embed(shape.r, st.z0, st.phi);
            smp.energy = mobius_energy(shape, st);
            return smp;
        });
}

Mesh mesh(Surface surface, const TorusShape& shape, int n_phi, int n_second) {
    shape.validate();
    if (n_phi < 4 || n_second < 4) {
        throw std::invalid_argument("mesh: resolutions must be >= 4");
    }
    Mesh out;
    out.surface = surface;
    out.n_phi = n_phi;
    out.n_second = n_second;
    out.vertices.reserve(static_cast<size_t>(n_phi) * n_second);

    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (surface == Surface::Torus) {
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = two_pi * ip / n_phi;
            for (int it = 0; it < n_second; ++it) {
                const double theta = two_pi * it / n_second;
                out.vertices.push_back({phi, theta, torus_embed(shape, theta, phi)});
            }
        }
    } else {
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = two_pi * ip / n_phi;
            const double c2 = std::cos(phi / 2.0);
            const double s2 = std::sin(phi / 2.0);
            for (int iw = 0; iw < n_second; ++iw) {
                const double w = -shape.r + 2.0 * shape.r * iw / (n_second - 1);
                const Point3 p{shape.R * std::cos(phi) + w * c2 * std::cos(phi),
                               shape.R * std::sin(phi) + w * c2 * std::sin(phi),
                               shape.l - w * s2};
                out.vertices.push_back({phi, w, p});
            }
        }
    }
    return out;
}

}  // namespace topocs
