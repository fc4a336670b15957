#ifndef TOPOCS_GEOMETRY_HPP
#define TOPOCS_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

#include "topocs/coherent.hpp"  // Point3

// Classical layer: torus and Mobius embeddings, the constraint reduction
// theta = (phi + pi)/2, Lagrangian/Hamiltonian evaluation with the
// embedding-derived forms as the authoritative dynamical system, RK4
// trajectory integration, and mesh generation for figure data.

namespace topocs {

struct TorusShape {
    double R = 1.0;  // major radius
    double r = 0.5;  // minor radius, 0 < r < R
    double l = 0.0;  // axial offset
    double m = 1.0;  // mass

    void validate() const;
};

struct Coords {
    double theta = 0.0;
    double phi = 0.0;
    double z0 = 0.0;
};

struct Velocities {
    double theta = 0.0;
    double phi = 0.0;
    double z0 = 0.0;
};

struct Momenta {
    double p_theta = 0.0;
    double p_phi = 0.0;  // J_0
    double p_z = 0.0;    // L_0
};

Point3 torus_embed(const TorusShape& shape, double theta, double phi);

// theta = (phi + pi)/2, winding preserved.
double mobius_constraint(double phi);

// Boundary curve of the strip: R = 1, transverse offset r. Exactly equals
// torus_embed(R=1) composed with the constraint, so Z = l - r sin(phi/2).
Point3 mobius_embed(double r, double l, double phi);

// Kinetic energy of the embedded point; exact quadratic form in velocities.
double lagrangian_embedding(const TorusShape& shape, const Coords& q, const Velocities& qdot);

// The printed torus Lagrangian, bracket (R + r sin theta)^2 + r^2/4 included
// verbatim; differs from the embedding form by (m/2)(r^2/4) phi_dot^2.
double lagrangian_torus_printed(const TorusShape& shape, const Coords& q, const Velocities& qdot);

// Mass matrix of the embedding Lagrangian in (theta, phi, z0) order; singular
// on the ring cos(theta) = 0 where the coordinates degenerate.
Eigen::Matrix3d mass_matrix(const TorusShape& shape, const Coords& q);

Momenta legendre(const TorusShape& shape, const Coords& q, const Velocities& qdot);
Momenta legendre_printed(const TorusShape& shape, const Coords& q, const Velocities& qdot);

// Throw SingularityError when |cos theta| < 1e-9.
Velocities velocities_from_momenta(const TorusShape& shape, const Coords& q, const Momenta& p);
double hamiltonian_oracle(const TorusShape& shape, const Coords& q, const Momenta& p);
double hamiltonian_printed(const TorusShape& shape, const Coords& q, const Momenta& p);

enum class Constraint { None, Mobius };

struct TrajectorySample {
    double t = 0.0;
    Coords q;
    Point3 pos;
    double energy = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool truncated = false;
};

// Fixed-step RK4.
//
// Constraint::None integrates the particle on the torus surface (theta, phi
// dynamical, z0 held at its initial value) -- the free 3-coordinate system
// is a particle in flat space and has no closed circulating orbits, so the
// surface restriction is what realizes the figure trajectories.
//
// Constraint::Mobius eliminates theta via the constraint before the Legendre
// transform and integrates the reduced (phi, z0) system; the embedded sample
// tracks the strip boundary point.
Trajectory integrate(const TorusShape& shape, Constraint constraint, const Coords& initial,
                     const Velocities& initial_velocity, double dt, int steps);

// Same systems, but integrates until phi has advanced by phi_span and lands
// the last sample on the crossing (the final step length is solved for, so
// closure checks at 2 pi / 4 pi are not polluted by time-grid rounding).
// Requires phi monotonically increasing along the trajectory.
Trajectory integrate_to_phi(const TorusShape& shape, Constraint constraint, const Coords& initial,
                            const Velocities& initial_velocity, double dt, double phi_span);

enum class Surface { Torus, Mobius };

struct MeshVertex {
    double phi = 0.0;
    double second = 0.0;  // theta for the torus, transverse offset for the strip
    Point3 pos;
};

struct Mesh {
    Surface surface = Surface::Torus;
    int n_phi = 0;
    int n_second = 0;
    std::vector<MeshVertex> vertices;  // row-major, phi-major
};

// Torus: full (phi, theta) grid. Mobius: phi in [0, 2 pi), transverse sweep
// in [-r, r] across the normal section. Resolutions must be >= 4.
Mesh mesh(Surface surface, const TorusShape& shape, int n_phi, int n_second);

}  // namespace topocs

#endif
