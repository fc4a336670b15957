#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "topocs/errors.hpp"
#include "topocs/geometry.hpp"

using namespace topocs;

namespace {

constexpr double kPi = std::numbers::pi;

double dist3(const Point3& a, const Point3& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

const TorusShape kShape{1.0, 0.5, 0.0, 1.0};

}  // namespace

TEST_CASE("embeddings at pinned points") {
    const Point3 p = torus_embed(kShape, kPi / 2.0, 0.0);
    CHECK(p.x == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(p.z) < 1e-15);

    // top of the tube: Z = l + r
    TorusShape lifted = kShape;
    lifted.l = 0.25;
    CHECK(torus_embed(lifted, 0.0, 1.2).z == doctest::Approx(0.75).epsilon(1e-15));

    // outer equator is a ring of radius R + r
    for (double phi = 0.0; phi < 2.0 * kPi; phi += 0.37) {
        const Point3 q = torus_embed(kShape, kPi / 2.0, phi);
        CHECK(std::hypot(q.x, q.y) == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(std::abs(q.z) < 1e-15);
    }

    const TorusShape bad_minor{1.0, 1.5, 0.0, 1.0};
    CHECK_THROWS_AS(bad_minor.validate(), std::invalid_argument);
    const TorusShape bad_mass{1.0, 0.5, 0.0, -1.0};
    CHECK_THROWS_AS(bad_mass.validate(), std::invalid_argument);
}

TEST_CASE("half-angle constraint") {
    CHECK(mobius_constraint(0.0) == kPi / 2.0);
    CHECK(mobius_constraint(kPi) == kPi);
    // one full sweep of phi advances theta by half a turn; 4 pi closes it
    CHECK(mobius_constraint(3.0 + 4.0 * kPi) - mobius_constraint(3.0) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("strip boundary equals the constrained torus curve") {
    const double r = 0.5;
    const double l = 0.2;
    TorusShape shape = kShape;
    shape.l = l;
    for (int i = 0; i < 1000; ++i) {
        const double phi = -4.0 * kPi + 8.0 * kPi * i / 999.0;
        const Point3 a = mobius_embed(r, l, phi);
        const Point3 b = torus_embed(shape, mobius_constraint(phi), phi);
        CHECK(dist3(a, b) < 1e-12);
    }
    // the edge does not close after one turn but does after two
    CHECK(dist3(mobius_embed(r, l, 0.0), mobius_embed(r, l, 2.0 * kPi)) ==
          doctest::Approx(2.0 * r).epsilon(1e-12));
    CHECK(dist3(mobius_embed(r, l, 0.0), mobius_embed(r, l, 4.0 * kPi)) < 1e-12);
}

TEST_CASE("kinetic Lagrangian") {
    // circular run around the outer equator
    const Coords ring{kPi / 2.0, 0.3, 0.0};
    CHECK(lagrangian_embedding(kShape, ring, {0.0, 1.0, 0.0}) ==
          doctest::Approx(0.5 * 1.5 * 1.5).epsilon(1e-15));

    // pure axial motion
    CHECK(lagrangian_embedding(kShape, ring, {0.0, 0.0, 2.0}) ==
          doctest::Approx(2.0).epsilon(1e-15));

    // sin(theta) symmetry about the equator
    const Velocities v{0.3, 0.7, 0.2};
    CHECK(lagrangian_embedding(kShape, {1.1, 0.0, 0.0}, v) ==
          doctest::Approx(lagrangian_embedding(kShape, {kPi - 1.1, 0.0, 0.0}, v)).epsilon(1e-14));

    // the printed torus form carries an extra (m/2)(r^2/4) phi_dot^2
    for (double phidot : {0.0, 0.5, 1.0, 2.0}) {
        const Velocities vv{0.3, phidot, 0.2};
        const Coords q{0.8, 0.0, 0.0};
        const double gap = lagrangian_torus_printed(kShape, q, vv) -
                           lagrangian_embedding(kShape, q, vv);
        CHECK(gap == doctest::Approx(0.5 * (0.25 * 0.25) * phidot * phidot).epsilon(1e-13));
    }
}

TEST_CASE("Legendre transform round trip") {
    const Coords q{0.8, 1.3, -0.1};
    const Velocities v{0.4, -0.9, 0.6};
    const Momenta p = legendre(kShape, q, v);
    const Velocities back = velocities_from_momenta(kShape, q, p);
    CHECK(back.theta == doctest::Approx(v.theta).epsilon(1e-12));
    CHECK(back.phi == doctest::Approx(v.phi).epsilon(1e-12));
    CHECK(back.z0 == doctest::Approx(v.z0).epsilon(1e-12));

    // the two momentum conventions agree except for the p_phi bracket term
    const Momenta pp = legendre_printed(kShape, q, v);
    CHECK(pp.p_theta == doctest::Approx(p.p_theta).epsilon(1e-14));
    CHECK(pp.p_z == doctest::Approx(p.p_z).epsilon(1e-14));
    CHECK(pp.p_phi - p.p_phi ==
          doctest::Approx(kShape.m * v.phi * 0.25 * 0.25).epsilon(1e-13));
}

TEST_CASE("Hamiltonian forms agree away from the coordinate singularity") {
    for (double theta : {0.0, 0.4, 0.8, 1.2, 2.0, 2.6, 3.1}) {
        const Coords q{theta, 0.9, 0.0};
        const Momenta p{0.3, -1.1, 0.7};
        CHECK(hamiltonian_printed(kShape, q, p) ==
              doctest::Approx(hamiltonian_oracle(kShape, q, p)).epsilon(1e-12));
    }

    const Coords sing{kPi / 2.0, 0.0, 0.0};
    const Momenta p{0.3, -1.1, 0.7};
    CHECK_THROWS_AS((void)hamiltonian_printed(kShape, sing, p), SingularityError);
    CHECK_THROWS_AS((void)hamiltonian_oracle(kShape, sing, p), SingularityError);
    CHECK_THROWS_AS((void)velocities_from_momenta(kShape, sing, p), SingularityError);
}

TEST_CASE("Legendre identity H = p.qdot - L on random nonsingular states") {
    std::mt19937 gen(20240817u);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> vel(-1.5, 1.5);
    int tested = 0;
    while (tested < 100) {
        const Coords q{ang(gen), ang(gen), vel(gen)};
        if (std::abs(std::cos(q.theta)) < 0.1) continue;
        const Velocities v{vel(gen), vel(gen), vel(gen)};
        const Momenta p = legendre(kShape, q, v);
        const double h = hamiltonian_oracle(kShape, q, p);
        const double pq = p.p_theta * v.theta + p.p_phi * v.phi + p.p_z * v.z0;
        const double l = lagrangian_embedding(kShape, q, v);
        CHECK(std::abs(h - (pq - l)) < 1e-12);
        ++tested;
    }
}

TEST_CASE("orbit closure on the torus and the strip") {
    // outer-equator orbit returns after one turn of phi
    const Trajectory torus = integrate_to_phi(kShape, Constraint::None,
                                              {kPi / 2.0, 0.0, 0.0}, {0.0, 1.0, 0.0},
                                              1e-3, 2.0 * kPi);
    REQUIRE(!torus.samples.empty());
    CHECK(!torus.truncated);
    CHECK(dist3(torus.samples.front().pos, torus.samples.back().pos) < 1e-9);
    CHECK(torus.samples.back().q.phi == doctest::Approx(2.0 * kPi).epsilon(1e-12));

    // boundary-following strip orbit: zero transverse momentum closes at 4 pi
    const double r = kShape.r;
    const Velocities v0{0.0, 1.0, 0.5 * r * std::cos(0.0)};
    const Trajectory m4 = integrate_to_phi(kShape, Constraint::Mobius, {0.0, 0.0, 0.0}, v0,
                                           1e-3, 4.0 * kPi);
    REQUIRE(!m4.samples.empty());
    CHECK(dist3(m4.samples.front().pos, m4.samples.back().pos) < 1e-9);

    // ... but is on the far edge after only 2 pi
    const Trajectory m2 = integrate_to_phi(kShape, Constraint::Mobius, {0.0, 0.0, 0.0}, v0,
                                           1e-3, 2.0 * kPi);
    CHECK(m2.samples.front().pos.x == doctest::Approx(1.0 + r).epsilon(1e-12));
    CHECK(m2.samples.back().pos.x == doctest::Approx(1.0 - r).epsilon(1e-6));
    CHECK(dist3(m2.samples.front().pos, m2.samples.back().pos) > r);

    CHECK_THROWS_AS((void)integrate_to_phi(kShape, Constraint::None, {kPi / 2.0, 0.0, 0.0},
                                           {0.0, -1.0, 0.0}, 1e-3, 2.0 * kPi),
                    std::domain_error);
    CHECK_THROWS_AS((void)integrate_to_phi(kShape, Constraint::None, {kPi / 2.0, 0.0, 0.0},
                                           {0.0, 1.0, 0.0}, -1e-3, 2.0 * kPi),
                    std::invalid_argument);
}

TEST_CASE("fixed-step integration conserves energy") {
    // theta-oscillating surface orbit, ten phi periods
    const int steps = static_cast<int>(10.0 * 2.0 * kPi / 1e-3);
    const Trajectory surf = integrate(kShape, Constraint::None, {kPi / 2.0 + 0.3, 0.0, 0.0},
                                      {0.2, 1.0, 0.0}, 1e-3, steps);
    REQUIRE(surf.samples.size() == static_cast<size_t>(steps) + 1);
    CHECK(!surf.truncated);
    const double e0 = surf.samples.front().energy;
    for (const auto& s : surf.samples) {
        CHECK(std::abs(s.energy - e0) < 1e-6 * std::abs(e0));
    }

    const Trajectory mob = integrate(kShape, Constraint::Mobius, {0.0, 0.0, 0.0},
                                     {0.0, 1.0, 0.1}, 1e-3, steps);
    const double em = mob.samples.front().energy;
    for (const auto& s : mob.samples) {
        CHECK(std::abs(s.energy - em) < 1e-6 * std::abs(em));
    }

    CHECK_THROWS_AS((void)integrate(kShape, Constraint::None, {0.0, 0.0, 0.0},
                                    {0.0, 1.0, 0.0}, 1e-3, 0),
                    std::invalid_argument);
}

TEST_CASE("figure meshes") {
    const Mesh torus = mesh(Surface::Torus, kShape, 12, 8);
    CHECK(torus.n_phi == 12);
    CHECK(torus.n_second == 8);
    CHECK(torus.vertices.size() == 12u * 8u);
    // vertex (0, 0) sits at (phi, theta) = (0, 0)
    CHECK(dist3(torus.vertices[0].pos, torus_embed(kShape, 0.0, 0.0)) == 0.0);

    const Mesh strip = mesh(Surface::Mobius, kShape, 16, 5);
    CHECK(strip.vertices.size() == 16u * 5u);
    // centerline (middle transverse sample) is the unit circle at Z = l
    for (int ip = 0; ip < strip.n_phi; ++ip) {
        const MeshVertex& v = strip.vertices[static_cast<size_t>(ip) * 5 + 2];
        CHECK(v.second == 0.0);
        CHECK(std::hypot(v.pos.x, v.pos.y) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(v.pos.z == kShape.l);
    }
    // transverse extremes reach +-r
    CHECK(strip.vertices[0].second == -kShape.r);
    CHECK(strip.vertices[4].second == kShape.r);

    CHECK_THROWS_AS((void)mesh(Surface::Torus, kShape, 3, 8), std::invalid_argument);
}

TEST_CASE("axial deformation") {
    const Point3 p{1.2, -0.4, 0.7};
    const Point3 d = deform_point(0.5, p);
    CHECK(d.z == p.z);  // height untouched
    CHECK(d.x == doctest::Approx(std::exp(-0.5) * p.x).epsilon(1e-15));
    CHECK(d.y == doctest::Approx(std::exp(-0.5) * p.y).epsilon(1e-15));

    // invertible: the opposite parameter restores the point
    const Point3 back = deform_point(-0.5, d);
    CHECK(std::abs(back.x - p.x) < 1e-15);
    CHECK(std::abs(back.y - p.y) < 1e-15);
    CHECK(back.z == p.z);

    // on labels: modulus shifts, winding untouched
    const MobiusLabel lab{0.1, 0.5, 7.3};
    const MobiusLabel moved = deform_label(0.5, lab);
    CHECK(moved.phi == lab.phi);
    CHECK(moved.r == lab.r);
    CHECK(moved.l == doctest::Approx(lab.l + 0.5).epsilon(1e-15));
    const MobiusLabel back_lab = deform_label(-0.5, moved);
    CHECK(back_lab.l == doctest::Approx(lab.l).epsilon(1e-15));
}
