#include "topocs/coherent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "topocs/errors.hpp"
#include "topocs/theta.hpp"

namespace topocs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

void check_cutoff(int cutoff) {
    if (cutoff < 4) {
        throw std::invalid_argument("coherent state cutoff must be >= 4");
    }
}

// z^{-j} computed from the label data e^{l j - i alpha j}; no log branch.
Complex label_inverse_power(const CoherentLabel& lbl, int j) {
    const double mag = std::exp(lbl.l * j);
    const double ang = -lbl.alpha * j;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

// xi^{-j} for a raw complex label value.
Complex value_inverse_power(Complex xi, int j) {
    if (xi == Complex(0.0, 0.0)) {
        throw std::domain_error("coherent label value must be nonzero");
    }
    const double mag = std::exp(-std::log(std::abs(xi)) * j);
    const double ang = -std::arg(xi) * j;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

// One theta3 factor of the closed-form overlap, from the label data.
Complex overlap_theta_axis(const CoherentLabel& a, const CoherentLabel& b) {
    // ln(conj(z) z') = -(l + l') + i (alpha' - alpha), hence
    // v = (i / 2 pi) ln(conj(z) z').
    const Complex v((a.alpha - b.alpha) / kTwoPi, -(a.l + b.l) / kTwoPi);
    return theta3({v, Complex(0.0, 1.0 / std::numbers::pi)});
}

}  // namespace

Complex CoherentLabel::z() const {
    const double mag = std::exp(-l);
    return {mag * std::cos(alpha), mag * std::sin(alpha)};
}

LatticeState torus_coherent(const TorusLabel& label, int cutoff) {
    check_cutoff(cutoff);
    LatticeState s(cutoff);
    for (int j1 = -cutoff; j1 <= cutoff; ++j1) {
        const Complex f1 = label_inverse_power(label.axis1, j1);
        for (int j2 = -cutoff; j2 <= cutoff; ++j2) {
            const Complex f2 = label_inverse_power(label.axis2, j2);
            const double gauss = std::exp(-0.5 * (static_cast<double>(j1) * j1 +
                                                  static_cast<double>(j2) * j2));
            s.add({j1, j2}, f1 * f2 * gauss);
        }
    }
    return s;
}

TwoModeState two_mode_coherent(const TorusLabel& zlabel, const TorusLabel& wlabel, int cutoff) {
    check_cutoff(cutoff);
    const LatticeState zs = torus_coherent(zlabel, cutoff);
    const LatticeState ws = torus_coherent(wlabel, cutoff);
    return TwoModeState::tensor(zs, ws);
}

Complex overlap_bruteforce(const LatticeState& a, const LatticeState& b) {
    return inner(a, b);
}

Complex overlap_bruteforce(const TwoModeState& a, const TwoModeState& b) {
    return inner(a, b);
}

Complex overlap_theta(const TorusLabel& z, const TorusLabel& zprime) {
    return overlap_theta_axis(z.axis1, zprime.axis1) * overlap_theta_axis(z.axis2, zprime.axis2);
}

Complex overlap_theta(const TorusLabel& z, const TorusLabel& w, const TorusLabel& zprime,
                      const TorusLabel& wprime) {
    return overlap_theta(z, zprime) * overlap_theta(w, wprime);
}

Complex mobius_label_value(const MobiusLabel& label) {
    // Only the winding class mod 4 pi matters for the value; reducing first
    // keeps the 4 pi return bit-exact.
    const double phi = std::fmod(label.phi, kFourPi);
    const double half = phi / 2.0;
    const double mag = std::exp(-(label.l + label.r * std::sin(half))) *
                       (1.0 + label.r * std::cos(half));
    return {mag * std::cos(phi), mag * std::sin(phi)};
}

Complex mobius_label_value_alt_sign(const MobiusLabel& label) {
    const double phi = std::fmod(label.phi, kFourPi);
    const double half = phi / 2.0;
    const double mag = std::exp(-(label.l - label.r * std::sin(half))) *
                       (1.0 + label.r * std::cos(half));
    return {mag * std::cos(phi), mag * std::sin(phi)};
}

LatticeState mobius_coherent(const MobiusLabel& label, int cutoff) {
    return mobius_coherent_from_value(mobius_label_value(label), cutoff);
}

LatticeState mobius_coherent_from_value(Complex xi, int cutoff) {
    check_cutoff(cutoff);
    LatticeState s(cutoff);
    for (int j = -cutoff; j <= cutoff; ++j) {
        const double gauss = std::exp(-0.5 * static_cast<double>(j) * j);
        s.add({j, 0}, value_inverse_power(xi, j) * gauss);
    }
    return s;
}

MobiusOverlap mobius_overlap(const MobiusLabel& a, const MobiusLabel& b, int cutoff) {
    const Complex xa = mobius_label_value(a);
    const Complex xb = mobius_label_value(b);

    MobiusOverlap out;
    out.brute = inner(mobius_coherent_from_value(xa, cutoff),
                      mobius_coherent_from_value(xb, cutoff));
    // sum_j (conj(xa) xb)^{-j} e^{-j^2}; the log branch is irrelevant since
    // j is integer.
    out.closed_form = gaussian_lattice_sum(-std::log(std::conj(xa) * xb));
    return out;
}

BicomplexLabel xi_torus_label(double l, double r, double theta, double phi) {
    BicomplexLabel out;
    const double imag_mag = std::exp(-(l + r * std::cos(theta))) * (1.0 + r * std::sin(theta));
    out.i_part = {imag_mag * std::cos(phi), imag_mag * std::sin(phi)};
    const double s = std::sin(phi);
    const double kmag = std::exp(-kTwoPi * s * s);
    out.k_part = {kmag * std::cos(theta), kmag * std::sin(theta)};
    return out;
}

XiFactorization xi_factorize(double l, double r, double theta, double phi) {
    XiFactorization out;
    const double half = phi / 2.0;
    const double mob_mag =
        std::exp(-(l - r * std::sin(half))) * (1.0 + r * std::cos(half));
    out.xi_mobius = {mob_mag * std::cos(phi), mob_mag * std::sin(phi)};

    // Remainder so that the componentwise product restores xi_Torus:
    // i-plane e^{-r (cos theta + sin(phi/2))} (1 + r sin theta)/(1 + r cos(phi/2)),
    // k-plane e^{-2 pi sin^2 phi + k theta}.
    const double sec_mag = std::exp(-r * (std::cos(theta) + std::sin(half))) *
                           (1.0 + r * std::sin(theta)) / (1.0 + r * std::cos(half));
    out.xi_second.i_part = {sec_mag, 0.0};
    const double s = std::sin(phi);
    const double kmag = std::exp(-kTwoPi * s * s);
    out.xi_second.k_part = {kmag * std::cos(theta), kmag * std::sin(theta)};
    return out;
}

BicomplexLabel bicomplex_product(const BicomplexLabel& a, const BicomplexLabel& b) {
    return {a.i_part * b.i_part, a.k_part * b.k_part};
}

LatticeState xi_torus_state(const XiFactorization& f, int cutoff) {
    check_cutoff(cutoff);
    LatticeState s(cutoff);
    for (int j = -cutoff; j <= cutoff; ++j) {
        const Complex fj = value_inverse_power(f.xi_mobius, j);
        for (int m = -cutoff; m <= cutoff; ++m) {
            const Complex fm = value_inverse_power(f.xi_second.i_part, m);
            const double gauss = std::exp(-0.5 * (static_cast<double>(j) * j +
                                                  static_cast<double>(m) * m));
            s.add({j, m}, fj * fm * gauss);
        }
    }
    return s;
}

LatticeState xi_torus_reference_state(int cutoff) {
    check_cutoff(cutoff);
    LatticeState s(cutoff);
    for (int j = -cutoff; j <= cutoff; ++j) {
        for (int m = -cutoff; m <= cutoff; ++m) {
            s.add({j, m}, std::exp(-0.5 * (static_cast<double>(j) * j +
                                           static_cast<double>(m) * m)));
        }
    }
    return s;
}

Complex projection_mobius(const XiFactorization& xi_t, const XiFactorization& xi_t_prime,
                          Complex xi_m, int cutoff) {
    check_cutoff(cutoff);
    const LatticeState mob = mobius_coherent_from_value(xi_m, cutoff);
    const LatticeState ref = xi_torus_reference_state(cutoff);

    const Complex den = inner(ref, mob) * inner(mob, ref);
    if (std::abs(den) < 1e-14) {
        throw DegenerateProjectionError("projection_mobius: reference overlap vanishes");
    }
    const LatticeState left = xi_torus_state(xi_t, cutoff);
    const LatticeState right = xi_torus_state(xi_t_prime, cutoff);
    return inner(left, mob) * inner(mob, right) / den;
}

Point3 deform_point(double zparam, const Point3& p) {
    const double scale = std::exp(-zparam);
    return {scale * p.x, scale * p.y, p.z};
}

MobiusLabel deform_label(double zparam, const MobiusLabel& label) {
    MobiusLabel out = label;
    out.l += zparam;  // modulus scaled by e^{-zparam}, winding unchanged
    return out;
}

}  // namespace topocs
