#ifndef TOPOCS_COHERENT_HPP
#define TOPOCS_COHERENT_HPP

#include <complex>

#include "topocs/lattice.hpp"

// Coherent states on the torus and Mobius strip.
//
// A torus label per axis is z = e^{-l + i alpha}; the state expansion is
// |z> = sum_j z1^{-j1} z2^{-j2} e^{-j^2/2} |j>, stored UNNORMALIZED.
// Angles are kept as real numbers with winding; they are never reduced
// before half-angle evaluation, which is what makes the 2pi / 4pi
// distinction of the Mobius label observable.

namespace topocs {

struct CoherentLabel {
    double l = 0.0;      // radial log-modulus, z = e^{-l + i alpha}
    double alpha = 0.0;  // angle in radians, winding retained

    Complex z() const;
};

struct TorusLabel {
    CoherentLabel axis1;
    CoherentLabel axis2;
};

struct MobiusLabel {
    double l = 0.0;
    double r = 0.5;    // strip half-width, 0 < r < 1
    double phi = 0.0;  // winding retained; half-angle evaluated on the raw value
};

// An ordered pair of complex components over the independent units i and k.
// The two planes never mix; products act componentwise.
struct BicomplexLabel {
    Complex i_part{1.0, 0.0};
    Complex k_part{1.0, 0.0};
};

LatticeState torus_coherent(const TorusLabel& label, int cutoff);
TwoModeState two_mode_coherent(const TorusLabel& zlabel, const TorusLabel& wlabel, int cutoff);

Complex overlap_bruteforce(const LatticeState& a, const LatticeState& b);
Complex overlap_bruteforce(const TwoModeState& a, const TwoModeState& b);

// Closed form <z|z'> as a product of one theta3 factor per axis; the theta
// arguments are fixed so that this equals the brute-force lattice sum.
Complex overlap_theta(const TorusLabel& z, const TorusLabel& zprime);
Complex overlap_theta(const TorusLabel& z, const TorusLabel& w, const TorusLabel& zprime,
                      const TorusLabel& wprime);

// z^(Mobius) = e^{-(l + r sin(phi/2)) + i phi} (1 + r cos(phi/2))
Complex mobius_label_value(const MobiusLabel& label);

// Alternative sign reading from the factorization display:
// e^{-(l - r sin(phi/2)) + i phi} (1 + r cos(phi/2))
Complex mobius_label_value_alt_sign(const MobiusLabel& label);

// |xi_Mobius> = sum_j xi^{-j} e^{-j^2/2} |j, 0>, supported on the (., 0) row.
LatticeState mobius_coherent(const MobiusLabel& label, int cutoff);
LatticeState mobius_coherent_from_value(Complex xi, int cutoff);

struct MobiusOverlap {
    Complex brute;        // truncated row sum
    Complex closed_form;  // lattice Gaussian sum from the labels
};
MobiusOverlap mobius_overlap(const MobiusLabel& a, const MobiusLabel& b, int cutoff);

// xi_Torus = e^{-(l + r cos(theta)) + i phi} (1 + r sin(theta)) e^{-2 pi sin^2(phi) + k theta}
BicomplexLabel xi_torus_label(double l, double r, double theta, double phi);

struct XiFactorization {
    Complex xi_mobius;        // pure i-plane factor
    BicomplexLabel xi_second; // remainder; componentwise product restores xi_Torus
};
XiFactorization xi_factorize(double l, double r, double theta, double phi);

BicomplexLabel bicomplex_product(const BicomplexLabel& a, const BicomplexLabel& b);

// |xi_Torus> built from a factorized label pair on the (j, m) lattice;
// i-plane amplitudes only, the k-plane factor travels as metadata.
LatticeState xi_torus_state(const XiFactorization& f, int cutoff);
LatticeState xi_torus_reference_state(int cutoff);  // all coefficients e^{-(j^2+m^2)/2}

// <<xi_M | xi'_M>> = <xi_T| (|xi_M><xi_M|) |xi'_T> / <xi0_T|xi_M><xi_M|xi0_T>.
// Throws std::domain_error when the reference denominator degenerates.
Complex projection_mobius(const XiFactorization& xi_t, const XiFactorization& xi_t_prime,
                          Complex xi_m, int cutoff);

// X' = e^{-Z} X, Y' = e^{-Z} Y, Z' = Z on points; on a Mobius label the
// modulus is scaled by shifting l, leaving winding untouched.
struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;
};
Point3 deform_point(double zparam, const Point3& p);
MobiusLabel deform_label(double zparam, const MobiusLabel& label);

}  // namespace topocs

#endif
