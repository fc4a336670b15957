#ifndef TOPOCS_THETA_HPP
#define TOPOCS_THETA_HPP

#include <complex>

// Jacobi theta_3 and lattice Gaussian sums.
//
// Convention used throughout:
//
//   theta3(v | tau) = sum_{n in Z} exp(i pi tau n^2) exp(2 pi i n v),
//
// summed symmetrically n = 0, +-1, +-2, ... until the last symmetric pair
// of terms falls below the requested tolerance. The series converges for
// Im(tau) > 0.
//
// gaussian_lattice_sum(b) = sum_{j in Z} exp(b j - j^2), which is the same
// series after the substitution tau = i/pi, v = -i b / (2 pi). All coherent
// state overlap closed forms in this library reduce to these two sums.

namespace topocs {

using Complex = std::complex<double>;

struct Theta3Params {
    Complex v;
    Complex tau;
    double tol = 1e-14;
};

// Throws std::domain_error if Im(tau) <= 0 or tol <= 0.
Complex theta3(const Theta3Params& params);

// sum_{j in Z} exp(b j - j^2). Always convergent; invariant under b -> -b.
Complex gaussian_lattice_sum(Complex b, double tol = 1e-14);

// The flat-space approximation theta3((i/pi) ln|xi| | i/pi) ~ exp((ln|xi|)^2) sqrt(pi).
// Throws std::domain_error for xi_modulus <= 0.
double theta3_flat_approx(double xi_modulus);

}  // namespace topocs

#endif
