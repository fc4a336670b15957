#include "topocs/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace topocs {

namespace {

constexpr int kMaxTerms = 100000;

}  // namespace

Complex theta3(const Theta3Params& params) {
    if (params.tau.imag() <= 0.0) {
        throw std::domain_error("theta3: series requires Im(tau) > 0");
    }
    if (params.tol <= 0.0) {
        throw std::domain_error("theta3: tolerance must be positive");
    }

    const Complex i_pi_tau(-std::numbers::pi * params.tau.imag(),
                           std::numbers::pi * params.tau.real());
    const Complex two_pi_i_v(-2.0 * std::numbers::pi * params.v.imag(),
                             2.0 * std::numbers::pi * params.v.real());

    // Term magnitudes grow before they decay when |Im v| is large; do not
    // test the cutoff until past the peak at n ~ |Im v| / Im tau.
    const double n_peak = std::abs(params.v.imag()) / params.tau.imag();

    Complex sum(1.0, 0.0);  // n = 0 term
    for (int n = 1; n <= kMaxTerms; ++n) {
        const Complex quad = i_pi_tau * static_cast<double>(n) * static_cast<double>(n);
        const Complex lin = two_pi_i_v * static_cast<double>(n);
        const Complex pair = std::exp(quad + lin) + std::exp(quad - lin);
        sum += pair;
        if (n > n_peak && std::abs(pair) < params.tol) {
            return sum;
        }
    }
    throw std::domain_error("theta3: series did not converge");
}

Complex gaussian_lattice_sum(Complex b, double tol) {
    if (tol <= 0.0) {
        throw std::domain_error("gaussian_lattice_sum: tolerance must be positive");
    }
    const double j_peak = std::abs(b.real()) / 2.0;

    Complex sum(1.0, 0.0);  // j = 0 term
    for (int j = 1; j <= kMaxTerms; ++j) {
        const double jj = static_cast<double>(j) * static_cast<double>(j);
        const Complex pair = std::exp(b * static_cast<double>(j) - jj) +
                             std::exp(-b * static_cast<double>(j) - jj);
        sum += pair;
        if (j > j_peak && std::abs(pair) < tol) {
            return sum;
        }
    }
    throw std::domain_error("gaussian_lattice_sum: series did not converge");
}

double theta3_flat_approx(double xi_modulus) {
    if (xi_modulus <= 0.0) {
        throw std::domain_error("theta3_flat_approx: modulus must be positive");
    }
    const double u = std::log(xi_modulus);
    return std::exp(u * u) * std::sqrt(std::numbers::pi);
}

}  // namespace topocs
