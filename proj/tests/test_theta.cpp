#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "topocs/theta.hpp"

using topocs::Complex;
using topocs::gaussian_lattice_sum;
using topocs::theta3;
using topocs::theta3_flat_approx;

namespace {

const Complex kTauGauss(0.0, 1.0 / std::numbers::pi);

// Independent reference: plain loop over |n| <= 30.
Complex brute_theta3(Complex v, Complex tau) {
    Complex sum(0.0, 0.0);
    const Complex ipi(0.0, std::numbers::pi);
    for (int n = -30; n <= 30; ++n) {
        sum += std::exp(ipi * tau * double(n * n) + 2.0 * ipi * double(n) * v);
    }
    return sum;
}

Complex brute_gauss(Complex b) {
    Complex sum(0.0, 0.0);
    for (int j = -30; j <= 30; ++j) {
        sum += std::exp(b * double(j) - double(j * j));
    }
    return sum;
}

}  // namespace

TEST_CASE("theta3 at pinned points") {
    CHECK(theta3({Complex(0.0, 0.0), kTauGauss}).real() == doctest::Approx(1.77263721).epsilon(1e-8));
    CHECK(theta3({Complex(0.0, 0.0), kTauGauss}).imag() == doctest::Approx(0.0).epsilon(1e-14));
    // alternating series sum (-1)^n e^{-n^2}
    CHECK(theta3({Complex(0.5, 0.0), kTauGauss}).real() ==
          doctest::Approx(brute_theta3({0.5, 0.0}, kTauGauss).real()).epsilon(1e-13));
    CHECK(theta3({Complex(0.5, 0.0), kTauGauss}).real() == doctest::Approx(0.30062).epsilon(1e-4));
    CHECK(theta3({Complex(0.0, 0.0), Complex(0.0, 1.0)}).real() ==
          doctest::Approx(1.08643481).epsilon(1e-8));
}

TEST_CASE("theta3 domain errors") {
    CHECK_THROWS_AS((void)theta3({Complex(0.0, 0.0), Complex(1.0, 0.0)}), std::domain_error);
    CHECK_THROWS_AS((void)theta3({Complex(0.0, 0.0), Complex(0.0, -1.0)}), std::domain_error);
    CHECK_THROWS_AS((void)theta3({Complex(0.0, 0.0), kTauGauss, 0.0}), std::domain_error);
}

TEST_CASE("theta3 determinism and v-periodicity") {
    const Complex v(0.37, 0.11);
    const Complex a = theta3({v, kTauGauss});
    const Complex b = theta3({v, kTauGauss});
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());

    const Complex shifted = theta3({v + Complex(1.0, 0.0), kTauGauss});
    CHECK(std::abs(shifted - a) < 1e-13 * std::abs(a));
}

TEST_CASE("gaussian lattice sum against brute force and theta3") {
    CHECK(gaussian_lattice_sum({0.0, 0.0}).real() ==
          doctest::Approx(1.77263721).epsilon(1e-8));
    CHECK(gaussian_lattice_sum({1.0, 0.0}).real() == doctest::Approx(2.27564).epsilon(1e-5));

    for (double re = -4.0; re <= 4.0; re += 0.5) {
        for (double im : {0.0, 0.7, -1.3}) {
            const Complex b(re, im);
            const Complex got = gaussian_lattice_sum(b);
            CHECK(std::abs(got - brute_gauss(b)) < 1e-14 * std::abs(got) + 1e-14);
            // invariance under b -> -b (j -> -j relabeling)
            CHECK(std::abs(got - gaussian_lattice_sum(-b)) < 1e-14 * std::abs(got));
            // same series through the theta3 convention: tau = i/pi, v = -i b / (2 pi)
            const Complex via_theta =
                theta3({b * Complex(0.0, -1.0) / (2.0 * std::numbers::pi), kTauGauss});
            CHECK(std::abs(got - via_theta) < 1e-13 * std::abs(got) + 1e-14);
        }
    }
}

TEST_CASE("flat approximation of the overlap kernel") {
    CHECK(theta3_flat_approx(1.0) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(theta3_flat_approx(std::numbers::e) ==
          doctest::Approx(std::numbers::e * std::sqrt(std::numbers::pi)).epsilon(1e-4));

    // relative error ~1.03e-4 at |xi| = 1, below 2e-4 over |ln xi| <= 1
    const double exact0 = gaussian_lattice_sum({0.0, 0.0}).real();
    CHECK(std::abs(theta3_flat_approx(1.0) - exact0) / exact0 ==
          doctest::Approx(1.03e-4).epsilon(0.01));
    for (double u = -1.0; u <= 1.0; u += 0.125) {
        const double exact = gaussian_lattice_sum({-2.0 * u, 0.0}).real();
        const double approx = theta3_flat_approx(std::exp(u));
        CHECK(std::abs(exact - approx) / exact < 2e-4);
    }

    CHECK_THROWS_AS((void)theta3_flat_approx(0.0), std::domain_error);
    CHECK_THROWS_AS((void)theta3_flat_approx(-1.0), std::domain_error);
}
