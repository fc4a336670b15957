#include <doctest.h>

#include <cmath>

#include "topocs/noncompact.hpp"

using namespace topocs;

namespace {

double pm_dist(const PMState& a, const PMState& b) {
    return std::abs(a.plus - b.plus) + std::abs(a.minus - b.minus);
}

double pair_dist(const PMPairState& a, const PMPairState& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            d += std::abs(a.amp[i][k] - b.amp[i][k]);
        }
    }
    return d;
}

}  // namespace

TEST_CASE("swap operator powers") {
    const PMState plus{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const PMState a1 = apply_a({2.0, 0.0}, plus);
    CHECK(a1.minus == Complex(2.0, 0.0));
    CHECK(a1.plus == Complex(0.0, 0.0));

    const PMState a2 = apply_a({2.0, 0.0}, a1);
    CHECK(a2.plus == Complex(4.0, 0.0));
    CHECK(a2.minus == Complex(0.0, 0.0));

    const PMState zero = apply_a({0.0, 0.0}, plus);
    CHECK(zero.plus == Complex(0.0, 0.0));
    CHECK(zero.minus == Complex(0.0, 0.0));
}

TEST_CASE("exponential action equals the cosh/sinh closed form") {
    const PMState plus{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const PMState e2 = exp_a({2.0, 0.0}, plus, 1e-14);
    CHECK(e2.plus.real() == doctest::Approx(std::cosh(2.0)).epsilon(1e-13));
    CHECK(e2.minus.real() == doctest::Approx(std::sinh(2.0)).epsilon(1e-13));
    CHECK(e2.plus.real() == doctest::Approx(3.76220).epsilon(1e-5));
    CHECK(e2.minus.real() == doctest::Approx(3.62686).epsilon(1e-5));

    const PMState id = exp_a({0.0, 0.0}, plus, 1e-14);
    CHECK(pm_dist(id, plus) == 0.0);

    for (double re = -4.0; re <= 4.0; re += 1.0) {
        for (double im : {0.0, 1.5, -2.5}) {
            const Complex alpha(re, im);
            if (std::abs(alpha) > 4.0) continue;
            const PMState in{Complex(0.8, -0.1), Complex(0.2, 0.4)};
            const PMState got = exp_a(alpha, in, 1e-15);
            const Complex c = std::cosh(alpha);
            const Complex s = std::sinh(alpha);
            const PMState want{c * in.plus + s * in.minus, s * in.plus + c * in.minus};
            CHECK(pm_dist(got, want) < 1e-12);
        }
    }
}

TEST_CASE("bipartite word actions") {
    PMPairState bell;  // |+-> + |-+>
    bell.amp[0][1] = Complex(1.0, 0.0);
    bell.amp[1][0] = Complex(1.0, 0.0);
    const Complex one(1.0, 0.0);

    const PMPairState ab = apply_pair({PairOp::A, PairOp::B}, one, one, bell);
    CHECK(pair_dist(ab, bell) == 0.0);

    PMPairState diag;  // |++> + |-->
    diag.amp[0][0] = Complex(1.0, 0.0);
    diag.amp[1][1] = Complex(1.0, 0.0);
    const PMPairState ab2 = apply_pair({PairOp::A, PairOp::B, PairOp::B}, one, one, bell);
    CHECK(pair_dist(ab2, diag) == 0.0);
    const PMPairState a2b = apply_pair({PairOp::A, PairOp::A, PairOp::B}, one, one, bell);
    CHECK(pair_dist(a2b, diag) == 0.0);
    CHECK(pair_dist(ab2, a2b) == 0.0);
}

TEST_CASE("lattice power rules are isomorphic to the two-level system") {
    const IsomorphismReport r00 = isomorphism_check({0, 0}, Axis::One);
    CHECK(r00.normalized_match);
    CHECK(r00.rows.size() == 7);
    for (const auto& row : r00.rows) {
        CHECK(row.residual_normalized < 1e-12);
    }
    // the literal alpha = 2 reading does not match all powers
    bool any_literal_mismatch = false;
    for (const auto& row : r00.rows) {
        if (row.residual_literal > 1e-6) any_literal_mismatch = true;
    }
    CHECK(any_literal_mismatch);

    // the report is j-independent
    const IsomorphismReport r31 = isomorphism_check({3, -1}, Axis::Two);
    CHECK(r31.normalized_match);
    for (size_t i = 0; i < r00.rows.size(); ++i) {
        CHECK(r31.rows[i].residual_normalized ==
              doctest::Approx(r00.rows[i].residual_normalized).epsilon(1e-12));
    }
}
