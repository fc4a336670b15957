#include "topocs/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "topocs/theta.hpp"

namespace topocs {

MSemanticsReport m_semantics_report(ModeIndex j, Axis axis, unsigned max_power, int cutoff) {
    MSemanticsReport report;
    report.j = j;
    report.axis = axis;
    const LatticeState base = LatticeState::basis(j, cutoff);
    for (unsigned k = 0; k <= max_power; ++k) {
        const LatticeState rewrite = apply_M_power(axis, k, base, PowerSemantics::Rewrite);
        const LatticeState comp = apply_M_power(axis, k, base, PowerSemantics::Compositional);
        LatticeState diff = rewrite;
        diff += Complex(-1.0, 0.0) * comp;
        report.rows.push_back({k, rewrite.norm(), comp.norm(), diff.norm()});
    }
    return report;
}

ExpMCoefficientReport exp_m_coefficient_report(int cutoff, double tol) {
    ExpMCoefficientReport report;
    const LatticeState base = LatticeState::basis({0, 0}, cutoff);
    const LatticeState result = apply_exp_M(Axis::One, base, PowerSemantics::Rewrite, tol);
    report.series_diagonal = result.amp({0, 0}).real();
    report.series_offdiagonal = result.amp({1, 0}).real();
    report.printed_diagonal = std::cosh(2.0);
    report.printed_offdiagonal = std::sinh(2.0);
    report.diagonal_gap = std::abs(report.series_diagonal - report.printed_diagonal);
    report.offdiagonal_gap = std::abs(report.series_offdiagonal - report.printed_offdiagonal);
    return report;
}

LagrangianReport lagrangian_report(const TorusShape& shape) {
    LagrangianReport report;

    const double thetas[] = {0.0, 0.4, 0.8, 1.2, std::numbers::pi / 2.0, 2.0, 2.6, 3.1};
    const Momenta momenta_grid[] = {
        {0.3, 1.0, 0.0}, {0.0, 1.0, 0.5}, {0.7, -0.4, 0.2}, {1.0, 0.0, 1.0}};
    for (double theta : thetas) {
        for (const Momenta& p : momenta_grid) {
            HamiltonianRow row;
            row.theta = theta;
            row.p = p;
            try {
                row.h_oracle = hamiltonian_oracle(shape, {theta, 0.0, 0.0}, p);
                row.h_printed = hamiltonian_printed(shape, {theta, 0.0, 0.0}, p);
                row.gap = std::abs(row.h_oracle - row.h_printed);
            } catch (const std::exception&) {
                row.singular = true;
            }
            report.hamiltonian_rows.push_back(row);
        }
    }

    const double phidots[] = {0.0, 0.5, 1.0, 2.0};
    for (double theta : thetas) {
        for (double phidot : phidots) {
            const Velocities v{0.3, phidot, 0.2};
            LagrangianRow row;
            row.theta = theta;
            row.phi_dot = phidot;
            row.l_printed = lagrangian_torus_printed(shape, {theta, 0.0, 0.0}, v);
            row.l_embedding = lagrangian_embedding(shape, {theta, 0.0, 0.0}, v);
            row.gap = row.l_printed - row.l_embedding;  // (m/2)(r^2/4) phi_dot^2
            report.lagrangian_rows.push_back(row);
        }
    }
    return report;
}

XiFactorReport xi_factor_report() {
    XiFactorReport report;

    const double ls[] = {-0.5, 0.0, 0.5};
    const double rs[] = {0.25, 0.5, 0.75};
    for (double l : ls) {
        for (double r : rs) {
            for (int p = 0; p < 8; ++p) {
                const double phi = std::numbers::pi * p / 2.0;  // 0 .. 7 pi / 2
                const double theta = mobius_constraint(phi);
                XiSignRow row;
                row.l = l;
                row.r = r;
                row.phi = phi;
                row.half_angle_value = mobius_label_value({l, r, phi});
                row.factorization_value = xi_factorize(l, r, theta, phi).xi_mobius;
                const double scale =
                    std::max(std::abs(row.half_angle_value), std::abs(row.factorization_value));
                row.relative_gap =
                    scale > 0.0 ? std::abs(row.half_angle_value - row.factorization_value) / scale : 0.0;
                report.sign_rows.push_back(row);
            }
        }
    }

    // Product reconstruction over a deterministic parameter sweep.
    double max_res = 0.0;
    for (double l : ls) {
        for (double r : rs) {
            for (int ip = 0; ip < 5; ++ip) {
                for (int it = 0; it < 5; ++it) {
                    const double phi = -2.0 * std::numbers::pi + ip * std::numbers::pi;
                    const double theta = -1.5 + 0.7 * it;
                    const BicomplexLabel direct = xi_torus_label(l, r, theta, phi);
                    const XiFactorization f = xi_factorize(l, r, theta, phi);
                    const BicomplexLabel prod =
                        bicomplex_product({f.xi_mobius, {1.0, 0.0}}, f.xi_second);
                    const double res =
                        std::abs(prod.i_part - direct.i_part) / std::abs(direct.i_part) +
                        std::abs(prod.k_part - direct.k_part) / std::abs(direct.k_part);
                    max_res = std::max(max_res, res);
                }
            }
        }
    }
    report.max_product_residual = max_res;
    return report;
}

std::vector<ThetaApproxRow> theta_approx_curve(int n_samples) {
    std::vector<ThetaApproxRow> curve;
    curve.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double u = -1.0 + 2.0 * i / (n_samples - 1);  // u = ln|xi|
        ThetaApproxRow row;
        row.log_xi = u;
        // theta3((i/pi) ln|xi| | i/pi) = sum_n e^{-2 u n - n^2}
        row.exact = gaussian_lattice_sum(Complex(-2.0 * u, 0.0)).real();
        row.approx = theta3_flat_approx(std::exp(u));
        row.relative_error = std::abs(row.exact - row.approx) / row.exact;
        curve.push_back(row);
    }
    return curve;
}

MobiusPrintedOverlapReport mobius_printed_overlap_report(double l, double r, int cutoff) {
    MobiusPrintedOverlapReport report;
    report.l = l;
    report.r = r;
    const MobiusLabel at0{l, r, 0.0};
    const MobiusLabel at4pi{l, r, 4.0 * std::numbers::pi};
    report.oracle = mobius_overlap(at0, at4pi, cutoff).brute;
    // Printed form: sum_j e^{(2l + ln(1+r)) j} e^{-j^2}.
    report.printed_form = gaussian_lattice_sum(Complex(2.0 * l + std::log(1.0 + r), 0.0));
    report.gap = std::abs(report.oracle - report.printed_form);
    return report;
}

ProjectionPrintedSumReport projection_printed_sum_report(double l, double r, double theta,
                                                         double phi, int cutoff) {
    ProjectionPrintedSumReport report;
    const XiFactorization f = xi_factorize(l, r, theta, phi);
    report.sandwich = projection_mobius(f, f, f.xi_mobius, cutoff);
    // Guessed reading of the printed sum: h' = -ln|xi'_M|, psi = arg(xi'_M).
    const double h_prime = -std::log(std::abs(f.xi_mobius));
    const double psi = std::arg(f.xi_mobius);
    const Complex phase(std::cos(-(phi - psi)), std::sin(-(phi - psi)));
    report.printed_guess = gaussian_lattice_sum(Complex(l + h_prime, 0.0)) * phase;
    report.gap = std::abs(report.sandwich - report.printed_guess);
    return report;
}

}  // namespace topocs
