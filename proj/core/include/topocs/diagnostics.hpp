#ifndef TOPOCS_DIAGNOSTICS_HPP
#define TOPOCS_DIAGNOSTICS_HPP

#include <vector>

#include "topocs/coherent.hpp"
#include "topocs/geometry.hpp"
#include "topocs/lattice.hpp"

// Discrepancy reports. These pin down, numerically, where the printed
// operator identities disagree with literal composition, and document the
// readings this library adopts. They are data products, not assertions.

namespace topocs {

// M power semantics: rewrite rule vs literal repeated application,
// on a single basis vector.
struct MPowerRow {
    unsigned k = 0;
    double norm_rewrite = 0.0;
    double norm_compositional = 0.0;
    double difference_norm = 0.0;  // || rewrite - compositional ||
};

struct MSemanticsReport {
    ModeIndex j;
    Axis axis = Axis::One;
    std::vector<MPowerRow> rows;
};

MSemanticsReport m_semantics_report(ModeIndex j = {0, 0}, Axis axis = Axis::One,
                                    unsigned max_power = 6, int cutoff = 8);

// e^M coefficients: the rewrite-rule series gives cosh(sqrt(2)) on the
// diagonal and sinh(sqrt(2))/sqrt(2) on the flip pair; the printed display
// has cosh(2) and sinh(2).
struct ExpMCoefficientReport {
    double series_diagonal = 0.0;
    double series_offdiagonal = 0.0;
    double printed_diagonal = 0.0;
    double printed_offdiagonal = 0.0;
    double diagonal_gap = 0.0;
    double offdiagonal_gap = 0.0;
};

ExpMCoefficientReport exp_m_coefficient_report(int cutoff = 8, double tol = 1e-14);

// Printed Hamiltonian vs the embedding-derived (oracle) form over a
// (theta, momenta) grid, and the printed Lagrangian's extra r^2/4 term.
struct HamiltonianRow {
    double theta = 0.0;
    Momenta p;
    double h_oracle = 0.0;
    double h_printed = 0.0;
    double gap = 0.0;
    bool singular = false;
};

struct LagrangianRow {
    double theta = 0.0;
    double phi_dot = 0.0;
    double l_printed = 0.0;
    double l_embedding = 0.0;
    double gap = 0.0;
};

struct LagrangianReport {
    std::vector<HamiltonianRow> hamiltonian_rows;
    std::vector<LagrangianRow> lagrangian_rows;
};

LagrangianReport lagrangian_report(const TorusShape& shape);

// The half-angle label value vs the factorization display sign of r sin(phi/2), compared
// along the constraint theta = (phi + pi)/2, plus the product-reconstruction
// residual of the factorization itself.
struct XiSignRow {
    double l = 0.0, r = 0.0, phi = 0.0;
    Complex half_angle_value;
    Complex factorization_value;
    double relative_gap = 0.0;
};

struct XiFactorReport {
    std::vector<XiSignRow> sign_rows;
    double max_product_residual = 0.0;
};

XiFactorReport xi_factor_report();

// Quality of the flat approximation theta3 ~ e^{(ln|xi|)^2} sqrt(pi) over
// |ln|xi|| <= 1.
struct ThetaApproxRow {
    double log_xi = 0.0;
    double exact = 0.0;
    double approx = 0.0;
    double relative_error = 0.0;
};

std::vector<ThetaApproxRow> theta_approx_curve(int n_samples = 41);

// The printed closed form for <xi^{phi=0} | xi^{phi=4pi}> against the
// truncated-lattice oracle (the labels are identical, so the oracle is the
// plain norm sum).
struct MobiusPrintedOverlapReport {
    double l = 0.0, r = 0.0;
    Complex oracle;
    Complex printed_form;
    double gap = 0.0;
};

MobiusPrintedOverlapReport mobius_printed_overlap_report(double l, double r, int cutoff = 8);

// The projection sandwich vs the printed sum under the guessed reading
// h' = -ln|xi'_M|, psi = arg(xi'_M).
struct ProjectionPrintedSumReport {
    Complex sandwich;
    Complex printed_guess;
    double gap = 0.0;
};

ProjectionPrintedSumReport projection_printed_sum_report(double l, double r, double theta,
                                                         double phi, int cutoff = 8);

}  // namespace topocs

#endif
