#ifndef TOPOCS_ENTANGLEMENT_HPP
#define TOPOCS_ENTANGLEMENT_HPP

#include <Eigen/Dense>
#include <vector>

#include "topocs/coherent.hpp"
#include "topocs/lattice.hpp"

// Entangling operators and projective measurements: D^n_ik, M^(ss'), the
// intersection operator W, Schmidt analysis, coherent-state gamma
// measurements, Hilbert-Schmidt dimensions and the lambda ratios.

namespace topocs {

// D^n_ik |j,j'> = 2^{2n} [ |j>(|-j'+e_k> + |-j'-e_k>) + (|-j+e_i> + |-j-e_i>)|j'> ],
// the rewrite-rule contraction of (M_i^z)^{2n} (M_k^w)^{2n+1} + (M_i^w)^{2n} (M_k^z)^{2n+1}.
TwoModeState apply_D(unsigned n, Axis i, Axis k, const TwoModeState& s);

// Normalized |j>|-j'> + |-j>|j'>; collapses to a product state when both
// indices are self-inverse.
TwoModeState ideal_entangled_pair(ModeIndex j, ModeIndex jp, int cutoff);

// sum_l sqrt(lambda_l) |l>|-l>, l = -L..L on the first axis. Weights must
// sum to 1 within 1e-12.
TwoModeState oam_state(const std::vector<double>& weights, int cutoff);

// Singular values of the first-mode x second-mode coefficient matrix,
// descending; squares sum to the squared norm.
std::vector<double> schmidt(const TwoModeState& s);

// -sum p ln p over p = sigma^2 / sum sigma^2. Throws std::domain_error on an
// all-zero spectrum.
double entropy(const std::vector<double>& singular_values);
double entropy_log2(const std::vector<double>& singular_values);

// M^(ss') = e^{i s phi_1} (x) T + T^{-1} (x) e^{i s' phi_1}:
// |j,0>|j',0> -> |j+s,0>|-j',0> + |-j,0>|j'+s',0> (linear extension).
TwoModeState apply_M_ss(int s, int sp, const TwoModeState& st);

// W_cap = W_torus (x) 1 + 1 (x) W_mobius on a composite state.
TwoModeState apply_W_intersection(OperatorTag w_torus, OperatorTag w_mobius,
                                  const TwoModeState& st);

// Explicit product basis over which density and measurement operators are
// dense. Row-major composite index: first * second.size() + second.
struct ProductBasis {
    std::vector<ModeIndex> first;
    std::vector<ModeIndex> second;

    int dim() const { return static_cast<int>(first.size() * second.size()); }
    int index(int i1, int i2) const { return i1 * static_cast<int>(second.size()) + i2; }
};

// Ascending single-factor bases.
std::vector<ModeIndex> row_basis(int cutoff);      // (j, 0), j = -cutoff..cutoff
std::vector<ModeIndex> lattice_basis(int cutoff);  // full square window

Eigen::VectorXcd state_vector(const TwoModeState& s, const ProductBasis& basis);

struct DensityMatrix {
    ProductBasis basis;
    Eigen::MatrixXcd rho;
};

// Outer product of the state with itself, normalized to unit trace.
// Throws std::domain_error on a zero state.
DensityMatrix density_from_state(const TwoModeState& st, const ProductBasis& basis);

struct ProbeSet {
    std::vector<LatticeState> states;  // probes, normalized unless flagged
    std::vector<bool> normalized;      // per-probe flag (parallel to states)
};

// Default grid used by all shipped measurement pipelines: 8 equally spaced
// phases x 3 moduli (l in {-0.5, 0, 0.5}), probes normalized.
ProbeSet default_mobius_probes(int cutoff);
ProbeSet default_torus_probes(int cutoff);

enum class Side { Left, Right };

// gamma = (sum_xi |xi><xi|) (x) 1 (Left) or 1 (x) sum (Right), held as the
// dense single-factor projector plus the dimension of the identity factor.
struct GammaOperator {
    Side side = Side::Left;
    std::vector<ModeIndex> factor_basis;
    Eigen::MatrixXcd projector;  // sum of probe outer products on factor_basis
    Eigen::MatrixXcd gram;       // g_{xi xi~} = <xi|xi~>
    int identity_dim = 0;
};

GammaOperator gamma_measurement(Side side, const ProbeSet& probes, const ProductBasis& basis);

// Tr(gamma^2) = Tr(P^2) * identity_dim.
double hs_dimension(const GammaOperator& gamma);

struct MeasureReport {
    double r = 0.0;
    double r0 = 0.0;
    double lambda = 0.0;
    double hs_dim = 0.0;
};

// r = Tr(gamma rho), r0 = Tr(gamma rho0), lambda = r / r0. Throws
// std::domain_error when r0 degenerates below 1e-14.
MeasureReport measure_ratio(const GammaOperator& gamma, const DensityMatrix& rho,
                            const DensityMatrix& rho0);

double trace_gamma_rho(const GammaOperator& gamma, const DensityMatrix& rho);

// End-to-end pipelines behind the CLI and the acceptance suite. Both are
// fully deterministic for fixed inputs.
struct MssPipelineResult {
    MeasureReport left;
    MeasureReport right;
    double entropy_acted = 0.0;
};
MssPipelineResult mobius_mss_pipeline(int s, int sp, const MobiusLabel& xi,
                                      const MobiusLabel& xi_tilde, int cutoff);

// Torus factor restricted to a window cutoff (default 4) so the composite
// stays dense-friendly; user-overridable.
struct TorusMobiusResult {
    MeasureReport torus;
    MeasureReport mobius;
};
TorusMobiusResult torus_mobius_pipeline(const TorusLabel& torus_label,
                                        const MobiusLabel& mobius_label, int cutoff,
                                        int torus_window = 4);

}  // namespace topocs

#endif
