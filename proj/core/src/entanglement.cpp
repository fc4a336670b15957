#include "topocs/entanglement.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace topocs {

namespace {

LatticeState normalized(LatticeState s) {
    const double n = s.norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize a zero state");
    }
    s *= Complex(1.0 / n, 0.0);
    return s;
}

LatticeState restrict_window(const LatticeState& s, int window) {
    LatticeState out(s.cutoff());
    for (const auto& [j, c] : s.amplitudes()) {
        if (std::abs(j.j1) <= window && std::abs(j.j2) <= window) {
            out.add(j, c);
        }
    }
    return out;
}

std::map<ModeIndex, int> index_map(const std::vector<ModeIndex>& basis) {
    std::map<ModeIndex, int> m;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        m[basis[i]] = i;
    }
    return m;
}

Eigen::VectorXcd factor_vector(const LatticeState& s, const std::vector<ModeIndex>& basis) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<int>(basis.size()));
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        v(i) = s.amp(basis[i]);
    }
    return v;
}

}  // namespace

TwoModeState apply_D(unsigned n, Axis i, Axis k, const TwoModeState& s) {
    TwoModeState out = apply_second(m_action(k), s);
    out += apply_first(m_action(i), s);
    out *= Complex(std::pow(4.0, n), 0.0);
    return out;
}

TwoModeState ideal_entangled_pair(ModeIndex j, ModeIndex jp, int cutoff) {
    const ModeIndex nj{-j.j1, -j.j2};
    const ModeIndex njp{-jp.j1, -jp.j2};
    TwoModeState s = TwoModeState::basis(j, njp, cutoff);
    s += TwoModeState::basis(nj, jp, cutoff);
    s *= Complex(1.0 / s.norm(), 0.0);
    return s;
}

TwoModeState oam_state(const std::vector<double>& weights, int cutoff) {
    if (weights.empty() || weights.size() % 2 == 0) {
        throw std::invalid_argument("oam_state: weights must cover l = -L..L (odd count)");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("oam_state: weights must be non-negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("oam_state: weights must sum to 1");
    }
    const int L = static_cast<int>(weights.size() / 2);
    if (L > cutoff) {
        throw std::out_of_range("oam_state: L exceeds cutoff");
    }
    TwoModeState s(cutoff);
    for (int l = -L; l <= L; ++l) {
        const double w = weights[static_cast<size_t>(l + L)];
        if (w > 0.0) {
            s.add({l, 0}, {-l, 0}, Complex(std::sqrt(w), 0.0));
        }
    }
    return s;
}

std::vector<double> schmidt(const TwoModeState& s) {
    std::map<ModeIndex, int> rows;
    std::map<ModeIndex, int> cols;
    for (const auto& [k, c] : s.amplitudes()) {
        rows.emplace(k.first, 0);
        cols.emplace(k.second, 0);
    }
    int ri = 0;
    for (auto& [j, idx] : rows) {
        idx = ri++;
    }
    int ci = 0;
    for (auto& [j, idx] : cols) {
        idx = ci++;
    }
    if (rows.empty()) {
        return {};
    }
    Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(ri, ci);
    for (const auto& [k, c] : s.amplitudes()) {
        coeff(rows[k.first], cols[k.second]) = c;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() + svd.singularValues().size());
    return sv;
}

double entropy(const std::vector<double>& singular_values) {
    double total = 0.0;
    for (double s : singular_values) {
        total += s * s;
    }
    if (total <= 0.0) {
        throw std::domain_error("entropy: all-zero Schmidt spectrum");
    }
    double h = 0.0;
    for (double s : singular_values) {
        const double p = s * s / total;
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

double entropy_log2(const std::vector<double>& singular_values) {
    return entropy(singular_values) / std::numbers::ln2;
}

TwoModeState apply_M_ss(int s, int sp, const TwoModeState& st) {
    if ((s != 1 && s != -1) || (sp != 1 && sp != -1)) {
        throw std::invalid_argument("apply_M_ss: s and s' must be +-1");
    }
    // e^{i s phi_1} (x) T
    TwoModeState out = apply_second(t_action(), apply_first(ladder_action(Axis::One, s), st));
    // T^{-1} (x) e^{i s' phi_1}
    out += apply_second(ladder_action(Axis::One, sp), apply_first(t_action(), st));
    return out;
}

TwoModeState apply_W_intersection(OperatorTag w_torus, OperatorTag w_mobius,
                                  const TwoModeState& st) {
    TwoModeState out = apply_first(action_for(w_torus), st);
    out += apply_second(action_for(w_mobius), st);
    return out;
}

std::vector<ModeIndex> row_basis(int cutoff) {
    std::vector<ModeIndex> basis;
    basis.reserve(static_cast<size_t>(2 * cutoff + 1));
    for (int j = -cutoff; j <= cutoff; ++j) {
        basis.push_back({j, 0});
    }
    return basis;
}

std::vector<ModeIndex> lattice_basis(int cutoff) {
    std::vector<ModeIndex> basis;
    basis.reserve(static_cast<size_t>(2 * cutoff + 1) * (2 * cutoff + 1));
    for (int j1 = -cutoff; j1 <= cutoff; ++j1) {
        for (int j2 = -cutoff; j2 <= cutoff; ++j2) {
            basis.push_back({j1, j2});
        }
    }
    return basis;
}

Eigen::VectorXcd state_vector(const TwoModeState& s, const ProductBasis& basis) {
    const auto first_idx = index_map(basis.first);
    const auto second_idx = index_map(basis.second);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
    for (const auto& [k, c] : s.amplitudes()) {
        auto i1 = first_idx.find(k.first);
        auto i2 = second_idx.find(k.second);
        if (i1 != first_idx.end() && i2 != second_idx.end()) {
            v(basis.index(i1->second, i2->second)) = c;
        }
    }
    return v;
}

DensityMatrix density_from_state(const TwoModeState& st, const ProductBasis& basis) {
    const Eigen::VectorXcd v = state_vector(st, basis);
    const double n2 = v.squaredNorm();
    if (n2 <= 0.0) {
        throw std::domain_error("density_from_state: zero state");
    }
    DensityMatrix dm;
    dm.basis = basis;
    dm.rho = (v * v.adjoint()) / n2;
    return dm;
}

ProbeSet default_mobius_probes(int cutoff) {
    ProbeSet probes;
    const double moduli[] = {-0.5, 0.0, 0.5};
    for (double l : moduli) {
        for (int p = 0; p < 8; ++p) {
            const double phi = 2.0 * std::numbers::pi * p / 8.0;
            probes.states.push_back(normalized(mobius_coherent({l, 0.5, phi}, cutoff)));
            probes.normalized.push_back(true);
        }
    }
    return probes;
}

ProbeSet default_torus_probes(int cutoff) {
    ProbeSet probes;
    const double moduli[] = {-0.5, 0.0, 0.5};
    for (double l : moduli) {
        for (int p = 0; p < 8; ++p) {
            const double alpha = 2.0 * std::numbers::pi * p / 8.0;
            TorusLabel label;
            label.axis1 = {l, alpha};
            label.axis2 = {0.0, 0.0};
            probes.states.push_back(normalized(torus_coherent(label, cutoff)));
            probes.normalized.push_back(true);
        }
    }
    return probes;
}

GammaOperator gamma_measurement(Side side, const ProbeSet& probes, const ProductBasis& basis) {
    if (probes.states.empty()) {
        throw std::invalid_argument("gamma_measurement: probe set must be non-empty");
    }
    GammaOperator gamma;
    gamma.side = side;
    gamma.factor_basis = side == Side::Left ? basis.first : basis.second;
    gamma.identity_dim = static_cast<int>(side == Side::Left ? basis.second.size()
                                                             : basis.first.size());
    const int d = static_cast<int>(gamma.factor_basis.size());
    const int np = static_cast<int>(probes.states.size());

    Eigen::MatrixXcd vecs(d, np);
    for (int p = 0; p < np; ++p) {
        vecs.col(p) = factor_vector(probes.states[static_cast<size_t>(p)], gamma.factor_basis);
    }
    gamma.projector = vecs * vecs.adjoint();
    gamma.gram = vecs.adjoint() * vecs;
    return gamma;
}

double hs_dimension(const GammaOperator& gamma) {
    // Tr(P^2) for Hermitian P equals its squared Frobenius norm.
    return gamma.projector.squaredNorm() * gamma.identity_dim;
}

double trace_gamma_rho(const GammaOperator& gamma, const DensityMatrix& rho) {
    const int n1 = static_cast<int>(rho.basis.first.size());
    const int n2 = static_cast<int>(rho.basis.second.size());
    Complex tr(0.0, 0.0);
    if (gamma.side == Side::Left) {
        if (static_cast<int>(gamma.factor_basis.size()) != n1 || gamma.identity_dim != n2) {
            throw std::invalid_argument("trace_gamma_rho: basis shape mismatch");
        }
        for (int a = 0; a < n1; ++a) {
            for (int b = 0; b < n1; ++b) {
                Complex partial(0.0, 0.0);
                for (int m = 0; m < n2; ++m) {
                    partial += rho.rho(rho.basis.index(b, m), rho.basis.index(a, m));
                }
                tr += gamma.projector(a, b) * partial;
            }
        }
    } else {
        if (static_cast<int>(gamma.factor_basis.size()) != n2 || gamma.identity_dim != n1) {
            throw std::invalid_argument("trace_gamma_rho: basis shape mismatch");
        }
        for (int a = 0; a < n2; ++a) {
            for (int b = 0; b < n2; ++b) {
                Complex partial(0.0, 0.0);
                for (int j = 0; j < n1; ++j) {
                    partial += rho.rho(rho.basis.index(j, b), rho.basis.index(j, a));
                }
                tr += gamma.projector(a, b) * partial;
            }
        }
    }
    return tr.real();
}

MeasureReport measure_ratio(const GammaOperator& gamma, const DensityMatrix& rho,
                            const DensityMatrix& rho0) {
    MeasureReport report;
    report.r = trace_gamma_rho(gamma, rho);
    report.r0 = trace_gamma_rho(gamma, rho0);
    if (std::abs(report.r0) < 1e-14) {
        throw std::domain_error("measure_ratio: degenerate reference measurement");
    }
    report.lambda = report.r / report.r0;
    report.hs_dim = hs_dimension(gamma);
    return report;
}

MssPipelineResult mobius_mss_pipeline(int s, int sp, const MobiusLabel& xi,
                                      const MobiusLabel& xi_tilde, int cutoff) {
    const TwoModeState pair =
        TwoModeState::tensor(mobius_coherent(xi, cutoff), mobius_coherent(xi_tilde, cutoff));
    const TwoModeState acted = apply_M_ss(s, sp, pair);

    ProductBasis basis{row_basis(cutoff), row_basis(cutoff)};
    const DensityMatrix rho = density_from_state(acted, basis);
    const DensityMatrix rho0 = density_from_state(pair, basis);

    const ProbeSet probes = default_mobius_probes(cutoff);
    const GammaOperator gl = gamma_measurement(Side::Left, probes, basis);
    const GammaOperator gr = gamma_measurement(Side::Right, probes, basis);

    MssPipelineResult result;
    result.left = measure_ratio(gl, rho, rho0);
    result.right = measure_ratio(gr, rho, rho0);
    result.entropy_acted = entropy(schmidt(acted));
    return result;
}

TorusMobiusResult torus_mobius_pipeline(const TorusLabel& torus_label,
                                        const MobiusLabel& mobius_label, int cutoff,
                                        int torus_window) {
    if (torus_window < 1 || torus_window > cutoff) {
        throw std::invalid_argument("torus_mobius_pipeline: window must be in [1, cutoff]");
    }
    const LatticeState torus_state =
        restrict_window(torus_coherent(torus_label, cutoff), torus_window);
    const LatticeState mobius_state = mobius_coherent(mobius_label, cutoff);

    const TwoModeState product = TwoModeState::tensor(torus_state, mobius_state);
    const TwoModeState acted = apply_W_intersection(OperatorTag::LadderPlus1,
                                                    OperatorTag::LadderPlus1, product);

    ProductBasis basis{lattice_basis(torus_window), row_basis(cutoff)};
    const DensityMatrix rho = density_from_state(acted, basis);
    const DensityMatrix rho0 = density_from_state(product, basis);

    const GammaOperator gt =
        gamma_measurement(Side::Left, default_torus_probes(torus_window), basis);
    const GammaOperator gm =
        gamma_measurement(Side::Right, default_mobius_probes(cutoff), basis);

    TorusMobiusResult result;
    result.torus = measure_ratio(gt, rho, rho0);
    result.mobius = measure_ratio(gm, rho, rho0);
    return result;
}

}  // namespace topocs
