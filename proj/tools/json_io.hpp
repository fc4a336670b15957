#ifndef TOPOCS_TOOLS_JSON_IO_HPP
#define TOPOCS_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "topocs/coherent.hpp"
#include "topocs/diagnostics.hpp"
#include "topocs/entanglement.hpp"
#include "topocs/geometry.hpp"
#include "topocs/lattice.hpp"
#include "topocs/noncompact.hpp"

// Serialization shared by the CLI and the acceptance suite. Field order is
// fixed (ordered_json); complex numbers are [re, im]; lattice amplitudes are
// emitted in ascending (j1, j2) order, which is the map iteration order.

namespace topocs::io {

using json = nlohmann::ordered_json;

inline json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline json state_json(const LatticeState& s) {
    json amps = json::array();
    for (const auto& [j, c] : s.amplitudes()) {
        amps.push_back(json::array({j.j1, j.j2, c.real(), c.imag()}));
    }
    return json{{"cutoff", s.cutoff()},
                {"norm", s.norm()},
                {"dropped_weight", s.dropped_weight()},
                {"amplitudes", std::move(amps)}};
}

inline json state_json(const TwoModeState& s) {
    json amps = json::array();
    for (const auto& [key, c] : s.amplitudes()) {
        const auto& [j, jp] = key;
        amps.push_back(json::array({j.j1, j.j2, jp.j1, jp.j2, c.real(), c.imag()}));
    }
    return json{{"cutoff", s.cutoff()},
                {"norm", s.norm()},
                {"dropped_weight", s.dropped_weight()},
                {"amplitudes", std::move(amps)}};
}

inline json measure_json(const MeasureReport& m) {
    return json{{"r", m.r}, {"r0", m.r0}, {"lambda", m.lambda}, {"hs_dimension", m.hs_dim}};
}

inline json m_semantics_json(const MSemanticsReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) {
        rows.push_back(json{{"k", row.k},
                            {"norm_rewrite", row.norm_rewrite},
                            {"norm_compositional", row.norm_compositional},
                            {"difference_norm", row.difference_norm}});
    }
    return json{{"j", json::array({rep.j.j1, rep.j.j2})},
                {"axis", rep.axis == Axis::One ? 1 : 2},
                {"rows", std::move(rows)}};
}

inline json exp_m_json(const ExpMCoefficientReport& rep) {
    return json{{"series_diagonal", rep.series_diagonal},
                {"series_offdiagonal", rep.series_offdiagonal},
                {"printed_diagonal", rep.printed_diagonal},
                {"printed_offdiagonal", rep.printed_offdiagonal},
                {"diagonal_gap", rep.diagonal_gap},
                {"offdiagonal_gap", rep.offdiagonal_gap}};
}

inline json lagrangian_json(const LagrangianReport& rep) {
    json hrows = json::array();
    for (const auto& row : rep.hamiltonian_rows) {
        hrows.push_back(json{{"theta", row.theta},
                             {"p", json::array({row.p.p_theta, row.p.p_phi, row.p.p_z})},
                             {"h_oracle", row.h_oracle},
                             {"h_printed", row.h_printed},
                             {"gap", row.gap},
                             {"singular", row.singular}});
    }
    json lrows = json::array();
    for (const auto& row : rep.lagrangian_rows) {
        lrows.push_back(json{{"theta", row.theta},
                             {"phi_dot", row.phi_dot},
                             {"l_printed", row.l_printed},
                             {"l_embedding", row.l_embedding},
                             {"gap", row.gap}});
    }
    return json{{"hamiltonian_rows", std::move(hrows)}, {"lagrangian_rows", std::move(lrows)}};
}

inline json xi_factor_json(const XiFactorReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.sign_rows) {
        rows.push_back(json{{"l", row.l},
                            {"r", row.r},
                            {"phi", row.phi},
                            {"half_angle_sum", complex_json(row.half_angle_value)},
                            {"factorized", complex_json(row.factorization_value)},
                            {"relative_gap", row.relative_gap}});
    }
    return json{{"sign_rows", std::move(rows)},
                {"max_product_residual", rep.max_product_residual}};
}

inline json theta_approx_json(const std::vector<ThetaApproxRow>& curve) {
    json rows = json::array();
    for (const auto& row : curve) {
        rows.push_back(json{{"log_xi", row.log_xi},
                            {"exact", row.exact},
                            {"approx", row.approx},
                            {"relative_error", row.relative_error}});
    }
    return rows;
}

inline json isomorphism_json(const IsomorphismReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) {
        rows.push_back(json{{"power", row.power},
                            {"residual_normalized", row.residual_normalized},
                            {"residual_literal", row.residual_literal}});
    }
    return json{{"j", json::array({rep.j.j1, rep.j.j2})},
                {"axis", rep.axis == Axis::One ? 1 : 2},
                {"normalized_match", rep.normalized_match},
                {"rows", std::move(rows)}};
}

}  // namespace topocs::io

#endif
