// topocs command line front end.
//
// Exit codes: 0 success, 2 usage, 3 numeric-domain, 4 singularity.
// All output is deterministic for fixed arguments: fixed field order,
// ascending lattice iteration, complex numbers as [re, im].

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "topocs/coherent.hpp"
#include "topocs/diagnostics.hpp"
#include "topocs/entanglement.hpp"
#include "topocs/errors.hpp"
#include "topocs/geometry.hpp"
#include "topocs/lattice.hpp"
#include "topocs/theta.hpp"

namespace {

using topocs::io::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSingular = 4;

void write_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + output);
    f << text;
}

void emit(const json& doc, const std::string& output) {
    write_text(doc.dump(2) + "\n", output);
}

json job_json(const std::string& kind, json params, json result, json diagnostics = json::object()) {
    return json{{"kind", kind},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"diagnostics", std::move(diagnostics)}};
}

// The requested job, deferred so that errors map to exit codes in one place.
struct App {
    CLI::App cli{"coherent states on torus and Mobius topologies"};
    std::function<int()> job;
};

topocs::ModeIndex mode_index(const std::vector<int>& v) {
    return {v.at(0), v.at(1)};
}

std::string csv_row(std::initializer_list<double> values) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '\n';
    return os.str();
}

void add_state_commands(App& app) {
    auto* state = app.cli.add_subcommand("state", "build a coherent state expansion");
    state->require_subcommand(1);

    {
        auto* c = state->add_subcommand("torus-cs", "single torus coherent state");
        auto l1 = std::make_shared<double>(0.0);
        auto a1 = std::make_shared<double>(0.0);
        auto l2 = std::make_shared<double>(0.0);
        auto a2 = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--l1", *l1, "axis-1 log-modulus");
        c->add_option("--a1", *a1, "axis-1 angle");
        c->add_option("--l2", *l2, "axis-2 log-modulus");
        c->add_option("--a2", *a2, "axis-2 angle");
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output, "output file (default stdout)");
        c->callback([&app, l1, a1, l2, a2, cutoff, output] {
            app.job = [=] {
                const topocs::TorusLabel label{{*l1, *a1}, {*l2, *a2}};
                const topocs::LatticeState s = topocs::torus_coherent(label, *cutoff);
                json params{{"l1", *l1}, {"a1", *a1}, {"l2", *l2}, {"a2", *a2}, {"cutoff", *cutoff}};
                json diag{{"self_overlap_theta",
                           topocs::io::complex_json(topocs::overlap_theta(label, label))}};
                emit(job_json("state.torus-cs", params, topocs::io::state_json(s), diag), *output);
                return 0;
            };
        });
    }

    {
        auto* c = state->add_subcommand("mobius-cs", "Mobius coherent state");
        auto l = std::make_shared<double>(0.0);
        auto r = std::make_shared<double>(0.5);
        auto phi = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--l", *l, "log-modulus");
        c->add_option("--r", *r, "strip half-width")->check(CLI::Range(1e-9, 1.0));
        c->add_option("--phi", *phi, "angle, winding retained");
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, l, r, phi, cutoff, output] {
            app.job = [=] {
                const topocs::MobiusLabel label{*l, *r, *phi};
                const topocs::LatticeState s = topocs::mobius_coherent(label, *cutoff);
                const topocs::Complex xi = topocs::mobius_label_value(label);
                json params{{"l", *l}, {"r", *r}, {"phi", *phi}, {"cutoff", *cutoff}};
                json diag{{"xi", topocs::io::complex_json(xi)}};
                emit(job_json("state.mobius-cs", params, topocs::io::state_json(s), diag), *output);
                return 0;
            };
        });
    }

    {
        auto* c = state->add_subcommand("two-mode", "two-mode torus coherent state");
        auto l1 = std::make_shared<double>(0.0);
        auto a1 = std::make_shared<double>(0.0);
        auto l2 = std::make_shared<double>(0.0);
        auto a2 = std::make_shared<double>(0.0);
        auto lp1 = std::make_shared<double>(0.0);
        auto ap1 = std::make_shared<double>(0.0);
        auto lp2 = std::make_shared<double>(0.0);
        auto ap2 = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--l1", *l1);
        c->add_option("--a1", *a1);
        c->add_option("--l2", *l2);
        c->add_option("--a2", *a2);
        c->add_option("--lp1", *lp1);
        c->add_option("--ap1", *ap1);
        c->add_option("--lp2", *lp2);
        c->add_option("--ap2", *ap2);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, l1, a1, l2, a2, lp1, ap1, lp2, ap2, cutoff, output] {
            app.job = [=] {
                const topocs::TorusLabel z{{*l1, *a1}, {*l2, *a2}};
                const topocs::TorusLabel w{{*lp1, *ap1}, {*lp2, *ap2}};
                const topocs::TwoModeState s = topocs::two_mode_coherent(z, w, *cutoff);
                json params{{"l1", *l1},   {"a1", *a1},   {"l2", *l2},   {"a2", *a2},
                            {"lp1", *lp1}, {"ap1", *ap1}, {"lp2", *lp2}, {"ap2", *ap2},
                            {"cutoff", *cutoff}};
                emit(job_json("state.two-mode", params, topocs::io::state_json(s)), *output);
                return 0;
            };
        });
    }
}

void add_overlap_commands(App& app) {
    auto* overlap = app.cli.add_subcommand("overlap", "coherent state overlaps");
    overlap->require_subcommand(1);

    for (const std::string mode : {"brute", "theta", "both"}) {
        auto* c = overlap->add_subcommand(mode, "overlap of two torus coherent states");
        auto l1 = std::make_shared<double>(0.0);
        auto a1 = std::make_shared<double>(0.0);
        auto l2 = std::make_shared<double>(0.0);
        auto a2 = std::make_shared<double>(0.0);
        auto lp1 = std::make_shared<double>(0.0);
        auto ap1 = std::make_shared<double>(0.0);
        auto lp2 = std::make_shared<double>(0.0);
        auto ap2 = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--l1", *l1, "first label, axis-1 log-modulus");
        c->add_option("--a1", *a1, "first label, axis-1 angle");
        c->add_option("--l2", *l2, "first label, axis-2 log-modulus");
        c->add_option("--a2", *a2, "first label, axis-2 angle");
        c->add_option("--lp1", *lp1, "second label, axis-1 log-modulus");
        c->add_option("--ap1", *ap1, "second label, axis-1 angle");
        c->add_option("--lp2", *lp2, "second label, axis-2 log-modulus");
        c->add_option("--ap2", *ap2, "second label, axis-2 angle");
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, mode, l1, a1, l2, a2, lp1, ap1, lp2, ap2, cutoff, output] {
            app.job = [=] {
                const topocs::TorusLabel a{{*l1, *a1}, {*l2, *a2}};
                const topocs::TorusLabel b{{*lp1, *ap1}, {*lp2, *ap2}};
                json params{{"l1", *l1},   {"a1", *a1},   {"l2", *l2},   {"a2", *a2},
                            {"lp1", *lp1}, {"ap1", *ap1}, {"lp2", *lp2}, {"ap2", *ap2},
                            {"cutoff", *cutoff}};
                json result = json::object();
                json diag = json::object();
                if (mode == "brute" || mode == "both") {
                    const topocs::Complex v = topocs::overlap_bruteforce(
                        topocs::torus_coherent(a, *cutoff), topocs::torus_coherent(b, *cutoff));
                    result["brute"] = topocs::io::complex_json(v);
                }
                if (mode == "theta" || mode == "both") {
                    result["theta"] = topocs::io::complex_json(topocs::overlap_theta(a, b));
                }
                if (mode == "both") {
                    const topocs::Complex gap{result["brute"][0].get<double>() -
                                                  result["theta"][0].get<double>(),
                                              result["brute"][1].get<double>() -
                                                  result["theta"][1].get<double>()};
                    diag["brute_minus_theta_abs"] = std::abs(gap);
                }
                emit(job_json("overlap." + mode, params, result, diag), *output);
                return 0;
            };
        });
    }
}

void add_entangle_commands(App& app) {
    auto* ent = app.cli.add_subcommand("entangle", "entangling operators and Schmidt analysis");
    ent->require_subcommand(1);

    auto schmidt_result = [](const topocs::TwoModeState& s) {
        const std::vector<double> sv = topocs::schmidt(s);
        json svj = json::array();
        for (double v : sv) svj.push_back(v);
        return json{{"singular_values", std::move(svj)},
                    {"entropy", topocs::entropy(sv)},
                    {"entropy_log2", topocs::entropy_log2(sv)},
                    {"state", topocs::io::state_json(s)}};
    };

    {
        auto* c = ent->add_subcommand("d-op", "entangler applied to a basis pair");
        auto n = std::make_shared<unsigned>(0);
        auto i = std::make_shared<int>(1);
        auto k = std::make_shared<int>(2);
        auto j = std::make_shared<std::vector<int>>(std::vector<int>{1, 0});
        auto jp = std::make_shared<std::vector<int>>(std::vector<int>{2, 0});
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--n", *n, "power index");
        c->add_option("--i", *i)->check(CLI::Range(1, 2));
        c->add_option("--k", *k)->check(CLI::Range(1, 2));
        c->add_option("--j", *j, "first index j1,j2")->delimiter(',')->expected(1, 2);
        c->add_option("--jp", *jp, "second index j1,j2")->delimiter(',')->expected(1, 2);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, schmidt_result, n, i, k, j, jp, cutoff, output] {
            app.job = [=] {
                const topocs::TwoModeState base =
                    topocs::TwoModeState::basis(mode_index(*j), mode_index(*jp), *cutoff);
                const topocs::TwoModeState out = topocs::apply_D(
                    *n, static_cast<topocs::Axis>(*i), static_cast<topocs::Axis>(*k), base);
                json params{{"n", *n},
                            {"i", *i},
                            {"k", *k},
                            {"j", json::array({(*j)[0], (*j)[1]})},
                            {"jp", json::array({(*jp)[0], (*jp)[1]})},
                            {"cutoff", *cutoff}};
                emit(job_json("entangle.d-op", params, schmidt_result(out)), *output);
                return 0;
            };
        });
    }

    {
        auto* c = ent->add_subcommand("m-ss", "two-sided mixing operator on a Mobius pair");
        auto s = std::make_shared<int>(1);
        auto sp = std::make_shared<int>(1);
        auto l = std::make_shared<double>(0.0);
        auto r = std::make_shared<double>(0.5);
        auto phi = std::make_shared<double>(0.0);
        auto lt = std::make_shared<double>(0.0);
        auto rt = std::make_shared<double>(0.5);
        auto phit = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--s", *s)->check(CLI::IsMember({-1, 1}));
        c->add_option("--sp", *sp)->check(CLI::IsMember({-1, 1}));
        c->add_option("--l", *l);
        c->add_option("--r", *r)->check(CLI::Range(1e-9, 1.0));
        c->add_option("--phi", *phi);
        c->add_option("--lt", *lt, "second factor log-modulus");
        c->add_option("--rt", *rt)->check(CLI::Range(1e-9, 1.0));
        c->add_option("--phit", *phit);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, schmidt_result, s, sp, l, r, phi, lt, rt, phit, cutoff, output] {
            app.job = [=] {
                const topocs::TwoModeState base = topocs::TwoModeState::tensor(
                    topocs::mobius_coherent({*l, *r, *phi}, *cutoff),
                    topocs::mobius_coherent({*lt, *rt, *phit}, *cutoff));
                const topocs::TwoModeState out = topocs::apply_M_ss(*s, *sp, base);
                json params{{"s", *s},   {"sp", *sp},   {"l", *l},
                            {"r", *r},   {"phi", *phi}, {"lt", *lt},
                            {"rt", *rt}, {"phit", *phit}, {"cutoff", *cutoff}};
                emit(job_json("entangle.m-ss", params, schmidt_result(out)), *output);
                return 0;
            };
        });
    }

    {
        auto* c = ent->add_subcommand("pair", "ideal entangled basis pair");
        auto j = std::make_shared<std::vector<int>>(std::vector<int>{1, 0});
        auto jp = std::make_shared<std::vector<int>>(std::vector<int>{2, 0});
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--j", *j)->delimiter(',')->expected(1, 2);
        c->add_option("--jp", *jp)->delimiter(',')->expected(1, 2);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, schmidt_result, j, jp, cutoff, output] {
            app.job = [=] {
                const topocs::TwoModeState out =
                    topocs::ideal_entangled_pair(mode_index(*j), mode_index(*jp), *cutoff);
                json params{{"j", json::array({(*j)[0], (*j)[1]})},
                            {"jp", json::array({(*jp)[0], (*jp)[1]})},
                            {"cutoff", *cutoff}};
                emit(job_json("entangle.pair", params, schmidt_result(out)), *output);
                return 0;
            };
        });
    }

    {
        auto* c = ent->add_subcommand("oam", "orbital-angular-momentum style entangled state");
        auto weights = std::make_shared<std::vector<double>>(
            std::vector<double>{0.2, 0.2, 0.2, 0.2, 0.2});
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--weights", *weights, "odd-length weights summing to 1")
            ->delimiter(',')
            ->expected(1, 64);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, schmidt_result, weights, cutoff, output] {
            app.job = [=] {
                const topocs::TwoModeState out = topocs::oam_state(*weights, *cutoff);
                json wj = json::array();
                for (double w : *weights) wj.push_back(w);
                json params{{"weights", std::move(wj)}, {"cutoff", *cutoff}};
                emit(job_json("entangle.oam", params, schmidt_result(out)), *output);
                return 0;
            };
        });
    }
}

void add_measure_commands(App& app) {
    auto* measure = app.cli.add_subcommand("measure", "projective coherent-state measurements");
    measure->require_subcommand(1);

    {
        auto* c = measure->add_subcommand("gamma", "measurement operator on the default probe grid");
        auto side = std::make_shared<std::string>("left");
        auto surface = std::make_shared<std::string>("mobius");
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--side", *side)->check(CLI::IsMember({"left", "right"}));
        c->add_option("--surface", *surface)->check(CLI::IsMember({"mobius", "torus"}));
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 16));
        c->add_option("--output", *output);
        c->callback([&app, side, surface, cutoff, output] {
            app.job = [=] {
                const topocs::Side s =
                    *side == "left" ? topocs::Side::Left : topocs::Side::Right;
                topocs::ProductBasis basis{topocs::row_basis(*cutoff), topocs::row_basis(*cutoff)};
                const topocs::ProbeSet probes = *surface == "mobius"
                                                    ? topocs::default_mobius_probes(*cutoff)
                                                    : topocs::default_torus_probes(*cutoff);
                const topocs::GammaOperator gamma = topocs::gamma_measurement(s, probes, basis);
                json params{{"side", *side}, {"surface", *surface}, {"cutoff", *cutoff}};
                json result{{"n_probes", probes.states.size()},
                            {"factor_dim", gamma.factor_basis.size()},
                            {"identity_dim", gamma.identity_dim},
                            {"projector_trace", gamma.projector.trace().real()},
                            {"hs_dimension", topocs::hs_dimension(gamma)}};
                emit(job_json("measure.gamma", params, result), *output);
                return 0;
            };
        });
    }

    {
        auto* c = measure->add_subcommand("ratio", "lambda ratios of a measurement pipeline");
        auto pipeline = std::make_shared<std::string>("m-ss");
        auto s = std::make_shared<int>(1);
        auto sp = std::make_shared<int>(1);
        auto l = std::make_shared<double>(0.0);
        auto r = std::make_shared<double>(0.5);
        auto phi = std::make_shared<double>(0.0);
        auto lt = std::make_shared<double>(0.0);
        auto rt = std::make_shared<double>(0.5);
        auto phit = std::make_shared<double>(0.0);
        auto l1 = std::make_shared<double>(0.0);
        auto a1 = std::make_shared<double>(0.0);
        auto l2 = std::make_shared<double>(0.0);
        auto a2 = std::make_shared<double>(0.0);
        auto cutoff = std::make_shared<int>(8);
        auto window = std::make_shared<int>(4);
        auto output = std::make_shared<std::string>();
        c->add_option("--pipeline", *pipeline)->check(CLI::IsMember({"m-ss", "torus-mobius"}));
        c->add_option("--s", *s)->check(CLI::IsMember({-1, 1}));
        c->add_option("--sp", *sp)->check(CLI::IsMember({-1, 1}));
        c->add_option("--l", *l, "Mobius log-modulus");
        c->add_option("--r", *r)->check(CLI::Range(1e-9, 1.0));
        c->add_option("--phi", *phi);
        c->add_option("--lt", *lt, "second Mobius factor (m-ss pipeline)");
        c->add_option("--rt", *rt)->check(CLI::Range(1e-9, 1.0));
        c->add_option("--phit", *phit);
        c->add_option("--l1", *l1, "torus label (torus-mobius pipeline)");
        c->add_option("--a1", *a1);
        c->add_option("--l2", *l2);
        c->add_option("--a2", *a2);
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 16));
        c->add_option("--window", *window, "torus factor window")->check(CLI::Range(2, 8));
        c->add_option("--output", *output);
        c->callback([&app, pipeline, s, sp, l, r, phi, lt, rt, phit, l1, a1, l2, a2, cutoff,
                     window, output] {
            app.job = [=] {
                if (*pipeline == "m-ss") {
                    const topocs::MssPipelineResult res = topocs::mobius_mss_pipeline(
                        *s, *sp, {*l, *r, *phi}, {*lt, *rt, *phit}, *cutoff);
                    json params{{"pipeline", *pipeline}, {"s", *s},     {"sp", *sp},
                                {"l", *l},               {"r", *r},     {"phi", *phi},
                                {"lt", *lt},             {"rt", *rt},   {"phit", *phit},
                                {"cutoff", *cutoff}};
                    json result{{"left", topocs::io::measure_json(res.left)},
                                {"right", topocs::io::measure_json(res.right)},
                                {"entropy_acted", res.entropy_acted}};
                    emit(job_json("measure.ratio", params, result), *output);
                } else {
                    const topocs::TorusMobiusResult res = topocs::torus_mobius_pipeline(
                        {{*l1, *a1}, {*l2, *a2}}, {*l, *r, *phi}, *cutoff, *window);
                    json params{{"pipeline", *pipeline}, {"l1", *l1}, {"a1", *a1},
                                {"l2", *l2},             {"a2", *a2}, {"l", *l},
                                {"r", *r},               {"phi", *phi}, {"cutoff", *cutoff},
                                {"window", *window}};
                    json result{{"torus", topocs::io::measure_json(res.torus)},
                                {"mobius", topocs::io::measure_json(res.mobius)}};
                    emit(job_json("measure.ratio", params, result), *output);
                }
                return 0;
            };
        });
    }
}

void add_geom_commands(App& app) {
    auto* geom = app.cli.add_subcommand("geom", "classical geometry and mechanics exports");
    geom->require_subcommand(1);

    {
        auto* c = geom->add_subcommand("mesh", "surface mesh as CSV or JSON");
        auto surface = std::make_shared<std::string>("torus");
        auto n_phi = std::make_shared<int>(64);
        auto n_second = std::make_shared<int>(32);
        auto R = std::make_shared<double>(1.0);
        auto r = std::make_shared<double>(0.5);
        auto l = std::make_shared<double>(0.0);
        auto deform = std::make_shared<double>(0.0);
        auto format = std::make_shared<std::string>("csv");
        auto output = std::make_shared<std::string>();
        c->add_option("--surface", *surface)->check(CLI::IsMember({"torus", "mobius"}));
        c->add_option("--n-phi", *n_phi)->check(CLI::Range(4, 4096));
        c->add_option("--n-second", *n_second)->check(CLI::Range(4, 4096));
        c->add_option("--R", *R);
        c->add_option("--r", *r);
        c->add_option("--l", *l);
        c->add_option("--deform", *deform, "exponential planar shrink parameter");
        c->add_option("--format", *format)->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--output", *output);
        c->callback([&app, surface, n_phi, n_second, R, r, l, deform, format, output] {
            app.job = [=] {
                const topocs::TorusShape shape{*R, *r, *l, 1.0};
                shape.validate();
                const topocs::Surface surf = *surface == "torus" ? topocs::Surface::Torus
                                                                 : topocs::Surface::Mobius;
                topocs::Mesh m = topocs::mesh(surf, shape, *n_phi, *n_second);
                if (*deform != 0.0) {
                    for (auto& v : m.vertices) v.pos = topocs::deform_point(*deform, v.pos);
                }
                if (*format == "csv") {
                    std::string text = "phi,theta,x,y,z\n";
                    for (const auto& v : m.vertices) {
                        text += csv_row({v.phi, v.second, v.pos.x, v.pos.y, v.pos.z});
                    }
                    write_text(text, *output);
                } else {
                    json rows = json::array();
                    for (const auto& v : m.vertices) {
                        rows.push_back(json::array({v.phi, v.second, v.pos.x, v.pos.y, v.pos.z}));
                    }
                    json params{{"surface", *surface}, {"n_phi", *n_phi},
                                {"n_second", *n_second}, {"R", *R},
                                {"r", *r},              {"l", *l},
                                {"deform", *deform}};
                    emit(job_json("geom.mesh", params,
                                  json{{"columns", json::array({"phi", "theta", "x", "y", "z"})},
                                       {"vertices", std::move(rows)}}),
                         *output);
                }
                return 0;
            };
        });
    }

    {
        auto* c = geom->add_subcommand("trajectory", "RK4 trajectory as CSV");
        auto surface = std::make_shared<std::string>("torus");
        auto periods = std::make_shared<double>(1.0);
        auto dt = std::make_shared<double>(1e-3);
        auto R = std::make_shared<double>(1.0);
        auto r = std::make_shared<double>(0.5);
        auto l = std::make_shared<double>(0.0);
        auto mass = std::make_shared<double>(1.0);
        auto theta0 = std::make_shared<double>(std::numbers::pi / 2.0);
        auto thetadot = std::make_shared<double>(0.0);
        auto phidot = std::make_shared<double>(1.0);
        auto zdot = std::make_shared<double>(0.0);
        auto output = std::make_shared<std::string>();
        c->add_option("--surface", *surface)->check(CLI::IsMember({"torus", "mobius"}));
        c->add_option("--periods", *periods, "number of 2 pi turns in phi")
            ->check(CLI::Range(1e-6, 64.0));
        c->add_option("--dt", *dt)->check(CLI::Range(1e-7, 1.0));
        c->add_option("--R", *R);
        c->add_option("--r", *r);
        c->add_option("--l", *l);
        c->add_option("--m", *mass);
        c->add_option("--theta0", *theta0, "initial theta (torus surface motion)");
        c->add_option("--theta-dot", *thetadot);
        c->add_option("--phi-dot", *phidot);
        auto* zdot_opt = c->add_option(
            "--z-dot", *zdot,
            "initial z0 velocity; Mobius default follows the strip boundary curve");
        c->add_option("--output", *output);
        c->callback([&app, surface, periods, dt, R, r, l, mass, theta0, thetadot, phidot, zdot,
                     zdot_opt, output] {
            app.job = [=] {
                const topocs::TorusShape shape{*R, *r, *l, *mass};
                shape.validate();
                if (*phidot <= 0.0) {
                    throw std::domain_error("phi-dot must be positive to span periods");
                }
                const topocs::Constraint con = *surface == "torus" ? topocs::Constraint::None
                                                                   : topocs::Constraint::Mobius;
                topocs::Coords q0{*theta0, 0.0, 0.0};
                topocs::Velocities v0{*thetadot, *phidot, *zdot};
                if (con == topocs::Constraint::Mobius) {
                    q0.theta = topocs::mobius_constraint(0.0);
                    if (zdot_opt->count() == 0) {
                        // Zero conserved transverse momentum; the embedded point
                        // then traces the boundary curve and closes after 4 pi.
                        v0.z0 = 0.5 * shape.r * std::cos(q0.phi / 2.0) * v0.phi;
                    }
                }
                const double span = *periods * 2.0 * std::numbers::pi;
                const topocs::Trajectory traj =
                    topocs::integrate_to_phi(shape, con, q0, v0, *dt, span);
                std::string text = "t,x,y,z,energy\n";
                for (const auto& s : traj.samples) {
                    text += csv_row({s.t, s.pos.x, s.pos.y, s.pos.z, s.energy});
                }
                write_text(text, *output);
                return 0;
            };
        });
    }
}

void add_diag_commands(App& app) {
    auto* diag = app.cli.add_subcommand("diag", "discrepancy and approximation reports");
    diag->require_subcommand(1);

    {
        auto* c = diag->add_subcommand("m-semantics",
                                       "power-rule vs compositional mixing operator report");
        auto j = std::make_shared<std::vector<int>>(std::vector<int>{0, 0});
        auto axis = std::make_shared<int>(1);
        auto max_power = std::make_shared<unsigned>(6);
        auto cutoff = std::make_shared<int>(8);
        auto output = std::make_shared<std::string>();
        c->add_option("--j", *j)->delimiter(',')->expected(1, 2);
        c->add_option("--axis", *axis)->check(CLI::Range(1, 2));
        c->add_option("--max-power", *max_power)->check(CLI::Range(0u, 16u));
        c->add_option("--cutoff", *cutoff)->check(CLI::Range(4, 64));
        c->add_option("--output", *output);
        c->callback([&app, j, axis, max_power, cutoff, output] {
            app.job = [=] {
                const topocs::MSemanticsReport rep = topocs::m_semantics_report(
                    mode_index(*j), static_cast<topocs::Axis>(*axis), *max_power, *cutoff);
                const topocs::ExpMCoefficientReport exp_rep =
                    topocs::exp_m_coefficient_report(*cutoff);
                json params{{"j", json::array({(*j)[0], (*j)[1]})},
                            {"axis", *axis},
                            {"max_power", *max_power},
                            {"cutoff", *cutoff}};
                json result{{"powers", topocs::io::m_semantics_json(rep)},
                            {"exponential", topocs::io::exp_m_json(exp_rep)}};
                emit(job_json("diag.m-semantics", params, result), *output);
                return 0;
            };
        });
    }

    {
        auto* c = diag->add_subcommand("xi-factor", "bicomplex label factorization report");
        auto output = std::make_shared<std::string>();
        c->add_option("--output", *output);
        c->callback([&app, output] {
            app.job = [=] {
                emit(job_json("diag.xi-factor", json::object(),
                              topocs::io::xi_factor_json(topocs::xi_factor_report())),
                     *output);
                return 0;
            };
        });
    }

    {
        auto* c = diag->add_subcommand("lagrangian", "printed vs embedding mechanics report");
        auto R = std::make_shared<double>(1.0);
        auto r = std::make_shared<double>(0.5);
        auto l = std::make_shared<double>(0.0);
        auto mass = std::make_shared<double>(1.0);
        auto output = std::make_shared<std::string>();
        c->add_option("--R", *R);
        c->add_option("--r", *r);
        c->add_option("--l", *l);
        c->add_option("--m", *mass);
        c->add_option("--output", *output);
        c->callback([&app, R, r, l, mass, output] {
            app.job = [=] {
                const topocs::TorusShape shape{*R, *r, *l, *mass};
                shape.validate();
                json params{{"R", *R}, {"r", *r}, {"l", *l}, {"m", *mass}};
                emit(job_json("diag.lagrangian", params,
                              topocs::io::lagrangian_json(topocs::lagrangian_report(shape))),
                     *output);
                return 0;
            };
        });
    }

    {
        auto* c = diag->add_subcommand("theta-approx", "flat approximation deviation curve");
        auto samples = std::make_shared<int>(41);
        auto output = std::make_shared<std::string>();
        c->add_option("--samples", *samples)->check(CLI::Range(3, 100000));
        c->add_option("--output", *output);
        c->callback([&app, samples, output] {
            app.job = [=] {
                emit(job_json("diag.theta-approx", json{{"samples", *samples}},
                              topocs::io::theta_approx_json(topocs::theta_approx_curve(*samples))),
                     *output);
                return 0;
            };
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    App app;
    app.cli.require_subcommand(1);
    add_state_commands(app);
    add_overlap_commands(app);
    add_entangle_commands(app);
    add_measure_commands(app);
    add_geom_commands(app);
    add_diag_commands(app);

    try {
        app.cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.cli.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!app.job) {
        std::cerr << app.cli.help();
        return kExitUsage;
    }

    try {
        return app.job();
    } catch (const topocs::SingularityError& e) {
        emit(job_json("error", json::object(), nullptr,
                      json{{"error", e.what()}, {"class", "singularity"}}),
             "");
        return kExitSingular;
    } catch (const std::exception& e) {
        emit(job_json("error", json::object(), nullptr,
                      json{{"error", e.what()}, {"class", "numeric-domain"}}),
             "");
        return kExitDomain;
    }
}
