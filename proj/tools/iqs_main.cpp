// iqs command line front-end: parses JSON documents, dispatches to the
// library and emits JSON results (CSV for traces). See README for the
// document schema and examples.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "iqs/decision.hpp"
#include "iqs/errors.hpp"
#include "iqs/evolution.hpp"
#include "iqs/games.hpp"
#include "iqs/interaction.hpp"
#include "iqs/json_io.hpp"
#include "iqs/measurement.hpp"
#include "iqs/spectral.hpp"
#include "iqs/transforms.hpp"
#include "iqs/two_agent.hpp"

namespace {

using iqs::cplx;
using iqs::io::json;

struct Config {
    double tolerance = 1e-9;
    double hbar = 1.0;
    iqs::io::GameDefaults game;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    json doc = iqs::io::load_document(path);
    if (!doc.is_object()) throw iqs::SchemaError("config: expected a JSON object");
    if (doc.contains("tolerance")) cfg.tolerance = doc["tolerance"].get<double>();
    if (doc.contains("hbar")) cfg.hbar = doc["hbar"].get<double>();
    if (doc.contains("pd_payoffs")) {
        cfg.game.payoffs.clear();
        for (const auto& row : doc["pd_payoffs"])
            cfg.game.payoffs.push_back(iqs::io::parse_rvector(row, "pd_payoffs"));
    }
    if (doc.contains("initializer"))
        cfg.game.initializer = doc["initializer"].get<std::string>();
    if (doc.contains("strategies")) {
        cfg.game.strategies.clear();
        for (const auto& s : doc["strategies"])
            cfg.game.strategies.push_back(s.get<std::string>());
    }
    return cfg;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw iqs::SchemaError("cannot open CSV output file: " + path);
    return out;
}

void write_trace_csv(std::ostream& os, const iqs::EvolutionTrace& tr) {
    const std::size_t dim = tr.states.empty() ? 0 : tr.states[0].size();
    os << "t";
    for (std::size_t i = 0; i < dim; ++i) os << ",state_re_" << i << ",state_im_" << i;
    for (std::size_t i = 0; i < dim; ++i) os << ",mean_re_" << i << ",mean_im_" << i;
    os << "\n";
    char buf[40];
    auto put = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.12g", x);
        os << "," << buf;
    };
    for (std::size_t t = 0; t < tr.states.size(); ++t) {
        os << t;
        for (std::size_t i = 0; i < dim; ++i) {
            put(tr.states[t][i].real());
            put(tr.states[t][i].imag());
        }
        for (std::size_t i = 0; i < dim; ++i) {
            put(tr.means[t][i].real());
            put(tr.means[t][i].imag());
        }
        os << "\n";
    }
}

int run_decompose(const std::string& path) {
    const iqs::RealMatrix a =
        iqs::io::parse_real_matrix_doc(iqs::io::load_document(path), "decompose");
    const iqs::InteractionState s = iqs::InteractionState::from_matrix(a);
    const double na = s.matrix.frobenius_norm();
    const double ns = s.symmetric.frobenius_norm();
    const double nk = s.skew.frobenius_norm();
    json out;
    out["kind"] = "decomposition";
    out["symmetric"] = iqs::io::matrix_json(s.symmetric);
    out["skew"] = iqs::io::matrix_json(s.skew);
    out["hermitian"] = iqs::io::matrix_json(s.hermitian);
    out["norm"] = iqs::io::num(na);
    out["norm_symmetric"] = iqs::io::num(ns);
    out["norm_skew"] = iqs::io::num(nk);
    out["pythagoras_residual"] = iqs::io::num(na * na - ns * ns - nk * nk);
    emit(out);
    return 0;
}

int run_spectrum(const std::string& path, const Config& cfg) {
    const iqs::io::MatrixDoc doc = iqs::io::parse_matrix_doc(iqs::io::load_document(path));
    iqs::ComplexMatrix herm;
    if (doc.real)
        herm = iqs::hermitian_repr(doc.matrix.real_part());
    else
        herm = doc.matrix; // must already be self-adjoint; eigh checks
    const iqs::SpectralDecomposition sd = iqs::eigh(herm, cfg.tolerance);
    json out;
    out["kind"] = "spectrum";
    out["eigenvalues"] = iqs::io::rvec_json(sd.eigenvalues);
    out["eigenvectors"] = iqs::io::matrix_json(sd.eigenvectors);
    out["reconstruction_residual"] =
        iqs::io::num((sd.reconstruct() - herm).frobenius_norm());
    emit(out);
    return 0;
}

int run_measure(const std::string& f_path, const std::string& a_path) {
    const iqs::RealMatrix f =
        iqs::io::parse_real_matrix_doc(iqs::io::load_document(f_path), "measure functional");
    const iqs::RealMatrix a =
        iqs::io::parse_real_matrix_doc(iqs::io::load_document(a_path), "measure state");
    const iqs::Measurement meas{f};
    const iqs::InteractionState s = iqs::InteractionState::from_matrix(a);
    const double value = iqs::measure(meas, s);
    const iqs::JointDistribution jd = iqs::joint_probabilities(meas, s);
    json out;
    out["kind"] = "measurement";
    out["value"] = iqs::io::num(value);
    out["state_eigenvalues"] = iqs::io::rvec_json(jd.state_eigenvalues);
    out["measurement_eigenvalues"] = iqs::io::rvec_json(jd.measurement_eigenvalues);
    out["joint_probabilities"] = iqs::io::matrix_json(jd.p);
    out["probability_total"] = iqs::io::num(jd.total());
    out["expected_value_residual"] = iqs::io::num(std::abs(jd.expected_value() - value));
    emit(out);
    return 0;
}

int run_shapley(const std::string& path) {
    const iqs::TUGame v = iqs::io::parse_tu_game_doc(iqs::io::load_document(path));
    const auto phi = iqs::shapley_value(v);
    double total = 0.0;
    for (double x : phi) total += x;
    const double grand = v.values.back() - v.values.front();
    json out;
    out["kind"] = "shapley";
    out["shapley"] = iqs::io::rvec_json(phi);
    out["efficiency_residual"] = iqs::io::num(total - grand);
    emit(out);
    return 0;
}

double max_residual(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

int run_transform(const std::string& kind, const std::string& path, bool roundtrip) {
    const json doc = iqs::io::load_document(path);
    if (!doc.is_object() || !doc.contains("kind"))
        throw iqs::SchemaError("transform: document needs a 'kind'");
    const std::string doc_kind = doc["kind"].get<std::string>();

    std::vector<cplx> input;
    bool real_input = false;
    int players = 0;
    if (doc_kind == "tu_game") {
        const iqs::TUGame v = iqs::io::parse_tu_game_doc(doc);
        input.assign(v.values.begin(), v.values.end());
        real_input = true;
        players = v.n;
    } else if (doc_kind == "decision_state") {
        const iqs::DecisionState s = iqs::io::parse_decision_state_doc(doc);
        input = s.coeffs;
        players = s.n;
        if (kind != "fourier" && s.k != 2)
            throw iqs::SchemaError("transform: lattice transforms need k = 2 states");
    } else {
        throw iqs::SchemaError("transform: expected a tu_game or decision_state document");
    }

    std::vector<cplx> output;
    std::vector<cplx> back;
    if (kind == "zeta") {
        output = iqs::zeta_apply(input);
        if (roundtrip) back = iqs::moebius_apply(output);
    } else if (kind == "moebius") {
        output = iqs::moebius_apply(input);
        if (roundtrip) back = iqs::zeta_apply(output);
    } else if (kind == "hadamard") {
        output = iqs::hadamard_apply(input);
        if (roundtrip) back = iqs::hadamard_apply(output);
    } else if (kind == "banzhaf") {
        if (!real_input)
            throw iqs::SchemaError("transform: banzhaf applies to tu_game documents");
        std::vector<double> rv(input.size());
        for (std::size_t i = 0; i < input.size(); ++i) rv[i] = input[i].real();
        const auto ib = iqs::banzhaf_interaction(iqs::TUGame(players, rv));
        output.assign(ib.begin(), ib.end());
        if (roundtrip) {
            // invert through the Hadamard proportionality
            std::vector<double> h(ib.size());
            const double scale = std::pow(2.0, players / 2.0);
            for (iqs::subset_t s = 0; s < h.size(); ++s)
                h[s] = scale * ib[s] / std::pow(-2.0, iqs::popcount(s));
            const auto v = iqs::hadamard_apply(h);
            back.assign(v.begin(), v.end());
        }
    } else if (kind == "fourier") {
        output = iqs::fourier_apply(input);
        if (roundtrip) back = iqs::fourier_matrix(input.size()).adjoint().apply(output);
    } else {
        throw iqs::SchemaError("transform: unknown kind '" + kind + "'");
    }

    json out;
    out["kind"] = "transform";
    out["transform"] = kind;
    bool real_output = true;
    for (cplx z : output) real_output = real_output && z.imag() == 0.0;
    if (real_output) {
        std::vector<double> rv(output.size());
        for (std::size_t i = 0; i < output.size(); ++i) rv[i] = output[i].real();
        out["output"] = iqs::io::rvec_json(rv);
    } else {
        out["output"] = iqs::io::cvec_json(output);
    }
    if (roundtrip) out["roundtrip_residual"] = iqs::io::num(max_residual(input, back));
    emit(out);
    return 0;
}

int run_game(const std::string& path, bool with_table, bool with_nash, const Config& cfg) {
    const iqs::DecisionGame g =
        iqs::io::parse_decision_game_doc(iqs::io::load_document(path), cfg.game);
    json out;
    out["kind"] = "eisert_game";
    json profiles = json::array();
    for (std::size_t i = 0; i < g.strategies[0].size(); ++i) {
        for (std::size_t j = 0; j < g.strategies[1].size(); ++j) {
            const iqs::DecisionState fin =
                iqs::eisert_play(g, g.strategies[0].ops[i], g.strategies[1].ops[j]);
            json p;
            p["strategies"] = {g.strategies[0].names[i], g.strategies[1].names[j]};
            p["final_state"] = iqs::io::cvec_json(fin.coeffs);
            p["payoffs"] = {iqs::io::num(iqs::expected_payoff(g, 0, fin)),
                            iqs::io::num(iqs::expected_payoff(g, 1, fin))};
            profiles.push_back(std::move(p));
        }
    }
    out["profiles"] = std::move(profiles);

    if (with_table || with_nash) {
        const iqs::PayoffTable t = iqs::payoff_table(g);
        if (with_table) {
            json tj;
            tj["rows"] = t.row_names;
            tj["cols"] = t.col_names;
            tj["player1"] = json::array();
            tj["player2"] = json::array();
            for (std::size_t i = 0; i < t.rows(); ++i) {
                tj["player1"].push_back(iqs::io::rvec_json(t.payoff[0][i]));
                tj["player2"].push_back(iqs::io::rvec_json(t.payoff[1][i]));
            }
            out["table"] = std::move(tj);
        }
        if (with_nash) {
            auto name_pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
                json arr = json::array();
                for (auto [i, j] : ps)
                    arr.push_back({t.row_names[i], t.col_names[j]});
                return arr;
            };
            out["nash_equilibria"] = name_pairs(iqs::nash_equilibria(t));
            out["pareto_front"] = name_pairs(iqs::pareto_front(t));
        }
    }
    emit(out);
    return 0;
}

int run_evolve(const std::string& doc_path, const std::string& op_path,
               const std::string& init_path, long long steps, const std::string& csv,
               double tol, std::size_t window) {
    iqs::io::EvolutionDoc ev;
    if (!doc_path.empty()) {
        ev = iqs::io::parse_evolution_doc(iqs::io::load_document(doc_path));
    } else {
        if (op_path.empty() || init_path.empty() || steps < 0)
            throw iqs::SchemaError(
                "evolve: need an evolution document or --operator, --init and --steps");
        ev.op = iqs::io::parse_complex_matrix(iqs::io::load_document(op_path)["rows"],
                                              "operator rows");
        ev.init = iqs::io::parse_cvector(iqs::io::load_document(init_path)["coeffs"],
                                         "init coeffs");
        ev.steps = static_cast<std::size_t>(steps);
    }
    const iqs::EvolutionTrace tr = iqs::evolve(ev.op, ev.init, ev.steps);
    const iqs::ErgodicVerdict verdict = iqs::ergodic_mean(tr, tol, window);
    if (!csv.empty()) {
        if (csv == "-") {
            write_trace_csv(std::cout, tr);
            return 0;
        }
        auto os = open_csv(csv);
        write_trace_csv(os, tr);
    }
    json out;
    out["kind"] = "evolution";
    out["steps"] = ev.steps;
    out["converged"] = verdict.converged;
    out["mean"] = iqs::io::cvec_json(verdict.estimate);
    out["residual"] = iqs::io::num(verdict.residual);
    emit(out);
    return 0;
}

int run_two_agent(double w1, double w2, const std::string& variant, const Config& cfg,
                  const std::string& csv, std::size_t samples, double tmax) {
    iqs::TwoAgentKind kind;
    if (variant == "conformist")
        kind = iqs::TwoAgentKind::conformist;
    else if (variant == "anticonformist")
        kind = iqs::TwoAgentKind::anticonformist;
    else if (variant == "mixed")
        kind = iqs::TwoAgentKind::mixed;
    else
        throw iqs::SchemaError("two-agent: unknown variant '" + variant + "'");

    const iqs::TwoAgentModel m = iqs::two_agent_variant(w1, w2, kind, cfg.hbar);
    json out;
    out["kind"] = "two_agent";
    out["variant"] = iqs::kind_name(kind);
    out["w1"] = iqs::io::num(m.w1);
    out["w2"] = iqs::io::num(m.w2);
    out["hbar"] = iqs::io::num(m.hbar);
    out["W"] = iqs::io::num(m.w_sum);
    out["delta_W"] = iqs::io::num(m.w_diff);
    out["E0"] = iqs::io::num(m.e0);
    out["Delta"] = iqs::io::num(m.gap);
    out["theta"] = iqs::io::num(m.theta);
    out["phi"] = iqs::io::num(m.phi);
    out["eigenvalues"] = iqs::io::rvec_json({m.lambda1(), m.lambda2()});
    out["max_amplitude"] = iqs::io::num(iqs::max_amplitude(m));
    out["degenerate"] = m.degenerate;
    const auto p = iqs::period(m);
    out["period"] = p ? json(iqs::io::num(*p)) : json(nullptr);
    out["interaction_matrix"] = iqs::io::matrix_json(iqs::interaction_matrix(m));

    if (!csv.empty()) {
        double horizon = tmax;
        if (horizon <= 0.0) horizon = p ? 3.0 * *p : 3.0 * std::numbers::pi * cfg.hbar;
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (csv != "-") {
            file = open_csv(csv);
            os = &file;
        }
        *os << "t,transition_probability,psi0_re,psi0_im,psi1_re,psi1_im\n";
        char buf[40];
        auto put = [&](double x, char sep) {
            std::snprintf(buf, sizeof buf, "%.12g", x);
            *os << buf << sep;
        };
        for (std::size_t i = 0; i < samples; ++i) {
            const double t = samples > 1 ? horizon * static_cast<double>(i) /
                                               static_cast<double>(samples - 1)
                                         : 0.0;
            const auto v = iqs::psi(m, t);
            put(t, ',');
            put(iqs::transition_probability(m, t), ',');
            put(v[0].real(), ',');
            put(v[0].imag(), ',');
            put(v[1].real(), ',');
            put(v[1].imag(), '\n');
        }
        if (csv == "-") return 0;
    }
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interaction systems, decision states and quantum game analysis"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config (tolerance, hbar, pd_payoffs)");

    std::string decompose_in;
    auto* cmd_decompose = app.add_subcommand("decompose", "symmetry split and hermitian representation");
    cmd_decompose->add_option("matrix", decompose_in, "matrix document ('-' = stdin)")->required();

    std::string spectrum_in;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues/eigenvectors of the hermitian representation");
    cmd_spectrum->add_option("matrix", spectrum_in)->required();

    std::string measure_f, measure_a;
    auto* cmd_measure = app.add_subcommand("measure", "apply a linear measurement to an interaction matrix");
    cmd_measure->add_option("functional", measure_f)->required();
    cmd_measure->add_option("matrix", measure_a)->required();

    std::string shapley_in;
    auto* cmd_shapley = app.add_subcommand("shapley", "Shapley value of a TU-game");
    cmd_shapley->add_option("game", shapley_in)->required();

    std::string tf_kind, tf_in;
    bool tf_roundtrip = false;
    auto* cmd_transform = app.add_subcommand("transform", "lattice/Fourier transforms of games and states");
    cmd_transform->add_option("--kind", tf_kind, "zeta|moebius|hadamard|banzhaf|fourier")->required();
    cmd_transform->add_option("input", tf_in)->required();
    cmd_transform->add_flag("--roundtrip", tf_roundtrip, "verify inversion, report residual");

    std::string game_in;
    bool game_table = false, game_nash = false;
    auto* cmd_game = app.add_subcommand("game", "decision/quantum games");
    auto* cmd_eisert = cmd_game->add_subcommand("eisert", "two-player protocol final states and payoffs");
    cmd_eisert->add_option("game", game_in)->required();
    cmd_eisert->add_flag("--table", game_table, "emit the full payoff table");
    cmd_eisert->add_flag("--nash", game_nash, "emit pure equilibria and the Pareto front");

    std::string ev_doc, ev_op, ev_init, ev_csv;
    long long ev_steps = -1;
    double ev_tol = 1e-6;
    std::size_t ev_window = 32;
    auto* cmd_evolve = app.add_subcommand("evolve", "iterate a linear evolution operator");
    cmd_evolve->add_option("document", ev_doc, "evolution document (alternative to flags)");
    cmd_evolve->add_option("--operator", ev_op, "matrix document");
    cmd_evolve->add_option("--init", ev_init, "decision_state document");
    cmd_evolve->add_option("--steps", ev_steps, "number of applications");
    cmd_evolve->add_option("--csv", ev_csv, "write the trace as CSV ('-' = stdout)");
    cmd_evolve->add_option("--tol", ev_tol, "convergence tolerance");
    cmd_evolve->add_option("--window", ev_window, "averaging window");

    double ta_w1 = 0.0, ta_w2 = 0.0, ta_tmax = -1.0;
    std::string ta_variant = "conformist", ta_csv;
    std::size_t ta_samples = 256;
    auto* cmd_two = app.add_subcommand("two-agent", "closed-form two-agent influence model");
    cmd_two->add_option("--w1", ta_w1, "activity level of agent 1")->required();
    cmd_two->add_option("--w2", ta_w2, "activity level of agent 2")->required();
    cmd_two->add_option("--variant", ta_variant, "conformist|anticonformist|mixed");
    cmd_two->add_option("--csv", ta_csv, "sample t -> transition probability ('-' = stdout)");
    cmd_two->add_option("--samples", ta_samples, "number of CSV samples");
    cmd_two->add_option("--tmax", ta_tmax, "CSV horizon (default: 3 periods)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Config cfg = load_config(config_path);
        if (*cmd_decompose) return run_decompose(decompose_in);
        if (*cmd_spectrum) return run_spectrum(spectrum_in, cfg);
        if (*cmd_measure) return run_measure(measure_f, measure_a);
        if (*cmd_shapley) return run_shapley(shapley_in);
        if (*cmd_transform) return run_transform(tf_kind, tf_in, tf_roundtrip);
        if (*cmd_eisert) return run_game(game_in, game_table, game_nash, cfg);
        if (*cmd_evolve)
            return run_evolve(ev_doc, ev_op, ev_init, ev_steps, ev_csv, ev_tol, ev_window);
        if (*cmd_two)
            return run_two_agent(ta_w1, ta_w2, ta_variant, cfg, ta_csv, ta_samples, ta_tmax);
        std::cerr << app.help();
        return 1;
    } catch (const iqs::SchemaError& e) {
        json err;
        err["error"] = {{"type", "schema"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const iqs::PreconditionError& e) {
        json err;
        err["error"] = {{"type", "precondition"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"type", "internal"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}
