#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "iqs/complex_matrix.hpp"
#include "iqs/decision.hpp"
#include "iqs/games.hpp"
#include "iqs/tu_game.hpp"

// JSON document schema shared by the CLI and its tests.
//
// Every document carries a top-level "kind" in {matrix, tu_game,
// decision_state, decision_game, evolution}. Complex scalars are two-element
// arrays [re, im]; plain JSON numbers are accepted on input as real scalars.
// Coalitions appearing as output data are sorted 1-based player-index arrays.
// All numbers are rounded to 12 significant digits before serialization so
// byte-identical inputs produce byte-identical outputs.

namespace iqs::io {

using json = nlohmann::json;

double round12(double x);
json num(double x);
json cnum(cplx z);
json rvec_json(const std::vector<double>& v);
json cvec_json(const std::vector<cplx>& v);
json matrix_json(const RealMatrix& m);
json matrix_json(const ComplexMatrix& m);
json subset_json(subset_t s, int n);

// Reads a whole document; "-" means stdin. Throws SchemaError on parse
// failure, naming the source.
json load_document(const std::string& path);

cplx parse_scalar(const json& j, const std::string& field);
std::vector<cplx> parse_cvector(const json& j, const std::string& field);
std::vector<double> parse_rvector(const json& j, const std::string& field);
ComplexMatrix parse_complex_matrix(const json& rows, const std::string& field);
RealMatrix parse_real_matrix(const json& rows, const std::string& field);

void require_kind(const json& doc, const std::string& kind);

struct MatrixDoc {
    ComplexMatrix matrix;
    bool real = false;
    std::vector<std::string> agents;
};

MatrixDoc parse_matrix_doc(const json& doc);
RealMatrix parse_real_matrix_doc(const json& doc, const std::string& what);
TUGame parse_tu_game_doc(const json& doc);
DecisionState parse_decision_state_doc(const json& doc);

struct GameDefaults {
    std::vector<std::vector<double>> payoffs;
    std::string initializer = "entangling";
    std::vector<std::string> strategies = {"I", "pauli1", "pauli2"};
};

DecisionGame parse_decision_game_doc(const json& doc, const GameDefaults& defaults);

struct EvolutionDoc {
    ComplexMatrix op;
    std::vector<cplx> init;
    std::size_t steps = 0;
};

EvolutionDoc parse_evolution_doc(const json& doc);

json decision_state_json(const DecisionState& s);
json tu_game_json(const TUGame& v);

} // namespace iqs::io
