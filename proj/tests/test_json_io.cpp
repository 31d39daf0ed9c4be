#include <doctest.h>

#include "iqs/errors.hpp"
#include "iqs/json_io.hpp"
#include "oracles.hpp"

using namespace iqs;
using iqs::io::json;

TEST_CASE("scalar parsing accepts numbers and [re, im] pairs") {
    CHECK(io::parse_scalar(json(2.5), "x") == cplx(2.5, 0.0));
    CHECK(io::parse_scalar(json::array({1.0, -3.0}), "x") == cplx(1.0, -3.0));
    CHECK_THROWS_AS(io::parse_scalar(json("no"), "x"), SchemaError);
    CHECK_THROWS_AS(io::parse_scalar(json::array({1.0, 2.0, 3.0}), "x"), SchemaError);
}

TEST_CASE("matrix documents round-trip") {
    json doc;
    doc["kind"] = "matrix";
    doc["rows"] = {{0.0, 1.0}, {0.0, 0.0}};
    const auto m = io::parse_matrix_doc(doc);
    CHECK(m.real);
    CHECK(m.matrix(0, 1) == cplx(1.0, 0.0));

    // emit then re-read reproduces the same values
    json again;
    again["kind"] = "matrix";
    again["rows"] = io::matrix_json(m.matrix.real_part());
    const auto m2 = io::parse_matrix_doc(again);
    CHECK((m2.matrix - m.matrix).frobenius_norm() == 0.0);

    json complex_doc;
    complex_doc["kind"] = "matrix";
    complex_doc["rows"] = {{json::array({0.0, 1.0}), 0.0}, {0.0, 0.0}};
    CHECK_FALSE(io::parse_matrix_doc(complex_doc).real);
    CHECK_THROWS_AS(io::parse_real_matrix_doc(complex_doc, "test"), SchemaError);

    json ragged;
    ragged["kind"] = "matrix";
    ragged["rows"] = {{1.0, 2.0}, {3.0}};
    CHECK_THROWS_WITH_AS(io::parse_matrix_doc(ragged), doctest::Contains("row 1"),
                         SchemaError);

    json wrong_kind;
    wrong_kind["kind"] = "tu_game";
    wrong_kind["rows"] = {{1.0}};
    CHECK_THROWS_AS(io::parse_matrix_doc(wrong_kind), SchemaError);
    CHECK_THROWS_AS(io::parse_matrix_doc(json::object()), SchemaError);
}

TEST_CASE("tu_game documents") {
    json doc;
    doc["kind"] = "tu_game";
    doc["n"] = 2;
    doc["values"] = {0.0, 1.0, 0.0, 2.0};
    const auto v = io::parse_tu_game_doc(doc);
    CHECK(v.n == 2);
    CHECK(v.value(3) == 2.0);

    const json emitted = io::tu_game_json(v);
    const auto v2 = io::parse_tu_game_doc(emitted);
    CHECK(v2.values == v.values);

    doc["values"] = {0.0, 1.0};
    CHECK_THROWS_WITH_AS(io::parse_tu_game_doc(doc), doctest::Contains("2^n"), SchemaError);
    doc.erase("n");
    CHECK_THROWS_AS(io::parse_tu_game_doc(doc), SchemaError);
}

TEST_CASE("decision_state documents") {
    json doc;
    doc["kind"] = "decision_state";
    doc["n"] = 1;
    doc["coeffs"] = {1.0, 0.0};
    const auto s = io::parse_decision_state_doc(doc);
    CHECK(s.proper);
    CHECK(s.coeffs[0] == cplx(1.0, 0.0));

    // normalization flag
    doc["coeffs"] = {1.0, 1.0};
    CHECK_THROWS_AS(io::parse_decision_state_doc(doc), SchemaError);
    doc["normalize"] = true;
    const auto sn = io::parse_decision_state_doc(doc);
    CHECK(std::abs(sn.norm() - 1.0) < 1e-12);

    // valuations skip the norm constraint
    json val;
    val["kind"] = "decision_state";
    val["n"] = 2;
    val["proper"] = false;
    val["coeffs"] = {0.0, 1.0, 0.0, 2.0};
    const auto sv = io::parse_decision_state_doc(val);
    CHECK_FALSE(sv.proper);

    const json emitted = io::decision_state_json(sv);
    const auto sv2 = io::parse_decision_state_doc(emitted);
    CHECK(sv2.coeffs == sv.coeffs);
}

TEST_CASE("decision_game documents") {
    json doc;
    doc["kind"] = "decision_game";
    const auto g = io::parse_decision_game_doc(doc, io::GameDefaults{});
    CHECK(g.payoffs == default_pd_payoffs());
    CHECK(g.strategies[0].names == std::vector<std::string>{"I", "pauli1", "pauli2"});
    CHECK(g.initializer.unitarity_defect() < 1e-12);

    doc["initializer"] = "identity";
    doc["strategies"] = json::array(
        {json::array({"I", "pauli2"}), json::array({"I", "pauli2"})});
    doc["payoffs"] = {{3.0, 5.0, 0.0, 1.0}, {3.0, 0.0, 5.0, 1.0}};
    const auto g2 = io::parse_decision_game_doc(doc, io::GameDefaults{});
    CHECK(g2.strategies[0].size() == 2);
    CHECK((g2.initializer - ComplexMatrix::identity(4)).frobenius_norm() == 0.0);

    json custom = json::object();
    custom["name"] = "flip";
    custom["matrix"] = {{0.0, 1.0}, {1.0, 0.0}};
    doc["strategies"] = json::array({json::array({custom}), json::array({"I"})});
    const auto g3 = io::parse_decision_game_doc(doc, io::GameDefaults{});
    CHECK(g3.strategies[0].names[0] == "flip");

    doc["initializer"] = "warp";
    CHECK_THROWS_AS(io::parse_decision_game_doc(doc, io::GameDefaults{}), SchemaError);
}

TEST_CASE("evolution documents") {
    json doc;
    doc["kind"] = "evolution";
    doc["operator"] = {{1.0, 0.0}, {0.0, 0.5}};
    doc["init"] = {1.0, 1.0};
    doc["steps"] = 10;
    const auto ev = io::parse_evolution_doc(doc);
    CHECK(ev.steps == 10);
    CHECK(ev.op(1, 1) == cplx(0.5, 0.0));

    doc["init"] = {1.0};
    CHECK_THROWS_AS(io::parse_evolution_doc(doc), SchemaError);
    doc.erase("init");
    CHECK_THROWS_AS(io::parse_evolution_doc(doc), SchemaError);
}

TEST_CASE("numbers are rounded to 12 significant digits") {
    CHECK(io::round12(1.0) == 1.0);
    CHECK(io::round12(0.1 + 0.2) == 0.3);
    const double pi_ish = 3.14159265358979;
    CHECK(io::round12(pi_ish) == 3.14159265359);
    // idempotent
    for (int rep = 0; rep < 100; ++rep) {
        const double x = oracle::uniform(-1e6, 1e6);
        CHECK(io::round12(io::round12(x)) == io::round12(x));
    }
}

TEST_CASE("subset encoding is a sorted 1-based index array") {
    CHECK(io::subset_json(0, 3) == json::array());
    CHECK(io::subset_json(0b101, 3) == json::array({1, 3}));
}
