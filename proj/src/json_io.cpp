#include "iqs/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "iqs/errors.hpp"
#include "iqs/subset.hpp"

namespace iqs::io {

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json num(double x) { return round12(x); }

json cnum(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }

json rvec_json(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(num(x));
    return out;
}

json cvec_json(const std::vector<cplx>& v) {
    json out = json::array();
    for (cplx z : v) out.push_back(cnum(z));
    return out;
}

json matrix_json(const RealMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(num(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(cnum(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json subset_json(subset_t s, int n) {
    json out = json::array();
    for (int member : subset_members(s, n)) out.push_back(member + 1);
    return out;
}

json load_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("invalid JSON in " + path);
    return doc;
}

cplx parse_scalar(const json& j, const std::string& field) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw SchemaError("field '" + field + "': expected a number or [re, im] pair");
}

std::vector<cplx> parse_cvector(const json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("field '" + field + "': expected an array");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_scalar(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<double> parse_rvector(const json& j, const std::string& field) {
    auto c = parse_cvector(j, field);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].imag() != 0.0)
            throw SchemaError("field '" + field + "': expected real values");
        out[i] = c[i].real();
    }
    return out;
}

ComplexMatrix parse_complex_matrix(const json& rows, const std::string& field) {
    if (!rows.is_array() || rows.empty())
        throw SchemaError("field '" + field + "': expected a non-empty array of rows");
    const std::size_t n = rows.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = parse_cvector(rows[i], field + "[" + std::to_string(i) + "]");
        if (row.size() != n)
            throw SchemaError("field '" + field + "': matrix must be square, row " +
                              std::to_string(i) + " has " + std::to_string(row.size()) +
                              " entries for dim " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
    }
    return m;
}

RealMatrix parse_real_matrix(const json& rows, const std::string& field) {
    const ComplexMatrix c = parse_complex_matrix(rows, field);
    for (cplx z : c.data())
        if (z.imag() != 0.0)
            throw SchemaError("field '" + field + "': expected a real matrix");
    return c.real_part();
}

void require_kind(const json& doc, const std::string& kind) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw SchemaError("document: missing string field 'kind'");
    const std::string got = doc["kind"].get<std::string>();
    if (got != kind)
        throw SchemaError("document: expected kind '" + kind + "', got '" + got + "'");
}

MatrixDoc parse_matrix_doc(const json& doc) {
    require_kind(doc, "matrix");
    if (!doc.contains("rows")) throw SchemaError("matrix document: missing field 'rows'");
    MatrixDoc out;
    out.matrix = parse_complex_matrix(doc["rows"], "rows");
    out.real = true;
    for (cplx z : out.matrix.data())
        if (z.imag() != 0.0) out.real = false;
    if (doc.contains("agents")) {
        if (!doc["agents"].is_array())
            throw SchemaError("matrix document: field 'agents' must be an array");
        for (const auto& a : doc["agents"]) out.agents.push_back(a.get<std::string>());
        if (out.agents.size() != out.matrix.dim())
            throw SchemaError("matrix document: 'agents' length does not match matrix dim");
    }
    return out;
}

RealMatrix parse_real_matrix_doc(const json& doc, const std::string& what) {
    MatrixDoc m = parse_matrix_doc(doc);
    if (!m.real)
        throw SchemaError(what + ": expected a real matrix (imaginary parts present)");
    return m.matrix.real_part();
}

TUGame parse_tu_game_doc(const json& doc) {
    require_kind(doc, "tu_game");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw SchemaError("tu_game document: missing integer field 'n'");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > 26) throw SchemaError("tu_game document: 'n' out of range [1, 26]");
    if (!doc.contains("values")) throw SchemaError("tu_game document: missing field 'values'");
    auto values = parse_rvector(doc["values"], "values");
    if (values.size() != (std::size_t{1} << n))
        throw SchemaError("tu_game document: 'values' must have 2^n entries in "
                          "binary-counter subset order");
    return TUGame(n, std::move(values));
}

DecisionState parse_decision_state_doc(const json& doc) {
    require_kind(doc, "decision_state");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw SchemaError("decision_state document: missing integer field 'n'");
    const int n = doc["n"].get<int>();
    const int k = doc.contains("k") ? doc["k"].get<int>() : 2;
    if (!doc.contains("coeffs"))
        throw SchemaError("decision_state document: missing field 'coeffs'");
    auto coeffs = parse_cvector(doc["coeffs"], "coeffs");
    const bool proper = doc.contains("proper") ? doc["proper"].get<bool>() : true;
    const bool normalize = doc.contains("normalize") ? doc["normalize"].get<bool>() : false;
    try {
        if (!proper) {
            if (k != 2)
                throw SchemaError("decision_state document: valuations require k = 2");
            return DecisionState::valuation(n, std::move(coeffs));
        }
        if (normalize) {
            double nrm2 = 0.0;
            for (cplx z : coeffs) nrm2 += std::norm(z);
            if (nrm2 == 0.0) throw PreconditionError("decision_state: zero vector");
            for (cplx& z : coeffs) z /= std::sqrt(nrm2);
        }
        return DecisionState::proper_state(n, k, std::move(coeffs));
    } catch (const PreconditionError& e) {
        throw SchemaError(std::string("decision_state document: ") + e.what());
    }
}

namespace {

ComplexMatrix parse_strategy(const json& j, const std::string& field) {
    if (j.is_string()) return named_strategy(j.get<std::string>());
    if (j.is_object() && j.contains("matrix"))
        return parse_complex_matrix(j["matrix"], field + ".matrix");
    throw SchemaError("field '" + field + "': expected a strategy name or {name, matrix}");
}

std::string strategy_name(const json& j, std::size_t index) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.contains("name")) return j["name"].get<std::string>();
    return "custom" + std::to_string(index);
}

} // namespace

DecisionGame parse_decision_game_doc(const json& doc, const GameDefaults& defaults) {
    require_kind(doc, "decision_game");

    std::vector<std::vector<double>> payoffs = defaults.payoffs;
    if (payoffs.empty()) payoffs = default_pd_payoffs();
    if (doc.contains("payoffs")) {
        payoffs.clear();
        if (!doc["payoffs"].is_array() || doc["payoffs"].size() != 2)
            throw SchemaError("decision_game document: 'payoffs' must hold two vectors");
        for (std::size_t p = 0; p < 2; ++p)
            payoffs.push_back(parse_rvector(doc["payoffs"][p],
                                            "payoffs[" + std::to_string(p) + "]"));
    }

    ComplexMatrix initializer;
    json init = doc.contains("initializer") ? doc["initializer"] : json(defaults.initializer);
    if (init.is_string()) {
        const std::string name = init.get<std::string>();
        if (name == "entangling")
            initializer = entangling_initializer();
        else if (name == "identity")
            initializer = ComplexMatrix::identity(4);
        else
            throw SchemaError("decision_game document: unknown initializer '" + name + "'");
    } else {
        initializer = parse_complex_matrix(init, "initializer");
    }

    std::vector<StrategySet> sets;
    if (doc.contains("strategies")) {
        if (!doc["strategies"].is_array() || doc["strategies"].size() != 2)
            throw SchemaError("decision_game document: 'strategies' must hold two arrays");
        for (std::size_t p = 0; p < 2; ++p) {
            StrategySet set;
            const auto& arr = doc["strategies"][p];
            if (!arr.is_array() || arr.empty())
                throw SchemaError("decision_game document: empty strategy set");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string field =
                    "strategies[" + std::to_string(p) + "][" + std::to_string(i) + "]";
                set.ops.push_back(parse_strategy(arr[i], field));
                set.names.push_back(strategy_name(arr[i], i));
            }
            sets.push_back(std::move(set));
        }
    } else {
        sets.push_back(strategy_set(defaults.strategies));
        sets.push_back(strategy_set(defaults.strategies));
    }

    return make_eisert_game(std::move(initializer), std::move(payoffs), std::move(sets[0]),
                            std::move(sets[1]));
}

EvolutionDoc parse_evolution_doc(const json& doc) {
    require_kind(doc, "evolution");
    if (!doc.contains("operator"))
        throw SchemaError("evolution document: missing field 'operator'");
    if (!doc.contains("init")) throw SchemaError("evolution document: missing field 'init'");
    if (!doc.contains("steps") || !doc["steps"].is_number_integer())
        throw SchemaError("evolution document: missing integer field 'steps'");
    EvolutionDoc out;
    out.op = parse_complex_matrix(doc["operator"], "operator");
    out.init = parse_cvector(doc["init"], "init");
    const long long steps = doc["steps"].get<long long>();
    if (steps < 0) throw SchemaError("evolution document: 'steps' must be nonnegative");
    out.steps = static_cast<std::size_t>(steps);
    if (out.init.size() != out.op.dim())
        throw SchemaError("evolution document: 'init' length does not match operator dim");
    return out;
}

json decision_state_json(const DecisionState& s) {
    json out;
    out["kind"] = "decision_state";
    out["n"] = s.n;
    out["k"] = s.k;
    out["proper"] = s.proper;
    out["coeffs"] = cvec_json(s.coeffs);
    return out;
}

json tu_game_json(const TUGame& v) {
    json out;
    out["kind"] = "tu_game";
    out["n"] = v.n;
    out["values"] = rvec_json(v.values);
    return out;
}

} // namespace iqs::io
