#pragma once

// JSON serialization of reports and certificates, and parsing of the input
// file formats (matrices, crossing triples, mutation pairs, equivariant
// data).  Matrix files are accepted either as JSON {"label", "matrix"} or as
// plain text (one row per line, whitespace-separated integers).

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "concordia/amphicheiral.hpp"
#include "concordia/concordance.hpp"
#include "concordia/covers.hpp"
#include "concordia/error.hpp"
#include "concordia/gilmer.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

using json = nlohmann::json;

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::Parse, "matrix must be an array of rows");
    size_t rows = j.size();
    if (rows == 0) return IntMatrix(0, 0);
    size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail(ErrorKind::Parse, "ragged matrix rows");
        for (size_t k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            if (cell.is_number_integer())
                m(i, k) = Integer(cell.get<std::int64_t>());
            else if (cell.is_string())
                m(i, k) = Integer(cell.get<std::string>());
            else
                fail(ErrorKind::Parse, "matrix entries must be integers");
        }
    }
    return m;
}

inline IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of integers");
    IntVec v;
    for (const auto& cell : j) {
        if (cell.is_number_integer())
            v.emplace_back(cell.get<std::int64_t>());
        else if (cell.is_string())
            v.emplace_back(cell.get<std::string>());
        else
            fail(ErrorKind::Parse, "vector entries must be integers");
    }
    return v;
}

inline json intvec_to_json(const IntVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline json seifert_to_json(const SeifertMatrix& s) {
    return json{{"label", s.label()}, {"matrix", matrix_to_json(s.matrix())}};
}

inline json ratfunc_to_json(const RatFunc& f) {
    return json{{"num", f.num().to_string()}, {"den", f.den().to_string()}};
}

inline json witt_steps_to_json(const std::vector<WittStep>& steps) {
    json out = json::array();
    for (const auto& s : steps) out.push_back(json{{"kind", s.kind}, {"data", s.data}});
    return out;
}

// ---------------------------------------------------------------------------
// Input files.

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, origin + ": " + e.what());
    }
}

// JSON {"label": ..., "matrix": [[...]]} or plain text rows.
inline SeifertMatrix parse_seifert(const std::string& text, const std::string& origin) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = parse_json_text(text, origin);
        if (!j.contains("matrix")) fail(ErrorKind::Parse, origin + ": missing \"matrix\"");
        std::string label = j.value("label", "");
        return SeifertMatrix::validate(matrix_from_json(j["matrix"]), label);
    }
    return SeifertMatrix::validate(parse_matrix_text(text));
}

// {"A": [[...]], "a": [...], "b": int}
inline CrossingTriple parse_triple(const std::string& text, const std::string& origin) {
    json j = parse_json_text(text, origin);
    for (const char* key : {"A", "a", "b"})
        if (!j.contains(key)) fail(ErrorKind::Parse, origin + ": missing \"" + key + "\"");
    SeifertMatrix base = SeifertMatrix::validate(matrix_from_json(j["A"]));
    IntVec a = intvec_from_json(j["a"]);
    Integer b = j["b"].is_string() ? Integer(j["b"].get<std::string>()) : Integer(j["b"].get<std::int64_t>());
    return crossing_triple(base, a, b);
}

// {"A": [[...]], "C": [[...]], "b": [...]}
inline Genus2MutationPair parse_genus2_pair(const std::string& text, const std::string& origin) {
    json j = parse_json_text(text, origin);
    for (const char* key : {"A", "C", "b"})
        if (!j.contains(key)) fail(ErrorKind::Parse, origin + ": missing \"" + key + "\"");
    return genus2_mutant(matrix_from_json(j["A"]), matrix_from_json(j["C"]), intvec_from_json(j["b"]));
}

// {"A": [[...]], "T": [[...]], "a": [...], "b": int, "epsilon": 0 | -1}
inline AmphicheiralData parse_amphicheiral(const std::string& text, const std::string& origin) {
    json j = parse_json_text(text, origin);
    for (const char* key : {"A", "T", "a", "b"})
        if (!j.contains(key)) fail(ErrorKind::Parse, origin + ": missing \"" + key + "\"");
    AmphicheiralData d;
    d.A = matrix_from_json(j["A"]);
    d.T = matrix_from_json(j["T"]);
    d.a = intvec_from_json(j["a"]);
    d.b = j["b"].is_string() ? Integer(j["b"].get<std::string>()) : Integer(j["b"].get<std::int64_t>());
    d.epsilon = Integer(j.value("epsilon", -1));
    return d;
}

// ---------------------------------------------------------------------------
// Reports.

inline json cover_report_json(const CoverHomology& c, const std::optional<DeckAction>& deck,
                              std::optional<size_t> metabolizer_count) {
    json snf = json::array();
    for (const auto& d : c.snf) snf.push_back(d.str());
    json out{{"q", c.q}, {"snf", snf}};
    if (c.finite)
        out["order"] = c.order.str();
    else
        out["order"] = "INFINITE";
    if (deck) {
        out["p"] = deck->p;
        json eig = json::array();
        for (const auto& [lambda, basis] : deck->eigenspaces)
            eig.push_back(json{{"eigenvalue", lambda}, {"multiplicity", basis.size()}});
        out["eigenvalues"] = eig;
    }
    if (metabolizer_count) out["metabolizer_count"] = *metabolizer_count;
    return out;
}

inline json signature_samples_json(const std::vector<SignatureSample>& samples) {
    json out = json::array();
    for (const auto& s : samples) out.push_back(json{{"a", s.a}, {"b", s.b}, {"value", s.value}});
    return out;
}

inline std::string signature_samples_csv(const std::vector<SignatureSample>& samples) {
    std::ostringstream os;
    os << "a,b,angle_numerator,value\n";
    for (const auto& s : samples) os << s.a << "," << s.b << "," << s.a << "," << s.value << "\n";
    return os.str();
}

inline json crossing_certificate_json(const CrossingDifferenceCertificate& c) {
    return json{{"delta_plus", c.delta_plus.to_string()},
                {"delta_minus", c.delta_minus.to_string()},
                {"c_of_t", ratfunc_to_json(c.c_of_t)},
                {"claimed_class", json::array({ratfunc_to_json(c.claimed_class.entry(0, 0)),
                                               ratfunc_to_json(c.claimed_class.entry(1, 1))})},
                {"checks",
                 json{{"c_symmetric", c.c_symmetric},
                      {"quotient_polynomial", c.qupoly_ok},
                      {"block_reduction", c.block_reduction_ok},
                      {"c_minus_metabolizer", c.cminus_trivial_ok},
                      {"exact_cancellation", c.cancellation_ok},
                      {"signature_agreement", c.signature_ok},
                      {"samples_checked", c.samples_checked}}},
                {"reduction_log", witt_steps_to_json(c.reduction_log)},
                {"verdict", cert_verdict_name(c.verdict)}};
}

inline json mutation_report_json(const Genus2MutationReport& r) {
    return json{{"alexander_equal", r.alexander_equal},
                {"block_reduction", r.block_reduction_ok},
                {"alpha_identity", r.alpha_identity_ok},
                {"witt_difference_trivial", r.witt_trivial_ok},
                {"signature_agreement", r.signature_ok},
                {"samples_checked", r.samples_checked},
                {"reduction_log", witt_steps_to_json(r.reduction_log)},
                {"verdict", cert_verdict_name(r.verdict)}};
}

inline json hk_certificate_json(const HKCertificate& c) {
    json out{{"c_of_t", ratfunc_to_json(c.c_of_t)},
             {"delta_plus_minus", c.delta_plus_minus.to_string()},
             {"delta_minus_plus", c.delta_minus_plus.to_string()},
             {"identities",
              json{{"c_symmetric", c.c_symmetric},
                   {"lower_block_is_minus_c", c.lower_block_identity},
                   {"d_vanishes", c.d_zero},
                   {"block_diagonal", c.block_diagonal_identity},
                   {"delta_square_ratio", c.delta_identity}}},
             {"square_gate", c.square_gate}};
    if (c.F) out["F"] = c.F->to_string();
    if (c.G) out["G"] = c.G->to_string();
    return out;
}

inline json long_certificate_json(const LongCertificate& c) {
    return json{{"F", c.F.to_string()},
                {"G", c.G.to_string()},
                {"delta", c.delta.to_string()},
                {"metabolizer_verified", c.metabolizer_ok},
                {"c_block_witt_trivial", c.c_block_trivial_ok},
                {"signature_profile_zero", c.profile_zero_ok},
                {"samples_checked", c.samples_checked},
                {"reduction_log", witt_steps_to_json(c.reduction_log)},
                {"verified", c.verified}};
}

inline json genus_gap_json(const GenusGapCertificate& c) {
    json per_m = json::array();
    for (const auto& pm : c.per_m) {
        json records = json::array();
        for (const auto& rec : pm.records)
            records.push_back(json{{"k", rec.k},
                                   {"dimD_min", rec.dim_d_min},
                                   {"cg_min", rec.cg_min},
                                   {"bound", rec.bound},
                                   {"contradiction", rec.contradiction}});
        per_m.push_back(json{{"m", pm.m}, {"records", records}, {"all_contradictions", pm.all_contradictions}});
    }
    return json{{"n", c.n},
                {"s7", c.s7_value},
                {"certificates", per_m},
                {"concluded", c.concluded},
                {"asserted_upper_bound", c.asserted_upper_bound}};
}

inline json growth_bound_json(const GrowthBoundReport& r) {
    std::ostringstream eps, bound;
    eps << r.epsilon;
    bound << r.bound;
    return json{{"epsilon", eps.str()},
                {"n", r.n},
                {"sigma_1_3", r.sigma13},
                {"bound", bound.str()},
                {"certifies", r.certifies},
                {"chain", r.chain}};
}

}  // namespace concordia
