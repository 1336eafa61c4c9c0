#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qkforms/decomposition.hpp"
#include "qkforms/report.hpp"
#include "qkforms/theorem_checker.hpp"

namespace qkforms {

/// Run configuration echoed into every report.  The seed makes the random
/// sweeps reproducible; serialized output contains no timing or paths so
/// reports are byte-identical across runs with equal config.
struct RunConfig {
    int m = 2;
    int m_hi = -1;           // >= m when a range was requested
    int p_lo = 0, p_hi = -1; // -1: full range for the command
    int degree_cap = 3;
    int matrix_cap = 16;
    std::uint64_t seed = 20240501;
    std::string format = "human"; // human | json | csv

    int m_high() const { return m_hi < m ? m : m_hi; }
};

using Json = nlohmann::ordered_json;

inline Json config_json(const RunConfig& c) {
    Json j;
    j["m"] = c.m;
    if (c.m_high() != c.m) j["m_hi"] = c.m_high();
    j["p_lo"] = c.p_lo;
    j["p_hi"] = c.p_hi;
    j["degree_cap"] = c.degree_cap;
    j["matrix_cap"] = c.matrix_cap;
    j["seed"] = c.seed;
    return j;
}

inline Json record_json(const CheckRecord& r) {
    Json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = r.pass ? "pass" : "fail";
    j["residual"] = r.residual;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json report_json(const Report& rep, const RunConfig& cfg) {
    Json j;
    j["version"] = kVersion;
    j["suite"] = rep.suite;
    j["config"] = config_json(cfg);
    j["records"] = Json::array();
    for (const auto& r : rep.records) j["records"].push_back(record_json(r));
    j["verdict"] = rep.pass() ? "PASS" : "FAIL";
    return j;
}

inline Json decomposition_json(const DecompositionTable& t, const RunConfig& cfg) {
    Json j;
    j["version"] = kVersion;
    j["suite"] = "decomposition";
    j["config"] = config_json(cfg);
    j["m"] = t.m;
    j["p"] = t.p;
    j["records"] = Json::array();
    for (const auto& e : t.entries) {
        Json r;
        r["k"] = e.label.k;
        r["a"] = e.label.a;
        r["b"] = e.label.b;
        r["j"] = e.j.str();
        r["c"] = e.c.str();
        r["weyl_dim"] = e.weyl_dim;
        r["multiplicity"] = e.multiplicity;
        r["eigenspace_dim"] = e.eigenspace_dim;
        j["records"].push_back(r);
    }
    j["total_dim"] = t.total_dim;
    j["covered_dim"] = t.covered_dim;
    if (!t.excluded_by_rank.empty()) {
        j["excluded_by_rank"] = Json::array();
        for (const auto& l : t.excluded_by_rank) {
            Json r;
            r["k"] = l.k;
            r["a"] = l.a;
            r["b"] = l.b;
            j["excluded_by_rank"].push_back(r);
        }
    }
    if (!t.ambiguity_notes.empty()) j["ambiguity"] = t.ambiguity_notes;
    if (!t.message.empty()) j["message"] = t.message;
    j["verdict"] = t.status == DecompositionStatus::OK ? "PASS"
                 : t.status == DecompositionStatus::Ambiguous ? "AMBIGUOUS" : "FAIL";
    return j;
}

inline Json certificate_json(const TheoremCertificate& c, const RunConfig& cfg) {
    Json j;
    j["version"] = kVersion;
    j["suite"] = "theorem-certificate";
    j["config"] = config_json(cfg);
    j["m_lo"] = c.m_lo;
    j["m_hi"] = c.m_hi;
    j["pairs_scanned"] = c.pairs_scanned;
    j["records"] = Json::array();
    for (const auto& cell : c.cells) {
        for (const auto& s : cell.solutions) {
            Json r;
            r["m"] = cell.m;
            r["p"] = cell.p;
            r["source"] = {{"k", s.pair.source.k}, {"a", s.pair.source.a}, {"b", s.pair.source.b}};
            r["target"] = {{"k", s.pair.target.k}, {"a", s.pair.target.a}, {"b", s.pair.target.b}};
            r["j"] = s.j.str();
            r["j_prime"] = s.jp.str();
            r["c"] = s.c.str();
            r["c_prime"] = s.cp.str();
            r["case"] = case_name(s.cls.flag);
            r["detail"] = s.cls.detail;
            j["records"].push_back(r);
        }
    }
    j["notes"] = c.notes;
    j["violations"] = c.violations;
    j["verdict"] = c.pass ? "PASS" : "FAIL";
    return j;
}

inline std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string report_csv(const Report& rep) {
    std::string out = "id,anchor,status,residual,note\n";
    for (const auto& r : rep.records)
        out += csv_escape(r.id) + "," + csv_escape(r.anchor) + "," + (r.pass ? "pass" : "fail")
             + "," + csv_escape(r.residual) + "," + csv_escape(r.note) + "\n";
    return out;
}

inline std::string decomposition_csv(const DecompositionTable& t) {
    std::string out = "k,a,b,j,c,weyl_dim,multiplicity,eigenspace_dim\n";
    for (const auto& e : t.entries)
        out += std::to_string(e.label.k) + "," + std::to_string(e.label.a) + ","
             + std::to_string(e.label.b) + "," + e.j.str() + "," + e.c.str() + ","
             + std::to_string(e.weyl_dim) + "," + std::to_string(e.multiplicity) + ","
             + std::to_string(e.eigenspace_dim) + "\n";
    return out;
}

inline std::string report_human(const Report& rep, bool verbose) {
    std::string out = "suite: " + rep.suite + "\n";
    for (const auto& r : rep.records) {
        if (!verbose && r.pass) continue;
        out += std::string(r.pass ? "  [pass] " : "  [FAIL] ") + r.id;
        if (!r.pass) out += "  residual: " + r.residual;
        if (!r.note.empty()) out += "  (" + r.note + ")";
        out += "\n";
    }
    out += "verdict: " + std::string(rep.pass() ? "PASS" : "FAIL")
         + " (" + std::to_string(rep.records.size() - rep.failures()) + "/"
         + std::to_string(rep.records.size()) + " checks)\n";
    return out;
}

} // namespace qkforms
