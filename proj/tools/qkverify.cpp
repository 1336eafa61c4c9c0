// qkverify: exact verification suites for the quaternionic operator algebra
// on Lambda^p(R^{4m}), the Casimir matrix oracles, the flat-model first
// order operators, the joint (J,C) decomposition engine, and the Diophantine
// eigenvalue-system certificate.
//
// Exit codes: 0 all requested checks pass, 1 a verification failed,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkforms/casimir_matrix.hpp"
#include "qkforms/decomposition.hpp"
#include "qkforms/flat_model.hpp"
#include "qkforms/quaternionic.hpp"
#include "qkforms/rep_theory.hpp"
#include "qkforms/serialize.hpp"
#include "qkforms/theorem_checker.hpp"

using namespace qkforms;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "human";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

/// "a..b" or "a" into an inclusive range.
std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::vector<int> degree_list(int lo, int hi) {
    std::vector<int> d;
    for (int p = lo; p <= hi; ++p) d.push_back(p);
    return d;
}

void echo_flags(const Report& rep, std::ostream& os) {
    for (const auto& f : rep.flags) os << "  [flag] " << f << "\n";
}

int finish_report(const Report& rep, const RunConfig& cfg, const Output& out, bool verbose) {
    if (out.format == "json") {
        Json j = report_json(rep, cfg);
        if (!rep.flags.empty()) j["flags"] = rep.flags;
        out.emit(json_text(j));
    } else if (out.format == "csv") {
        out.emit(report_csv(rep));
    } else {
        std::string text = report_human(rep, verbose);
        out.emit(text);
        echo_flags(rep, std::cout);
    }
    return rep.pass() ? kExitPass : kExitFail;
}

int run_verify_algebra(const RunConfig& cfg, const Output& out, bool allow_m1, bool verbose) {
    auto fam = operator_family(build_frame(cfg.m, allow_m1));
    int phi = cfg.p_hi < 0 ? fam.frame.n : std::min(cfg.p_hi, fam.frame.n);
    auto degrees = degree_list(std::max(0, cfg.p_lo), phi);
    Report rep("verify-algebra");
    rep.merge(verify_basic_commutators(fam, degrees, cfg.seed));
    rep.merge(verify_alg_commutators(fam, degrees, cfg.seed));
    rep.merge(verify_structural(fam, phi));
    return finish_report(rep, cfg, out, verbose);
}

int run_decompose(const RunConfig& cfg, const Output& out) {
    auto fam = operator_family(build_frame(cfg.m));
    if (fam.frame.n > cfg.matrix_cap)
        throw CLI::ValidationError("--m", "4m exceeds the matrix cap; raise --matrix-cap");
    int plo = std::max(0, cfg.p_lo);
    int phi = cfg.p_hi < 0 ? (cfg.p_lo > 0 ? cfg.p_lo : fam.frame.n) : cfg.p_hi;
    if (cfg.p_hi < 0 && cfg.p_lo == 0) phi = fam.frame.n;

    bool all_ok = true;
    std::string human;
    Json tables = Json::array();
    std::string csv;
    for (int p = plo; p <= phi; ++p) {
        auto t = joint_eigenspaces(fam, p);
        if (t.status == DecompositionStatus::Failed) all_ok = false;
        if (out.format == "json") {
            tables.push_back(decomposition_json(t, cfg));
        } else if (out.format == "csv") {
            csv += decomposition_csv(t);
        } else {
            human += "p = " + std::to_string(p) + "  (dim " + std::to_string(t.total_dim) + ")\n";
            for (const auto& e : t.entries) {
                human += "  " + e.label.str() + "  j=" + e.j.str() + " c=" + e.c.str()
                       + "  weyl_dim=" + std::to_string(e.weyl_dim)
                       + "  mult=" + std::to_string(e.multiplicity)
                       + "  eigenspace_dim=" + std::to_string(e.eigenspace_dim) + "\n";
            }
            for (const auto& l : t.excluded_by_rank)
                human += "  note: " + l.str() + " absent since a <= m fails\n";
            for (const auto& note : t.ambiguity_notes) human += "  ambiguous: " + note + "\n";
            human += "  completeness: " + std::to_string(t.covered_dim) + " / "
                   + std::to_string(t.total_dim)
                   + (t.status == DecompositionStatus::Failed ? "  FAIL" : "") + "\n";
        }
    }
    if (out.format == "json") {
        Json j;
        j["version"] = kVersion;
        j["suite"] = "decompose";
        j["config"] = config_json(cfg);
        j["tables"] = tables;
        j["verdict"] = all_ok ? "PASS" : "FAIL";
        out.emit(json_text(j));
    } else if (out.format == "csv") {
        out.emit(csv);
    } else {
        human += all_ok ? "verdict: PASS\n" : "verdict: FAIL\n";
        out.emit(human);
    }
    return all_ok ? kExitPass : kExitFail;
}

int run_casimir(const RunConfig& cfg, const Output& out, const std::string& label_str, bool verbose) {
    auto fam = operator_family(build_frame(cfg.m));
    if (fam.frame.n > cfg.matrix_cap)
        throw CLI::ValidationError("--m", "4m exceeds the matrix cap; raise --matrix-cap");
    auto spm = spm_basis(fam.frame);
    auto sp1 = sp1_basis(fam);
    int plo = std::max(0, cfg.p_lo);
    int phi = cfg.p_hi < 0 ? fam.frame.n : std::min(cfg.p_hi, fam.frame.n);
    auto degrees = degree_list(plo, phi);

    Report rep("casimir");
    if (!label_str.empty()) {
        int k, a, b;
        if (std::sscanf(label_str.c_str(), "%d,%d,%d", &k, &a, &b) != 3)
            throw CLI::ValidationError("--label", "expected k,a,b");
        RepLabel l{k, a, b};
        Rational formula = casimir_spm_killing(l.weight(cfg.m), cfg.m);
        rep.add({"closed-form value for " + l.str(), "Killing-normalized Casimir eigenvalue",
                 true, "0", "value " + formula.str()});
        for (int p : degrees) {
            if (!admissible(l.k, l.a, l.b, p, cfg.m)) continue;
            auto sub = verify_normalizations(fam, spm, sp1, p);
            for (auto& r : sub.records)
                if (r.id.find(l.str()) != std::string::npos) rep.add(r);
        }
    } else {
        rep.merge(verify_so_casimir(fam, so_basis(fam.frame.n), degrees));
        rep.merge(verify_J_is_sp1_casimir(fam, sp1, degrees));
        rep.merge(verify_C_decomposition(fam, spm, degrees));
        for (int p : degrees) rep.merge(verify_normalizations(fam, spm, sp1, p));
    }
    return finish_report(rep, cfg, out, verbose);
}

int run_flat(const RunConfig& cfg, const Output& out, bool verbose) {
    auto fam = operator_family(build_frame(cfg.m));
    int plo = std::max(0, cfg.p_lo);
    int phi = cfg.p_hi < 0 ? (cfg.p_lo > 0 ? cfg.p_lo : 4) : cfg.p_hi;
    Report rep("flat");
    for (int p = plo; p <= phi; ++p) {
        rep.merge(verify_comfor(fam, p, cfg.degree_cap, cfg.seed));
        if (p + 1 <= fam.frame.n) rep.merge(verify_killing_projections(fam, p));
    }
    // the worked Killing/twistor examples
    {
        const int n = fam.frame.n;
        PolyForm constant = PolyForm::term(n, Polynomial::constant(Rational(3)),
                                           (BladeMask(1) << 0) | (BladeMask(1) << 2));
        bool c_ok = is_killing(constant);
        rep.add({"constant form is Killing", "parallel forms are Killing", c_ok, c_ok ? "0" : "violated", ""});
        PolyForm rot(n);
        rot.add_term(BladeMask(1) << 1, Polynomial::variable(0));
        rot.add_term(BladeMask(1) << 0, -Polynomial::variable(1));
        bool r_ok = is_killing(rot) && killing_characterization(rot);
        rep.add({"x1 dx2 - x2 dx1 is Killing", "rotation one-form", r_ok, r_ok ? "0" : "violated", ""});
        PolyForm rad = PolyForm::term(n, Polynomial::variable(0), BladeMask(1) << 0);
        bool n_ok = !is_killing(rad);
        rep.add({"x1 dx1 is not Killing", "shear one-form fails the defining equation",
                 n_ok, n_ok ? "0" : "violated", ""});
        bool t_bad = is_twistor(rad);
        if (t_bad) {
            rep.add({"x1 dx1 twistor status", "claimed twistor", true, "0", ""});
        } else {
            PolyForm dil(n);
            for (int i = 0; i < n; ++i) dil.add_term(BladeMask(1) << i, Polynomial::variable(i));
            bool d_ok = is_twistor(dil) && !is_killing(dil);
            rep.add({"dilation form sum x_i dx_i is twistor, not Killing",
                     "corrected conformal example", d_ok, d_ok ? "0" : "violated", ""});
            rep.flag("displayed example 'x1 dx1 is a twistor form' is refuted: [T(x1 dx1)](e1) = "
                     + twistor_apply(rad, Form::basis(n, 0)).str()
                     + "; the dilation form sum_i x_i dx_i is the certified twistor-not-Killing example");
        }
    }
    return finish_report(rep, cfg, out, verbose);
}

int run_check_theorem(const RunConfig& cfg, const Output& out) {
    auto cert = theorem_report(cfg.m, cfg.m_high(), cfg.matrix_cap);
    if (out.format == "json") {
        out.emit(json_text(certificate_json(cert, cfg)));
    } else if (out.format == "csv") {
        std::string csv = "m,p,source,target,case,detail\n";
        for (const auto& cell : cert.cells)
            for (const auto& s : cell.solutions)
                csv += std::to_string(cell.m) + "," + std::to_string(cell.p) + ","
                     + s.pair.source.str() + "," + s.pair.target.str() + ","
                     + case_name(s.cls.flag) + "," + csv_escape(s.cls.detail) + "\n";
        out.emit(csv);
    } else {
        std::string human = "eigenvalue-system certificate, m in [" + std::to_string(cert.m_lo)
                          + ", " + std::to_string(cert.m_hi) + "]\n";
        human += "candidate labels scanned: " + std::to_string(cert.pairs_scanned) + "\n";
        for (const auto& cell : cert.cells)
            for (const auto& s : cell.solutions)
                human += "  m=" + std::to_string(cell.m) + " p=" + std::to_string(cell.p) + "  "
                       + s.pair.source.str() + " -> " + s.pair.target.str() + "  "
                       + case_name(s.cls.flag) + "\n";
        for (const auto& n : cert.notes) human += "  note: " + n + "\n";
        for (const auto& v : cert.violations) human += "  VIOLATION: " + v + "\n";
        human += std::string("verdict: ") + (cert.pass ? "PASS" : "FAIL") + "\n";
        out.emit(human);
    }
    return cert.pass ? kExitPass : kExitFail;
}

int run_all(const RunConfig& cfg, const Output& ignored, bool verbose) {
    (void)ignored; // combined runs always print human summaries to stdout
    Output out;
    int worst = kExitPass;
    auto bump = [&worst](int code) { worst = std::max(worst, code); };
    std::cout << "== verify-algebra ==\n";
    bump(run_verify_algebra(cfg, out, false, verbose));
    std::cout << "== casimir ==\n";
    bump(run_casimir(cfg, out, "", verbose));
    std::cout << "== decompose ==\n";
    bump(run_decompose(cfg, out));
    std::cout << "== flat ==\n";
    bump(run_flat(cfg, out, verbose));
    std::cout << "== check-theorem ==\n";
    bump(run_check_theorem(cfg, out));
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the quaternionic exterior-algebra operator identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    Output out;
    std::string m_arg = "2", m_range, p_arg, p_range, label;
    bool allow_m1 = false, verbose = false;

    auto add_common = [&](CLI::App* sub, bool with_p) {
        sub->add_option("--m", m_arg, "quaternionic dimension (or range a..b where supported)");
        sub->add_option("--m-range", m_range, "range a..b of quaternionic dimensions");
        if (with_p) {
            sub->add_option("--p", p_arg, "form degree");
            sub->add_option("--p-range", p_range, "range a..b of form degrees");
        }
        sub->add_option("--seed", cfg.seed, "seed for the random rational sweeps");
        sub->add_option("--degree-cap", cfg.degree_cap, "polynomial degree cap for flat-model samples");
        sub->add_option("--matrix-cap", cfg.matrix_cap, "largest ambient dimension 4m for matrix work");
        sub->add_option("--format", out.format, "human | json | csv")
            ->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("--out", out.path, "output file (default stdout)");
        sub->add_flag("--verbose", verbose, "list passing records in human format");
    };

    auto* alg = app.add_subcommand("verify-algebra", "commutator and structural identity suites");
    add_common(alg, true);
    alg->add_flag("--allow-m1", allow_m1, "permit the algebra-only model m = 1");

    auto* dec = app.add_subcommand("decompose", "joint (J,C) eigenspace decomposition tables");
    add_common(dec, true);

    auto* cas = app.add_subcommand("casimir", "Casimir matrix oracles and normalization factors");
    add_common(cas, true);
    cas->add_option("--label", label, "focus on one label k,a,b");

    auto* flt = app.add_subcommand("flat", "flat-model differential operator suites");
    add_common(flt, true);

    auto* thm = app.add_subcommand("check-theorem", "exhaustive eigenvalue-system certificate");
    add_common(thm, false);

    auto* all = app.add_subcommand("all", "run every suite for one m");
    add_common(all, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        // resolve m / ranges
        auto mr = parse_range(m_range.empty() ? m_arg : m_range);
        cfg.m = mr.first;
        cfg.m_hi = mr.second;
        if (cfg.m < 1 || cfg.m_hi < cfg.m) {
            std::cerr << "error: invalid quaternionic dimension (need m >= 2, or m = 1 with --allow-m1)\n";
            return kExitUsage;
        }
        if (cfg.m == 1 && !allow_m1) {
            std::cerr << "error: m = 1 carries no quaternionic holonomy condition; "
                         "pass --allow-m1 for algebra-only experiments\n";
            return kExitUsage;
        }
        if (!p_arg.empty() && !p_range.empty()) {
            std::cerr << "error: give either --p or --p-range, not both\n";
            return kExitUsage;
        }
        if (!p_arg.empty()) {
            cfg.p_lo = std::stoi(p_arg);
            cfg.p_hi = cfg.p_lo;
        } else if (!p_range.empty()) {
            auto pr = parse_range(p_range);
            cfg.p_lo = pr.first;
            cfg.p_hi = pr.second;
        }
        if (cfg.p_lo < 0 || (cfg.p_hi >= 0 && cfg.p_hi > 4 * cfg.m_high())) {
            std::cerr << "error: form degree out of range [0, 4m]\n";
            return kExitUsage;
        }

        if (alg->parsed()) return run_verify_algebra(cfg, out, allow_m1, verbose);
        if (dec->parsed()) return run_decompose(cfg, out);
        if (cas->parsed()) return run_casimir(cfg, out, label, verbose);
        if (flt->parsed()) return run_flat(cfg, out, verbose);
        if (thm->parsed()) return run_check_theorem(cfg, out);
        if (all->parsed()) return run_all(cfg, out, verbose);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
