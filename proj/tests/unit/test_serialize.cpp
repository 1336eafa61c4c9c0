#include <doctest.h>

#include "qkforms/serialize.hpp"

using namespace qkforms;

TEST_CASE("report json shape and verdict") {
    Report rep("demo");
    rep.add({"check-a", "anchor a", true, "0", ""});
    rep.add({"check-b", "anchor b", false, "on e1: (1)*1", "a note"});
    RunConfig cfg;
    cfg.m = 2;
    cfg.seed = 7;
    Json j = report_json(rep, cfg);
    CHECK(j["version"] == kVersion);
    CHECK(j["suite"] == "demo");
    CHECK(j["config"]["m"] == 2);
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["records"].size() == 2);
    CHECK(j["records"][0]["status"] == "pass");
    CHECK(j["records"][1]["status"] == "fail");
    CHECK(j["records"][1]["residual"] == "on e1: (1)*1");
    CHECK(j["verdict"] == "FAIL");
}

TEST_CASE("json serialization is byte-stable across repeated construction") {
    auto build = [] {
        Report rep("stability");
        for (int i = 0; i < 5; ++i)
            rep.add({"id" + std::to_string(i), "anchor", true, "0", ""});
        RunConfig cfg;
        cfg.seed = 20240501;
        return report_json(rep, cfg).dump(2);
    };
    CHECK(build() == build());
}

TEST_CASE("decomposition json carries the pinned record fields") {
    DecompositionTable t;
    t.m = 2;
    t.p = 2;
    t.total_dim = 28;
    t.covered_dim = 28;
    DecompositionEntry e;
    e.label = {2, 2, 0};
    e.j = Rational(-8);
    e.c = Rational(0);
    e.weyl_dim = 5;
    e.complex_dim = 15;
    e.multiplicity = 1;
    e.eigenspace_dim = 15;
    t.entries.push_back(e);
    RunConfig cfg;
    Json j = decomposition_json(t, cfg);
    auto& r = j["records"][0];
    CHECK(r["k"] == 2);
    CHECK(r["a"] == 2);
    CHECK(r["b"] == 0);
    CHECK(r["j"] == "-8");
    CHECK(r["c"] == "0");
    CHECK(r["weyl_dim"] == 5);
    CHECK(r["multiplicity"] == 1);
    CHECK(r["eigenspace_dim"] == 15);
    CHECK(j["verdict"] == "PASS");
}

TEST_CASE("csv escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("csv rendering of reports and tables") {
    Report rep("demo");
    rep.add({"id1", "anchor, with comma", true, "0", ""});
    std::string csv = report_csv(rep);
    CHECK(csv.find("id1,\"anchor, with comma\",pass,0,") != std::string::npos);

    DecompositionTable t;
    DecompositionEntry e;
    e.label = {0, 1, 1};
    e.j = Rational(0);
    e.c = Rational(0);
    e.weyl_dim = 10;
    e.multiplicity = 1;
    e.eigenspace_dim = 10;
    t.entries.push_back(e);
    CHECK(decomposition_csv(t).find("0,1,1,0,0,10,1,10") != std::string::npos);
}
