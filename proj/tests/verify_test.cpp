#include <catch2/catch.hpp>

#include "arglogic/verify.hpp"

using namespace arglogic;

namespace {

ArgumentationFramework mutual() {
    return parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
}

}  // namespace

TEST_CASE("every checker passes on every standard fixture") {
    VerifyParams params;
    params.grid_k = 2;
    for (const auto& [name, af] : standard_fixtures()) {
        for (TheoremId id : all_theorems()) {
            auto report = verify_theorem(id, af, params);
            INFO("fixture " << name << ", theorem " << to_string(id));
            if (!report.pass()) {
                INFO(report.counterexamples.front().to_json().dump());
            }
            CHECK(report.pass());
            CHECK(report.instances_checked > 0);
        }
    }
}

TEST_CASE("fixture aggregation at the acceptance grid resolution") {
    VerifyParams params;
    params.grid_k = 4;
    auto reports = verify_fixtures(all_theorems(), params);
    REQUIRE(reports.size() == all_theorems().size());
    for (const auto& r : reports) {
        INFO(to_string(r.theorem));
        CHECK(r.pass());
    }
}

TEST_CASE("set-equality checkers report the exact model counts") {
    VerifyParams params;
    auto stable = verify_theorem(TheoremId::StableEqEc1K, mutual(), params);
    CHECK(stable.pass());
    CHECK(stable.instances_checked == 9);  // 3^2 assignments

    auto complete = verify_theorem(TheoremId::CompleteEqEc1L, mutual(), params);
    CHECK(complete.pass());
    CHECK(complete.instances_checked == 9);
}

TEST_CASE("the fixed regular-encoding witness is checked verbatim") {
    auto report = verify_theorem(TheoremId::Ec2LCounterexample, mutual(), {});
    CHECK(report.pass());
    CHECK(report.instances_checked == 1);
}

TEST_CASE("harness falsifiability: a corrupted implication table is caught") {
    // corrupt the half-half cell from 1 to 1/2
    TritTable table = kLukasiewiczImplication;
    table[1][1] = 1;
    VerifyParams params;
    params.pl3l_override = LogicSystem::pl3_table("pl3l-mutated", table);

    auto report = verify_theorem(TheoremId::CompleteEqEc1L, mutual(), params);
    CHECK_FALSE(report.pass());
    REQUIRE_FALSE(report.counterexamples.empty());
    // the all-half complete labelling no longer models the encoding
    bool found = false;
    for (const auto& ce : report.counterexamples) {
        for (const auto& w : ce.witnesses) {
            if (w.contains("a") && w["a"] == "1/2" && w["b"] == "1/2") found = true;
        }
    }
    CHECK(found);

    // the untouched system still passes
    CHECK(verify_theorem(TheoremId::CompleteEqEc1L, mutual(), {}).pass());
}

TEST_CASE("invalid configurations are rejected, not silently run") {
    VerifyParams odd;
    odd.grid_k = 3;
    CHECK_THROWS_AS(verify_theorem(TheoremId::CompleteFuzzySetEq, mutual(), odd),
                    std::invalid_argument);
}

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : all_theorems()) {
        auto back = theorem_from_string(to_string(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(theorem_from_string("no-such-theorem").has_value());
}

TEST_CASE("corpus verification is deterministic") {
    CorpusSpec spec;
    spec.seed = 11;
    spec.count = 20;
    spec.n_max = 5;
    VerifyParams params;
    params.grid_k = 2;
    std::vector<TheoremId> ids = {TheoremId::StableEqEc1K, TheoremId::EqEc1Iff,
                                  TheoremId::ZdfTcomComplete};

    auto a = verify_corpus(ids, spec, params);
    auto b = verify_corpus(ids, spec, params);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pass());
        CHECK(a[i].instances_checked == b[i].instances_checked);
        CHECK(a[i].to_json()["theorem"] == b[i].to_json()["theorem"]);
    }

    // an empty id list produces an empty report list
    CHECK(verify_corpus({}, spec, params).empty());

    // the same seed reproduces the same frameworks
    CHECK(corpus_frameworks(spec) == corpus_frameworks(spec));
}

TEST_CASE("every checker also passes on an unrelated corpus seed") {
    CorpusSpec spec;
    spec.seed = 99;
    spec.count = 30;
    spec.n_max = 6;
    VerifyParams params;
    params.grid_k = 2;
    for (const auto& r : verify_corpus(all_theorems(), spec, params)) {
        INFO(to_string(r.theorem));
        if (!r.pass()) {
            INFO(r.counterexamples.front().to_json().dump());
        }
        CHECK(r.pass());
    }
}

TEST_CASE("report json carries the external schema") {
    auto report = verify_theorem(TheoremId::StableEqEc1K, mutual(), {});
    auto j = report.to_json();
    CHECK(j["theorem"] == "stable-eq-ec1-k");
    CHECK(j["instances"] == 9);
    CHECK(j["pass"] == true);
    CHECK(j["counterexamples"].is_array());
    CHECK(j.contains("elapsed_ms"));
}
