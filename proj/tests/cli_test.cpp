#define CATCH_CONFIG_RUNNER
#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through /bin/sh so tests can pipe stdin and set env vars.
RunResult run(const std::string& args, const std::string& stdin_text = {},
              const std::string& env_prefix = {}) {
    std::string cmd;
    if (!stdin_text.empty()) {
        cmd = "printf '%s' \"" + stdin_text + "\" | ";
    }
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/arglogic_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kMutual = "arg(a). arg(b). att(a,b). att(b,a).";

}  // namespace

TEST_CASE("encode renders the expected formula text") {
    auto single = write_temp("single.apx", "arg(a).");
    auto r = run("encode " + single);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(a <-> T)\n");

    auto chain = write_temp("chain.apx", "arg(a). arg(b). att(a,b).");
    auto reg = run("encode --encoding regular " + chain);
    CHECK(reg.exit_code == 0);
    CHECK(reg.out.find("(b <-> F)") != std::string::npos);

    auto mutual = write_temp("mutual.apx", kMutual);
    auto norm = run("encode --encoding normal " + mutual);
    CHECK(norm.out == "((a <-> (~b)) & (b <-> (~a)))\n");
}

TEST_CASE("stdin input via '-'") {
    auto r = run("encode - ", "arg(a).");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(a <-> T)\n");
}

TEST_CASE("tgf input format") {
    auto path = write_temp("pair.tgf", "1\n2\n#\n1 2\n");
    auto r = run("semantics --format tgf --semantics stable --output json " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["labellings"].size() == 1);
    CHECK(j["labellings"][0]["1"] == "1");
    CHECK(j["labellings"][0]["2"] == "0");
}

TEST_CASE("semantics command") {
    auto mutual = write_temp("mutual.apx", kMutual);
    auto r = run("semantics --semantics complete --output json " + mutual);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["semantics"] == "complete");
    REQUIRE(j["labellings"].size() == 3);
    CHECK(j["extensions"].size() == 3);

    auto self = write_temp("self.apx", "arg(a). att(a,a).");
    auto stable = run("semantics --semantics stable --output json " + self);
    // no stable labelling is an answer, not an error
    REQUIRE(stable.exit_code == 0);
    auto js = nlohmann::json::parse(stable.out);
    CHECK(js["labellings"].empty());
}

TEST_CASE("models command counts agree with the named systems") {
    auto mutual = write_temp("mutual.apx", kMutual);
    auto pl3l = run("models --logic pl3l --output json " + mutual);
    REQUIRE(pl3l.exit_code == 0);
    CHECK(nlohmann::json::parse(pl3l.out)["count"] == 3);

    auto pl3k = run("models --logic pl3k --output json " + mutual);
    CHECK(nlohmann::json::parse(pl3k.out)["count"] == 2);

    auto pl2 = run("models --logic pl2 --output json " + mutual);
    CHECK(nlohmann::json::parse(pl2.out)["count"] == 2);

    auto fuzzy = run("models --logic fuzzy:standard:goedel --grid-k 4 --output json " + mutual);
    CHECK(nlohmann::json::parse(fuzzy.out)["count"] == 5);

    auto bad = run("models --logic fuzzy:standard:nope " + mutual);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("grounded and preferred semantics through the cli") {
    auto mutual = write_temp("mutual.apx", kMutual);
    auto grounded = run("semantics -s grounded --output json " + mutual);
    REQUIRE(grounded.exit_code == 0);
    auto jg = nlohmann::json::parse(grounded.out);
    REQUIRE(jg["labellings"].size() == 1);
    CHECK(jg["labellings"][0]["a"] == "1/2");
    auto preferred = run("semantics -s preferred --output json " + mutual);
    CHECK(nlohmann::json::parse(preferred.out)["labellings"].size() == 2);
}

TEST_CASE("fuzzy-solve grid and iteration") {
    auto mutual = write_temp("mutual.apx", kMutual);
    auto grid = run("fuzzy-solve --system max --grid-k 4 --output json " + mutual);
    REQUIRE(grid.exit_code == 0);
    CHECK(nlohmann::json::parse(grid.out)["count"] == 5);

    auto cyc = run("fuzzy-solve --system max --iterate --start zeros --output json " + mutual);
    REQUIRE(cyc.exit_code == 0);
    auto j = nlohmann::json::parse(cyc.out);
    CHECK(j["converged"] == false);
    REQUIRE(j.contains("two_cycle"));
    CHECK(j["two_cycle"][0]["a"] == "0");
    CHECK(j["two_cycle"][1]["a"] == "1");

    auto chain = write_temp("chain.apx", "arg(a). arg(b). att(a,b).");
    auto fix = run("fuzzy-solve --system inverse --iterate --start zeros --output json " + chain);
    REQUIRE(fix.exit_code == 0);
    auto jf = nlohmann::json::parse(fix.out);
    CHECK(jf["converged"] == true);
    CHECK(jf["fixed_point"]["a"] == "1");
    CHECK(jf["fixed_point"]["b"] == "0");

    // encoded:<negation>:<tnorm> spelling; goedel matches the max system
    auto enc = run("fuzzy-solve --system encoded:standard:goedel --grid-k 4 --output json " +
                   mutual);
    REQUIRE(enc.exit_code == 0);
    CHECK(nlohmann::json::parse(enc.out)["count"] == 5);
}

TEST_CASE("verify command") {
    auto r = run("verify --theorem ec2-l-counterexample --output json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["theorem"] == "ec2-l-counterexample");
    CHECK(j[0]["pass"] == true);
    // the witness itself is part of the output
    CHECK(j[0]["notes"].get<std::string>().find("1/2") != std::string::npos);

    auto all = run("verify --all --fixtures");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("stable-eq-ec1-k: pass") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    auto quick = run("verify --theorem stable-eq-ec1-k --theorem tcom-fixes-complete");
    CHECK(quick.exit_code == 0);

    auto unknown = run("verify --theorem not-a-theorem");
    CHECK(unknown.exit_code == 2);

    auto nothing = run("verify");
    CHECK(nothing.exit_code == 2);
}

TEST_CASE("exit codes") {
    SECTION("malformed input exits 2") {
        auto bad = write_temp("bad.apx", "arg(a");
        CHECK(run("semantics " + bad).exit_code == 2);
        CHECK(run("encode " + bad).exit_code == 2);
    }
    SECTION("cap violations exit 3") {
        auto three = write_temp("three.apx", "arg(a). arg(b). arg(c).");
        CHECK(run("semantics --max-args 2 " + three).exit_code == 3);
        CHECK(run("models --logic fuzzy:standard:goedel --grid-k 9 --max-grid-points 10 " + three)
                  .exit_code == 3);
    }
    SECTION("ARGLOGIC_MAX_ARGS lowers the default cap") {
        auto three = write_temp("three.apx", "arg(a). arg(b). arg(c).");
        CHECK(run("semantics " + three, "", "ARGLOGIC_MAX_ARGS=2").exit_code == 3);
        CHECK(run("semantics --max-args 5 " + three, "", "ARGLOGIC_MAX_ARGS=2").exit_code == 0);
    }
    SECTION("geometrical singularity exits 4") {
        // c declared first so the grid scan evaluates its two-attacker update
        // rule at a point with one attacker at 1 and the other at 0
        auto two_attackers = write_temp("twoatt.apx",
                                        "arg(c). arg(a). arg(b). att(a,c). att(b,c).");
        CHECK(run("fuzzy-solve --system geometrical --grid-k 2 " + two_attackers).exit_code == 4);
    }
    SECTION("unknown flags exit 2") {
        CHECK(run("semantics --no-such-flag -").exit_code == 2);
        CHECK(run("nonsense").exit_code == 2);
    }
}

TEST_CASE("json output is valid json with stable key order") {
    auto mutual = write_temp("mutual.apx", kMutual);
    for (const char* cmd :
         {"semantics --output json ", "encode --output json ", "models --output json ",
          "fuzzy-solve --grid-k 2 --output json "}) {
        auto r = run(std::string(cmd) + mutual);
        REQUIRE(r.exit_code == 0);
        CHECK_NOTHROW(nlohmann::json::parse(r.out));
    }
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-arglogic-binary> [catch args]\n", argv[0]);
        return 2;
    }
    g_binary = argv[1];
    // strip the binary path before handing the rest to the test framework
    for (int i = 1; i + 1 < argc; ++i) argv[i] = argv[i + 1];
    Catch::Session session;
    return session.run(argc - 1, argv);
}
