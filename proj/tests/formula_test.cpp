#include <catch2/catch.hpp>

#include <random>

#include "arglogic/formula.hpp"

using namespace arglogic;

namespace {

ArgumentationFramework mutual() {
    return parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
}

}  // namespace

TEST_CASE("normal encoding") {
    SECTION("unattacked argument gets an empty conjunction, i.e. T") {
        auto af = parse_apx("arg(a).");
        CHECK(encode_normal(af).to_text() == "(a <-> T)");
    }
    SECTION("self-attacker") {
        auto af = parse_apx("arg(a). att(a,a).");
        CHECK(encode_normal(af).to_text() == "(a <-> (~a))");
    }
    SECTION("mutual attack") {
        CHECK(encode_normal(mutual()).to_text() == "((a <-> (~b)) & (b <-> (~a)))");
    }
    SECTION("no arguments yields T") {
        CHECK(encode_normal(parse_apx("")).to_text() == "T");
    }
}

TEST_CASE("regular encoding") {
    SECTION("unattacked argument") {
        auto af = parse_apx("arg(a).");
        CHECK(encode_regular(af).to_text() == "((a -> T) & (a <-> T))");
    }
    SECTION("chain: empty defender disjunction is F") {
        auto af = parse_apx("arg(a). arg(b). att(a,b).");
        auto text = encode_regular(af).to_text();
        CHECK(text.find("(b <-> F)") != std::string::npos);
        CHECK(text == "((a -> T) & (a <-> T) & (b -> (~a)) & (b <-> F))");
    }
    SECTION("mutual attack: each argument defends itself") {
        CHECK(encode_regular(mutual()).to_text() ==
              "((a -> (~b)) & (a <-> a) & (b -> (~a)) & (b <-> b))");
    }
}

TEST_CASE("atoms cover exactly the framework") {
    CHECK(atoms_of(Formula::top()).empty());
    auto af = mutual();
    auto f = Formula::iff(Formula::atom(af.argument(0)),
                          Formula::negate(Formula::atom(af.argument(1))));
    auto atoms = atoms_of(f);
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].name == "a");
    CHECK(atoms[1].name == "b");

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto random = random_af(1 + rng() % 6, 0.4, rng());
        // every argument heads its own biconditional, so both encodings
        // mention all of them even when unattacked
        CHECK(atoms_of(encode_normal(random)).size() == random.size());
        CHECK(atoms_of(encode_regular(random)).size() == random.size());
    }
}

TEST_CASE("encoders are deterministic") {
    auto af1 = mutual();
    auto af2 = mutual();
    CHECK(encode_normal(af1) == encode_normal(af2));
    CHECK(encode_regular(af1) == encode_regular(af2));
    CHECK(encode_normal(af1) != encode_regular(af1));
}

TEST_CASE("empty and singleton child lists normalize away") {
    CHECK(Formula::conj({}).kind() == Formula::Kind::Top);
    CHECK(Formula::disj({}).kind() == Formula::Kind::Bottom);
    auto a = Formula::atom(ArgumentId{0, "a"});
    CHECK(Formula::conj({a}) == a);
    CHECK(Formula::disj({a}) == a);

    std::mt19937_64 rng(13);
    const auto no_empty_nary = [](const Formula::Node* n, const auto& self) -> bool {
        if ((n->kind == Formula::Kind::And || n->kind == Formula::Kind::Or) &&
            n->children.size() < 2) {
            return false;
        }
        for (const auto& c : n->children) {
            if (!self(c.get(), self)) return false;
        }
        return true;
    };
    for (int trial = 0; trial < 40; ++trial) {
        auto af = random_af(1 + rng() % 6, 0.3, rng());
        CHECK(no_empty_nary(encode_normal(af).root(), no_empty_nary));
        CHECK(no_empty_nary(encode_regular(af).root(), no_empty_nary));
    }
}

TEST_CASE("json rendering uses tagged nodes") {
    auto af = mutual();
    auto j = encode_normal(af).to_json();
    CHECK(j["op"] == "and");
    CHECK(j["args"][0]["op"] == "iff");
    CHECK(j["args"][0]["args"][0] == ordered_json{{"op", "atom"}, {"name", "a"}});
    CHECK(j["args"][0]["args"][1]["op"] == "not");
}
