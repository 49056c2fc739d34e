#include <catch2/catch.hpp>

#include "arglogic/truth.hpp"

using namespace arglogic;

TEST_CASE("truth values stay inside the unit interval") {
    CHECK(TruthValue(1, 2).is_half());
    CHECK(TruthValue(0, 5).is_zero());
    CHECK(TruthValue(7, 7).is_one());
    CHECK_THROWS_AS(TruthValue(3, 2), DomainViolation);
    CHECK_THROWS_AS(TruthValue(-1, 4), DomainViolation);
}

TEST_CASE("rational arithmetic is exact") {
    TruthValue x(7, 10);
    CHECK(x.complement() == TruthValue(3, 10));
    CHECK(TruthValue(1, 3).complement().complement() == TruthValue(1, 3));
    // canonicalization: 2/4 equals 1/2
    CHECK(TruthValue(2, 4) == TruthValue::half());
    CHECK(TruthValue(2, 4).str() == "1/2");
}

TEST_CASE("fraction strings round-trip") {
    for (const char* s : {"0", "1", "1/2", "3/7", "9/10"}) {
        auto v = TruthValue::parse(s);
        REQUIRE(v.has_value());
        CHECK(v->str() == s);
    }
    CHECK_FALSE(TruthValue::parse("3/2").has_value());
    CHECK_FALSE(TruthValue::parse("-1/2").has_value());
    CHECK_FALSE(TruthValue::parse("1/0").has_value());
    CHECK_FALSE(TruthValue::parse("x").has_value());
    CHECK_FALSE(TruthValue::parse("").has_value());
}

TEST_CASE("min and max order values") {
    TruthValue a(1, 4), b(3, 4);
    CHECK(t_min(a, b) == a);
    CHECK(t_max(a, b) == b);
}
