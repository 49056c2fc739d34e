#include <catch2/catch.hpp>

#include <random>

#include "arglogic/equational.hpp"
#include "arglogic/semantics.hpp"

using namespace arglogic;

namespace {

const TruthValue kZero = TruthValue::zero();
const TruthValue kHalf = TruthValue::half();
const TruthValue kOne = TruthValue::one();

Assignment asg(std::initializer_list<TruthValue> values) {
    return Assignment(std::vector<TruthValue>(values));
}

ArgumentationFramework mutual() {
    return parse_apx("arg(a). arg(b). att(a,b). att(b,a).");
}

ArgumentationFramework cycle3() {
    return parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a).");
}

}  // namespace

TEST_CASE("update rules") {
    // c attacked by both a and b
    auto af = parse_apx("arg(a). arg(b). arg(c). att(a,c). att(b,c).");

    SECTION("inverse: product of complements") {
        CHECK(rhs(EquationalSystem::inverse(), af, asg({kHalf, kHalf, kZero}), 2) ==
              TruthValue(1, 4));
    }
    SECTION("luka closed form: totally defeated once the attacker mass reaches 1") {
        CHECK(rhs(EquationalSystem::luka_closed(), af,
                  asg({TruthValue(2, 5), TruthValue(7, 10), kZero}), 2)
                  .is_zero());
        CHECK(rhs(EquationalSystem::luka_closed(), af,
                  asg({TruthValue(1, 5), TruthValue(3, 10), kZero}), 2) == TruthValue(1, 2));
    }
    SECTION("max") {
        auto c3 = cycle3();
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(rhs(EquationalSystem::max(), c3, asg({kHalf, kHalf, kHalf}), a) == kHalf);
        }
    }
    SECTION("unattacked arguments always get 1") {
        for (const auto& sys :
             {EquationalSystem::max(), EquationalSystem::inverse(), EquationalSystem::luka_closed(),
              EquationalSystem::geometrical(),
              EquationalSystem::encoded(Negation::standard(), TNorm::product())}) {
            CHECK(rhs(sys, af, asg({kHalf, kHalf, kHalf}), 0) == kOne);
        }
    }
    SECTION("geometrical singularity: one attacker at 1, another at 0") {
        CHECK(rhs(EquationalSystem::geometrical(), af, asg({kHalf, kHalf, kZero}), 2) == kHalf);
        CHECK_THROWS_AS(rhs(EquationalSystem::geometrical(), af, asg({kOne, kZero, kZero}), 2),
                        GeometricalSingularity);
    }
}

TEST_CASE("satisfaction") {
    CHECK(satisfies(EquationalSystem::max(), mutual(), asg({TruthValue(3, 4), TruthValue(1, 4)})));
    CHECK(satisfies(EquationalSystem::max(), cycle3(), asg({kHalf, kHalf, kHalf})));
    CHECK_FALSE(satisfies(EquationalSystem::max(), cycle3(), asg({kOne, kZero, kZero})));
}

TEST_CASE("grid solutions") {
    SECTION("max on the mutual attack: the whole grid line a+b=1") {
        auto sols = grid_solutions(EquationalSystem::max(), mutual(), 4);
        REQUIRE(sols.size() == 5);
        for (long i = 0; i <= 4; ++i) {
            CHECK(sols[i] == asg({TruthValue(i, 4), TruthValue(4 - i, 4)}));
        }
    }
    SECTION("self-attacker under inverse: x = 1-x has the on-grid solution 1/2") {
        auto self = parse_apx("arg(a). att(a,a).");
        auto sols = grid_solutions(EquationalSystem::inverse(), self, 2);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == asg({kHalf}));
    }
    SECTION("unattacked argument under the luka system") {
        auto single = parse_apx("arg(a).");
        for (long k : {1L, 2L, 5L}) {
            auto sols = grid_solutions(EquationalSystem::luka_closed(), single, k);
            REQUIRE(sols.size() == 1);
            CHECK(sols[0] == asg({kOne}));
        }
    }
}

TEST_CASE("named systems coincide with their encoded counterparts") {
    std::mt19937_64 rng(31);
    const std::pair<TNorm, EquationalSystem> pairs[] = {
        {TNorm::goedel(), EquationalSystem::max()},
        {TNorm::product(), EquationalSystem::inverse()},
        {TNorm::lukasiewicz(), EquationalSystem::luka_closed()},
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto af = random_af(1 + rng() % 3, 0.5, rng());
        for (const auto& [tnorm, named] : pairs) {
            auto encoded = EquationalSystem::encoded(Negation::standard(), tnorm);
            std::vector<TruthValue> grid;
            for (long i = 0; i <= 4; ++i) grid.emplace_back(i, 4);
            std::vector<int> digits(af.size(), 0);
            bool done = af.size() == 0;
            Assignment v(af.size());
            while (true) {
                for (std::size_t i = 0; i < af.size(); ++i) v.set(i, grid[digits[i]]);
                CHECK(satisfies(encoded, af, v) == satisfies(named, af, v));
                std::size_t pos = af.size();
                while (pos > 0) {
                    --pos;
                    if (++digits[pos] <= 4) break;
                    digits[pos] = 0;
                    if (pos == 0) done = true;
                }
                if (done || af.size() == 0) break;
            }
        }
    }
}

TEST_CASE("fixed-point iteration") {
    SECTION("a solution is a fixed point after zero steps") {
        auto out = iterate(EquationalSystem::max(), mutual(), asg({kHalf, kHalf}));
        CHECK(out.converged);
        CHECK(out.steps == 0);
        CHECK(out.result == asg({kHalf, kHalf}));
    }
    SECTION("the mutual attack oscillates from the all-zero start") {
        auto out = iterate(EquationalSystem::max(), mutual(), asg({kZero, kZero}));
        CHECK_FALSE(out.converged);
        REQUIRE(out.two_cycle);
        CHECK(out.cycle_a == asg({kZero, kZero}));
        CHECK(out.cycle_b == asg({kOne, kOne}));
    }
    SECTION("chains settle") {
        auto chain = parse_apx("arg(a). arg(b). att(a,b).");
        auto out = iterate(EquationalSystem::inverse(), chain, asg({kZero, kZero}));
        CHECK(out.converged);
        CHECK(out.result == asg({kOne, kZero}));
    }
    SECTION("float mode settles on chains and spots oscillation on cycles") {
        auto chain3 = parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
        auto out = iterate(EquationalSystem::encoded(Negation::standard(), TNorm::product()),
                           chain3, Assignment::uniform(3, TruthValue(1, 4)), 10000,
                           IterateMode::floating(1e-12));
        CHECK(out.converged);
        CHECK(std::abs(out.result[0].to_double() - 1.0) < 1e-9);
        CHECK(std::abs(out.result[1].to_double() - 0.0) < 1e-9);
        CHECK(std::abs(out.result[2].to_double() - 1.0) < 1e-9);

        auto cyc = iterate(EquationalSystem::max(), mutual(), asg({kZero, kZero}), 10000,
                           IterateMode::floating(1e-9));
        CHECK_FALSE(cyc.converged);
        CHECK(cyc.two_cycle);
    }
    SECTION("geometrical singularities propagate") {
        auto af = parse_apx("arg(a). arg(b). arg(c). att(a,c). att(b,c).");
        Assignment start(3);
        start.set(0, kOne);
        start.set(1, kZero);
        start.set(2, kZero);
        CHECK_THROWS_AS(iterate(EquationalSystem::geometrical(), af, start),
                        GeometricalSingularity);
    }
}

TEST_CASE("n-ary lukasiewicz closed form") {
    CHECK(luka_nary({TruthValue(9, 10), TruthValue(8, 10), TruthValue(7, 10)}) ==
          TruthValue(2, 5));
    CHECK(luka_nary({TruthValue(3, 10), TruthValue(3, 10)}).is_zero());
    for (long i = 0; i <= 6; ++i) {
        CHECK(luka_nary({TruthValue(i, 6), kOne}) == TruthValue(i, 6));
    }
    CHECK_THROWS_AS(luka_nary({}), std::invalid_argument);

    SECTION("equals the binary fold on seeded random tuples") {
        std::mt19937_64 rng(0xF00Dull);
        const TNorm luka = TNorm::lukasiewicz();
        for (int trial = 0; trial < 10000; ++trial) {
            std::size_t arity = 2 + rng() % 5;
            std::vector<TruthValue> xs;
            for (std::size_t i = 0; i < arity; ++i) {
                long den = 1 + static_cast<long>(rng() % 100);
                xs.emplace_back(static_cast<long>(rng() % (den + 1)), den);
            }
            TruthValue fold = xs[0];
            for (std::size_t i = 1; i < arity; ++i) fold = luka(fold, xs[i]);
            REQUIRE(luka_nary(xs) == fold);
        }
    }
}

TEST_CASE("equational function properties") {
    auto encoded = [](const TNorm& t) {
        return EquationalSystem::encoded(Negation::standard(), t);
    };

    SECTION("decreasing monotonicity") {
        CHECK(check_function_property(encoded(TNorm::lukasiewicz()),
                                      EquationalFunctionProperty::DecreasingMonotonicity, 3, 4)
                  .pass);
        CHECK(check_function_property(EquationalSystem::geometrical(),
                                      EquationalFunctionProperty::DecreasingMonotonicity, 2, 4)
                  .pass);
        CHECK(check_function_property(EquationalSystem::max(),
                                      EquationalFunctionProperty::DecreasingMonotonicity, 4, 3)
                  .pass);
    }
    SECTION("boundary and symmetry") {
        for (const auto& t : {TNorm::goedel(), TNorm::lukasiewicz(), TNorm::product()}) {
            for (std::size_t arity : {1u, 2u, 4u}) {
                CHECK(check_function_property(encoded(t),
                                              EquationalFunctionProperty::BoundaryZeroToOne, arity, 4)
                          .pass);
                CHECK(check_function_property(encoded(t),
                                              EquationalFunctionProperty::BoundaryOneKills, arity, 4)
                          .pass);
                CHECK(check_function_property(encoded(t), EquationalFunctionProperty::Symmetry,
                                              arity, 4)
                          .pass);
            }
        }
    }
    SECTION("zero divisors and half-idempotence of the named t-norms") {
        auto zdf = [&](const TNorm& t) {
            return check_function_property(encoded(t),
                                           EquationalFunctionProperty::ZeroDivisorFreeTNorm, 2, 4);
        };
        auto idem = [&](const TNorm& t) {
            return check_function_property(encoded(t),
                                           EquationalFunctionProperty::HalfIdempotentTNorm, 2, 4);
        };
        CHECK(zdf(TNorm::goedel()).pass);
        CHECK(idem(TNorm::goedel()).pass);
        CHECK(zdf(TNorm::product()).pass);
        CHECK_FALSE(idem(TNorm::product()).pass);
        auto luka_report = zdf(TNorm::lukasiewicz());
        CHECK_FALSE(luka_report.pass);
        CHECK_FALSE(luka_report.counterexample.empty());
        CHECK_FALSE(idem(TNorm::lukasiewicz()).pass);
        // the canonical witness
        CHECK(TNorm::lukasiewicz()(kHalf, kHalf).is_zero());
    }
    SECTION("t-norm properties require an encoded system") {
        CHECK_THROWS_AS(check_function_property(EquationalSystem::max(),
                                                EquationalFunctionProperty::ZeroDivisorFreeTNorm,
                                                2, 4),
                        std::invalid_argument);
    }
    SECTION("a non-standard negation feeds through the encoded fold") {
        auto steep = Negation::table({{kZero, kOne}, {kHalf, TruthValue(1, 5)}, {kOne, kZero}});
        auto sys = EquationalSystem::encoded(steep, TNorm::goedel());
        CHECK(check_function_property(sys, EquationalFunctionProperty::Symmetry, 3, 2).pass);
        CHECK(check_function_property(sys, EquationalFunctionProperty::DecreasingMonotonicity, 2, 4)
                  .pass);
        CHECK(check_function_property(sys, EquationalFunctionProperty::BoundaryOneKills, 2, 4).pass);
    }
}
