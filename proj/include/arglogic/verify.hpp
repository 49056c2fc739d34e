#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arglogic/af.hpp"
#include "arglogic/equational.hpp"
#include "arglogic/formula.hpp"
#include "arglogic/logic.hpp"
#include "arglogic/semantics.hpp"

namespace arglogic {

// ── TheoremId ───────────────────────────────────────────────────────────────
// One checker per id. Set-equality checkers compare full enumerated model
// sets; implication checkers quantify over the enumerated antecedent set and
// test the consequent; the identity checkers compare satisfaction verdicts
// pointwise over a grid.

enum class TheoremId {
    StableEqEc1K,        // stable labellings == models of the normal encoding in PL3-Kleene
    CompleteEqEc1L,      // complete labellings == models of the normal encoding in PL3-Lukasiewicz
    Ec2Pl2Fwd,           // complete labelling -> binarization models the regular encoding in PL2
    Ec2Pl2Bwd,           // PL2 model of the regular encoding -> ternarization is complete
    Ec2KFwd,             // complete labelling -> binarization models the regular encoding in PL3-K
    Ec2KBwd,             // PL3-K model of the regular encoding -> ternarization is complete
    Ec2LFwd,             // complete labelling models the regular encoding in PL3-L directly
    Ec2LTcom,            // PL3-L model: binarization models in PL2 and ternarization is complete
    Ec2LCounterexample,  // fixed witness: a PL3-L model of the regular encoding that is not complete
    EqEc1Iff,            // fuzzy model of the normal encoding <-> encoded-system solution
    EqmaxIsG,            // encoded(standard, goedel) solutions == max-system solutions
    EqinvIsP,            // encoded(standard, product) solutions == inverse-system solutions
    EqlIsL,              // encoded(standard, lukasiewicz) solutions == closed-form system solutions
    LukaNary,            // n-ary Lukasiewicz closed form == binary fold
    HMonotone,           // update functions are non-increasing in every variable
    HBoundarySym,        // h(0,..,0)=1, h(..,1,..)=0, permutation invariance
    ZdfTcomComplete,     // zero-divisor-free encoded solutions ternarize to complete labellings
    IdemEmbed,           // complete labellings solve the half-idempotent encoded system
    CompleteFuzzySetEq,  // {complete} == {ternarize(m) | m grid solution of encoded goedel}
    TcomFixesComplete,   // ternarization fixes every complete labelling
};

inline const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = {
        TheoremId::StableEqEc1K,   TheoremId::CompleteEqEc1L,     TheoremId::Ec2Pl2Fwd,
        TheoremId::Ec2Pl2Bwd,      TheoremId::Ec2KFwd,            TheoremId::Ec2KBwd,
        TheoremId::Ec2LFwd,        TheoremId::Ec2LTcom,           TheoremId::Ec2LCounterexample,
        TheoremId::EqEc1Iff,       TheoremId::EqmaxIsG,           TheoremId::EqinvIsP,
        TheoremId::EqlIsL,         TheoremId::LukaNary,           TheoremId::HMonotone,
        TheoremId::HBoundarySym,   TheoremId::ZdfTcomComplete,    TheoremId::IdemEmbed,
        TheoremId::CompleteFuzzySetEq, TheoremId::TcomFixesComplete,
    };
    return ids;
}

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::StableEqEc1K: return "stable-eq-ec1-k";
        case TheoremId::CompleteEqEc1L: return "complete-eq-ec1-l";
        case TheoremId::Ec2Pl2Fwd: return "ec2-pl2-fwd";
        case TheoremId::Ec2Pl2Bwd: return "ec2-pl2-bwd";
        case TheoremId::Ec2KFwd: return "ec2-k-fwd";
        case TheoremId::Ec2KBwd: return "ec2-k-bwd";
        case TheoremId::Ec2LFwd: return "ec2-l-fwd";
        case TheoremId::Ec2LTcom: return "ec2-l-tcom";
        case TheoremId::Ec2LCounterexample: return "ec2-l-counterexample";
        case TheoremId::EqEc1Iff: return "eq-ec1-iff";
        case TheoremId::EqmaxIsG: return "eqmax-is-g";
        case TheoremId::EqinvIsP: return "eqinv-is-p";
        case TheoremId::EqlIsL: return "eql-is-l";
        case TheoremId::LukaNary: return "luka-nary";
        case TheoremId::HMonotone: return "h-monotone";
        case TheoremId::HBoundarySym: return "h-boundary-sym";
        case TheoremId::ZdfTcomComplete: return "zdf-tcom-complete";
        case TheoremId::IdemEmbed: return "idem-embed";
        case TheoremId::CompleteFuzzySetEq: return "complete-fuzzy-set-eq";
        case TheoremId::TcomFixesComplete: return "tcom-fixes-complete";
    }
    return "";
}

inline std::optional<TheoremId> theorem_from_string(const std::string& name) {
    for (TheoremId id : all_theorems()) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

// ── Reports ─────────────────────────────────────────────────────────────────

struct Counterexample {
    ordered_json af;
    std::vector<ordered_json> witnesses;
    std::string clause;

    ordered_json to_json() const {
        ordered_json j;
        j["af"] = af;
        j["witnesses"] = witnesses;
        j["clause"] = clause;
        return j;
    }
};

struct VerificationReport {
    TheoremId theorem = TheoremId::StableEqEc1K;
    std::size_t instances_checked = 0;
    std::vector<Counterexample> counterexamples{};
    std::chrono::milliseconds elapsed{0};
    std::string notes{};

    bool pass() const noexcept { return counterexamples.empty(); }

    ordered_json to_json() const {
        ordered_json j;
        j["theorem"] = to_string(theorem);
        j["instances"] = instances_checked;
        j["pass"] = pass();
        ordered_json ces = ordered_json::array();
        for (const auto& ce : counterexamples) ces.push_back(ce.to_json());
        j["counterexamples"] = std::move(ces);
        j["elapsed_ms"] = elapsed.count();
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

struct VerifyParams {
    long grid_k = 2;           // resolution for fuzzy model/solution searches
    long property_grid_k = 4;  // resolution for function-property checks
    std::size_t property_max_arity = 4;
    Caps caps{};
    // Fault-injection hook for the harness falsifiability self-test: checkers
    // consuming the Lukasiewicz three-valued system use this instead when set.
    std::optional<LogicSystem> pl3l_override;
};

namespace detail {

inline const LogicSystem& pl3l_of(const VerifyParams& params) {
    return params.pl3l_override ? *params.pl3l_override : LogicSystem::pl3l();
}

inline void add_counterexample(VerificationReport& report, const ArgumentationFramework& af,
                               std::vector<ordered_json> witnesses, std::string clause) {
    report.counterexamples.push_back(
        Counterexample{af.to_json(), std::move(witnesses), std::move(clause)});
}

// Compares two ascending assignment lists; reports one counterexample per
// element of the symmetric difference.
inline void compare_sets(VerificationReport& report, const ArgumentationFramework& af,
                         const std::vector<Assignment>& left, const std::vector<Assignment>& right,
                         const std::string& left_name, const std::string& right_name) {
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
        if (j >= right.size() || (i < left.size() && left[i] < right[j])) {
            add_counterexample(report, af, {assignment_to_json(af, left[i])},
                               left_name + " element missing from " + right_name);
            ++i;
        } else if (i >= left.size() || right[j] < left[i]) {
            add_counterexample(report, af, {assignment_to_json(af, right[j])},
                               right_name + " element missing from " + left_name);
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
}

inline std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

template <typename Fn>
void for_each_grid_assignment(const ArgumentationFramework& af, long k, const Caps& caps, Fn&& fn) {
    check_grid_cap(af.size(), k, caps);
    std::vector<TruthValue> grid;
    for (long i = 0; i <= k; ++i) grid.emplace_back(i, k);
    Assignment current(af.size());
    std::vector<int> last(af.size(), 0);
    for_each_digit_vector(af.size(), static_cast<int>(k + 1), [&](const std::vector<int>& digits) {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] != last[i]) {
                current.set(i, grid[digits[i]]);
                last[i] = digits[i];
            }
        }
        fn(current);
    });
}

// ── Individual checkers ─────────────────────────────────────────────────────

inline VerificationReport check_stable_eq_ec1_k(const ArgumentationFramework& af,
                                                const VerifyParams& params) {
    VerificationReport report{TheoremId::StableEqEc1K};
    auto labellings = dung_labellings(af, SemanticsName::Stable, params.caps);
    auto models = enumerate_models(encode_normal(af), af, LogicSystem::pl3k(), params.caps);
    report.instances_checked = pow_size(3, af.size());
    compare_sets(report, af, labellings, models, "stable labelling set",
                 "PL3-K model set of the normal encoding");
    return report;
}

inline VerificationReport check_complete_eq_ec1_l(const ArgumentationFramework& af,
                                                  const VerifyParams& params) {
    VerificationReport report{TheoremId::CompleteEqEc1L};
    auto labellings = dung_labellings(af, SemanticsName::Complete, params.caps);
    auto models = enumerate_models(encode_normal(af), af, pl3l_of(params), params.caps);
    report.instances_checked = pow_size(3, af.size());
    compare_sets(report, af, labellings, models, "complete labelling set",
                 "PL3-L model set of the normal encoding");
    return report;
}

// Quantifies over complete labellings and checks that a transform of each is
// a model of the regular encoding in the given system.
inline VerificationReport check_complete_into_ec2(TheoremId id, const ArgumentationFramework& af,
                                                  const LogicSystem& ls, bool apply_binarize,
                                                  const VerifyParams& params) {
    VerificationReport report{id};
    Formula ec2 = encode_regular(af);
    for (const auto& lab : dung_labellings(af, SemanticsName::Complete, params.caps)) {
        ++report.instances_checked;
        Assignment candidate = apply_binarize ? binarize(lab) : lab;
        if (!is_model(ec2, candidate, ls)) {
            add_counterexample(report, af,
                               {assignment_to_json(af, lab), assignment_to_json(af, candidate)},
                               std::string("complete labelling's ") +
                                   (apply_binarize ? "binarization" : "image") +
                                   " is not a model of the regular encoding in " + ls.name());
        }
    }
    return report;
}

// Quantifies over models of the regular encoding and checks that the
// ternarization of each is a complete labelling.
inline VerificationReport check_ec2_into_complete(TheoremId id, const ArgumentationFramework& af,
                                                  const LogicSystem& ls,
                                                  const VerifyParams& params) {
    VerificationReport report{id};
    Formula ec2 = encode_regular(af);
    for (const auto& m : enumerate_models(ec2, af, ls, params.caps)) {
        ++report.instances_checked;
        try {
            Labelling lab = ternarize(af, m);
            if (!is_complete_labelling(af, lab)) {
                add_counterexample(report, af,
                                   {assignment_to_json(af, m), assignment_to_json(af, lab)},
                                   "ternarized " + ls.name() +
                                       " model of the regular encoding is not a complete labelling");
            }
        } catch (const Partiality& p) {
            add_counterexample(report, af, {assignment_to_json(af, m)},
                               std::string("ternarization undefined: ") + p.what());
        }
    }
    return report;
}

inline VerificationReport check_ec2_l_tcom(const ArgumentationFramework& af,
                                           const VerifyParams& params) {
    VerificationReport report{TheoremId::Ec2LTcom};
    Formula ec2 = encode_regular(af);
    for (const auto& m : enumerate_models(ec2, af, pl3l_of(params), params.caps)) {
        ++report.instances_checked;
        if (!is_model(ec2, binarize(m), LogicSystem::pl2())) {
            add_counterexample(report, af,
                               {assignment_to_json(af, m), assignment_to_json(af, binarize(m))},
                               "binarized PL3-L model of the regular encoding is not a PL2 model");
            continue;
        }
        try {
            Labelling lab = ternarize(af, m);
            if (!is_complete_labelling(af, lab)) {
                add_counterexample(report, af,
                                   {assignment_to_json(af, m), assignment_to_json(af, lab)},
                                   "ternarized PL3-L model of the regular encoding is not a "
                                   "complete labelling");
            }
        } catch (const Partiality& p) {
            add_counterexample(report, af, {assignment_to_json(af, m)},
                               std::string("ternarization undefined: ") + p.what());
        }
    }
    return report;
}

// The fixed two-argument mutual attack witness: (1/2, 0) models the regular
// encoding in PL3-L yet is not a complete labelling.
inline VerificationReport check_ec2_l_counterexample(const VerifyParams& params) {
    VerificationReport report{TheoremId::Ec2LCounterexample};
    auto af = ArgumentationFramework::build_named({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    Assignment witness(2);
    witness.set(0, TruthValue::half());
    witness.set(1, TruthValue::zero());
    report.instances_checked = 1;
    report.notes = "witness " + assignment_to_json(af, witness).dump() +
                   " models the regular encoding in PL3-L and is not a complete labelling";
    if (!is_model(encode_regular(af), witness, pl3l_of(params))) {
        add_counterexample(report, af, {assignment_to_json(af, witness)},
                           "witness (1/2, 0) is not a PL3-L model of the regular encoding");
    }
    if (is_complete_labelling(af, witness)) {
        add_counterexample(report, af, {assignment_to_json(af, witness)},
                           "witness (1/2, 0) unexpectedly satisfies the complete condition");
    }
    return report;
}

inline const std::vector<TNorm>& named_tnorms() {
    static const std::vector<TNorm> ts = {TNorm::goedel(), TNorm::lukasiewicz(), TNorm::product()};
    return ts;
}

inline VerificationReport check_eq_ec1_iff(const ArgumentationFramework& af,
                                           const VerifyParams& params) {
    VerificationReport report{TheoremId::EqEc1Iff};
    Formula ec1 = encode_normal(af);
    for (const auto& t : named_tnorms()) {
        LogicSystem fuzzy = LogicSystem::fuzzy(Negation::standard(), t);
        EquationalSystem sys = EquationalSystem::encoded(Negation::standard(), t);
        for_each_grid_assignment(af, params.grid_k, params.caps, [&](const Assignment& v) {
            ++report.instances_checked;
            bool model = is_model(ec1, v, fuzzy);
            bool solution = satisfies(sys, af, v);
            if (model != solution) {
                add_counterexample(report, af, {assignment_to_json(af, v)},
                                   "verdicts disagree for t-norm " + t.name() + ": model=" +
                                       (model ? "true" : "false") +
                                       ", solution=" + (solution ? "true" : "false"));
            }
        });
    }
    return report;
}

inline VerificationReport check_system_identity(TheoremId id, const ArgumentationFramework& af,
                                                const TNorm& tnorm, const EquationalSystem& named,
                                                const VerifyParams& params) {
    VerificationReport report{id};
    EquationalSystem encoded = EquationalSystem::encoded(Negation::standard(), tnorm);
    for_each_grid_assignment(af, params.grid_k, params.caps, [&](const Assignment& v) {
        ++report.instances_checked;
        bool lhs = satisfies(encoded, af, v);
        bool rhs_verdict = satisfies(named, af, v);
        if (lhs != rhs_verdict) {
            add_counterexample(report, af, {assignment_to_json(af, v)},
                               encoded.name() + " and " + named.name() + " verdicts disagree");
        }
    });
    return report;
}

inline VerificationReport check_luka_nary(const VerifyParams&) {
    VerificationReport report{TheoremId::LukaNary};
    std::mt19937_64 rng(0x4c756b61u);  // fixed seed
    auto af = ArgumentationFramework::build({}, {});
    const TNorm luka = TNorm::lukasiewicz();
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t arity = 2 + rng() % 5;
        std::vector<TruthValue> xs;
        xs.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            long den = 1 + static_cast<long>(rng() % 64);
            long num = static_cast<long>(rng() % static_cast<std::uint64_t>(den + 1));
            xs.emplace_back(num, den);
        }
        ++report.instances_checked;
        TruthValue fold = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i) fold = luka(fold, xs[i]);
        if (luka_nary(xs) != fold) {
            add_counterexample(report, af, {ordered_json(tuple_str(xs))},
                               "closed form " + luka_nary(xs).str() + " != binary fold " +
                                   fold.str());
        }
    }
    return report;
}

inline VerificationReport check_h_monotone(const VerifyParams& params) {
    VerificationReport report{TheoremId::HMonotone};
    auto af = ArgumentationFramework::build({}, {});
    std::vector<EquationalSystem> systems;
    for (const auto& t : named_tnorms()) {
        systems.push_back(EquationalSystem::encoded(Negation::standard(), t));
    }
    systems.push_back(EquationalSystem::geometrical());
    for (const auto& sys : systems) {
        for (std::size_t arity = 1; arity <= params.property_max_arity; ++arity) {
            auto pr = check_function_property(sys, EquationalFunctionProperty::DecreasingMonotonicity,
                                              arity, params.property_grid_k);
            report.instances_checked += pr.cases_checked;
            if (!pr.pass) {
                add_counterexample(report, af, {ordered_json(pr.counterexample)},
                                   sys.name() + " fails decreasing monotonicity at arity " +
                                       std::to_string(arity));
            }
        }
    }
    return report;
}

inline VerificationReport check_h_boundary_sym(const VerifyParams& params) {
    VerificationReport report{TheoremId::HBoundarySym};
    auto af = ArgumentationFramework::build({}, {});
    const EquationalFunctionProperty props[] = {
        EquationalFunctionProperty::BoundaryZeroToOne,
        EquationalFunctionProperty::BoundaryOneKills,
        EquationalFunctionProperty::Symmetry,
    };
    for (const auto& t : named_tnorms()) {
        EquationalSystem sys = EquationalSystem::encoded(Negation::standard(), t);
        for (std::size_t arity = 1; arity <= params.property_max_arity; ++arity) {
            for (auto prop : props) {
                auto pr = check_function_property(sys, prop, arity, params.property_grid_k);
                report.instances_checked += pr.cases_checked;
                if (!pr.pass) {
                    add_counterexample(report, af, {ordered_json(pr.counterexample)},
                                       sys.name() + " fails " + to_string(prop) + " at arity " +
                                           std::to_string(arity));
                }
            }
        }
    }
    return report;
}

inline VerificationReport check_zdf_tcom_complete(const ArgumentationFramework& af,
                                                  const VerifyParams& params) {
    VerificationReport report{TheoremId::ZdfTcomComplete};
    report.notes =
        "coverage: grid-complete (k=" + std::to_string(params.grid_k) +
        "); precondition: zero-divisor-free t-norm (alternative reading: 1/2-idempotent); "
        "negation restricted to standard so that N(x)=0 only at x=1";
    for (const auto& t : {TNorm::goedel(), TNorm::product()}) {
        EquationalSystem sys = EquationalSystem::encoded(Negation::standard(), t);
        for (const auto& m : grid_solutions(sys, af, params.grid_k, params.caps)) {
            ++report.instances_checked;
            try {
                Labelling lab = ternarize(af, m);
                if (!is_complete_labelling(af, lab)) {
                    add_counterexample(report, af,
                                       {assignment_to_json(af, m), assignment_to_json(af, lab)},
                                       "ternarized " + sys.name() +
                                           " solution is not a complete labelling");
                }
            } catch (const Partiality& p) {
                add_counterexample(report, af, {assignment_to_json(af, m)},
                                   std::string("ternarization undefined: ") + p.what());
            }
        }
    }
    return report;
}

inline VerificationReport check_idem_embed(const ArgumentationFramework& af,
                                           const VerifyParams& params) {
    VerificationReport report{TheoremId::IdemEmbed};
    report.notes = "precondition: 1/2-idempotent t-norm with standard negation (goedel)";
    EquationalSystem sys = EquationalSystem::encoded(Negation::standard(), TNorm::goedel());
    for (const auto& lab : dung_labellings(af, SemanticsName::Complete, params.caps)) {
        ++report.instances_checked;
        if (!satisfies(sys, af, lab)) {
            add_counterexample(report, af, {assignment_to_json(af, lab)},
                               "complete labelling does not solve " + sys.name());
        }
    }
    return report;
}

inline VerificationReport check_complete_fuzzy_set_eq(const ArgumentationFramework& af,
                                                      const VerifyParams& params) {
    if (params.grid_k < 2 || params.grid_k % 2 != 0) {
        throw std::invalid_argument(
            "complete-fuzzy-set-eq requires an even grid resolution k >= 2 so that complete "
            "labellings are grid points");
    }
    VerificationReport report{TheoremId::CompleteFuzzySetEq};
    EquationalSystem sys = EquationalSystem::encoded(Negation::standard(), TNorm::goedel());
    auto complete = dung_labellings(af, SemanticsName::Complete, params.caps);
    auto solutions = grid_solutions(sys, af, params.grid_k, params.caps);
    std::vector<Assignment> ternarized;
    ternarized.reserve(solutions.size());
    for (const auto& m : solutions) {
        try {
            ternarized.push_back(ternarize(af, m));
        } catch (const Partiality& p) {
            add_counterexample(report, af, {assignment_to_json(af, m)},
                               std::string("ternarization undefined: ") + p.what());
        }
    }
    std::sort(ternarized.begin(), ternarized.end());
    ternarized.erase(std::unique(ternarized.begin(), ternarized.end()), ternarized.end());
    report.instances_checked = complete.size() + solutions.size();
    compare_sets(report, af, complete, ternarized, "complete labelling set",
                 "ternarized grid-solution set");
    return report;
}

inline VerificationReport check_tcom_fixes_complete(const ArgumentationFramework& af,
                                                    const VerifyParams& params) {
    VerificationReport report{TheoremId::TcomFixesComplete};
    for (const auto& lab : dung_labellings(af, SemanticsName::Complete, params.caps)) {
        ++report.instances_checked;
        try {
            if (ternarize(af, lab) != lab) {
                add_counterexample(report, af,
                                   {assignment_to_json(af, lab),
                                    assignment_to_json(af, ternarize(af, lab))},
                                   "ternarization moved a complete labelling");
            }
        } catch (const Partiality& p) {
            add_counterexample(report, af, {assignment_to_json(af, lab)},
                               std::string("ternarization undefined: ") + p.what());
        }
    }
    return report;
}

inline bool theorem_is_af_independent(TheoremId id) {
    switch (id) {
        case TheoremId::Ec2LCounterexample:
        case TheoremId::LukaNary:
        case TheoremId::HMonotone:
        case TheoremId::HBoundarySym: return true;
        default: return false;
    }
}

inline VerificationReport dispatch(TheoremId id, const ArgumentationFramework& af,
                                   const VerifyParams& params) {
    switch (id) {
        case TheoremId::StableEqEc1K: return check_stable_eq_ec1_k(af, params);
        case TheoremId::CompleteEqEc1L: return check_complete_eq_ec1_l(af, params);
        case TheoremId::Ec2Pl2Fwd:
            return check_complete_into_ec2(TheoremId::Ec2Pl2Fwd, af, LogicSystem::pl2(), true,
                                           params);
        case TheoremId::Ec2Pl2Bwd:
            return check_ec2_into_complete(TheoremId::Ec2Pl2Bwd, af, LogicSystem::pl2(), params);
        case TheoremId::Ec2KFwd:
            return check_complete_into_ec2(TheoremId::Ec2KFwd, af, LogicSystem::pl3k(), true,
                                           params);
        case TheoremId::Ec2KBwd:
            return check_ec2_into_complete(TheoremId::Ec2KBwd, af, LogicSystem::pl3k(), params);
        case TheoremId::Ec2LFwd:
            return check_complete_into_ec2(TheoremId::Ec2LFwd, af, pl3l_of(params), false, params);
        case TheoremId::Ec2LTcom: return check_ec2_l_tcom(af, params);
        case TheoremId::Ec2LCounterexample: return check_ec2_l_counterexample(params);
        case TheoremId::EqEc1Iff: return check_eq_ec1_iff(af, params);
        case TheoremId::EqmaxIsG:
            return check_system_identity(TheoremId::EqmaxIsG, af, TNorm::goedel(),
                                         EquationalSystem::max(), params);
        case TheoremId::EqinvIsP:
            return check_system_identity(TheoremId::EqinvIsP, af, TNorm::product(),
                                         EquationalSystem::inverse(), params);
        case TheoremId::EqlIsL:
            return check_system_identity(TheoremId::EqlIsL, af, TNorm::lukasiewicz(),
                                         EquationalSystem::luka_closed(), params);
        case TheoremId::LukaNary: return check_luka_nary(params);
        case TheoremId::HMonotone: return check_h_monotone(params);
        case TheoremId::HBoundarySym: return check_h_boundary_sym(params);
        case TheoremId::ZdfTcomComplete: return check_zdf_tcom_complete(af, params);
        case TheoremId::IdemEmbed: return check_idem_embed(af, params);
        case TheoremId::CompleteFuzzySetEq: return check_complete_fuzzy_set_eq(af, params);
        case TheoremId::TcomFixesComplete: return check_tcom_fixes_complete(af, params);
    }
    throw std::invalid_argument("unknown theorem id");
}

}  // namespace detail

// Runs one checker on one framework.
inline VerificationReport verify_theorem(TheoremId id, const ArgumentationFramework& af,
                                         const VerifyParams& params = {}) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = detail::dispatch(id, af, params);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

// The fixed fixture set every checker must pass.
inline std::vector<std::pair<std::string, ArgumentationFramework>> standard_fixtures() {
    using AF = ArgumentationFramework;
    return {
        {"empty", AF::build_named({}, {})},
        {"single", AF::build_named({"a"}, {})},
        {"self-attack", AF::build_named({"a"}, {{"a", "a"}})},
        {"chain", AF::build_named({"a", "b"}, {{"a", "b"}})},
        {"mutual", AF::build_named({"a", "b"}, {{"a", "b"}, {"b", "a"}})},
        {"cycle3", AF::build_named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}})},
        {"cycle4",
         AF::build_named({"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})},
        {"mutual-tail", AF::build_named({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}})},
    };
}

namespace detail {

inline void merge_report(VerificationReport& total, const VerificationReport& part) {
    total.instances_checked += part.instances_checked;
    total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                 part.counterexamples.end());
    total.elapsed += part.elapsed;
    if (total.notes.empty()) total.notes = part.notes;
}

template <typename AfRange>
std::vector<VerificationReport> verify_over(const std::vector<TheoremId>& ids, const AfRange& afs,
                                            const VerifyParams& params) {
    std::vector<VerificationReport> reports;
    reports.reserve(ids.size());
    for (TheoremId id : ids) {
        VerificationReport total{id};
        if (theorem_is_af_independent(id)) {
            merge_report(total, verify_theorem(id, ArgumentationFramework::build({}, {}), params));
        } else {
            for (const auto& af : afs) merge_report(total, verify_theorem(id, af, params));
        }
        reports.push_back(std::move(total));
    }
    return reports;
}

}  // namespace detail

// Runs the requested checkers on every standard fixture, one aggregated
// report per theorem.
inline std::vector<VerificationReport> verify_fixtures(const std::vector<TheoremId>& ids,
                                                       const VerifyParams& params = {}) {
    std::vector<ArgumentationFramework> afs;
    for (auto& [name, af] : standard_fixtures()) afs.push_back(af);
    return detail::verify_over(ids, afs, params);
}

struct CorpusSpec {
    std::uint64_t seed = 7;
    std::size_t count = 200;
    std::size_t n_max = 8;
    std::vector<double> edge_probabilities = {0.1, 0.25, 0.5};
};

// Deterministically derives `count` random frameworks from the corpus seed
// and aggregates the requested checkers over them.
inline std::vector<ArgumentationFramework> corpus_frameworks(const CorpusSpec& spec) {
    if (spec.n_max == 0 || spec.edge_probabilities.empty()) {
        throw std::invalid_argument("corpus needs n_max >= 1 and a non-empty probability list");
    }
    std::mt19937_64 master(spec.seed);
    std::vector<ArgumentationFramework> afs;
    afs.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        std::size_t n = 1 + master() % spec.n_max;
        double p = spec.edge_probabilities[master() % spec.edge_probabilities.size()];
        afs.push_back(random_af(n, p, master()));
    }
    return afs;
}

inline std::vector<VerificationReport> verify_corpus(const std::vector<TheoremId>& ids,
                                                     const CorpusSpec& spec,
                                                     const VerifyParams& params = {}) {
    return detail::verify_over(ids, corpus_frameworks(spec), params);
}

}  // namespace arglogic
