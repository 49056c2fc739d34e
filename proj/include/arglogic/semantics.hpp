#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "arglogic/af.hpp"
#include "arglogic/logic.hpp"

namespace arglogic {

enum class SemanticsName { ConflictFree, Admissible, Complete, Stable, Grounded, Preferred };

inline const char* to_string(SemanticsName s) {
    switch (s) {
        case SemanticsName::ConflictFree: return "conflict-free";
        case SemanticsName::Admissible: return "admissible";
        case SemanticsName::Complete: return "complete";
        case SemanticsName::Stable: return "stable";
        case SemanticsName::Grounded: return "grounded";
        case SemanticsName::Preferred: return "preferred";
    }
    return "";
}

// A labelling is an assignment whose values all lie in {0, 1/2, 1}.
using Labelling = Assignment;

namespace detail {

// Complete-labelling condition at one argument, over trit values:
// 1 iff no attackers or all attackers 0; 0 iff some attacker 1; 1/2 otherwise.
inline bool complete_at(const ArgumentationFramework& af, const std::vector<int>& trits,
                        std::size_t a) {
    bool all_zero = true;
    bool any_one = false;
    for (std::size_t b : af.attackers_of(a)) {
        if (trits[b] != 0) all_zero = false;
        if (trits[b] == 2) any_one = true;
    }
    const int expected = all_zero ? 2 : any_one ? 0 : 1;
    return trits[a] == expected;
}

inline bool complete_all(const ArgumentationFramework& af, const std::vector<int>& trits) {
    for (std::size_t a = 0; a < af.size(); ++a) {
        if (!complete_at(af, trits, a)) return false;
    }
    return true;
}

inline Assignment assignment_from_trits(const std::vector<int>& trits) {
    Assignment a(trits.size());
    for (std::size_t i = 0; i < trits.size(); ++i) a.set(i, value_of_trit(trits[i]));
    return a;
}

inline std::uint64_t ones_mask(const std::vector<int>& trits) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < trits.size(); ++i) {
        if (trits[i] == 2) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

inline void check_args_cap(const ArgumentationFramework& af, const Caps& caps) {
    if (af.size() > caps.max_args) {
        throw TooLarge("framework with " + std::to_string(af.size()) + " arguments", caps.max_args);
    }
}

}  // namespace detail

inline bool is_complete_labelling(const ArgumentationFramework& af, const Labelling& lab) {
    auto trits = detail::classify_finite(lab, false);
    return detail::complete_all(af, trits);
}

// All labellings of the requested semantics by definition-checking over
// exhaustive enumeration, in ascending lexicographic order. Conflict-free
// and admissible return 2-valued labellings equivalent to subsets.
inline std::vector<Labelling> dung_labellings(const ArgumentationFramework& af, SemanticsName s,
                                              const Caps& caps = {}) {
    detail::check_args_cap(af, caps);
    std::vector<Labelling> out;

    if (s == SemanticsName::ConflictFree || s == SemanticsName::Admissible) {
        std::vector<int> trits(af.size());
        detail::for_each_digit_vector(af.size(), 2, [&](const std::vector<int>& digits) {
            for (std::size_t i = 0; i < digits.size(); ++i) trits[i] = digits[i] * 2;
            for (auto [from, to] : af.attacks()) {
                if (trits[from] == 2 && trits[to] == 2) return;  // conflict
            }
            if (s == SemanticsName::Admissible) {
                for (std::size_t a = 0; a < af.size(); ++a) {
                    if (trits[a] != 2) continue;
                    for (std::size_t b : af.attackers_of(a)) {
                        bool defended = false;
                        for (std::size_t c : af.attackers_of(b)) {
                            if (trits[c] == 2) {
                                defended = true;
                                break;
                            }
                        }
                        if (!defended) return;
                    }
                }
            }
            out.push_back(detail::assignment_from_trits(trits));
        });
        return out;
    }

    std::vector<std::vector<int>> complete;
    detail::for_each_digit_vector(af.size(), 3, [&](const std::vector<int>& trits) {
        if (detail::complete_all(af, trits)) complete.push_back(trits);
    });

    switch (s) {
        case SemanticsName::Complete:
            for (const auto& trits : complete) out.push_back(detail::assignment_from_trits(trits));
            break;
        case SemanticsName::Stable:
            for (const auto& trits : complete) {
                if (std::find(trits.begin(), trits.end(), 1) == trits.end()) {
                    out.push_back(detail::assignment_from_trits(trits));
                }
            }
            break;
        case SemanticsName::Grounded:
        case SemanticsName::Preferred: {
            std::vector<std::uint64_t> masks;
            masks.reserve(complete.size());
            for (const auto& trits : complete) masks.push_back(detail::ones_mask(trits));
            for (std::size_t i = 0; i < complete.size(); ++i) {
                bool keep = true;
                for (std::size_t j = 0; j < complete.size(); ++j) {
                    if (i == j) continue;
                    if (s == SemanticsName::Grounded) {
                        // least: the 1-set must be contained in every other's
                        if ((masks[i] & masks[j]) != masks[i]) {
                            keep = false;
                            break;
                        }
                    } else {
                        // maximal: no other 1-set strictly contains it
                        if ((masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
                            keep = false;
                            break;
                        }
                    }
                }
                if (keep) out.push_back(detail::assignment_from_trits(complete[i]));
            }
            break;
        }
        default: break;
    }
    return out;
}

// Indices of the arguments labelled exactly 1, in canonical order.
inline std::vector<std::size_t> extension_of(const Labelling& lab) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        if (lab[i].is_one()) out.push_back(i);
    }
    return out;
}

// Extension as a lexicographically sorted array of argument names.
inline ordered_json extension_to_json(const ArgumentationFramework& af,
                                      const std::vector<std::size_t>& ext) {
    std::vector<std::string> names;
    names.reserve(ext.size());
    for (std::size_t i : ext) names.push_back(af.name_of(i));
    std::sort(names.begin(), names.end());
    return ordered_json(names);
}

// Value 1 stays 1; everything else maps to 0.
inline Assignment binarize(const Assignment& v) {
    Assignment out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.set(i, v[i].is_one() ? TruthValue::one() : TruthValue::zero());
    }
    return out;
}

// Value 1 stays 1; arguments with an attacker valued exactly 1 go to 0;
// everything else goes to 1/2. Undefined (Partiality) when an argument and
// one of its attackers are both valued 1.
inline Labelling ternarize(const ArgumentationFramework& af, const Assignment& v) {
    Labelling out(af.size());
    for (std::size_t a = 0; a < af.size(); ++a) {
        bool attacker_one = false;
        std::size_t witness = 0;
        for (std::size_t b : af.attackers_of(a)) {
            if (v[b].is_one()) {
                attacker_one = true;
                witness = b;
                break;
            }
        }
        if (v[a].is_one()) {
            if (attacker_one) throw Partiality(af.name_of(a), af.name_of(witness));
            out.set(a, TruthValue::one());
        } else if (attacker_one) {
            out.set(a, TruthValue::zero());
        } else {
            out.set(a, TruthValue::half());
        }
    }
    return out;
}

}  // namespace arglogic
