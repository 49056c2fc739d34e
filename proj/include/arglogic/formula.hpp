#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arglogic/af.hpp"

namespace arglogic {

// ── Formula ─────────────────────────────────────────────────────────────────
// Immutable propositional AST over argument atoms. And/Or are n-ary; an
// empty conjunction normalizes to Top, an empty disjunction to Bottom, and a
// one-element list collapses to its element, so surviving And/Or nodes have
// at least two children.

class Formula {
public:
    enum class Kind { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

    struct Node {
        Kind kind = Kind::Top;
        ArgumentId atom;                                   // Atom only
        std::vector<std::shared_ptr<const Node>> children;  // Not: 1, Implies/Iff: 2, And/Or: >= 2
    };

    static Formula top() { return make(Kind::Top); }
    static Formula bottom() { return make(Kind::Bottom); }

    static Formula atom(ArgumentId id) {
        Formula f = make(Kind::Atom);
        const_cast<Node*>(f.node_.get())->atom = std::move(id);
        return f;
    }

    static Formula negate(const Formula& child) {
        Formula f = make(Kind::Not);
        const_cast<Node*>(f.node_.get())->children = {child.node_};
        return f;
    }

    static Formula conj(const std::vector<Formula>& children) {
        if (children.empty()) return top();
        if (children.size() == 1) return children.front();
        return nary(Kind::And, children);
    }

    static Formula disj(const std::vector<Formula>& children) {
        if (children.empty()) return bottom();
        if (children.size() == 1) return children.front();
        return nary(Kind::Or, children);
    }

    static Formula implies(const Formula& lhs, const Formula& rhs) {
        return binary(Kind::Implies, lhs, rhs);
    }

    static Formula iff(const Formula& lhs, const Formula& rhs) {
        return binary(Kind::Iff, lhs, rhs);
    }

    Kind kind() const noexcept { return node_->kind; }
    const ArgumentId& atom_id() const { return node_->atom; }
    std::size_t child_count() const noexcept { return node_->children.size(); }
    Formula child(std::size_t i) const { return Formula(node_->children.at(i)); }
    const Node* root() const noexcept { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b) {
        return equal(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    // Fully parenthesised rendering with `~ & | -> <-> T F`.
    std::string to_text() const { return text(node_.get()); }

    ordered_json to_json() const { return json(node_.get()); }

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Formula make(Kind kind) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        return Formula(std::move(n));
    }

    static Formula nary(Kind kind, const std::vector<Formula>& children) {
        Formula f = make(kind);
        auto* n = const_cast<Node*>(f.node_.get());
        n->children.reserve(children.size());
        for (const auto& c : children) n->children.push_back(c.node_);
        return f;
    }

    static Formula binary(Kind kind, const Formula& lhs, const Formula& rhs) {
        Formula f = make(kind);
        const_cast<Node*>(f.node_.get())->children = {lhs.node_, rhs.node_};
        return f;
    }

    static bool equal(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a->kind != b->kind) return false;
        if (a->kind == Kind::Atom) return a->atom == b->atom;
        if (a->children.size() != b->children.size()) return false;
        for (std::size_t i = 0; i < a->children.size(); ++i) {
            if (!equal(a->children[i].get(), b->children[i].get())) return false;
        }
        return true;
    }

    static std::string text(const Node* n) {
        switch (n->kind) {
            case Kind::Top: return "T";
            case Kind::Bottom: return "F";
            case Kind::Atom: return n->atom.name;
            case Kind::Not: return "(~" + text(n->children[0].get()) + ")";
            case Kind::And:
            case Kind::Or: {
                const char* sep = n->kind == Kind::And ? " & " : " | ";
                std::string out = "(";
                for (std::size_t i = 0; i < n->children.size(); ++i) {
                    if (i > 0) out += sep;
                    out += text(n->children[i].get());
                }
                return out + ")";
            }
            case Kind::Implies:
                return "(" + text(n->children[0].get()) + " -> " + text(n->children[1].get()) + ")";
            case Kind::Iff:
                return "(" + text(n->children[0].get()) + " <-> " + text(n->children[1].get()) + ")";
        }
        return {};
    }

    static ordered_json json(const Node* n) {
        switch (n->kind) {
            case Kind::Top: return ordered_json{{"op", "top"}};
            case Kind::Bottom: return ordered_json{{"op", "bottom"}};
            case Kind::Atom: return ordered_json{{"op", "atom"}, {"name", n->atom.name}};
            default: break;
        }
        const char* op = nullptr;
        switch (n->kind) {
            case Kind::Not: op = "not"; break;
            case Kind::And: op = "and"; break;
            case Kind::Or: op = "or"; break;
            case Kind::Implies: op = "implies"; break;
            case Kind::Iff: op = "iff"; break;
            default: break;
        }
        ordered_json j{{"op", op}};
        ordered_json args = ordered_json::array();
        for (const auto& c : n->children) args.push_back(json(c.get()));
        j["args"] = std::move(args);
        return j;
    }

    std::shared_ptr<const Node> node_;
};

// ── Encodings ───────────────────────────────────────────────────────────────

// Per argument a: a <-> conjunction of negated attackers. Unattacked
// arguments yield (a <-> T); a framework without arguments yields T.
inline Formula encode_normal(const ArgumentationFramework& af) {
    std::vector<Formula> conjuncts;
    conjuncts.reserve(af.size());
    for (std::size_t a = 0; a < af.size(); ++a) {
        std::vector<Formula> negs;
        for (std::size_t b : af.attackers_of(a)) negs.push_back(Formula::negate(Formula::atom(af.argument(b))));
        conjuncts.push_back(Formula::iff(Formula::atom(af.argument(a)), Formula::conj(negs)));
    }
    return Formula::conj(conjuncts);
}

// Per argument a: an attack-rejection implication plus a defense
// biconditional over the attackers-of-attackers. Empty conjunctions become
// T, empty disjunctions F.
inline Formula encode_regular(const ArgumentationFramework& af) {
    std::vector<Formula> conjuncts;
    conjuncts.reserve(2 * af.size());
    for (std::size_t a = 0; a < af.size(); ++a) {
        std::vector<Formula> negs;
        std::vector<Formula> defenses;
        for (std::size_t b : af.attackers_of(a)) {
            negs.push_back(Formula::negate(Formula::atom(af.argument(b))));
            std::vector<Formula> defenders;
            for (std::size_t c : af.attackers_of(b)) defenders.push_back(Formula::atom(af.argument(c)));
            defenses.push_back(Formula::disj(defenders));
        }
        conjuncts.push_back(Formula::implies(Formula::atom(af.argument(a)), Formula::conj(negs)));
        conjuncts.push_back(Formula::iff(Formula::atom(af.argument(a)), Formula::conj(defenses)));
    }
    return Formula::conj(conjuncts);
}

// Exact set of atoms occurring in f, ordered by argument index.
inline std::vector<ArgumentId> atoms_of(const Formula& f) {
    std::set<std::pair<std::size_t, std::string>> seen;
    const auto walk = [&seen](const Formula::Node* n, const auto& self) -> void {
        if (n->kind == Formula::Kind::Atom) {
            seen.emplace(n->atom.index, n->atom.name);
            return;
        }
        for (const auto& c : n->children) self(c.get(), self);
    };
    walk(f.root(), walk);
    std::vector<ArgumentId> out;
    out.reserve(seen.size());
    for (const auto& [index, name] : seen) out.push_back(ArgumentId{index, name});
    return out;
}

}  // namespace arglogic
