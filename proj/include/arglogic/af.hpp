#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arglogic/errors.hpp"
#include "arglogic/truth.hpp"

namespace arglogic {

using ordered_json = nlohmann::ordered_json;

inline bool is_valid_argument_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

// Position in the canonical (declaration) order plus the identifier.
struct ArgumentId {
    std::size_t index = 0;
    std::string name;

    friend bool operator==(const ArgumentId& a, const ArgumentId& b) {
        return a.index == b.index && a.name == b.name;
    }
    friend bool operator<(const ArgumentId& a, const ArgumentId& b) { return a.index < b.index; }
};

// ── ArgumentationFramework ──────────────────────────────────────────────────
// Finite directed attack graph. Immutable after construction; the argument
// order is the declaration order and every enumeration downstream derives
// its ordering from it.

class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    static ArgumentationFramework build(std::vector<std::string> names,
                                        std::vector<std::pair<std::size_t, std::size_t>> attacks) {
        ArgumentationFramework af;
        af.names_ = std::move(names);
        for (std::size_t i = 0; i < af.names_.size(); ++i) {
            if (!is_valid_argument_name(af.names_[i])) {
                throw std::invalid_argument("invalid argument name '" + af.names_[i] + "'");
            }
            if (!af.index_.emplace(af.names_[i], i).second) {
                throw std::invalid_argument("duplicate argument name '" + af.names_[i] + "'");
            }
        }
        for (auto [from, to] : attacks) {
            if (from >= af.names_.size() || to >= af.names_.size()) {
                throw std::invalid_argument("attack endpoint out of range");
            }
        }
        std::sort(attacks.begin(), attacks.end());
        attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
        af.attacks_ = std::move(attacks);
        af.attackers_.assign(af.names_.size(), {});
        for (auto [from, to] : af.attacks_) af.attackers_[to].push_back(from);
        for (auto& v : af.attackers_) std::sort(v.begin(), v.end());
        return af;
    }

    static ArgumentationFramework build_named(
        std::vector<std::string> names,
        const std::vector<std::pair<std::string, std::string>>& attacks) {
        std::unordered_map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        edges.reserve(attacks.size());
        for (const auto& [from, to] : attacks) {
            auto f = idx.find(from);
            if (f == idx.end()) throw UndeclaredArgument(from);
            auto t = idx.find(to);
            if (t == idx.end()) throw UndeclaredArgument(to);
            edges.emplace_back(f->second, t->second);
        }
        return build(std::move(names), std::move(edges));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name_of(std::size_t i) const { return names_.at(i); }
    ArgumentId argument(std::size_t i) const { return ArgumentId{i, names_.at(i)}; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Sorted by (attacker index, target index).
    const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const noexcept {
        return attacks_;
    }

    bool has_attack(std::size_t from, std::size_t to) const {
        return std::binary_search(attacks_.begin(), attacks_.end(), std::make_pair(from, to));
    }

    // Attackers of `target` in canonical argument order.
    const std::vector<std::size_t>& attackers_of(std::size_t target) const {
        return attackers_.at(target);
    }

    friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

    std::string to_apx() const {
        std::string out;
        for (const auto& n : names_) out += "arg(" + n + ").\n";
        for (auto [f, t] : attacks_) out += "att(" + names_[f] + "," + names_[t] + ").\n";
        return out;
    }

    std::string to_tgf() const {
        std::string out;
        for (const auto& n : names_) out += n + "\n";
        out += "#\n";
        for (auto [f, t] : attacks_) out += names_[f] + " " + names_[t] + "\n";
        return out;
    }

    // {"arguments":[...], "attacks":[["x","y"],...]} with attacks sorted
    // lexicographically by name.
    ordered_json to_json() const {
        ordered_json j;
        j["arguments"] = names_;
        std::vector<std::pair<std::string, std::string>> named;
        named.reserve(attacks_.size());
        for (auto [f, t] : attacks_) named.emplace_back(names_[f], names_[t]);
        std::sort(named.begin(), named.end());
        ordered_json arr = ordered_json::array();
        for (const auto& [f, t] : named) arr.push_back({f, t});
        j["attacks"] = std::move(arr);
        return j;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
};

// ── Assignment ──────────────────────────────────────────────────────────────
// Total map from a framework's arguments (by canonical index) to truth
// values. Doubles as a labelling when every value lies in {0, 1/2, 1}.

class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : values_(n) {}
    explicit Assignment(std::vector<TruthValue> values) : values_(std::move(values)) {}

    static Assignment uniform(std::size_t n, const TruthValue& v) {
        Assignment a(n);
        for (auto& slot : a.values_) slot = v;
        return a;
    }

    std::size_t size() const noexcept { return values_.size(); }
    const TruthValue& operator[](std::size_t i) const { return values_.at(i); }
    void set(std::size_t i, TruthValue v) { values_.at(i) = std::move(v); }
    const std::vector<TruthValue>& values() const noexcept { return values_; }

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const Assignment& a, const Assignment& b) { return !(a == b); }

    // Lexicographic over the canonical argument order.
    friend bool operator<(const Assignment& a, const Assignment& b) {
        return std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                            b.values_.end());
    }

private:
    std::vector<TruthValue> values_;
};

// {"a":"1/2", ...} with keys in canonical argument order, values as exact
// fraction strings.
inline ordered_json assignment_to_json(const ArgumentationFramework& af, const Assignment& v) {
    ordered_json j = ordered_json::object();
    for (std::size_t i = 0; i < af.size(); ++i) j[af.name_of(i)] = v[i].str();
    return j;
}

// ── Parsers ─────────────────────────────────────────────────────────────────

namespace detail {

class ApxScanner {
public:
    explicit ApxScanner(std::string_view text) : text_(text) {}

    void skip_blanks() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_blanks();
        return pos_ >= text_.size();
    }

    std::string expect_ident() {
        skip_blanks();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_valid_argument_name(text_.substr(pos_, 1))) advance();
        if (pos_ == start) fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect_char(char c) {
        skip_blanks();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(line_, col_, message);
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

// `arg(<name>).` and `att(<x>,<y>).` facts; `%` starts a line comment.
// Attack endpoints must be declared before use; duplicate attacks collapse.
inline ArgumentationFramework parse_apx(std::string_view text) {
    detail::ApxScanner sc(text);
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    while (!sc.at_end()) {
        std::size_t line = sc.line(), col = sc.column();
        std::string head = sc.expect_ident();
        if (head == "arg") {
            sc.expect_char('(');
            std::string name = sc.expect_ident();
            sc.expect_char(')');
            sc.expect_char('.');
            if (!index.emplace(name, names.size()).second) {
                throw SyntaxError(line, col, "duplicate argument declaration '" + name + "'");
            }
            names.push_back(std::move(name));
        } else if (head == "att") {
            sc.expect_char('(');
            std::string from = sc.expect_ident();
            sc.expect_char(',');
            std::string to = sc.expect_ident();
            sc.expect_char(')');
            sc.expect_char('.');
            auto f = index.find(from);
            if (f == index.end()) throw UndeclaredArgument(from);
            auto t = index.find(to);
            if (t == index.end()) throw UndeclaredArgument(to);
            attacks.emplace_back(f->second, t->second);
        } else {
            throw SyntaxError(line, col, "expected 'arg' or 'att', got '" + head + "'");
        }
    }
    return ArgumentationFramework::build(std::move(names), std::move(attacks));
}

// Trivial graph format: node lines `<id>`, a single `#` separator, edge
// lines `<src> <dst>`. Blank lines are skipped.
inline ArgumentationFramework parse_tgf(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    bool past_separator = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        if (tokens.size() == 1 && tokens[0] == "#") {
            if (past_separator) throw SyntaxError(line_no, 1, "second '#' separator");
            past_separator = true;
            continue;
        }
        if (!past_separator) {
            if (tokens.size() != 1) throw SyntaxError(line_no, 1, "expected a single node id");
            if (!is_valid_argument_name(tokens[0])) {
                throw SyntaxError(line_no, 1, "invalid node id '" + tokens[0] + "'");
            }
            if (!index.emplace(tokens[0], names.size()).second) {
                throw SyntaxError(line_no, 1, "duplicate node id '" + tokens[0] + "'");
            }
            names.push_back(tokens[0]);
        } else {
            if (tokens.size() != 2) throw SyntaxError(line_no, 1, "expected '<src> <dst>'");
            auto f = index.find(tokens[0]);
            if (f == index.end()) throw UndeclaredArgument(tokens[0]);
            auto t = index.find(tokens[1]);
            if (t == index.end()) throw UndeclaredArgument(tokens[1]);
            attacks.emplace_back(f->second, t->second);
        }
    }
    return ArgumentationFramework::build(std::move(names), std::move(attacks));
}

// ── Random instances ────────────────────────────────────────────────────────
// Arguments a0..a(n-1); every ordered pair (self-loops included) becomes an
// attack independently with probability p. Pure function of (n, p, seed).

inline ArgumentationFramework random_af(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability outside [0,1]");
    std::mt19937_64 gen(seed);
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    for (std::size_t from = 0; from < n; ++from) {
        for (std::size_t to = 0; to < n; ++to) {
            // 53-bit uniform draw in [0,1); stdlib-independent for reproducibility.
            double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (u < p) attacks.emplace_back(from, to);
        }
    }
    return ArgumentationFramework::build(std::move(names), std::move(attacks));
}

}  // namespace arglogic
