#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arglogic/af.hpp"
#include "arglogic/formula.hpp"
#include "arglogic/truth.hpp"

namespace arglogic {

// Enumeration limits. Flags and the ARGLOGIC_MAX_ARGS environment variable
// override them at the CLI.
struct Caps {
    std::size_t max_args = 14;
    std::size_t max_grid_points = 1'000'000;
};

// ── Negation ────────────────────────────────────────────────────────────────
// N(0)=1, N(1)=0, non-increasing. Either the standard 1-x or a piecewise-
// linear table through rational breakpoints (checked at construction).

class Negation {
public:
    static Negation standard() { return Negation(); }

    static Negation table(std::vector<std::pair<TruthValue, TruthValue>> breakpoints,
                          std::string name = "table") {
        std::sort(breakpoints.begin(), breakpoints.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (breakpoints.size() < 2 || !breakpoints.front().first.is_zero() ||
            !breakpoints.back().first.is_one()) {
            throw std::invalid_argument("negation table must span x=0..1");
        }
        if (!breakpoints.front().second.is_one() || !breakpoints.back().second.is_zero()) {
            throw std::invalid_argument("negation table must satisfy N(0)=1 and N(1)=0");
        }
        for (std::size_t i = 1; i < breakpoints.size(); ++i) {
            if (breakpoints[i].first == breakpoints[i - 1].first) {
                throw std::invalid_argument("negation table has a repeated breakpoint");
            }
            if (breakpoints[i].second > breakpoints[i - 1].second) {
                throw std::invalid_argument("negation table is not non-increasing");
            }
        }
        Negation n;
        n.standard_ = false;
        n.name_ = std::move(name);
        n.points_ = std::move(breakpoints);
        return n;
    }

    TruthValue operator()(const TruthValue& x) const {
        if (standard_) return x.complement();
        // Locate the segment containing x and interpolate linearly.
        std::size_t hi = 1;
        while (points_[hi].first < x) ++hi;
        const auto& [x0, y0] = points_[hi - 1];
        const auto& [x1, y1] = points_[hi];
        if (x == x1) return y1;
        Rational t = (x.raw() - x0.raw()) / (x1.raw() - x0.raw());
        return TruthValue(Rational(y0.raw() + (y1.raw() - y0.raw()) * t));
    }

    double operator()(double x) const {
        if (standard_) return 1.0 - x;
        return (*this)(TruthValue::from_double(x)).to_double();
    }

    const std::string& name() const noexcept { return name_; }
    bool is_standard() const noexcept { return standard_; }

private:
    Negation() = default;

    bool standard_ = true;
    std::string name_ = "standard";
    std::vector<std::pair<TruthValue, TruthValue>> points_;
};

// ── TNorm ───────────────────────────────────────────────────────────────────

class TNorm {
public:
    enum class Kind { Goedel, Lukasiewicz, Product, Custom };

    static TNorm goedel() { return TNorm(Kind::Goedel, "goedel"); }
    static TNorm lukasiewicz() { return TNorm(Kind::Lukasiewicz, "lukasiewicz"); }
    static TNorm product() { return TNorm(Kind::Product, "product"); }

    using Fn = std::function<TruthValue(const TruthValue&, const TruthValue&)>;

    // Samples the t-norm axioms (unit, commutativity, associativity, joint
    // monotonicity) on a fixed rational grid and rejects functions with a
    // left-discontinuity detectable at the grid points.
    static TNorm custom(std::string name, Fn fn) {
        validate_custom(fn);
        TNorm t(Kind::Custom, std::move(name));
        t.fn_ = std::move(fn);
        return t;
    }

    TruthValue operator()(const TruthValue& x, const TruthValue& y) const {
        switch (kind_) {
            case Kind::Goedel: return t_min(x, y);
            case Kind::Lukasiewicz: {
                Rational s = x.raw() + y.raw() - 1;
                return s > 0 ? TruthValue(std::move(s)) : TruthValue::zero();
            }
            case Kind::Product: return TruthValue(Rational(x.raw() * y.raw()));
            case Kind::Custom: return fn_(x, y);
        }
        return TruthValue::zero();
    }

    double operator()(double x, double y) const {
        switch (kind_) {
            case Kind::Goedel: return x < y ? x : y;
            case Kind::Lukasiewicz: return std::max(0.0, x + y - 1.0);
            case Kind::Product: return x * y;
            case Kind::Custom:
                return fn_(TruthValue::from_double(x), TruthValue::from_double(y)).to_double();
        }
        return 0.0;
    }

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

private:
    TNorm(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    static void validate_custom(const Fn& fn) {
        constexpr long k = 6;
        std::vector<TruthValue> grid;
        for (long i = 0; i <= k; ++i) grid.emplace_back(i, k);
        // Left-continuity probe first: an upward jump at a grid point from
        // the left breaks the residuum's sup-attainment contract.
        const Rational delta = make_rational(1, 1L << 20);
        const Rational tol = make_rational(1, 1L << 10);
        for (const auto& x : grid) {
            for (const auto& z : grid) {
                if (z.is_zero()) continue;
                TruthValue below(Rational(z.raw() - delta));
                if (fn(x, z).raw() - fn(x, below).raw() > tol) {
                    throw NonLeftContinuous("custom t-norm jumps at z=" + z.str() +
                                            " approaching from the left");
                }
            }
        }
        for (const auto& x : grid) {
            if (fn(x, TruthValue::one()) != x) {
                throw std::invalid_argument("custom t-norm violates T(x,1)=x at x=" + x.str());
            }
            for (const auto& y : grid) {
                if (fn(x, y) != fn(y, x)) {
                    throw std::invalid_argument("custom t-norm is not commutative");
                }
                for (const auto& z : grid) {
                    if (fn(x, fn(y, z)) != fn(fn(x, y), z)) {
                        throw std::invalid_argument("custom t-norm is not associative");
                    }
                }
            }
        }
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            for (const auto& y : grid) {
                if (fn(grid[i], y) > fn(grid[i + 1], y)) {
                    throw std::invalid_argument("custom t-norm is not monotone");
                }
            }
        }
    }

    Kind kind_;
    std::string name_;
    Fn fn_;
};

// ── Residuum ────────────────────────────────────────────────────────────────
// I(x,y) = sup{z | T(x,z) <= y}. Closed forms for the named t-norms; custom
// t-norms are bisected to an interval of width 2^-64, snapped to the nearest
// multiple of 1/snap_grid_k when a grid context is active.

inline TruthValue residuum(const TNorm& t, const TruthValue& x, const TruthValue& y,
                           std::optional<long> snap_grid_k = std::nullopt) {
    switch (t.kind()) {
        case TNorm::Kind::Goedel: return x <= y ? TruthValue::one() : y;
        case TNorm::Kind::Lukasiewicz: {
            Rational s = 1 - x.raw() + y.raw();
            return s < 1 ? TruthValue(std::move(s)) : TruthValue::one();
        }
        case TNorm::Kind::Product:
            return x <= y ? TruthValue::one() : TruthValue(Rational(y.raw() / x.raw()));
        case TNorm::Kind::Custom: break;
    }
    if (t(x, TruthValue::one()) <= y) return TruthValue::one();
    if (t(x, TruthValue::zero()) > y) {
        throw NonLeftContinuous("bisection bracket failed: T(x,0) > y");
    }
    Rational lo = 0, hi = 1;
    for (int i = 0; i < 64; ++i) {
        Rational mid = (lo + hi) / 2;
        if (t(x, TruthValue(mid)) <= y) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    if (snap_grid_k) {
        long k = *snap_grid_k;
        Rational scaled = lo * k + make_rational(1, 2);
        mpz_class j;
        mpz_fdiv_q(j.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
        // In this branch the sup is below 1 (else the T(x,1) shortcut fired),
        // so never snap up to 1: that would break I(x,y)=1 iff x<=y.
        if (j >= k) j = k - 1;
        Rational snapped(j, k);
        snapped.canonicalize();
        return TruthValue(std::move(snapped));
    }
    return TruthValue(std::move(lo));
}

// ── LogicSystem ─────────────────────────────────────────────────────────────
// Implication tables for the three-valued systems are stored literally, with
// entries encoded as trits (0 -> 0, 1 -> 1/2, 2 -> 1) indexed [x][y]. The
// closed forms max(1-x,y) and min(1,1-x+y) are used only as cross-checks in
// the tests.

using TritTable = std::array<std::array<int, 3>, 3>;

inline constexpr TritTable kKleeneImplication{{{2, 2, 2}, {1, 1, 2}, {0, 1, 2}}};
inline constexpr TritTable kLukasiewiczImplication{{{2, 2, 2}, {1, 2, 2}, {0, 1, 2}}};

class LogicSystem {
public:
    enum class Kind { Pl2, Pl3, Fuzzy };

    static const LogicSystem& pl2() {
        static const LogicSystem ls(Kind::Pl2, "pl2");
        return ls;
    }

    static const LogicSystem& pl3k() {
        static const LogicSystem ls = pl3_table("pl3k", kKleeneImplication);
        return ls;
    }

    static const LogicSystem& pl3l() {
        static const LogicSystem ls = pl3_table("pl3l", kLukasiewiczImplication);
        return ls;
    }

    static LogicSystem pl3_table(std::string name, TritTable implication) {
        LogicSystem ls(Kind::Pl3, std::move(name));
        ls.table_ = implication;
        return ls;
    }

    static LogicSystem fuzzy(Negation negation, TNorm tnorm) {
        LogicSystem ls(Kind::Fuzzy, "fuzzy:" + negation.name() + ":" + tnorm.name());
        ls.negation_ = std::move(negation);
        ls.tnorm_ = std::move(tnorm);
        return ls;
    }

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool finite() const noexcept { return kind_ != Kind::Fuzzy; }

    const TritTable& implication_table() const { return table_; }
    const Negation& negation() const { return *negation_; }
    const TNorm& tnorm() const { return *tnorm_; }

private:
    LogicSystem(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    TritTable table_{};
    std::optional<Negation> negation_;
    std::optional<TNorm> tnorm_;
};

// ── Evaluation ──────────────────────────────────────────────────────────────

namespace detail {

// -1 when the value is not one of 0, 1/2, 1.
inline int trit_of(const TruthValue& v) {
    if (v.is_zero()) return 0;
    if (v.is_half()) return 1;
    if (v.is_one()) return 2;
    return -1;
}

inline TruthValue value_of_trit(int t) {
    switch (t) {
        case 0: return TruthValue::zero();
        case 1: return TruthValue::half();
        default: return TruthValue::one();
    }
}

inline int atom_slot(const Formula::Node* n, std::size_t domain_size) {
    if (n->atom.index >= domain_size) {
        throw DomainViolation("assignment does not cover atom '" + n->atom.name + "'");
    }
    return static_cast<int>(n->atom.index);
}

inline int eval_pl3(const Formula::Node* n, const std::vector<int>& trits, const TritTable& imp) {
    switch (n->kind) {
        case Formula::Kind::Top: return 2;
        case Formula::Kind::Bottom: return 0;
        case Formula::Kind::Atom: return trits[atom_slot(n, trits.size())];
        case Formula::Kind::Not: return 2 - eval_pl3(n->children[0].get(), trits, imp);
        case Formula::Kind::And: {
            int v = 2;
            for (const auto& c : n->children) v = std::min(v, eval_pl3(c.get(), trits, imp));
            return v;
        }
        case Formula::Kind::Or: {
            int v = 0;
            for (const auto& c : n->children) v = std::max(v, eval_pl3(c.get(), trits, imp));
            return v;
        }
        case Formula::Kind::Implies:
            return imp[eval_pl3(n->children[0].get(), trits, imp)]
                      [eval_pl3(n->children[1].get(), trits, imp)];
        case Formula::Kind::Iff: {
            int l = eval_pl3(n->children[0].get(), trits, imp);
            int r = eval_pl3(n->children[1].get(), trits, imp);
            return std::min(imp[l][r], imp[r][l]);
        }
    }
    return 0;
}

inline bool eval_pl2(const Formula::Node* n, const std::vector<int>& bits) {
    switch (n->kind) {
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Atom: return bits[atom_slot(n, bits.size())] != 0;
        case Formula::Kind::Not: return !eval_pl2(n->children[0].get(), bits);
        case Formula::Kind::And:
            for (const auto& c : n->children) {
                if (!eval_pl2(c.get(), bits)) return false;
            }
            return true;
        case Formula::Kind::Or:
            for (const auto& c : n->children) {
                if (eval_pl2(c.get(), bits)) return true;
            }
            return false;
        case Formula::Kind::Implies:
            return !eval_pl2(n->children[0].get(), bits) || eval_pl2(n->children[1].get(), bits);
        case Formula::Kind::Iff:
            return eval_pl2(n->children[0].get(), bits) == eval_pl2(n->children[1].get(), bits);
    }
    return false;
}

inline TruthValue eval_fuzzy(const Formula::Node* n, const std::vector<TruthValue>& vals,
                             const Negation& neg, const TNorm& tnorm,
                             const std::optional<long>& snap_k) {
    switch (n->kind) {
        case Formula::Kind::Top: return TruthValue::one();
        case Formula::Kind::Bottom: return TruthValue::zero();
        case Formula::Kind::Atom:
            return vals[static_cast<std::size_t>(atom_slot(n, vals.size()))];
        case Formula::Kind::Not:
            return neg(eval_fuzzy(n->children[0].get(), vals, neg, tnorm, snap_k));
        case Formula::Kind::And: {
            TruthValue v = eval_fuzzy(n->children[0].get(), vals, neg, tnorm, snap_k);
            for (std::size_t i = 1; i < n->children.size(); ++i) {
                v = tnorm(v, eval_fuzzy(n->children[i].get(), vals, neg, tnorm, snap_k));
            }
            return v;
        }
        case Formula::Kind::Or: {
            // No theorem exercises fuzzy disjunction; evaluated as pointwise max.
            TruthValue v = eval_fuzzy(n->children[0].get(), vals, neg, tnorm, snap_k);
            for (std::size_t i = 1; i < n->children.size(); ++i) {
                v = t_max(v, eval_fuzzy(n->children[i].get(), vals, neg, tnorm, snap_k));
            }
            return v;
        }
        case Formula::Kind::Implies:
            return residuum(tnorm, eval_fuzzy(n->children[0].get(), vals, neg, tnorm, snap_k),
                            eval_fuzzy(n->children[1].get(), vals, neg, tnorm, snap_k), snap_k);
        case Formula::Kind::Iff: {
            TruthValue l = eval_fuzzy(n->children[0].get(), vals, neg, tnorm, snap_k);
            TruthValue r = eval_fuzzy(n->children[1].get(), vals, neg, tnorm, snap_k);
            return tnorm(residuum(tnorm, l, r, snap_k), residuum(tnorm, r, l, snap_k));
        }
    }
    return TruthValue::zero();
}

inline std::vector<int> classify_finite(const Assignment& v, bool two_valued) {
    std::vector<int> trits(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        int t = trit_of(v[i]);
        if (t < 0 || (two_valued && t == 1)) {
            throw DomainViolation("assignment value " + v[i].str() +
                                  " outside the logic system's domain");
        }
        trits[i] = t;
    }
    return trits;
}

}  // namespace detail

inline TruthValue evaluate(const Formula& f, const Assignment& v, const LogicSystem& ls,
                           std::optional<long> snap_grid_k = std::nullopt) {
    switch (ls.kind()) {
        case LogicSystem::Kind::Pl2: {
            auto bits = detail::classify_finite(v, true);
            return detail::eval_pl2(f.root(), bits) ? TruthValue::one() : TruthValue::zero();
        }
        case LogicSystem::Kind::Pl3: {
            auto trits = detail::classify_finite(v, false);
            return detail::value_of_trit(detail::eval_pl3(f.root(), trits, ls.implication_table()));
        }
        case LogicSystem::Kind::Fuzzy:
            return detail::eval_fuzzy(f.root(), v.values(), ls.negation(), ls.tnorm(), snap_grid_k);
    }
    return TruthValue::zero();
}

inline bool is_model(const Formula& f, const Assignment& v, const LogicSystem& ls) {
    return evaluate(f, v, ls).is_one();
}

// ── Model enumeration ───────────────────────────────────────────────────────
// Assignments are produced in ascending lexicographic order over the
// canonical argument order with 0 < 1/2 < 1.

namespace detail {

// Calls fn for every digit vector in {0..base-1}^n, in lexicographic order.
template <typename Fn>
void for_each_digit_vector(std::size_t n, int base, Fn&& fn) {
    std::vector<int> digits(n, 0);
    while (true) {
        fn(digits);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++digits[i] < base) break;
            digits[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

inline void check_grid_cap(std::size_t n, long k, const Caps& caps) {
    std::size_t points = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (points > caps.max_grid_points / static_cast<std::size_t>(k + 1)) {
            throw TooLarge("grid of (" + std::to_string(k + 1) + ")^" + std::to_string(n) +
                               " points",
                           caps.max_grid_points);
        }
        points *= static_cast<std::size_t>(k + 1);
    }
    if (points > caps.max_grid_points) {
        throw TooLarge("grid point count", caps.max_grid_points);
    }
}

}  // namespace detail

// All finite-domain models of f over af's arguments. `ls` must be PL2 or a
// three-valued system.
inline std::vector<Assignment> enumerate_models(const Formula& f, const ArgumentationFramework& af,
                                                const LogicSystem& ls, const Caps& caps = {}) {
    if (!ls.finite()) {
        throw std::invalid_argument("enumerate_models requires a finite-domain logic system");
    }
    if (af.size() > caps.max_args) {
        throw TooLarge("framework with " + std::to_string(af.size()) + " arguments", caps.max_args);
    }
    const bool two_valued = ls.kind() == LogicSystem::Kind::Pl2;
    const int base = two_valued ? 2 : 3;
    std::vector<Assignment> models;
    std::vector<int> trits(af.size());
    detail::for_each_digit_vector(af.size(), base, [&](const std::vector<int>& digits) {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            trits[i] = two_valued ? digits[i] * 2 : digits[i];
        }
        const bool model = two_valued
                               ? detail::eval_pl2(f.root(), trits)
                               : detail::eval_pl3(f.root(), trits, ls.implication_table()) == 2;
        if (model) {
            Assignment a(af.size());
            for (std::size_t i = 0; i < trits.size(); ++i) a.set(i, detail::value_of_trit(trits[i]));
            models.push_back(std::move(a));
        }
    });
    return models;
}

// All models with every value on the grid {0, 1/k, ..., 1}, exact rational
// arithmetic throughout.
inline std::vector<Assignment> grid_models(const Formula& f, const ArgumentationFramework& af,
                                           const LogicSystem& ls, long k, const Caps& caps = {}) {
    if (ls.kind() != LogicSystem::Kind::Fuzzy) {
        throw std::invalid_argument("grid_models requires a fuzzy logic system");
    }
    if (k < 1) throw std::invalid_argument("grid resolution must be >= 1");
    detail::check_grid_cap(af.size(), k, caps);
    std::vector<TruthValue> grid;
    grid.reserve(static_cast<std::size_t>(k) + 1);
    for (long i = 0; i <= k; ++i) grid.emplace_back(i, k);
    std::vector<Assignment> models;
    Assignment current(af.size());
    std::vector<int> last(af.size(), 0);
    detail::for_each_digit_vector(af.size(), static_cast<int>(k + 1),
                                  [&](const std::vector<int>& digits) {
                                      for (std::size_t i = 0; i < digits.size(); ++i) {
                                          if (digits[i] != last[i]) {
                                              current.set(i, grid[digits[i]]);
                                              last[i] = digits[i];
                                          }
                                      }
                                      if (evaluate(f, current, ls, k).is_one()) {
                                          models.push_back(current);
                                      }
                                  });
    return models;
}

}  // namespace arglogic
