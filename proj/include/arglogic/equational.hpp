#pragma once

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arglogic/af.hpp"
#include "arglogic/logic.hpp"

namespace arglogic {

// ── EquationalSystem ────────────────────────────────────────────────────────
// Per-argument update rules over [0,1]. Every variant maps an argument
// without attackers to 1. The generic Encoded variant composes a negation
// with a t-norm fold over the attacker values; the named variants are the
// closed-form systems it is compared against.

class EquationalSystem {
public:
    enum class Kind { Encoded, Max, Inverse, LukaClosed, Geometrical };

    static EquationalSystem encoded(Negation negation, TNorm tnorm) {
        EquationalSystem s(Kind::Encoded);
        s.name_ = "encoded:" + negation.name() + ":" + tnorm.name();
        s.negation_ = std::move(negation);
        s.tnorm_ = std::move(tnorm);
        return s;
    }

    static EquationalSystem max() { return EquationalSystem(Kind::Max, "max"); }
    static EquationalSystem inverse() { return EquationalSystem(Kind::Inverse, "inverse"); }
    static EquationalSystem luka_closed() { return EquationalSystem(Kind::LukaClosed, "luka"); }
    static EquationalSystem geometrical() {
        return EquationalSystem(Kind::Geometrical, "geometrical");
    }

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const Negation& negation() const { return *negation_; }
    const TNorm& tnorm() const { return *tnorm_; }

private:
    explicit EquationalSystem(Kind kind, std::string name = {})
        : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::optional<Negation> negation_;
    std::optional<TNorm> tnorm_;
};

// Update value for argument `a` given the current assignment.
inline TruthValue rhs(const EquationalSystem& sys, const ArgumentationFramework& af,
                      const Assignment& v, std::size_t a) {
    const auto& attackers = af.attackers_of(a);
    if (attackers.empty()) return TruthValue::one();
    switch (sys.kind()) {
        case EquationalSystem::Kind::Encoded: {
            const auto& neg = sys.negation();
            const auto& tnorm = sys.tnorm();
            TruthValue acc = neg(v[attackers[0]]);
            for (std::size_t i = 1; i < attackers.size(); ++i) {
                acc = tnorm(acc, neg(v[attackers[i]]));
            }
            return acc;
        }
        case EquationalSystem::Kind::Max: {
            TruthValue m = v[attackers[0]];
            for (std::size_t i = 1; i < attackers.size(); ++i) m = t_max(m, v[attackers[i]]);
            return m.complement();
        }
        case EquationalSystem::Kind::Inverse: {
            Rational prod = 1;
            for (std::size_t b : attackers) prod *= 1 - v[b].raw();
            return TruthValue(std::move(prod));
        }
        case EquationalSystem::Kind::LukaClosed: {
            Rational sum = 0;
            for (std::size_t b : attackers) sum += v[b].raw();
            if (sum >= 1) return TruthValue::zero();
            return TruthValue(Rational(1 - sum));
        }
        case EquationalSystem::Kind::Geometrical: {
            Rational co = 1, pro = 1;
            for (std::size_t b : attackers) {
                co *= 1 - v[b].raw();
                pro *= v[b].raw();
            }
            Rational den = co + pro;
            if (den == 0) throw GeometricalSingularity(af.name_of(a));
            return TruthValue(Rational(co / den));
        }
    }
    return TruthValue::zero();
}

// Exact satisfaction: v(a) = rhs(a) for every argument.
inline bool satisfies(const EquationalSystem& sys, const ArgumentationFramework& af,
                      const Assignment& v) {
    for (std::size_t a = 0; a < af.size(); ++a) {
        if (v[a] != rhs(sys, af, v, a)) return false;
    }
    return true;
}

// The complete set of exact solutions ON THE GRID {0, 1/k, ..., 1}^A — the
// full solution set of a fuzzy system can be a continuum.
inline std::vector<Assignment> grid_solutions(const EquationalSystem& sys,
                                              const ArgumentationFramework& af, long k,
                                              const Caps& caps = {}) {
    if (k < 1) throw std::invalid_argument("grid resolution must be >= 1");
    detail::check_grid_cap(af.size(), k, caps);
    std::vector<TruthValue> grid;
    for (long i = 0; i <= k; ++i) grid.emplace_back(i, k);
    std::vector<Assignment> solutions;
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
                                      if (satisfies(sys, af, current)) solutions.push_back(current);
                                  });
    return solutions;
}

// ── Fixed-point iteration ───────────────────────────────────────────────────
// Jacobi-style simultaneous update. Exact mode stops only on an exact fixed
// point; float mode stops when the max-norm step drops below tol.

struct IterateMode {
    bool use_float = false;
    double tol = 1e-9;

    static IterateMode exact() { return {}; }
    static IterateMode floating(double tol = 1e-9) { return {true, tol}; }
};

struct IterationOutcome {
    bool converged = false;
    Assignment result;  // fixed point when converged, last state otherwise
    std::size_t steps = 0;
    bool two_cycle = false;
    Assignment cycle_a, cycle_b;
    std::string summary;
};

namespace detail {

inline double rhs_double(const EquationalSystem& sys, const ArgumentationFramework& af,
                         const std::vector<double>& v, std::size_t a) {
    const auto& attackers = af.attackers_of(a);
    if (attackers.empty()) return 1.0;
    switch (sys.kind()) {
        case EquationalSystem::Kind::Encoded: {
            const auto& neg = sys.negation();
            const auto& tnorm = sys.tnorm();
            double acc = neg(v[attackers[0]]);
            for (std::size_t i = 1; i < attackers.size(); ++i) acc = tnorm(acc, neg(v[attackers[i]]));
            return acc;
        }
        case EquationalSystem::Kind::Max: {
            double m = 0.0;
            for (std::size_t b : attackers) m = std::max(m, v[b]);
            return 1.0 - m;
        }
        case EquationalSystem::Kind::Inverse: {
            double p = 1.0;
            for (std::size_t b : attackers) p *= 1.0 - v[b];
            return p;
        }
        case EquationalSystem::Kind::LukaClosed: {
            double s = 0.0;
            for (std::size_t b : attackers) s += v[b];
            return s >= 1.0 ? 0.0 : 1.0 - s;
        }
        case EquationalSystem::Kind::Geometrical: {
            double co = 1.0, pro = 1.0;
            for (std::size_t b : attackers) {
                co *= 1.0 - v[b];
                pro *= v[b];
            }
            double den = co + pro;
            if (den == 0.0) throw GeometricalSingularity(af.name_of(a));
            return co / den;
        }
    }
    return 0.0;
}

inline std::string states_summary(const ArgumentationFramework& af, const Assignment& a,
                                  const Assignment& b) {
    auto render = [&af](const Assignment& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < af.size(); ++i) {
            if (i > 0) s += ", ";
            s += v[i].str();
        }
        return s + ")";
    };
    return render(a) + " <-> " + render(b);
}

}  // namespace detail

inline IterationOutcome iterate(const EquationalSystem& sys, const ArgumentationFramework& af,
                                const Assignment& start, std::size_t max_iters = 10000,
                                IterateMode mode = IterateMode::exact()) {
    if (start.size() != af.size()) {
        throw std::invalid_argument("start assignment does not cover the framework");
    }
    IterationOutcome out;

    if (!mode.use_float) {
        Assignment prev = start;
        Assignment before_prev = start;
        for (std::size_t step = 0; step < max_iters; ++step) {
            Assignment next(af.size());
            for (std::size_t a = 0; a < af.size(); ++a) next.set(a, rhs(sys, af, prev, a));
            if (next == prev) {
                out.converged = true;
                out.result = prev;
                out.steps = step;
                out.summary = "fixed point after " + std::to_string(step) + " steps";
                return out;
            }
            if (step >= 1 && next == before_prev) {
                out.result = next;
                out.steps = step + 1;
                out.two_cycle = true;
                out.cycle_a = before_prev;
                out.cycle_b = prev;
                out.summary = "no convergence: 2-cycle " +
                              detail::states_summary(af, before_prev, prev);
                return out;
            }
            before_prev = std::move(prev);
            prev = std::move(next);
        }
        out.result = prev;
        out.steps = max_iters;
        out.summary = "no convergence after " + std::to_string(max_iters) + " iterations";
        return out;
    }

    std::vector<double> prev(af.size()), before_prev(af.size());
    for (std::size_t i = 0; i < af.size(); ++i) prev[i] = before_prev[i] = start[i].to_double();
    auto max_diff = [](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
        return d;
    };
    auto to_assignment = [&af](const std::vector<double>& v) {
        Assignment a(af.size());
        for (std::size_t i = 0; i < v.size(); ++i) a.set(i, TruthValue::from_double(v[i]));
        return a;
    };
    for (std::size_t step = 0; step < max_iters; ++step) {
        std::vector<double> next(af.size());
        for (std::size_t a = 0; a < af.size(); ++a) next[a] = detail::rhs_double(sys, af, prev, a);
        if (max_diff(next, prev) <= mode.tol) {
            out.converged = true;
            out.result = to_assignment(next);
            out.steps = step;
            out.summary = "fixed point after " + std::to_string(step) + " steps (tol " +
                          std::to_string(mode.tol) + ")";
            return out;
        }
        if (step >= 1 && max_diff(next, before_prev) <= mode.tol) {
            out.result = to_assignment(next);
            out.steps = step + 1;
            out.two_cycle = true;
            out.cycle_a = to_assignment(before_prev);
            out.cycle_b = to_assignment(prev);
            out.summary = "no convergence: 2-cycle " +
                          detail::states_summary(af, out.cycle_a, out.cycle_b);
            return out;
        }
        before_prev = std::move(prev);
        prev = std::move(next);
    }
    out.result = to_assignment(prev);
    out.steps = max_iters;
    out.summary = "no convergence after " + std::to_string(max_iters) + " iterations";
    return out;
}

// n-ary Lukasiewicz t-norm in closed form: max(0, sum - (n-1)). Must agree
// with the left fold of the binary t-norm.
inline TruthValue luka_nary(const std::vector<TruthValue>& xs) {
    if (xs.empty()) throw std::invalid_argument("luka_nary requires a non-empty list");
    Rational sum = 0;
    for (const auto& x : xs) sum += x.raw();
    sum -= static_cast<long>(xs.size()) - 1;
    if (sum <= 0) return TruthValue::zero();
    return TruthValue(std::move(sum));
}

// ── Equational-function property checks ─────────────────────────────────────

enum class EquationalFunctionProperty {
    DecreasingMonotonicity,
    BoundaryZeroToOne,
    BoundaryOneKills,
    Symmetry,
    HalfIdempotentTNorm,
    ZeroDivisorFreeTNorm,
};

inline const char* to_string(EquationalFunctionProperty p) {
    switch (p) {
        case EquationalFunctionProperty::DecreasingMonotonicity: return "decreasing-monotonicity";
        case EquationalFunctionProperty::BoundaryZeroToOne: return "boundary-zero-to-one";
        case EquationalFunctionProperty::BoundaryOneKills: return "boundary-one-kills";
        case EquationalFunctionProperty::Symmetry: return "symmetry";
        case EquationalFunctionProperty::HalfIdempotentTNorm: return "half-idempotent-tnorm";
        case EquationalFunctionProperty::ZeroDivisorFreeTNorm: return "zero-divisor-free-tnorm";
    }
    return "";
}

struct PropertyReport {
    EquationalFunctionProperty property;
    bool pass = true;
    std::size_t cases_checked = 0;
    std::string counterexample{};  // empty iff pass
};

namespace detail {

// The update function on a free tuple. nullopt marks a point where the
// geometrical rule is undefined.
inline std::optional<TruthValue> h_value(const EquationalSystem& sys,
                                         const std::vector<TruthValue>& xs) {
    switch (sys.kind()) {
        case EquationalSystem::Kind::Encoded: {
            const auto& neg = sys.negation();
            const auto& tnorm = sys.tnorm();
            TruthValue acc = neg(xs[0]);
            for (std::size_t i = 1; i < xs.size(); ++i) acc = tnorm(acc, neg(xs[i]));
            return acc;
        }
        case EquationalSystem::Kind::Max: {
            TruthValue m = xs[0];
            for (std::size_t i = 1; i < xs.size(); ++i) m = t_max(m, xs[i]);
            return m.complement();
        }
        case EquationalSystem::Kind::Inverse: {
            Rational p = 1;
            for (const auto& x : xs) p *= 1 - x.raw();
            return TruthValue(std::move(p));
        }
        case EquationalSystem::Kind::LukaClosed: {
            Rational s = 0;
            for (const auto& x : xs) s += x.raw();
            if (s >= 1) return TruthValue::zero();
            return TruthValue(Rational(1 - s));
        }
        case EquationalSystem::Kind::Geometrical: {
            Rational co = 1, pro = 1;
            for (const auto& x : xs) {
                co *= 1 - x.raw();
                pro *= x.raw();
            }
            Rational den = co + pro;
            if (den == 0) return std::nullopt;
            return TruthValue(Rational(co / den));
        }
    }
    return std::nullopt;
}

inline std::string tuple_str(const std::vector<TruthValue>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ", ";
        s += xs[i].str();
    }
    return s + ")";
}

}  // namespace detail

// Exhaustive check on the (k+1)^arity rational grid: monotonicity via all
// axis-aligned neighbour pairs, symmetry via all transpositions plus seeded
// sample permutations, boundary conditions at the exact boundary tuples.
// Undefined points of the geometrical rule are skipped.
inline PropertyReport check_function_property(const EquationalSystem& sys,
                                              EquationalFunctionProperty prop, std::size_t arity,
                                              long k) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    PropertyReport report{prop};

    if (prop == EquationalFunctionProperty::HalfIdempotentTNorm ||
        prop == EquationalFunctionProperty::ZeroDivisorFreeTNorm) {
        if (sys.kind() != EquationalSystem::Kind::Encoded) {
            throw std::invalid_argument("t-norm properties require an encoded system");
        }
        const auto& t = sys.tnorm();
        if (prop == EquationalFunctionProperty::HalfIdempotentTNorm) {
            report.cases_checked = 1;
            if (t(TruthValue::half(), TruthValue::half()) != TruthValue::half()) {
                report.pass = false;
                report.counterexample =
                    "T(1/2,1/2) = " + t(TruthValue::half(), TruthValue::half()).str();
            }
            return report;
        }
        for (long i = 1; i <= k; ++i) {
            for (long j = 1; j <= k; ++j) {
                ++report.cases_checked;
                TruthValue a(i, k), b(j, k);
                if (t(a, b).is_zero()) {
                    report.pass = false;
                    report.counterexample = "T(" + a.str() + "," + b.str() + ") = 0";
                    return report;
                }
            }
        }
        return report;
    }

    std::vector<TruthValue> grid;
    for (long i = 0; i <= k; ++i) grid.emplace_back(i, k);

    auto h = [&sys](const std::vector<TruthValue>& xs) { return detail::h_value(sys, xs); };

    switch (prop) {
        case EquationalFunctionProperty::BoundaryZeroToOne: {
            std::vector<TruthValue> zeros(arity, TruthValue::zero());
            report.cases_checked = 1;
            auto v = h(zeros);
            if (!v || !v->is_one()) {
                report.pass = false;
                report.counterexample = "h(0,...,0) = " + (v ? v->str() : "undefined");
            }
            return report;
        }
        case EquationalFunctionProperty::BoundaryOneKills: {
            std::vector<TruthValue> xs(arity);
            for (std::size_t pos = 0; pos < arity; ++pos) {
                detail::for_each_digit_vector(arity - 1, static_cast<int>(k + 1),
                                              [&](const std::vector<int>& digits) {
                                                  std::size_t d = 0;
                                                  for (std::size_t i = 0; i < arity; ++i) {
                                                      xs[i] = i == pos ? TruthValue::one()
                                                                       : grid[digits[d++]];
                                                  }
                                                  auto v = h(xs);
                                                  if (!v) return;  // undefined point, skip
                                                  ++report.cases_checked;
                                                  if (!v->is_zero() && report.pass) {
                                                      report.pass = false;
                                                      report.counterexample =
                                                          "h" + detail::tuple_str(xs) + " = " +
                                                          v->str();
                                                  }
                                              });
            }
            return report;
        }
        case EquationalFunctionProperty::DecreasingMonotonicity: {
            std::vector<TruthValue> xs(arity), ys(arity);
            detail::for_each_digit_vector(arity, static_cast<int>(k + 1),
                                          [&](const std::vector<int>& digits) {
                                              for (std::size_t i = 0; i < arity; ++i) {
                                                  xs[i] = grid[digits[i]];
                                              }
                                              auto base = h(xs);
                                              if (!base) return;
                                              for (std::size_t i = 0; i < arity; ++i) {
                                                  if (digits[i] == k) continue;
                                                  ys = xs;
                                                  ys[i] = grid[digits[i] + 1];
                                                  auto up = h(ys);
                                                  if (!up) continue;
                                                  ++report.cases_checked;
                                                  if (*base < *up && report.pass) {
                                                      report.pass = false;
                                                      report.counterexample =
                                                          "h" + detail::tuple_str(xs) + " = " +
                                                          base->str() + " < h" +
                                                          detail::tuple_str(ys) + " = " + up->str();
                                                  }
                                              }
                                          });
            return report;
        }
        case EquationalFunctionProperty::Symmetry: {
            std::mt19937_64 rng(20240u);
            std::vector<TruthValue> xs(arity), ys(arity);
            detail::for_each_digit_vector(
                arity, static_cast<int>(k + 1), [&](const std::vector<int>& digits) {
                    for (std::size_t i = 0; i < arity; ++i) xs[i] = grid[digits[i]];
                    auto base = h(xs);
                    auto check = [&](const std::vector<TruthValue>& perm) {
                        auto v = h(perm);
                        if (!base || !v) return;
                        ++report.cases_checked;
                        if (*base != *v && report.pass) {
                            report.pass = false;
                            report.counterexample = "h" + detail::tuple_str(xs) + " = " +
                                                    base->str() + " but h" +
                                                    detail::tuple_str(perm) + " = " + v->str();
                        }
                    };
                    for (std::size_t i = 0; i < arity; ++i) {
                        for (std::size_t j = i + 1; j < arity; ++j) {
                            ys = xs;
                            std::swap(ys[i], ys[j]);
                            check(ys);
                        }
                    }
                    if (arity >= 3) {
                        for (int sample = 0; sample < 2; ++sample) {
                            ys = xs;
                            std::shuffle(ys.begin(), ys.end(), rng);
                            check(ys);
                        }
                    }
                });
            return report;
        }
        default: break;
    }
    return report;
}

}  // namespace arglogic
