#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "arglogic/errors.hpp"

namespace arglogic {

// Arbitrary-precision rational. All theorem checking runs on exact values;
// floating point exists only inside the equational fixed-point iterator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// ── TruthValue ──────────────────────────────────────────────────────────────
// An exact rational confined to [0,1]. Arithmetic that may leave the unit
// interval (sums of attacker values and the like) is done on the raw
// Rational and re-wrapped.

class TruthValue {
public:
    TruthValue() : v_(0) {}
    TruthValue(long num, long den) : v_(make_rational(num, den)) { check(); }
    explicit TruthValue(Rational v) : v_(std::move(v)) { check(); }

    static TruthValue zero() { return TruthValue(); }
    static TruthValue half() { return TruthValue(1, 2); }
    static TruthValue one() { return TruthValue(1, 1); }

    // Exact conversion; the double must already lie in [0,1].
    static TruthValue from_double(double x) {
        Rational r(x);
        if (r < 0) r = 0;
        if (r > 1) r = 1;
        return TruthValue(std::move(r));
    }

    // Accepts "p/q" or a bare integer "p".
    static std::optional<TruthValue> parse(const std::string& text) {
        if (text.empty()) return std::nullopt;
        for (char c : text) {
            if (c != '/' && c != '-' && (c < '0' || c > '9')) return std::nullopt;
        }
        Rational r;
        if (r.set_str(text, 10) != 0) return std::nullopt;
        if (text.find('/') != std::string::npos && r.get_den() == 0) return std::nullopt;
        r.canonicalize();
        if (r < 0 || r > 1) return std::nullopt;
        return TruthValue(std::move(r));
    }

    const Rational& raw() const noexcept { return v_; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_half() const { return v_ * 2 == 1; }

    // 1 - x, the standard negation.
    TruthValue complement() const { return TruthValue(Rational(1 - v_)); }

    friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.v_ == b.v_; }
    friend bool operator!=(const TruthValue& a, const TruthValue& b) { return a.v_ != b.v_; }
    friend bool operator<(const TruthValue& a, const TruthValue& b) { return a.v_ < b.v_; }
    friend bool operator<=(const TruthValue& a, const TruthValue& b) { return a.v_ <= b.v_; }
    friend bool operator>(const TruthValue& a, const TruthValue& b) { return a.v_ > b.v_; }
    friend bool operator>=(const TruthValue& a, const TruthValue& b) { return a.v_ >= b.v_; }

private:
    void check() const {
        if (v_ < 0 || v_ > 1) {
            throw DomainViolation("truth value " + v_.get_str() + " outside [0,1]");
        }
    }

    Rational v_;
};

inline const TruthValue& t_min(const TruthValue& a, const TruthValue& b) {
    return a <= b ? a : b;
}

inline const TruthValue& t_max(const TruthValue& a, const TruthValue& b) {
    return a >= b ? a : b;
}

}  // namespace arglogic
