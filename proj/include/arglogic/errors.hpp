#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arglogic {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed APX/TGF input. Positions are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An attack endpoint was used before any `arg`/node declaration introduced it.
class UndeclaredArgument : public Error {
public:
    explicit UndeclaredArgument(std::string name)
        : Error("undeclared argument '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A truth value lies outside the domain of the logic system in use.
class DomainViolation : public Error {
public:
    using Error::Error;
};

// An enumeration or grid search would exceed the configured cap.
class TooLarge : public Error {
public:
    TooLarge(const std::string& what_exceeded, std::size_t limit)
        : Error(what_exceeded + " exceeds the configured cap of " + std::to_string(limit)),
          limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

// A user-supplied t-norm failed the left-continuity / bracketing sanity check.
class NonLeftContinuous : public Error {
public:
    using Error::Error;
};

// Ternarization is undefined: the argument has value 1 and so does one of its
// attackers, so the 1-clause and the 0-clause fire simultaneously.
class Partiality : public Error {
public:
    Partiality(std::string argument, std::string attacker)
        : Error("ternarization undefined at '" + argument + "': it has value 1 but its attacker '" +
                attacker + "' also has value 1"),
          argument_(std::move(argument)),
          attacker_(std::move(attacker)) {}

    const std::string& argument() const noexcept { return argument_; }
    const std::string& attacker() const noexcept { return attacker_; }

private:
    std::string argument_;
    std::string attacker_;
};

// The geometrical update rule has a vanishing denominator at this point
// (some attacker valued exactly 1 while another is exactly 0).
class GeometricalSingularity : public Error {
public:
    explicit GeometricalSingularity(std::string argument)
        : Error("geometrical update undefined for argument '" + argument +
                "': denominator is zero"),
          argument_(std::move(argument)) {}

    const std::string& argument() const noexcept { return argument_; }

private:
    std::string argument_;
};

}  // namespace arglogic
