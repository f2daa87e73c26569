#ifndef POLYPLAN_ERRORS_HPP
#define POLYPLAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyplan {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown variable, unresolvable operator reference, malformed instance.
class StructuralError : public Error {
public:
    using Error::Error;
};

// An operator was applied to a state that does not satisfy its conditions.
class ApplicationError : public Error {
    std::string op_name;

public:
    explicit ApplicationError(std::string op)
        : Error("operator '" + op + "' is not applicable"), op_name(std::move(op)) {}
    const std::string &operator_name() const {return op_name;}
};

// A caller-supplied argument violates the operation's precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// An exhaustive procedure ran out of its configured budget.
class BudgetError : public Error {
    std::size_t expanded;

public:
    BudgetError(const std::string &what, std::size_t states_expanded)
        : Error(what), expanded(states_expanded) {}
    std::size_t states_expanded() const {return expanded;}
};

// Malformed textual input. Line numbers are 1-based; 0 means "whole input".
class ParseError : public Error {
    std::size_t line_no;

public:
    ParseError(std::size_t line, const std::string &what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_no(line) {}
    std::size_t line() const {return line_no;}
};
}

#endif
