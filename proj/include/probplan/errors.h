#ifndef PROBPLAN_ERRORS_H
#define PROBPLAN_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace probplan {
class PlannerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors: the CLI maps everything derived from InputError to exit code 2.
class InputError : public PlannerError {
public:
    using PlannerError::PlannerError;
};

struct SourceLocation {
    std::string file;
    int line = 0;
    int column = 0;

    std::string str() const;
};

class SyntaxError : public InputError {
    SourceLocation location_;
public:
    SyntaxError(SourceLocation location, const std::string &message);
    const SourceLocation &location() const {return location_;}
};

// Well-formed input that violates a declaration (undeclared predicate, type, object).
class SemanticError : public InputError {
    SourceLocation location_;
public:
    SemanticError(SourceLocation location, const std::string &message);
    const SourceLocation &location() const {return location_;}
};

class UnsupportedConstruct : public InputError {
    SourceLocation location_;
public:
    UnsupportedConstruct(SourceLocation location, const std::string &construct);
    const SourceLocation &location() const {return location_;}
};

class BlowupLimitExceeded : public InputError {
public:
    BlowupLimitExceeded(const std::string &schema, std::size_t cap);
};

class ProbabilitySumError : public InputError {
public:
    using InputError::InputError;
};

class EmptyGoal : public InputError {
public:
    EmptyGoal() : InputError("goal condition is empty") {}
};

class UnknownHeuristic : public InputError {
public:
    explicit UnknownHeuristic(const std::string &name)
        : InputError("unknown heuristic '" + name + "'") {}
};

class InvalidStack : public InputError {
public:
    using InputError::InputError;
};

class DeadEnd : public PlannerError {
public:
    DeadEnd() : PlannerError("no applicable operators in state") {}
};

class BudgetExceeded : public PlannerError {
public:
    using PlannerError::PlannerError;
};

class NoPatternsFound : public PlannerError {
public:
    NoPatternsFound() : PlannerError("no exactly-one invariant group verified") {}
};

class AdditivityViolation : public PlannerError {
public:
    using PlannerError::PlannerError;
};

class SolverFailure : public PlannerError {
public:
    using PlannerError::PlannerError;
};

class OutOfMemory : public PlannerError {
public:
    using PlannerError::PlannerError;
};

class CapacityExceeded : public PlannerError {
public:
    using PlannerError::PlannerError;
};
}

#endif
