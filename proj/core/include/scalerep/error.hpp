#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scalerep {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    std::string op;
    explicit DivisionByZero(std::string op_name)
        : Error("division by zero in '" + op_name + "'"), op(std::move(op_name)) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error("overflow: " + what) {}
};

struct InvalidScale : Error {
    explicit InvalidScale(const std::string& what) : Error("invalid scale: " + what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

struct NotInBaseSet : Error {
    explicit NotInBaseSet(const std::string& what) : Error("not in base set: " + what) {}
};

struct StructureMismatch : Error {
    explicit StructureMismatch(const std::string& what)
        : Error("structure mismatch: " + what) {}
};

struct UnsupportedOperation : Error {
    explicit UnsupportedOperation(const std::string& what)
        : Error("unsupported operation: " + what) {}
};

struct TypeMismatch : Error {
    explicit TypeMismatch(const std::string& what) : Error("type mismatch: " + what) {}
};

struct UnboundVariable : Error {
    std::string name;
    explicit UnboundVariable(std::string var)
        : Error("unbound variable '" + var + "'"), name(std::move(var)) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct WitnessRequired : Error {
    explicit WitnessRequired(const std::string& what) : Error("witness required: " + what) {}
};

/// Parse failure with the byte position and a hint of what was expected there.
struct ParseError : Error {
    std::size_t position;
    std::string expected;
    ParseError(std::size_t pos, std::string expected_tokens)
        : Error("parse error at position " + std::to_string(pos) + ": expected " +
                expected_tokens),
          position(pos),
          expected(std::move(expected_tokens)) {}
};

}  // namespace scalerep
