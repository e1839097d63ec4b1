#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homnambu {

/* Base class for every error raised by the library.  Callers that only
 * care about "did it work" can catch this; the CLI maps subclasses to
 * exit codes. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Scalar arithmetic. */
struct DivisionByZeroScalar : Error {
    DivisionByZeroScalar() : Error("division by zero scalar") {}
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t at, const std::string& what)
        : Error("parse error at byte " + std::to_string(at) + ": " + what), offset(at) {}
};

struct UndeclaredParameter : Error {
    std::string name;
    std::size_t offset;
    UndeclaredParameter(std::string n, std::size_t at)
        : Error("undeclared parameter '" + n + "' at byte " + std::to_string(at)),
          name(std::move(n)),
          offset(at) {}
};

struct DenominatorVanishes : Error {
    DenominatorVanishes() : Error("denominator vanishes under substitution") {}
    explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};

/* Linear algebra / shape checks. */
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/* Algebra-level preconditions. */
struct NotAnEndomorphism : Error {
    explicit NotAnEndomorphism(const std::string& what) : Error(what) {}
};

struct AlreadyTwisted : Error {
    explicit AlreadyTwisted(const std::string& what) : Error(what) {}
};

struct IncompatibleTriple : Error {
    explicit IncompatibleTriple(const std::string& what) : Error(what) {}
};

struct DegenerateTriple : Error {
    explicit DegenerateTriple(const std::string& what) : Error(what) {}
};

struct NotDegenerate : Error {
    explicit NotDegenerate(const std::string& what) : Error(what) {}
};

struct HypothesisFailure : Error {
    explicit HypothesisFailure(const std::string& what) : Error(what) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& what) : Error(what) {}
};

/* Name lookups (maps, functionals, documents). */
struct UnknownName : Error {
    explicit UnknownName(const std::string& what) : Error(what) {}
};

/* Structural problems in an input document. */
struct DocumentError : Error {
    explicit DocumentError(const std::string& what) : Error(what) {}
};

}  // namespace homnambu
