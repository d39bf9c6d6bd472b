#pragma once

#include <stdexcept>
#include <string>

namespace mercode {

// Every failure mode in the library throws one of these. They all derive from
// Error so callers can catch the lot; the CLI maps them to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero polynomial") : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg = "element not invertible") : Error(msg) {}
};

struct DuplicatePoint : Error {
    explicit DuplicatePoint(const std::string& msg = "duplicate evaluation point") : Error(msg) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& msg = "zero vector has no leading coordinate") : Error(msg) {}
};

struct DegenerateBasis : Error {
    explicit DegenerateBasis(const std::string& msg = "basis is degenerate") : Error(msg) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg = "operator is not normalized") : Error(msg) {}
};

struct NoYSupport : Error {
    explicit NoYSupport(const std::string& msg = "operator has no y-dependence") : Error(msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg = "equation has no solution") : Error(msg) {}
};

struct CharacteristicTooSmall : Error {
    explicit CharacteristicTooSmall(const std::string& msg = "field characteristic too small") : Error(msg) {}
};

struct OrderTooSmall : Error {
    explicit OrderTooSmall(const std::string& msg = "multiplicative order too small") : Error(msg) {}
};

struct InvalidPin : Error {
    explicit InvalidPin(const std::string& msg = "pinned index out of range") : Error(msg) {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& msg = "degree bound too small") : Error(msg) {}
};

struct DegreeTooLarge : Error {
    explicit DegreeTooLarge(const std::string& msg = "degree exceeds bound") : Error(msg) {}
};

struct FoldingTooSmall : Error {
    explicit FoldingTooSmall(const std::string& msg = "folding parameter too small for target radius") : Error(msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg = "zero polynomial not allowed here") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg = "parse error") : Error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg = "invalid parameters") : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

}  // namespace mercode
