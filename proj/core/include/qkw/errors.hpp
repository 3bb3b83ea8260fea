// qkw/errors.hpp -- typed error conditions shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace qkw {

// Broad classification, used by the CLI to map failures onto exit codes.
enum class ErrorKind {
    Usage,     // bad input: dimension mismatch, unknown variable, parse error
    Domain,    // mathematically invalid: zero denominator, non-unit inversion
    Resource,  // step budget or cap exceeded
    Internal,  // certificate failure or broken invariant
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct DimensionError : Error {
    explicit DimensionError(std::string msg) : Error(ErrorKind::Usage, std::move(msg)) {}
};

struct DomainError : Error {
    explicit DomainError(std::string msg) : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(std::string msg = "division by zero")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct TableMismatch : Error {
    explicit TableMismatch(std::string msg = "operands use different variable tables")
        : Error(ErrorKind::Usage, std::move(msg)) {}
};

struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(std::string msg = "series constant term is not an invertible scalar")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct InfiniteDimensional : Error {
    explicit InfiniteDimensional(std::string msg = "quotient is not finite dimensional")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(std::string msg = "monomial basis cap exceeded")
        : Error(ErrorKind::Resource, std::move(msg)) {}
};

struct ResourceBudget : Error {
    explicit ResourceBudget(std::string msg = "reduction step budget exceeded")
        : Error(ErrorKind::Resource, std::move(msg)) {}
};

struct MismatchedClassicalLimit : Error {
    explicit MismatchedClassicalLimit(std::string msg =
                                          "q->0 limit of quantum generators does not match classical generators")
        : Error(ErrorKind::Usage, std::move(msg)) {}
};

struct NotABasis : Error {
    explicit NotABasis(std::string msg = "supplied class list is not a basis")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(std::string msg = "linear system is singular")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct SingularDiagonal : Error {
    explicit SingularDiagonal(std::string msg = "localization matrix has a vanishing diagonal entry")
        : Error(ErrorKind::Domain, std::move(msg)) {}
};

struct QVariablePresent : Error {
    explicit QVariablePresent(std::string msg = "expression contains quantum parameters where none are allowed")
        : Error(ErrorKind::Usage, std::move(msg)) {}
};

struct CertificateFailure : Error {
    explicit CertificateFailure(std::string msg) : Error(ErrorKind::Internal, std::move(msg)) {}
};

struct ParseError : Error {
    ParseError(std::size_t offset, std::string msg)
        : Error(ErrorKind::Usage, "parse error at byte " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace qkw
