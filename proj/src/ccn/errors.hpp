#pragma once

#include <stdexcept>
#include <string>

namespace ccn {

enum class ErrorCode {
    domain,
    malformed_network,
    unsupported_size,
    budget_exceeded,
    parse,
    internal,
};

// Base of every exception thrown by the core. The C API maps code() onto
// its status enum one-to-one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

struct MalformedNetwork : Error {
    explicit MalformedNetwork(const std::string& what) : Error(ErrorCode::malformed_network, what) {}
};

struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& what) : Error(ErrorCode::unsupported_size, what) {}
};

// Carries |Omega| in decimal so callers can report it.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::string size)
        : Error(ErrorCode::budget_exceeded, what), size_(std::move(size)) {}
    const std::string& size() const noexcept { return size_; }

private:
    std::string size_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

// Raised when a value the theory guarantees (exact division, nonnegativity)
// fails to hold. Always a defect.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

}  // namespace ccn
