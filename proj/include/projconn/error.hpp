#pragma once

#include <stdexcept>
#include <string>

namespace projconn {

enum class ErrorKind {
    DivisionByZero,
    ContextMismatch,
    InvalidArgument,
    DimensionMismatch,
    ReducibleModulus,
    NotGeneratorMatrix,
    ConditionViolated,  // spanning / non-proportionality of a functional tuple
    NotProjective,
    NoArcChain,
    BudgetExceeded,
    Parse,
    Internal,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "division by zero";
        case ErrorKind::ContextMismatch: return "field context mismatch";
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::DimensionMismatch: return "dimension mismatch";
        case ErrorKind::ReducibleModulus: return "reducible modulus";
        case ErrorKind::NotGeneratorMatrix: return "not a generator matrix";
        case ErrorKind::ConditionViolated: return "functional tuple condition violated";
        case ErrorKind::NotProjective: return "not projective";
        case ErrorKind::NoArcChain: return "no arc chain available";
        case ErrorKind::BudgetExceeded: return "enumeration budget exceeded";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Internal: return "internal error";
    }
    return "unknown";
}

/// Every failure in the library is reported through this exception; `kind()` is stable, the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Thrown when an exhaustive routine would exceed its budget; carries the count it refused to enumerate.
class BudgetError : public Error {
   public:
    BudgetError(const std::string& what, unsigned long long count, unsigned long long budget)
        : Error(ErrorKind::BudgetExceeded, what + " requires " + std::to_string(count) + " items, budget is " +
                                               std::to_string(budget)),
          count_(count),
          budget_(budget) {}

    unsigned long long count() const noexcept { return count_; }
    unsigned long long budget() const noexcept { return budget_; }

   private:
    unsigned long long count_;
    unsigned long long budget_;
};

inline constexpr unsigned long long kDefaultBudget = 1'000'000ULL;

}  // namespace projconn
