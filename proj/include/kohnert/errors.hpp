#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kohnert {

enum class ErrorKind { parse, budget, precondition };

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::budget: return "budget";
        case ErrorKind::precondition: return "precondition";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

// Carries how far the search got before giving up.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t explored)
        : Error(ErrorKind::budget, what + " (explored " + std::to_string(explored) + ")"),
          explored_(explored) {}
    std::size_t explored() const noexcept { return explored_; }

private:
    std::size_t explored_;
};

inline constexpr std::size_t kDefaultClosureBudget = 100'000;
inline constexpr std::size_t kDefaultShellingBudget = 1'000'000;
inline constexpr std::size_t kDefaultIsomorphismBudget = 1'000'000;

}  // namespace kohnert
