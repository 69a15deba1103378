#ifndef LATTICEISO_ERRORS_HPP
#define LATTICEISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latticeiso {

// Base class for violations of an operation's domain preconditions.
// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// r is not a sum of two integer squares.
struct NotRealizedError : DomainError {
    explicit NotRealizedError(const std::string& what) : DomainError(what) {}
};

// r admits no representation with coprime components (h > 1).
struct NoPrimitiveRepresentationError : DomainError {
    explicit NoPrimitiveRepresentationError(const std::string& what) : DomainError(what) {}
};

struct BadParityError : DomainError {
    explicit BadParityError(const std::string& what) : DomainError(what) {}
};

struct NotCoprimeError : DomainError {
    explicit NotCoprimeError(const std::string& what) : DomainError(what) {}
};

// r has a prime factor not congruent to 1 mod 4.
struct NotCoreRadicandError : DomainError {
    explicit NotCoreRadicandError(const std::string& what) : DomainError(what) {}
};

struct IdenticalRadicandsError : DomainError {
    explicit IdenticalRadicandsError(const std::string& what) : DomainError(what) {}
};

// An exact search exceeded its configured node budget.  Counts are never
// truncated silently.
struct BudgetExceededError : DomainError {
    explicit BudgetExceededError(const std::string& what) : DomainError(what) {}
};

}  // namespace latticeiso

#endif  // LATTICEISO_ERRORS_HPP
