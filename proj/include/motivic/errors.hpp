#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace motivic {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion of zero, or construction of a fraction with zero denominator.
struct division_by_zero : error {
    using error::error;
};

/// Evaluation of a class at a rational point where its denominator vanishes.
struct pole_error : error {
    using error::error;
};

/// Arithmetic between series of different truncation orders.
struct order_mismatch : error {
    using error::error;
};

/// A precondition stated by an operation's contract was violated.
struct contract_violation : error {
    using error::error;
};

/// An enumeration request whose estimated cost exceeds the work budget.
/// Carries the estimate so callers can report it.
struct budget_exceeded : error {
    budget_exceeded(const std::string& what, std::uint64_t estimated_cost, std::uint64_t budget)
        : error(what), estimated(estimated_cost), budget(budget) {}
    std::uint64_t estimated;
    std::uint64_t budget;
};

} // namespace motivic

#endif
