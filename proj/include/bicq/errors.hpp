#ifndef BICQ_ERRORS_HPP
#define BICQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicq {

// Every error raised by the library derives from one of the two standard
// families: std::invalid_argument for bad inputs and std::domain_error for
// mathematical preconditions that do not hold.

struct InvalidDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. `where` names the line or field at fault.
struct ParseError : std::runtime_error {
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), location(where) {}
    std::string location;
};

} // namespace bicq

#endif
