#pragma once

#include <stdexcept>

namespace ssy {

// Raised when a parameter point lies outside the region where a constant is
// defined, typically because the stability gap A(n,q) is not positive.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when free absorption parameters violate their feasibility constraint.
class FeasibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a caller breaks an algorithmic precondition (for example a root
// bracket whose endpoint signs are not certified opposite).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ssy
