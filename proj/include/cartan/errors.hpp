#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

/// Raised by the string parsers (group names, weights, angle lists).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or out-of-domain input: non-dominant weight where
/// dominance is required, node index out of range, weight outside the
/// character lattice, invalid rank for a family.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation at a point where a quotient formula degenerates.
struct SingularityError : DomainError {
    explicit SingularityError(const std::string& what) : DomainError(what) {}
};

/// Work or memory would exceed a configured cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cartan
