#pragma once

#include <stdexcept>
#include <string>

namespace nms {

// Mixing ring elements or rules from different noble means families (m values).
struct FamilyMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad user-facing configuration (probability vector, parameter ranges).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative construction did not stabilise within its round budget.
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration exceeded its resource budget. `lower_bound` is the number of
// elements that were already materialised when the limit was hit.
struct SizeLimit : std::runtime_error {
    unsigned long long lower_bound;
    SizeLimit(const std::string& msg, unsigned long long lb)
        : std::runtime_error(msg), lower_bound(lb) {}
};

// A word that is not legal for the substitution at hand. Distinct from a
// numeric zero so that callers can tell "measure zero" from "outside the hull".
struct IllegalWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace nms
