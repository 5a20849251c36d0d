#pragma once

#include <stdexcept>
#include <string>

namespace naeflow {

/// Thrown when an operation is called outside its documented domain.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph/formula/witness input.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bounded search gave up before reaching a verdict.
struct search_limit_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed. Indicates a bug or a counterexample to
/// an assumption the construction relies on; never silently repaired.
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace naeflow
