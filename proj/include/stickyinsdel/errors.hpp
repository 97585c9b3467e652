#pragma once

#include <stdexcept>

namespace stickyinsdel {

// Malformed arguments: empty sequences, out-of-alphabet symbols, negative
// radii, mismatched vector lengths, unparsable text.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A sticky deletion aimed at a run of length one. A run can never vanish.
struct RunTooShort : std::domain_error {
  using std::domain_error::domain_error;
};

// A brute-force oracle was asked to enumerate more states than its cap.
struct WorkBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stickyinsdel
