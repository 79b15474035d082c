#pragma once

#include <stdexcept>

namespace prodset {

// Thrown when a computation contradicts a result the library is built to
// uphold: a fast/brute-force mismatch, an intersection exceeding its pair
// bound, or a constructed family pair failing self-validation. The CLI maps
// this to a dedicated exit code, distinct from ordinary usage errors.
class falsification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prodset
