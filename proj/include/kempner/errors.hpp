#ifndef KEMPNER_ERRORS_HPP
#define KEMPNER_ERRORS_HPP

#include <stdexcept>

namespace kempner {

// Raised when a requested computation would exceed the configured memory or
// accumulator capacity (CLI maps this to exit code 3).  Precondition and
// usage violations use std::invalid_argument / std::domain_error (exit 2).
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kempner

#endif  // KEMPNER_ERRORS_HPP
