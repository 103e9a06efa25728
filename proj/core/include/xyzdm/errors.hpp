#pragma once

#include <stdexcept>
#include <string>

namespace xyzdm {

// Bad user input: malformed config, unknown keys, out-of-range knobs.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical invariant broke: non-Hermitian input, negative eigenvalue
// beyond clip tolerance, Jacobi non-convergence. The CLI maps this to exit
// code 2. Seeing one of these means the library has been handed something
// outside its contract or has a bug; it is never part of normal control flow.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyzdm
