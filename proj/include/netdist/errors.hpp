#pragma once

#include <stdexcept>

namespace netdist {

// Unreadable or malformed input (files, numbers). The CLI maps this to exit 2.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: size mismatch, parameter out of range, infeasible
// request. The CLI maps this to exit 3.
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical machinery gave up (eigensolver non-convergence, root bracket not
// found). The CLI maps this to exit 4.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netdist
