#pragma once

#include <stdexcept>
#include <string>

namespace ndt {

// Malformed input: out-of-range ids, loops, bad parameters, parse errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters fall in a case no polynomial algorithm here covers (d > k for
// branching decompositions).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force search refused because the instance exceeds the oracle budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ndt
