#ifndef LOWZERO_ERRORS_HPP
#define LOWZERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lowzero {

// Invalid argument for the mathematical domain of an operation.
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Request exceeds a table or loop budget (sieve limit, N*D cap, ...).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested accuracy was not reached; carries the achieved estimate.
struct precision_error : std::runtime_error {
  precision_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

}  // namespace lowzero

#endif
