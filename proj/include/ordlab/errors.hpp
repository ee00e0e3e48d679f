#ifndef ORDLAB_ERRORS_HPP_
#define ORDLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ordlab {

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedPresentation : std::runtime_error {
  explicit UnsupportedPresentation(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Querying the sign of the identity element of an order.
struct IdentitySign : std::logic_error {
  IdentitySign() : std::logic_error("sign of identity element requested") {}
};

// A tri-valued backend returned "unknown" where a definite answer was needed.
struct UnknownValue : std::runtime_error {
  explicit UnknownValue(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ordlab

#endif  // ORDLAB_ERRORS_HPP_
