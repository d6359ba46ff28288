#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace szeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity contradicts an identity that must hold, e.g. a zeta
// coefficient that is not an integer.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace szeta
