#pragma once

#include <stdexcept>
#include <string>

namespace jk {

// Malformed user input (bad word syntax, out-of-range generator, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A request the implementation deliberately does not support (e.g. theta
// beyond degree 4).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Mixing objects that live over different (genus, degree) contexts, or
// vectors of different ambient dimension.
class MismatchError : public std::logic_error {
 public:
  explicit MismatchError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jk
