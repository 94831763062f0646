#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace isogr {

// Thrown when an operand violates a mathematical precondition: wrong shape,
// a matrix that should be skew but is not, a point outside the coordinate
// chart it is being read in, a map evaluated on its base locus, and so on.
// The `kind` tag is a short machine-readable label ("base_locus", "not_skew",
// "singular", ...) that the CLI copies into its error object.
class math_error : public std::runtime_error {
 public:
  math_error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Thrown when a request itself is malformed (unknown option values, indices
// out of the supported range, unparseable payloads).  The CLI maps this to
// exit code 2, as opposed to math_error which maps to exit code 1.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isogr
