#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

/// Invalid configuration (context digits below floor, unknown constant name, ...).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid parameter (odd subinterval count, non-positive width, ...).
class parameter_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required table entry or cached value is missing.
class dependency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested digits cannot be delivered by the available anchors.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cross-checked internal identity failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed on-disk data.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscint
