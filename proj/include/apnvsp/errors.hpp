#pragma once

#include <stdexcept>
#include <string>

namespace apnvsp {

/// Malformed input: bad widths, out-of-range values, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A component function whose Walsh magnitudes are not two-valued.
class NotPlateaued : public std::runtime_error {
 public:
  NotPlateaued(const std::string& what, unsigned component)
      : std::runtime_error(what), component_(component) {}
  unsigned component() const noexcept { return component_; }

 private:
  unsigned component_;
};

/// Some difference map D_a has an image that is not an affine hyperplane.
class NotCrooked : public std::runtime_error {
 public:
  NotCrooked(const std::string& what, unsigned direction)
      : std::runtime_error(what), direction_(direction) {}
  unsigned direction() const noexcept { return direction_; }

 private:
  unsigned direction_;
};

/// An internal structural check failed. Valid input never raises this.
class StructureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exponential search ran past its node budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apnvsp
