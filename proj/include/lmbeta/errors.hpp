#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmbeta {

/// A sequence with zero range (max == min) was passed to an operation that
/// needs a nonconstant input.
class ConstantSequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variance-to-squared-range ratio outside (0, 1/4]; such a ratio violates
/// the Popoviciu bound and has no shape-parameter preimage.
class RatioOutOfRangeError : public std::domain_error {
 public:
  explicit RatioOutOfRangeError(double ratio)
      : std::domain_error("ratio " + std::to_string(ratio) +
                          " outside (0, 1/4]"),
        ratio_(ratio) {}
  double ratio() const { return ratio_; }

 private:
  double ratio_;
};

/// A circulant operator with an eigenvalue at or below the singularity
/// tolerance; carries the first offending eigenvalue index.
class SingularOperatorError : public std::runtime_error {
 public:
  SingularOperatorError(std::size_t index, double magnitude)
      : std::runtime_error("circulant operator singular: |eigenvalue[" +
                           std::to_string(index) + "]| = " +
                           std::to_string(magnitude)),
        index_(index),
        magnitude_(magnitude) {}
  std::size_t index() const { return index_; }
  double magnitude() const { return magnitude_; }

 private:
  std::size_t index_;
  double magnitude_;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lmbeta
