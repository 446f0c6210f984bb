#pragma once

#include <stdexcept>

namespace etapt {

/// Truncated number-state basis |0>..|dim-1>. `buffer` is the number of
/// boundary states excluded from interior identity comparisons.
class FockSpace {
 public:
  explicit FockSpace(int dim, int buffer = 8) : dim_(dim), buffer_(buffer) {
    if (dim_ < 8) {
      throw std::invalid_argument("FockSpace: dim must be >= 8");
    }
    if (buffer_ < 0 || 2 * buffer_ >= dim_) {
      throw std::invalid_argument("FockSpace: require 0 <= buffer < dim/2");
    }
  }

  int dim() const noexcept { return dim_; }
  int buffer() const noexcept { return buffer_; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int dim_;
  int buffer_;
};

}  // namespace etapt
