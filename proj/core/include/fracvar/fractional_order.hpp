#pragma once

#include "fracvar/errors.hpp"

namespace fracvar {

/// Order of a fractional derivative, restricted to the open interval (0, 1).
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw InvalidArgument("fractional order must lie strictly inside (0, 1)");
    }
  }

  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

}  // namespace fracvar
