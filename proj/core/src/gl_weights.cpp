#include "fracvar/gl_weights.hpp"

#include "fracvar/errors.hpp"

namespace fracvar {

GLWeights::GLWeights(FractionalOrder alpha, std::size_t m) : alpha_(alpha) {
  w_.reserve(m + 1);
  w_.push_back(1.0);
  extend(m);
}

double GLWeights::operator[](std::size_t k) const {
  if (k >= w_.size()) throw InvalidArgument("GL weight index out of range");
  return w_[k];
}

void GLWeights::extend(std::size_t m) {
  const double alpha = alpha_.value();
  w_.reserve(m + 1);
  for (std::size_t k = w_.size(); k <= m; ++k) {
    w_.push_back(w_.back() * (1.0 - (alpha + 1.0) / static_cast<double>(k)));
  }
}

GLWeights gl_weights(FractionalOrder alpha, std::size_t m) {
  return GLWeights(alpha, m);
}

}  // namespace fracvar
