#include "bridgestate/state_matrix.hpp"
#include "bridgestate/errors.hpp"

#include <string>

namespace bridgestate {

StateMatrix standard_state_matrix(const Expansion& e) {
  require_valid(e);
  const auto k = static_cast<Eigen::Index>(e.size());
  StateMatrix v = StateMatrix::Constant(k, k, Fraction(0));
  for (Eigen::Index i = 0; i < k; ++i) {
    const std::int64_t n = e.terms[static_cast<std::size_t>(i)];
    v(i, i) = frac(i % 2 == 0 ? n : -n, 2);
    if (i + 1 < k) v(i + 1, i) = Fraction(1);
  }
  return v;
}

GLMatrix gl_matrix(const StateMatrix& v) {
  if (v.rows() != v.cols()) throw InvalidInput("state matrix must be square");
  GLMatrix g = GLMatrix::Constant(v.rows(), v.cols(), Fraction(0));
  for (Eigen::Index j = 0; j < v.cols(); ++j)
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (v(i, j).is_zero()) continue;
      g(i, j) += v(i, j);
      g(j, i) += v(i, j);
    }
  return g;
}

StateMatrix flip_normal(const StateMatrix& v, Eigen::Index i) {
  if (i < 0 || i + 1 >= v.rows())
    throw InvalidInput("flip_normal index " + std::to_string(i) + " out of range for size " + std::to_string(v.rows()));
  StateMatrix out = v;
  std::swap(out(i, i + 1), out(i + 1, i));
  return out;
}

StateMatrix flip_orientation(const StateMatrix& v, Eigen::Index i) {
  if (i < 0 || i >= v.rows())
    throw InvalidInput("flip_orientation index " + std::to_string(i) + " out of range for size " + std::to_string(v.rows()));
  StateMatrix out = v;
  for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = -out(i, j);
  for (Eigen::Index j = 0; j < out.rows(); ++j) out(j, i) = -out(j, i);
  return out;
}

bool has_state_support(const StateMatrix& v) {
  if (v.rows() != v.cols() || !is_tridiagonal(v)) return false;
  for (Eigen::Index i = 0; i + 1 < v.rows(); ++i) {
    const Fraction& up = v(i, i + 1);
    const Fraction& down = v(i + 1, i);
    const bool up_unit = up.abs() == Fraction(1);
    const bool down_unit = down.abs() == Fraction(1);
    if (!((up_unit && down.is_zero()) || (down_unit && up.is_zero()))) return false;
  }
  return true;
}

}  // namespace bridgestate
