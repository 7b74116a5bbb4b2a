#include "bridgestate/matrix.hpp"

#include <utility>

namespace bridgestate {

bool is_symmetric(const Square<Fraction>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_tridiagonal(const Square<Fraction>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if ((i - j > 1 || j - i > 1) && !m(i, j).is_zero()) return false;
  return true;
}

Inertia symmetric_inertia(Square<Fraction> m) {
  if (!is_symmetric(m)) throw InvalidInput("inertia of a non-symmetric matrix");
  const Eigen::Index n = m.rows();
  Inertia out;
  for (Eigen::Index p = 0; p < n; ++p) {
    if (m(p, p).is_zero()) {
      // Bring a nonzero diagonal entry into place, or manufacture one by
      // adding a row/column with a nonzero off-diagonal entry.
      Eigen::Index q = p + 1;
      while (q < n && m(q, q).is_zero()) ++q;
      if (q < n) {
        m.row(p).swap(m.row(q));
        m.col(p).swap(m.col(q));
      } else {
        q = p + 1;
        while (q < n && m(p, q).is_zero()) ++q;
        if (q == n) {
          ++out.zero;
          continue;
        }
        for (Eigen::Index j = 0; j < n; ++j) m(p, j) += m(q, j);
        for (Eigen::Index i = 0; i < n; ++i) m(i, p) += m(i, q);
      }
    }
    const Fraction pivot = m(p, p);
    (pivot.sign() > 0 ? out.positive : out.negative) += 1;
    for (Eigen::Index i = p + 1; i < n; ++i) {
      if (m(i, p).is_zero()) continue;
      const Fraction f = m(i, p) / pivot;
      for (Eigen::Index j = p; j < n; ++j) m(i, j) -= f * m(p, j);
    }
    for (Eigen::Index i = p + 1; i < n; ++i) m(i, p) = Fraction(0);
    for (Eigen::Index j = p + 1; j < n; ++j) m(p, j) = Fraction(0);
  }
  return out;
}

}  // namespace bridgestate
