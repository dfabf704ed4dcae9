#include "oscint/dense.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "oscint/errors.hpp"

namespace oscint {

ComplexVector dense_solve(ComplexMatrix m, ComplexVector rhs) {
  const std::size_t dim = m.rows();
  if (m.cols() != dim || rhs.size() != dim)
    throw DimensionMismatch("dense_solve: matrix is not square or rhs length differs");

  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pivot = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < dim; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0)
      throw SingularMatrix("dense_solve: singular matrix at column " +
                               std::to_string(k),
                           k);
    if (pivot != k) {
      for (std::size_t j = k; j < dim; ++j) std::swap(m(k, j), m(pivot, j));
      std::swap(rhs[k], rhs[pivot]);
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      const cplx l = m(i, k) / m(k, k);
      if (l == cplx{}) continue;
      for (std::size_t j = k + 1; j < dim; ++j) m(i, j) -= l * m(k, j);
      rhs[i] -= l * rhs[k];
    }
  }

  ComplexVector x(dim);
  for (std::size_t k = dim; k-- > 0;) {
    cplx s = rhs[k];
    for (std::size_t j = k + 1; j < dim; ++j) s -= m(k, j) * x[j];
    x[k] = s / m(k, k);
  }
  return x;
}

}  // namespace oscint
