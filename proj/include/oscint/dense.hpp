#ifndef OSCINT_DENSE_HPP
#define OSCINT_DENSE_HPP

#include <algorithm>
#include <cassert>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace oscint {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Row-major dense matrix. Only used at oracle scale (n of a few hundred).
template <typename T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, static_cast<double>(std::abs(v)));
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<cplx>;

template <typename A, typename B>
auto operator*(const DenseMatrix<A>& lhs, const DenseMatrix<B>& rhs) {
  using R = decltype(A{} * B{});
  assert(lhs.cols() == rhs.rows());
  DenseMatrix<R> out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const R a = lhs(i, k);
      if (a == R{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

template <typename A, typename V>
ComplexVector multiply(const DenseMatrix<A>& m, std::span<const V> x) {
  assert(m.cols() == x.size());
  ComplexVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

template <typename T>
ComplexMatrix to_complex(const DenseMatrix<T>& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// Solves m x = rhs by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix when a pivot column is entirely zero.
ComplexVector dense_solve(ComplexMatrix m, ComplexVector rhs);

}  // namespace oscint

#endif  // OSCINT_DENSE_HPP
