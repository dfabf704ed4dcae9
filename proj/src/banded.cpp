#include "oscint/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "oscint/errors.hpp"

namespace oscint {

BandedMatrix::BandedMatrix(std::size_t dim, std::size_t lower,
                           std::size_t upper)
    : dim_(dim), lower_(lower), upper_(upper) {
  if (dim == 0) throw DimensionMismatch("BandedMatrix: dimension must be >= 1");
  if (lower >= dim && lower != 0)
    throw DimensionMismatch("BandedMatrix: lower bandwidth must be < dim");
  if (upper >= dim && upper != 0)
    throw DimensionMismatch("BandedMatrix: upper bandwidth must be < dim");
  bands_.reserve(lower + upper + 1);
  for (std::size_t b = 0; b < lower + upper + 1; ++b) {
    const std::size_t offset = b > lower ? b - lower : lower - b;
    bands_.emplace_back(dim - offset);
  }
}

cplx& BandedMatrix::at(std::size_t i, std::size_t j) {
  if (!in_band(i, j))
    throw std::out_of_range("BandedMatrix: entry (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") is outside the band");
  return bands_[index(i, j)][i < j ? i : j];
}

std::span<cplx> BandedMatrix::diagonal(std::ptrdiff_t offset) {
  if (offset < -static_cast<std::ptrdiff_t>(lower_) ||
      offset > static_cast<std::ptrdiff_t>(upper_))
    throw std::out_of_range("BandedMatrix: diagonal outside the band");
  return bands_[static_cast<std::size_t>(offset + static_cast<std::ptrdiff_t>(lower_))];
}

std::span<const cplx> BandedMatrix::diagonal(std::ptrdiff_t offset) const {
  return const_cast<BandedMatrix*>(this)->diagonal(offset);
}

ComplexVector BandedMatrix::multiply(std::span<const cplx> x) const {
  if (x.size() != dim_)
    throw DimensionMismatch("BandedMatrix::multiply: vector length differs");
  ComplexVector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t first = i > lower_ ? i - lower_ : 0;
    const std::size_t last = std::min(dim_ - 1, i + upper_);
    cplx s = 0.0;
    for (std::size_t j = first; j <= last; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix BandedMatrix::to_dense() const {
  ComplexMatrix d(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) d(i, j) = (*this)(i, j);
  return d;
}

double BandedMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& band : bands_)
    for (const auto& v : band) m = std::max(m, std::abs(v));
  return m;
}

bool BandedMatrix::is_hermitian(double tol) const {
  if (lower_ != upper_) return false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (std::abs((*this)(i, i).imag()) > tol) return false;
    for (std::size_t j = i + 1; j <= std::min(dim_ - 1, i + upper_); ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  }
  return true;
}

ComplexVector upper_triangular_backsolve(const BandedMatrix& m,
                                         std::span<const cplx> rhs,
                                         OpCounter* counter) {
  if (m.lower() != 0)
    throw DimensionMismatch("upper_triangular_backsolve: matrix has subdiagonals");
  const std::size_t dim = m.dim();
  if (rhs.size() != dim)
    throw DimensionMismatch("upper_triangular_backsolve: rhs length differs");

  const std::size_t ku = m.upper();
  const auto diag = m.diagonal(0);
  ComplexVector x(dim);
  std::uint64_t ops = 0;
  for (std::size_t k = dim; k-- > 0;) {
    if (std::abs(diag[k]) < kSingularThreshold)
      throw SingularMatrix("upper_triangular_backsolve: zero diagonal at row " +
                               std::to_string(k),
                           k);
    cplx s = rhs[k];
    const std::size_t last = std::min(dim - 1, k + ku);
    for (std::size_t j = k + 1; j <= last; ++j) {
      s -= m.diagonal(static_cast<std::ptrdiff_t>(j - k))[k] * x[j];
      ++ops;
    }
    x[k] = s / diag[k];
    ++ops;
  }
  if (counter) counter->add(ops);
  return x;
}

LUFactors banded_lu_partial_pivot(const BandedMatrix& m, OpCounter* counter) {
  const std::size_t dim = m.dim();
  const std::size_t kl = m.lower();
  const std::size_t ku = std::min(dim - 1, m.lower() + m.upper());

  BandedMatrix a(dim, kl, ku);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t first = i > kl ? i - kl : 0;
    const std::size_t last = std::min(dim - 1, i + m.upper());
    for (std::size_t j = first; j <= last; ++j) a.at(i, j) = m(i, j);
  }

  std::vector<std::size_t> pivots(dim);
  std::uint64_t ops = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t last_row = std::min(dim - 1, k + kl);
    const std::size_t last_col = std::min(dim - 1, k + ku);

    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best < kSingularThreshold)
      throw SingularMatrix("banded_lu_partial_pivot: singular at column " +
                               std::to_string(k),
                           k);
    pivots[k] = p;
    if (p != k)
      for (std::size_t j = k; j <= last_col; ++j) std::swap(a.at(k, j), a.at(p, j));

    const cplx pivot = a(k, k);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const cplx l = a(i, k) / pivot;
      ++ops;
      a.at(i, k) = l;
      for (std::size_t j = k + 1; j <= last_col; ++j) {
        a.at(i, j) -= l * a(k, j);
        ++ops;
      }
    }
  }
  if (counter) counter->add(ops);
  return LUFactors(std::move(a), std::move(pivots), kl);
}

ComplexVector lu_solve(const LUFactors& factors, std::span<const cplx> rhs,
                       OpCounter* counter) {
  const std::size_t dim = factors.dim();
  if (rhs.size() != dim)
    throw DimensionMismatch("lu_solve: rhs length differs from factor dimension");
  const BandedMatrix& a = factors.storage();
  const std::size_t kl = factors.lower();
  const std::size_t ku = a.upper();
  const auto& pivots = factors.pivots();

  ComplexVector b(rhs.begin(), rhs.end());
  std::uint64_t ops = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (pivots[k] != k) std::swap(b[k], b[pivots[k]]);
    const std::size_t last_row = std::min(dim - 1, k + kl);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      b[i] -= a(i, k) * b[k];
      ++ops;
    }
  }
  for (std::size_t k = dim; k-- > 0;) {
    cplx s = b[k];
    const std::size_t last = std::min(dim - 1, k + ku);
    for (std::size_t j = k + 1; j <= last; ++j) {
      s -= a(k, j) * b[j];
      ++ops;
    }
    b[k] = s / a(k, k);
    ++ops;
  }
  if (counter) counter->add(ops);
  return b;
}

NormalSystem normal_system(const BandedMatrix& g, std::span<const cplx> rhs) {
  if (g.lower() != 0)
    throw DimensionMismatch("normal_system: expected an upper-banded matrix");
  const std::size_t dim = g.dim();
  if (rhs.size() != dim)
    throw DimensionMismatch("normal_system: rhs length differs");
  const std::size_t ku = g.upper();

  // (G^H G)_ij = sum_k conj(G_ki) G_kj, with max(i,j) - ku <= k <= min(i,j).
  BandedMatrix h(dim, ku, ku);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j <= std::min(dim - 1, i + ku); ++j) {
      const std::size_t first = j > ku ? j - ku : 0;
      cplx s = 0.0;
      for (std::size_t k = first; k <= i; ++k) s += std::conj(g(k, i)) * g(k, j);
      if (i == j) {
        h.at(i, i) = s.real();
      } else {
        h.at(i, j) = s;
        h.at(j, i) = std::conj(s);
      }
    }
  }

  ComplexVector y(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t first = i > ku ? i - ku : 0;
    cplx s = 0.0;
    for (std::size_t k = first; k <= i; ++k) s += std::conj(g(k, i)) * rhs[k];
    y[i] = s;
  }
  return {std::move(h), std::move(y)};
}

double residual_inf_norm(const BandedMatrix& m, std::span<const cplx> x,
                         std::span<const cplx> rhs) {
  if (rhs.size() != m.dim())
    throw DimensionMismatch("residual_inf_norm: rhs length differs");
  const ComplexVector mx = m.multiply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < mx.size(); ++i) r = std::max(r, std::abs(mx[i] - rhs[i]));
  return r;
}

}  // namespace oscint
