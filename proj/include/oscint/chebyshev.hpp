#ifndef OSCINT_CHEBYSHEV_HPP
#define OSCINT_CHEBYSHEV_HPP

#include <span>
#include <utility>
#include <vector>

#include "oscint/banded.hpp"
#include "oscint/dense.hpp"

namespace oscint {

/// Chebyshev extreme points x_k = cos(pi k / n), k = 0..n, in descending order.
class ChebyshevGrid {
public:
  /// Throws InvalidDegree for n < 1.
  static ChebyshevGrid gauss_lobatto(int n);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double operator[](std::size_t k) const noexcept { return nodes_[k]; }

private:
  ChebyshevGrid(int degree, std::vector<double> nodes)
      : degree_(degree), nodes_(std::move(nodes)) {}

  int degree_;
  std::vector<double> nodes_;
};

/// Coefficients c_0..c_n of a Chebyshev series sum c_k T_k(x).
class SpectralCoefficients {
public:
  SpectralCoefficients() = default;
  explicit SpectralCoefficients(ComplexVector c) : c_(std::move(c)) {}

  std::size_t size() const noexcept { return c_.size(); }
  const cplx& operator[](std::size_t k) const noexcept { return c_[k]; }
  std::span<const cplx> values() const noexcept { return c_; }
  operator std::span<const cplx>() const noexcept { return c_; }
  double max_abs() const;
  bool all_finite() const;

private:
  ComplexVector c_;
};

ChebyshevGrid gauss_lobatto_nodes(int n);

/// T(j, k) = T_k(x_j), filled by the three-term recurrence.
RealMatrix transform_matrix(const ChebyshevGrid& grid);

/// Collocation derivative on the grid; the diagonal is minus the row sum of
/// the off-diagonal entries.
RealMatrix physical_diff_matrix(const ChebyshevGrid& grid);

/// Maps series coefficients to the coefficients of the derivative series:
/// B(i, j) = 2 j / r_i for j > i with i + j odd, r_0 = 2, r_i = 1 otherwise.
/// Strictly upper triangular, stored with upper bandwidth n.
BandedMatrix spectral_diff_matrix(int n);

/// Chebyshev coefficients of the polynomial interpolating `values` at the
/// grid nodes: a_j = (w_j / n) sum'' T_j(x_k) f(x_k), with w_0 = w_n = 1 and
/// w_j = 2 otherwise; sum'' halves the k = 0 and k = n terms.
ComplexVector forward_coefficients(std::span<const cplx> values,
                                   const ChebyshevGrid& grid);

/// (p(1), p(-1)) for p = sum c_j T_j.
std::pair<cplx, cplx> endpoint_values(std::span<const cplx> c);

}  // namespace oscint

#endif  // OSCINT_CHEBYSHEV_HPP
