#include "oscint/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oscint/errors.hpp"

namespace oscint {

double SpectralCoefficients::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool SpectralCoefficients::all_finite() const {
  for (const auto& v : c_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ChebyshevGrid ChebyshevGrid::gauss_lobatto(int n) {
  if (n < 1)
    throw InvalidDegree("Gauss-Lobatto grid needs degree n >= 1, got " +
                        std::to_string(n));
  const auto count = static_cast<std::size_t>(n) + 1;
  std::vector<double> x(count);
  // Fill the upper half, then reflect so that x[k] == -x[n-k] exactly.
  for (std::size_t k = 0; 2 * k < count; ++k)
    x[k] = std::cos(std::numbers::pi * static_cast<double>(k) / n);
  x[0] = 1.0;
  for (std::size_t k = 0; 2 * k < count; ++k) x[count - 1 - k] = -x[k];
  if (n % 2 == 0) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return ChebyshevGrid(n, std::move(x));
}

ChebyshevGrid gauss_lobatto_nodes(int n) { return ChebyshevGrid::gauss_lobatto(n); }

RealMatrix transform_matrix(const ChebyshevGrid& grid) {
  const std::size_t dim = grid.size();
  RealMatrix t(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double x = grid[j];
    t(j, 0) = 1.0;
    if (dim > 1) t(j, 1) = x;
    for (std::size_t k = 1; k + 1 < dim; ++k) t(j, k + 1) = 2.0 * x * t(j, k) - t(j, k - 1);
  }
  return t;
}

RealMatrix physical_diff_matrix(const ChebyshevGrid& grid) {
  const std::size_t dim = grid.size();
  const auto weight = [dim](std::size_t k) { return (k == 0 || k + 1 == dim) ? 2.0 : 1.0; };
  RealMatrix d(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
      d(k, j) = weight(k) / weight(j) * sign / (grid[k] - grid[j]);
      row_sum += d(k, j);
    }
    d(k, k) = -row_sum;
  }
  return d;
}

BandedMatrix spectral_diff_matrix(int n) {
  if (n < 1)
    throw InvalidDegree("spectral_diff_matrix needs n >= 1, got " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(n) + 1;
  BandedMatrix b(dim, 0, dim - 1);
  for (std::size_t i = 0; i < dim; ++i) {
    const double r = (i == 0) ? 2.0 : 1.0;
    for (std::size_t j = i + 1; j < dim; j += 2) b.at(i, j) = 2.0 * static_cast<double>(j) / r;
  }
  return b;
}

ComplexVector forward_coefficients(std::span<const cplx> values,
                                   const ChebyshevGrid& grid) {
  if (values.size() != grid.size())
    throw DimensionMismatch("forward_coefficients: " + std::to_string(values.size()) +
                            " samples for a grid of " + std::to_string(grid.size()) +
                            " nodes");
  const auto n = static_cast<std::size_t>(grid.degree());
  const std::size_t period = 2 * n;

  // T_j(x_k) = cos(pi j k / n) = table[(j k) mod 2n], with the table built
  // symmetric so that repeated angles produce bit-identical values.
  std::vector<double> table(period);
  for (std::size_t m = 0; 2 * m <= n; ++m)
    table[m] = std::cos(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  table[0] = 1.0;
  if (n % 2 == 0) table[n / 2] = 0.0;
  for (std::size_t m = 0; 2 * m < n; ++m) table[n - m] = -table[m];
  for (std::size_t m = 1; m < n; ++m) table[period - m] = table[m];

  ComplexVector weighted(values.begin(), values.end());
  weighted.front() *= 0.5;
  weighted.back() *= 0.5;

  ComplexVector a(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    cplx s = 0.0;
    std::size_t idx = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      s += table[idx] * weighted[k];
      idx += j;
      if (idx >= period) idx -= period;
    }
    const double w = (j == 0 || j == n) ? 1.0 : 2.0;
    a[j] = s * (w / static_cast<double>(n));
  }
  return a;
}

std::pair<cplx, cplx> endpoint_values(std::span<const cplx> c) {
  cplx at_plus = 0.0;
  cplx at_minus = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    at_plus += c[j];
    at_minus += (j % 2 == 0) ? c[j] : -c[j];
  }
  return {at_plus, at_minus};
}

}  // namespace oscint
