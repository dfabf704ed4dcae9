#ifndef OSCINT_TESTS_SUPPORT_HPP
#define OSCINT_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "oscint/banded.hpp"
#include "oscint/dense.hpp"

namespace oscint::testing {

inline constexpr cplx I{0.0, 1.0};

inline double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline double max_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

/// sum c_k T_k(x) by the Clenshaw recurrence.
inline cplx clenshaw(std::span<const cplx> c, double x) {
  cplx b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const cplx b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + (c.empty() ? cplx{} : c[0]);
}

/// Derivative series coefficients by the backward recurrence
/// d_{k-1} = d_{k+1} + 2 k c_k, with d_0 halved at the end.
inline std::vector<cplx> derivative_coefficients(std::span<const cplx> c) {
  const std::size_t n = c.size();
  std::vector<cplx> d(n + 1, 0.0);
  for (std::size_t k = n; k-- > 1;) d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * c[k];
  d[0] *= 0.5;
  d.resize(n);
  return d;
}

inline cplx random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

inline std::vector<cplx> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = random_complex(rng, scale);
  return v;
}

inline BandedMatrix random_banded(std::mt19937_64& rng, std::size_t dim, std::size_t kl,
                                  std::size_t ku, double diagonal_boost = 0.0) {
  BandedMatrix m(dim, kl, ku);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (m.in_band(i, j)) m.at(i, j) = random_complex(rng) + (i == j ? diagonal_boost : 0.0);
  return m;
}

inline ComplexMatrix conjugate_transpose(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

/// Dense A = B + i omega E, with B filled from the derivative recurrence
/// column by column, then Q R A with R = diag(2, 1, ...) and Q = I - S^2.
inline ComplexMatrix dense_preconditioned_operator(double omega, int n) {
  const auto dim = static_cast<std::size_t>(n) + 1;
  ComplexMatrix a(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<cplx> unit(dim, 0.0);
    unit[j] = 1.0;
    const auto d = derivative_coefficients(unit);
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = d[i];
    a(j, j) += I * omega;
  }
  ComplexMatrix qr(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    qr(i, i) = (i == 0) ? 2.0 : 1.0;
    if (i + 2 < dim) qr(i, i + 2) = -1.0;
  }
  return qr * a;
}

}  // namespace oscint::testing

#endif  // OSCINT_TESTS_SUPPORT_HPP
