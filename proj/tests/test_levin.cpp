#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscint/errors.hpp"
#include "oscint/levin.hpp"
#include "oscint/oracle.hpp"
#include "support.hpp"

using namespace oscint;
using oscint::testing::clenshaw;
using oscint::testing::dense_preconditioned_operator;
using oscint::testing::derivative_coefficients;
using oscint::testing::I;
using oscint::testing::max_abs;
using oscint::testing::max_diff;
using oscint::testing::random_vector;

namespace {

Amplitude reciprocal_shift() {
  return [](double x) { return cplx(1.0 / (x + 2.0)); };
}

Amplitude constant(cplx v) {
  return [v](double) { return v; };
}

}  // namespace

TEST(LevinMatrix, SmallCasePattern) {
  const auto g = assemble_levin_matrix(5.0, 2);
  EXPECT_EQ(g.lower(), 0u);
  EXPECT_EQ(g.upper(), 2u);
  EXPECT_EQ(g(0, 0), 10.0 * I);
  EXPECT_EQ(g(0, 1), cplx(2.0));
  EXPECT_EQ(g(0, 2), -5.0 * I);
  EXPECT_EQ(g(1, 1), 5.0 * I);
  EXPECT_EQ(g(1, 2), cplx(4.0));
  EXPECT_EQ(g(2, 2), 5.0 * I);
  EXPECT_EQ(g(1, 0), cplx{});
}

TEST(LevinMatrix, LastRowHasOnlyTheDiagonal) {
  const auto g = assemble_levin_matrix(7.0, 9);
  for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(g(9, j), cplx{});
  EXPECT_EQ(g(9, 9), 7.0 * I);
}

TEST(LevinMatrix, EqualsDensePreconditionedOperator) {
  for (int n = 2; n <= 16; ++n)
    for (double omega : {-3.0, 0.5, 20.0}) {
      const auto dense = dense_preconditioned_operator(omega, n);
      const auto g = assemble_levin_matrix(omega, n).to_dense();
      double err = 0.0;
      for (std::size_t i = 0; i < dense.rows(); ++i)
        for (std::size_t j = 0; j < dense.cols(); ++j) err = std::max(err, std::abs(g(i, j) - dense(i, j)));
      EXPECT_LT(err, 1e-12) << "n=" << n << " omega=" << omega;
    }
}

TEST(LevinMatrix, RejectsBadInput) {
  EXPECT_THROW(assemble_levin_matrix(0.0, 8), ZeroFrequency);
  EXPECT_THROW(assemble_levin_matrix(1.0, 1), InvalidDegree);
}

TEST(Rhs, ConstantAndSquare) {
  const auto grid = ChebyshevGrid::gauss_lobatto(4);
  const auto one = assemble_rhs({constant(1.0), 3.0, 4}, grid);
  EXPECT_LT(max_diff(one, std::vector<cplx>{2.0, 0, 0, 0, 0}), 1e-15);
  const auto sq = assemble_rhs({[](double x) { return cplx(x * x); }, 3.0, 4}, grid);
  EXPECT_LT(max_diff(sq, std::vector<cplx>{0.5, 0, 0.5, 0, 0}), 1e-15);
}

TEST(Rhs, MatchesDenseAssembly) {
  std::mt19937_64 rng(21);
  const int n = 11;
  const auto grid = ChebyshevGrid::gauss_lobatto(n);
  const auto p = random_vector(rng, grid.size());
  const Amplitude f = [&p](double x) { return clenshaw(p, x); };
  // Q R p: the interpolant of a degree-n polynomial is the polynomial itself.
  std::vector<cplx> want(grid.size());
  for (std::size_t k = 0; k < want.size(); ++k)
    want[k] = (k == 0 ? 2.0 : 1.0) * p[k] - (k + 2 < want.size() ? p[k + 2] : cplx{});
  EXPECT_LT(max_diff(assemble_rhs({f, 2.0, n}, grid), want), 1e-12);
}

TEST(Solve, ConstantAmplitudeGivesConstantAntiderivative) {
  for (double omega : {0.3, 3.0, -50.0}) {
    const auto s = solve_coefficients({constant(I * omega), omega, 4});
    EXPECT_LT(max_diff(s.coefficients, std::vector<cplx>{1, 0, 0, 0, 0}), 1e-14) << omega;
  }
}

TEST(Solve, PathRule) {
  EXPECT_EQ(select_path(8.5, 8), SolvePath::direct_triangular);
  EXPECT_EQ(select_path(-9.0, 8), SolvePath::direct_triangular);
  EXPECT_EQ(select_path(8.0, 8), SolvePath::normal_equations);
  EXPECT_EQ(select_path(0.1, 30), SolvePath::normal_equations);
  EXPECT_EQ(solve_coefficients({reciprocal_shift(), 20.0, 8}).path, SolvePath::direct_triangular);
  EXPECT_EQ(solve_coefficients({reciprocal_shift(), 5.0, 8}).path, SolvePath::normal_equations);
}

TEST(Solve, ForcedPathsAgreeWhenOmegaExceedsN) {
  const IntegralProblem problem{reciprocal_shift(), 20.0, 8};
  const auto direct = solve_coefficients(problem, SolvePath::direct_triangular);
  const auto normal = solve_coefficients(problem, SolvePath::normal_equations);
  EXPECT_LT(max_diff(direct.coefficients, normal.coefficients), 1e-10);
}

TEST(Solve, NormalRegimeMatchesExactAntiderivative) {
  // f = p' + i omega p with p of degree 19; the collocation solution is p.
  std::mt19937_64 rng(22);
  const double omega = 3.0;
  const int n = 20;
  auto p = random_vector(rng, static_cast<std::size_t>(n));
  const auto dp = derivative_coefficients(p);
  std::vector<cplx> f_coeffs(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) f_coeffs[k] = dp[k] + I * omega * p[k];
  const Amplitude f = [&f_coeffs](double x) { return clenshaw(f_coeffs, x); };
  const auto s = solve_coefficients({f, omega, n});
  p.push_back(0.0);
  EXPECT_EQ(s.path, SolvePath::normal_equations);
  EXPECT_LT(max_diff(s.coefficients, p), 1e-9);
  const auto dense = dense_collocation_solve({f, omega, n});
  EXPECT_LT(max_diff(dense, p), 1e-9);
}

TEST(Integrate, ConstantClosedForm) {
  const auto r = integrate_standard({constant(3.0 * I), 3.0, 4});
  EXPECT_LT(std::abs(r.value - cplx(0.0, 0.2822400161197344)), 1e-15);
  EXPECT_LT(std::abs(r.value - 2.0 * I * std::sin(3.0)), 1e-15);
}

TEST(Integrate, ReciprocalShiftTableRows) {
  const auto r1 = integrate_standard({reciprocal_shift(), 1.0, 30});
  EXPECT_LT(std::abs(r1.value - cplx(0.9113301035062809891, -0.1775799622517861791)), 1e-12);
  const auto r10 = integrate_standard({reciprocal_shift(), 10.0, 30});
  EXPECT_LT(std::abs(r10.value - cplx(-0.07854759997855625023, -0.04871911238563061052)), 1e-12);
}

TEST(Integrate, ExactForResolvablePolynomials) {
  std::mt19937_64 rng(23);
  for (double omega : {2.0, 40.0}) {
    const int n = 12;
    const auto p = random_vector(rng, static_cast<std::size_t>(n));
    const auto dp = derivative_coefficients(p);
    std::vector<cplx> f_coeffs(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) f_coeffs[k] = dp[k] + I * omega * p[k];
    const Amplitude f = [&f_coeffs](double x) { return clenshaw(f_coeffs, x); };
    const cplx want = clenshaw(p, 1.0) * std::exp(I * omega) - clenshaw(p, -1.0) * std::exp(-I * omega);
    EXPECT_LT(std::abs(integrate_standard({f, omega, n}).value - want), 1e-12) << omega;
  }
}

TEST(Integrate, Linearity) {
  const Amplitude f = [](double x) { return cplx(std::exp(x)); };
  const Amplitude g = [](double x) { return cplx(std::cos(3.0 * x), x); };
  const cplx alpha(0.5, -2.0), beta(-1.5, 0.25);
  const Amplitude h = [&](double x) { return alpha * f(x) + beta * g(x); };
  for (int n : {16, 40}) {
    const double omega = 7.0;
    const cplx lhs = integrate_standard({h, omega, n}).value;
    const cplx rhs = alpha * integrate_standard({f, omega, n}).value +
                     beta * integrate_standard({g, omega, n}).value;
    EXPECT_LT(std::abs(lhs - rhs), 1e-11);
  }
}

TEST(Integrate, ConjugationSymmetry) {
  for (double omega : {1.0, 10.0, 50.0, 100.0}) {
    const cplx plus = integrate_standard({reciprocal_shift(), omega, 30}).value;
    const cplx minus = integrate_standard({reciprocal_shift(), -omega, 30}).value;
    EXPECT_LT(std::abs(minus - std::conj(plus)), 1e-12) << omega;
  }
}

TEST(Integrate, PathEquivalence) {
  for (double omega : {25.0, 100.0, 1000.0}) {
    const IntegralProblem problem{reciprocal_shift(), omega, 24};
    const cplx d = integrate_standard(problem, SolvePath::direct_triangular).value;
    const cplx m = integrate_standard(problem, SolvePath::normal_equations).value;
    EXPECT_LT(std::abs(d - m), 1e-10) << omega;
  }
}

TEST(Integrate, ConvergesByThirtyTwoPoints) {
  for (double omega : {1.0, 10.0, 50.0, 100.0}) {
    const cplx ref = oscillatory_reference_quadrature(reciprocal_shift(), omega, -1.0, 1.0, 1e-13).value;
    double prev = INFINITY;
    for (int n : {8, 16, 24, 32}) {
      const double err = std::abs(integrate_standard({reciprocal_shift(), omega, n}).value - ref);
      if (prev > 1e-12) {
        EXPECT_LT(err, prev) << "omega=" << omega << " n=" << n;
      }
      prev = err;
    }
    EXPECT_LE(prev, 1e-12) << omega;
  }
}

TEST(Integrate, CoefficientsShrinkWithFrequency) {
  const double c100 = solve_coefficients({reciprocal_shift(), 100.0, 30}).coefficients.max_abs();
  const double c1000 = solve_coefficients({reciprocal_shift(), 1000.0, 30}).coefficients.max_abs();
  EXPECT_LE(c1000, c100);
}

TEST(Integrate, ResidualIsFinite) {
  for (double omega : {0.5, 5.0, 500.0}) {
    const auto r = integrate_standard({reciprocal_shift(), omega, 40});
    EXPECT_TRUE(std::isfinite(r.residual_norm));
    EXPECT_EQ(r.n_used, 40);
    EXPECT_EQ(r.path == SolvePath::direct_triangular, std::abs(omega) > 40);
  }
}

TEST(Interval, StandardIntervalIsIdentity) {
  const auto a = integrate_standard({reciprocal_shift(), 10.0, 30});
  const auto b = integrate_on_interval(reciprocal_shift(), 10.0, -1.0, 1.0, 30);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.path, b.path);
}

TEST(Interval, ExponentialOverHalfPeriod) {
  const auto r = integrate_on_interval(constant(1.0), 1.0, 0.0, std::numbers::pi, 8);
  EXPECT_LT(std::abs(r.value - cplx(0.0, 2.0)), 1e-13);
}

TEST(Interval, SubstitutedSineTableRow) {
  const Amplitude f = [](double y) {
    const double s = std::asin(y) - 0.25;
    return cplx(1.0 / (std::sqrt(1.0 - y * y) * (s * s + 1.0)));
  };
  const auto r = integrate_on_interval(f, 10.0, -std::sin(0.75), std::sin(1.25), 90);
  EXPECT_LT(std::abs(r.value - cplx(0.00266714972608754, 0.180595659138141)), 1e-10);
}

TEST(Interval, Errors) {
  EXPECT_THROW(integrate_on_interval(constant(1.0), 1.0, 1.0, 1.0, 8), InvalidInterval);
  EXPECT_THROW(integrate_on_interval(constant(1.0), 1.0, 2.0, 1.0, 8), InvalidInterval);
  EXPECT_THROW(integrate_on_interval(constant(1.0), 0.0, -1.0, 1.0, 8), ZeroFrequency);
  EXPECT_THROW(integrate_standard({constant(1.0), 0.0, 8}), ZeroFrequency);
  EXPECT_THROW(integrate_standard({constant(1.0), 1.0, 1}), InvalidDegree);
}

TEST(Interval, TinyScaledFrequencyFallsBackToQuadrature) {
  const auto r = integrate_on_interval([](double x) { return cplx(x * x); }, 1e-15, -1.0, 1.0, 8);
  EXPECT_EQ(r.path, SolvePath::reference_quadrature);
  EXPECT_LT(std::abs(r.value - 2.0 / 3.0), 1e-13);
}

TEST(Interval, SamplingErrorReportsMappedLocation) {
  const Amplitude f = [](double x) { return cplx(1.0 / (x - 3.0)); };
  try {
    integrate_on_interval(f, 5.0, 1.0, 3.0, 8);
    FAIL();
  } catch (const SamplingError& e) {
    EXPECT_DOUBLE_EQ(e.location(), 3.0);
  }
}
