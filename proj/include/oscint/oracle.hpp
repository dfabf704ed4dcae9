#ifndef OSCINT_ORACLE_HPP
#define OSCINT_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oscint/levin.hpp"

namespace oscint {

// Ground-truth engines. None of these share code with the banded pipeline
// beyond the Chebyshev matrices, so they can check it.

/// Dense solve of T (B + i omega E) c = f on the Gauss-Lobatto grid, with f
/// the raw amplitude samples. Limited to n <= 256.
SpectralCoefficients dense_collocation_solve(const IntegralProblem& problem);

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

using Integrand = std::function<cplx(double)>;

/// Adaptive composite Clenshaw-Curtis. The interval is split into panels no
/// wider than `max_panel_width`; a panel is bisected until its 17- and
/// 33-point rules agree to its share of `tol`. Throws AccuracyNotReached
/// once more than 2^20 panels would be needed.
QuadratureResult adaptive_clenshaw_curtis(const Integrand& integrand, double a, double b,
                                          double tol, double max_panel_width);

/// Integral of amplitude(x) exp(i omega x) over [a, b] with panels of width
/// at most pi / (4 |omega|). Requires tol >= 1e-14.
QuadratureResult oscillatory_reference_quadrature(const Amplitude& amplitude, double omega,
                                                  double a, double b, double tol);

struct ExactValue {
  cplx value;
  std::string source;
};

/// One of the seven worked examples, already in linear-phase form:
/// integral over [a, b] of amplitude(alpha)(x) exp(i omega x).
struct Example {
  int id = 0;
  std::string title;
  std::string formula;  // amplitude in expression syntax, alpha left symbolic
  double a = -1.0;
  double b = 1.0;
  bool uses_alpha = false;
  double default_alpha = 0.0;
  std::vector<double> alphas;  // parameter values studied for the example
  std::vector<double> omegas;
  std::function<Amplitude(double alpha)> amplitude;
  std::function<std::optional<ExactValue>(double alpha, double omega)> exact;
};

const std::vector<Example>& builtin_examples();

/// Throws UnknownExample for ids outside 1..7.
const Example& builtin_example(int id);

}  // namespace oscint

#endif  // OSCINT_ORACLE_HPP
