#ifndef OSCINT_LEVIN_HPP
#define OSCINT_LEVIN_HPP

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "oscint/banded.hpp"
#include "oscint/chebyshev.hpp"

namespace oscint {

/// Slowly varying factor f(x) of the integrand f(x) exp(i omega x).
using Amplitude = std::function<cplx(double)>;

enum class SolvePath {
  direct_triangular,     // back-substitution on G, used when |omega| > n
  normal_equations,      // pivoted banded LU on G^H G, used otherwise
  reference_quadrature,  // non-oscillatory fallback of integrate_on_interval
};

std::string_view to_string(SolvePath path);

/// Integral of amplitude(x) exp(i omega x) over [-1, 1] with a degree-n
/// Chebyshev antiderivative.
struct IntegralProblem {
  Amplitude amplitude;
  double omega = 0.0;
  int n = 0;
};

struct IntegralResult {
  cplx value;
  SolvePath path = SolvePath::direct_triangular;
  int n_used = 0;
  /// Infinity norm of G c - rhs. For the quadrature fallback this holds the
  /// quadrature's error estimate instead.
  double residual_norm = 0.0;
};

struct CoefficientSolution {
  SpectralCoefficients coefficients;
  SolvePath path = SolvePath::direct_triangular;
  double residual_norm = 0.0;
};

/// Throws ZeroFrequency for omega == 0 and InvalidDegree for n < 2.
void validate(const IntegralProblem& problem);

/// direct_triangular iff |omega| > n.
SolvePath select_path(double omega, int n);

/// The collocation system (B + i omega E) c = a, with a the interpolation
/// coefficients of the amplitude, left-multiplied by Q R, where
/// R = diag(2, 1, ..., 1) and Q = I - S^2 (S the shift). The identity
/// r_k d_k - d_{k+2} = 2 (k+1) c_{k+1} between a series and its derivative
/// leaves three diagonals:
///
///   G(k, k)   = 2 i omega (k = 0), i omega (k > 0)
///   G(k, k+1) = 2 (k + 1)
///   G(k, k+2) = -i omega
BandedMatrix assemble_levin_matrix(double omega, int n);

/// Q R a: entry k is r_k a_k - a_{k+2}.
ComplexVector precondition_rhs(std::span<const cplx> interpolation_coefficients);

/// Samples the amplitude on the grid; throws SamplingError on a non-finite value.
ComplexVector sample_amplitude(const Amplitude& amplitude, const ChebyshevGrid& grid);

/// Right-hand side of G c = rhs for the problem's amplitude.
ComplexVector assemble_rhs(const IntegralProblem& problem, const ChebyshevGrid& grid);

/// Solves G c = Q R a given the interpolation coefficients a (length n + 1).
/// `force` overrides the |omega| > n path rule.
CoefficientSolution solve_from_coefficients(double omega,
                                            std::span<const cplx> interpolation_coefficients,
                                            std::optional<SolvePath> force = std::nullopt,
                                            OpCounter* counter = nullptr);

CoefficientSolution solve_coefficients(const IntegralProblem& problem,
                                       std::optional<SolvePath> force = std::nullopt);

/// p(1) exp(i omega) - p(-1) exp(-i omega).
cplx antiderivative_difference(std::span<const cplx> c, double omega);

IntegralResult integrate_standard(const IntegralProblem& problem,
                                  std::optional<SolvePath> force = std::nullopt);

/// Integral over [a, b], mapped onto [-1, 1]. Falls back to the reference
/// quadrature when 0 < |omega (b - a) / 2| < 1e-14.
IntegralResult integrate_on_interval(const Amplitude& amplitude, double omega,
                                     double a, double b, int n,
                                     std::optional<SolvePath> force = std::nullopt);

}  // namespace oscint

#endif  // OSCINT_LEVIN_HPP
