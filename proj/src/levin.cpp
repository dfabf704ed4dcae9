#include "oscint/levin.hpp"

#include <cmath>
#include <string>

#include "oscint/errors.hpp"
#include "oscint/oracle.hpp"

namespace oscint {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr int kRefinementSteps = 1;

void check_frequency(double omega) {
  if (omega == 0.0)
    throw ZeroFrequency(
        "omega = 0: the Levin system is singular without oscillation; "
        "use a non-oscillatory quadrature");
  if (!std::isfinite(omega)) throw Error("omega must be finite");
}

void check_degree(int n) {
  if (n < 2)
    throw InvalidDegree("collocation degree must be n >= 2, got " + std::to_string(n));
}

}  // namespace

std::string_view to_string(SolvePath path) {
  switch (path) {
    case SolvePath::direct_triangular: return "direct_triangular";
    case SolvePath::normal_equations: return "normal_equations";
    case SolvePath::reference_quadrature: return "reference_quadrature";
  }
  return "unknown";
}

void validate(const IntegralProblem& problem) {
  check_frequency(problem.omega);
  check_degree(problem.n);
  if (!problem.amplitude) throw Error("integral problem has no amplitude");
}

SolvePath select_path(double omega, int n) {
  return std::abs(omega) > static_cast<double>(n) ? SolvePath::direct_triangular
                                                  : SolvePath::normal_equations;
}

BandedMatrix assemble_levin_matrix(double omega, int n) {
  check_frequency(omega);
  check_degree(n);
  const auto dim = static_cast<std::size_t>(n) + 1;
  BandedMatrix g(dim, 0, 2);
  auto diag = g.diagonal(0);
  auto first = g.diagonal(1);
  auto second = g.diagonal(2);
  for (std::size_t k = 0; k < dim; ++k) diag[k] = kI * omega;
  diag[0] *= 2.0;
  for (std::size_t k = 0; k + 1 < dim; ++k) first[k] = 2.0 * static_cast<double>(k + 1);
  for (std::size_t k = 0; k + 2 < dim; ++k) second[k] = -kI * omega;
  return g;
}

ComplexVector precondition_rhs(std::span<const cplx> a) {
  ComplexVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const cplx lead = (k == 0) ? 2.0 * a[k] : a[k];
    r[k] = (k + 2 < a.size()) ? lead - a[k + 2] : lead;
  }
  return r;
}

ComplexVector sample_amplitude(const Amplitude& amplitude, const ChebyshevGrid& grid) {
  ComplexVector values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx v = amplitude(grid[k]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw SamplingError("amplitude is not finite at x = " + std::to_string(grid[k]),
                          grid[k]);
    values[k] = v;
  }
  return values;
}

ComplexVector assemble_rhs(const IntegralProblem& problem, const ChebyshevGrid& grid) {
  if (grid.degree() != problem.n)
    throw DimensionMismatch("assemble_rhs: grid degree differs from problem degree");
  const ComplexVector samples = sample_amplitude(problem.amplitude, grid);
  return precondition_rhs(forward_coefficients(samples, grid));
}

CoefficientSolution solve_from_coefficients(double omega,
                                            std::span<const cplx> coefficients,
                                            std::optional<SolvePath> force,
                                            OpCounter* counter) {
  if (coefficients.size() < 3)
    throw InvalidDegree("solve_from_coefficients: need at least 3 coefficients");
  const int n = static_cast<int>(coefficients.size()) - 1;
  const BandedMatrix g = assemble_levin_matrix(omega, n);
  const ComplexVector rhs = precondition_rhs(coefficients);

  CoefficientSolution out;
  out.path = force.value_or(select_path(omega, n));
  ComplexVector c;
  switch (out.path) {
    case SolvePath::direct_triangular:
      c = upper_triangular_backsolve(g, rhs, counter);
      break;
    case SolvePath::normal_equations: {
      NormalSystem normal = normal_system(g, rhs);
      const std::size_t dim = normal.matrix.dim();
      std::vector<double> scale(dim);
      for (std::size_t k = 0; k < dim; ++k) scale[k] = 1.0 / std::sqrt(normal.matrix(k, k).real());
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i > normal.matrix.lower() ? i - normal.matrix.lower() : 0;
             j < std::min(dim, i + normal.matrix.upper() + 1); ++j)
          normal.matrix.at(i, j) *= scale[i] * scale[j];
      if (counter) counter->add(5 * dim);
      const LUFactors factors = banded_lu_partial_pivot(normal.matrix, counter);
      auto scaled_solve = [&](ComplexVector b) {
        for (std::size_t k = 0; k < dim; ++k) b[k] *= scale[k];
        ComplexVector y = lu_solve(factors, b, counter);
        for (std::size_t k = 0; k < dim; ++k) y[k] *= scale[k];
        if (counter) counter->add(2 * dim);
        return y;
      };
      c = scaled_solve(normal.rhs);
      for (int step = 0; step < kRefinementSteps; ++step) {
        // Residual of the unsquared system, projected back through G^H.
        const ComplexVector gc = g.multiply(c);
        ComplexVector s(rhs.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = rhs[k] - gc[k];
        const ComplexVector update = scaled_solve(normal_system(g, s).rhs);
        if (counter) counter->add(7 * s.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += update[k];
      }
      break;
    }
    case SolvePath::reference_quadrature:
      throw Error("solve_from_coefficients: reference_quadrature is not a linear solve path");
  }
  out.residual_norm = residual_inf_norm(g, c, rhs);
  out.coefficients = SpectralCoefficients(std::move(c));
  return out;
}

CoefficientSolution solve_coefficients(const IntegralProblem& problem,
                                       std::optional<SolvePath> force) {
  validate(problem);
  const ChebyshevGrid grid = ChebyshevGrid::gauss_lobatto(problem.n);
  const ComplexVector samples = sample_amplitude(problem.amplitude, grid);
  return solve_from_coefficients(problem.omega, forward_coefficients(samples, grid), force);
}

cplx antiderivative_difference(std::span<const cplx> c, double omega) {
  const auto [at_plus, at_minus] = endpoint_values(c);
  return at_plus * std::exp(kI * omega) - at_minus * std::exp(-kI * omega);
}

IntegralResult integrate_standard(const IntegralProblem& problem,
                                  std::optional<SolvePath> force) {
  const CoefficientSolution solution = solve_coefficients(problem, force);
  IntegralResult result;
  result.value = antiderivative_difference(solution.coefficients, problem.omega);
  result.path = solution.path;
  result.n_used = problem.n;
  result.residual_norm = solution.residual_norm;
  return result;
}

IntegralResult integrate_on_interval(const Amplitude& amplitude, double omega, double a,
                                     double b, int n, std::optional<SolvePath> force) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidInterval("integration interval needs finite a < b, got [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  check_frequency(omega);
  check_degree(n);

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const double scaled_omega = omega * half;

  if (std::abs(scaled_omega) < 1e-14) {
    const QuadratureResult q = oscillatory_reference_quadrature(amplitude, omega, a, b, 1e-13);
    return {q.value, SolvePath::reference_quadrature, n, q.error_estimate};
  }

  const Amplitude mapped = [&amplitude, half, mid](double t) { return amplitude(half * t + mid); };
  IntegralResult result;
  try {
    result = integrate_standard({mapped, scaled_omega, n}, force);
  } catch (const SamplingError& e) {
    const double x = half * e.location() + mid;
    throw SamplingError("amplitude is not finite at x = " + std::to_string(x), x);
  }
  result.value *= half * std::exp(kI * (omega * mid));
  return result;
}

}  // namespace oscint
