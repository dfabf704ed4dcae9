#ifndef OSCINT_PHASE_HPP
#define OSCINT_PHASE_HPP

#include <functional>
#include <optional>

#include "oscint/levin.hpp"

namespace oscint {

using RealFunction = std::function<double(double)>;

/// Phase g on [a, b] with its derivative and, optionally, its inverse.
struct PhaseSpec {
  RealFunction g;
  RealFunction g_prime;
  std::optional<RealFunction> inverse;
  double a = -1.0;
  double b = 1.0;
};

/// Linear-phase form of integral f(x) exp(i omega g(x)) over [phase.a, phase.b].
struct SubstitutedProblem {
  Amplitude amplitude;  // y -> f(x(y)) / |g'(x(y))|
  double a = 0.0;       // min(g(a), g(b))
  double b = 0.0;       // max(g(a), g(b))
  double omega = 0.0;
};

/// Throws NonMonotonePhase when g' vanishes or changes sign at one of 64
/// Chebyshev points of the bracket.
void check_monotone(const PhaseSpec& phase);

/// Substitutes y = g(x). Uses phase.inverse when present and numeric_inverse
/// otherwise; the latter may throw InversionError during evaluation.
SubstitutedProblem substitute(const Amplitude& f, const PhaseSpec& phase, double omega);

/// x in [a, b] with |g(x) - y| <= 1e-14 (1 + |y|), by bisection with Newton
/// steps. Throws InversionError outside the range of g or after 200 iterations.
double numeric_inverse(const PhaseSpec& phase, double y);

}  // namespace oscint

#endif  // OSCINT_PHASE_HPP
