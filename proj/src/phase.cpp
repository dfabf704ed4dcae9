#include "oscint/phase.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

constexpr int kProbePoints = 64;
constexpr int kMaxIterations = 200;

void check_bracket(const PhaseSpec& phase) {
  if (!(phase.a < phase.b) || !std::isfinite(phase.a) || !std::isfinite(phase.b))
    throw InvalidInterval("phase bracket needs finite a < b");
  if (!phase.g || !phase.g_prime) throw Error("phase needs both g and g_prime");
}

}  // namespace

void check_monotone(const PhaseSpec& phase) {
  check_bracket(phase);
  const double half = 0.5 * (phase.b - phase.a);
  const double mid = 0.5 * (phase.b + phase.a);
  int sign = 0;
  for (int k = 0; k < kProbePoints; ++k) {
    const double t = std::cos(std::numbers::pi * (k + 0.5) / kProbePoints);
    const double x = mid + half * t;
    const double d = phase.g_prime(x);
    if (!(std::abs(d) > 0.0) || !std::isfinite(d))
      throw NonMonotonePhase("phase derivative vanishes at x = " + std::to_string(x));
    const int s = d > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign)
      throw NonMonotonePhase("phase derivative changes sign near x = " + std::to_string(x));
    sign = s;
  }
}

double numeric_inverse(const PhaseSpec& phase, double y) {
  check_bracket(phase);
  double lo = phase.a;
  double hi = phase.b;
  double g_lo = phase.g(lo) - y;
  double g_hi = phase.g(hi) - y;
  const double tol = 1e-14 * (1.0 + std::abs(y));
  if (std::abs(g_lo) <= tol) return lo;
  if (std::abs(g_hi) <= tol) return hi;
  if ((g_lo > 0.0) == (g_hi > 0.0))
    throw InversionError("y = " + std::to_string(y) + " is outside the range of the phase");

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double r = phase.g(x) - y;
    if (std::abs(r) <= tol) return x;
    if ((r > 0.0) == (g_lo > 0.0)) {
      lo = x;
      g_lo = r;
    } else {
      hi = x;
    }
    const double d = phase.g_prime(x);
    double next = x - r / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) {
      // The bracket has collapsed to adjacent doubles.
      if (std::abs(phase.g(x) - y) <= 4.0 * tol) return x;
      break;
    }
    x = next;
  }
  throw InversionError("numeric inversion of the phase did not converge for y = " +
                       std::to_string(y));
}

SubstitutedProblem substitute(const Amplitude& f, const PhaseSpec& phase, double omega) {
  check_monotone(phase);
  const double ga = phase.g(phase.a);
  const double gb = phase.g(phase.b);
  SubstitutedProblem out;
  out.a = std::min(ga, gb);
  out.b = std::max(ga, gb);
  out.omega = omega;
  if (phase.inverse) {
    out.amplitude = [f, g_prime = phase.g_prime, inv = *phase.inverse](double y) {
      const double x = inv(y);
      return f(x) / std::abs(g_prime(x));
    };
  } else {
    out.amplitude = [f, phase](double y) {
      const double x = numeric_inverse(phase, y);
      return f(x) / std::abs(phase.g_prime(x));
    };
  }
  return out;
}

}  // namespace oscint
