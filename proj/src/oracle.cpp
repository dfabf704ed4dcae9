#include "oscint/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr std::size_t kMaxPanels = std::size_t{1} << 20;

// Clenshaw-Curtis weights on [-1, 1] for nodes cos(pi k / m), m even.
template <std::size_t M>
std::array<double, M + 1> clenshaw_curtis_weights() {
  static_assert(M % 2 == 0);
  std::array<double, M + 1> w{};
  const double m = static_cast<double>(M);
  w[0] = w[M] = 1.0 / (m * m - 1.0);
  for (std::size_t k = 1; k < M; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) / m;
    double v = 1.0;
    for (std::size_t j = 1; j < M / 2; ++j) {
      const double jj = static_cast<double>(j);
      v -= 2.0 * std::cos(2.0 * jj * theta) / (4.0 * jj * jj - 1.0);
    }
    v -= std::cos(m * theta) / (m * m - 1.0);
    w[k] = 2.0 * v / m;
  }
  return w;
}

struct PanelRules {
  std::array<double, 33> nodes{};
  std::array<double, 33> fine = clenshaw_curtis_weights<32>();
  std::array<double, 17> coarse = clenshaw_curtis_weights<16>();

  PanelRules() {
    for (std::size_t k = 0; k <= 32; ++k)
      nodes[k] = std::cos(std::numbers::pi * static_cast<double>(k) / 32.0);
    nodes[16] = 0.0;
  }
};

const PanelRules& panel_rules() {
  static const PanelRules rules;
  return rules;
}

struct PanelEstimate {
  cplx fine;
  cplx coarse;
  double magnitude;  // integral of |f|, for the rounding floor
};

PanelEstimate integrate_panel(const Integrand& f, double left, double right) {
  const PanelRules& rules = panel_rules();
  const double half = 0.5 * (right - left);
  const double mid = 0.5 * (right + left);
  PanelEstimate e{};
  for (std::size_t k = 0; k <= 32; ++k) {
    const cplx v = f(mid + half * rules.nodes[k]);
    e.fine += rules.fine[k] * v;
    e.magnitude += rules.fine[k] * std::abs(v);
    if (k % 2 == 0) e.coarse += rules.coarse[k / 2] * v;
  }
  e.fine *= half;
  e.coarse *= half;
  e.magnitude *= half;
  return e;
}

}  // namespace

SpectralCoefficients dense_collocation_solve(const IntegralProblem& problem) {
  validate(problem);
  if (problem.n > 256)
    throw InvalidDegree("dense_collocation_solve is limited to n <= 256");
  const ChebyshevGrid grid = ChebyshevGrid::gauss_lobatto(problem.n);
  const std::size_t dim = grid.size();

  ComplexMatrix shifted = spectral_diff_matrix(problem.n).to_dense();
  for (std::size_t i = 0; i < dim; ++i) shifted(i, i) += kI * problem.omega;
  ComplexMatrix system = transform_matrix(grid) * shifted;

  return SpectralCoefficients(
      dense_solve(std::move(system), sample_amplitude(problem.amplitude, grid)));
}

QuadratureResult adaptive_clenshaw_curtis(const Integrand& integrand, double a, double b,
                                          double tol, double max_panel_width) {
  if (!(a < b)) throw InvalidInterval("adaptive_clenshaw_curtis: need a < b");
  if (!(max_panel_width > 0.0))
    throw Error("adaptive_clenshaw_curtis: panel width must be positive");

  const double length = b - a;
  const double initial = std::ceil(length / max_panel_width);
  if (!(initial <= static_cast<double>(kMaxPanels))) {
    cplx best;
    double err = 0.0;
    const double step = length / static_cast<double>(kMaxPanels);
    for (std::size_t p = 0; p < kMaxPanels; ++p) {
      const double left = a + step * static_cast<double>(p);
      const double right = (p + 1 == kMaxPanels) ? b : left + step;
      const PanelEstimate e = integrate_panel(integrand, left, right);
      best += e.fine;
      err += std::abs(e.fine - e.coarse);
    }
    throw AccuracyNotReached("adaptive_clenshaw_curtis: oscillation needs more than 2^20 panels",
                             best, err);
  }
  const auto count = static_cast<std::size_t>(std::max(1.0, initial));

  struct Panel {
    double left;
    double right;
  };
  std::vector<Panel> pending;
  pending.reserve(count + 64);
  // Pushed in reverse so that panels are processed left to right.
  for (std::size_t p = count; p-- > 0;) {
    const double left = a + length * static_cast<double>(p) / static_cast<double>(count);
    const double right =
        (p + 1 == count) ? b : a + length * static_cast<double>(p + 1) / static_cast<double>(count);
    pending.push_back({left, right});
  }

  QuadratureResult result;
  std::size_t panels = count;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (!pending.empty()) {
    const Panel panel = pending.back();
    pending.pop_back();
    const PanelEstimate e = integrate_panel(integrand, panel.left, panel.right);
    const double width = panel.right - panel.left;
    const double local_tol = std::max(tol * width / length, 16.0 * eps * e.magnitude);
    const double diff = std::abs(e.fine - e.coarse);
    const double mid = 0.5 * (panel.left + panel.right);
    const bool unsplittable = !(panel.left < mid && mid < panel.right);

    if (diff <= local_tol || unsplittable) {
      result.value += e.fine;
      result.error_estimate += diff;
      continue;
    }
    if (panels + 1 > kMaxPanels) {
      cplx best = result.value + e.fine;
      double err = result.error_estimate + diff;
      for (const Panel& rest : pending) {
        const PanelEstimate r = integrate_panel(integrand, rest.left, rest.right);
        best += r.fine;
        err += std::abs(r.fine - r.coarse);
      }
      throw AccuracyNotReached("adaptive_clenshaw_curtis: refinement budget of 2^20 panels exceeded",
                               best, err);
    }
    ++panels;
    pending.push_back({mid, panel.right});
    pending.push_back({panel.left, mid});
  }
  result.panels = panels;
  return result;
}

QuadratureResult oscillatory_reference_quadrature(const Amplitude& amplitude, double omega,
                                                  double a, double b, double tol) {
  if (!(tol >= 1e-14)) throw Error("oscillatory_reference_quadrature: tol must be >= 1e-14");
  const double width = omega == 0.0 ? (b - a) : std::numbers::pi / (4.0 * std::abs(omega));
  const Integrand integrand = [&amplitude, omega](double x) {
    return amplitude(x) * std::exp(kI * (omega * x));
  };
  return adaptive_clenshaw_curtis(integrand, a, b, tol, width);
}

namespace {

std::optional<ExactValue> lookup(std::span<const std::pair<double, cplx>> table, double omega,
                                 const char* source) {
  for (const auto& [w, v] : table)
    if (w == omega) return ExactValue{v, source};
  return std::nullopt;
}

constexpr std::pair<double, cplx> kReciprocalShiftTable[] = {
    {1.0, {0.9113301035062809891, -0.1775799622517861791}},
    {10.0, {-0.07854759997855625023, -0.04871911238563061052}},
    {50.0, {-0.00665013790168713, 0.0129677770647216}},
    {100.0, {-0.00667389328931381, 0.00580336592710437}},
};

constexpr std::pair<double, cplx> kSinePhaseTable[] = {
    {0.1, {1.5687504317409, 0.0337582105322438}},
    {1.0, {1.3745907842843, 0.305184104407599}},
    {3.0, {0.311077689499021, 0.339612459676631}},
    {10.0, {0.00266714972608754, 0.180595659138141}},
    {30.0, {0.00706973992290492, 0.0455774930833239}},
    {50.0, {-0.00620005944852318, 0.0155933115982172}},
    {100.0, {0.00460104072965418, -0.00790563176002816}},
};

constexpr std::pair<double, cplx> kBellEndpointTable[] = {
    {20.0, {-0.00377795409950960, 0.0}},
    {1000.0, {-2.33519886790130e-7, 0.0}},
};

std::vector<Example> make_examples() {
  std::vector<Example> ex;

  ex.push_back({1, "reciprocal shift", "1/(x+2)", -1.0, 1.0, false, 0.0, {},
                {1.0, 10.0, 50.0, 100.0},
                [](double) -> Amplitude { return [](double x) { return cplx(1.0 / (x + 2.0)); }; },
                [](double, double omega) {
                  return lookup(kReciprocalShiftTable, omega, "table of reference values");
                }});

  // 1/(x^2+1) exp(i omega sin(x + 1/4)) on [-1, 1] after y = sin(x + 1/4).
  ex.push_back({2, "sine phase, substituted",
                "1/(sqrt(1-x^2)*((asin(x)-1/4)^2+1))", -std::sin(0.75), std::sin(1.25), false,
                0.0, {}, {0.1, 1.0, 3.0, 10.0, 30.0, 50.0, 100.0},
                [](double) -> Amplitude {
                  return [](double y) {
                    const double shifted = std::asin(y) - 0.25;
                    return cplx(1.0 / (std::sqrt(1.0 - y * y) * (shifted * shifted + 1.0)));
                  };
                },
                [](double, double omega) {
                  return lookup(kSinePhaseTable, omega, "table of reference values");
                }});

  ex.push_back({3, "exponential", "exp(alpha*(x-1))", -1.0, 1.0, true, 16.0, {16.0, 64.0},
                {20.0, 1000.0},
                [](double alpha) -> Amplitude {
                  return [alpha](double x) { return cplx(std::exp(alpha * (x - 1.0))); };
                },
                [](double alpha, double omega) -> std::optional<ExactValue> {
                  // 2 e^-alpha sinh(alpha + i omega) / (alpha + i omega), without the
                  // overflow of sinh for large alpha.
                  const cplx z{alpha, omega};
                  if (z == cplx{}) return ExactValue{2.0, "closed form"};
                  const cplx v = (std::exp(kI * omega) - std::exp(-2.0 * alpha - kI * omega)) / z;
                  return ExactValue{v, "closed form"};
                }});

  ex.push_back({4, "oscillatory amplitude", "exp(2*pi*i*alpha*x)", -1.0, 1.0, true, 10.0,
                {5.0, 10.0}, {20.0, 1000.0},
                [](double alpha) -> Amplitude {
                  return [alpha](double x) { return std::exp(kI * (2.0 * std::numbers::pi * alpha * x)); };
                },
                [](double alpha, double omega) -> std::optional<ExactValue> {
                  const double w = 2.0 * std::numbers::pi * alpha + omega;
                  if (w == 0.0) return ExactValue{2.0, "closed form"};
                  return ExactValue{2.0 * std::sin(w) / w, "closed form"};
                }});

  ex.push_back({5, "Chebyshev generating function", "(1-alpha^2)/(1-2*alpha*x+alpha^2)", -1.0,
                1.0, true, 0.8, {0.8, 0.9}, {20.0, 1000.0},
                [](double alpha) -> Amplitude {
                  return [alpha](double x) {
                    return cplx((1.0 - alpha * alpha) / (1.0 - 2.0 * alpha * x + alpha * alpha));
                  };
                },
                [](double, double) -> std::optional<ExactValue> { return std::nullopt; }});

  ex.push_back({6, "bell", "1/(x^2+alpha^2)", -1.0, 1.0, true, 0.25, {0.25, 0.125},
                {20.0, 1000.0},
                [](double alpha) -> Amplitude {
                  return [alpha](double x) { return cplx(1.0 / (x * x + alpha * alpha)); };
                },
                [](double, double) -> std::optional<ExactValue> { return std::nullopt; }});

  ex.push_back({7, "endpoint singularity", "(1-x^2)^(3/2)", -1.0, 1.0, false, 0.0, {},
                {20.0, 1000.0},
                [](double) -> Amplitude {
                  return [](double x) {
                    const double s = std::max(0.0, 1.0 - x * x);
                    return cplx(s * std::sqrt(s));
                  };
                },
                [](double, double omega) {
                  return lookup(kBellEndpointTable, omega, "published value");
                }});
  return ex;
}

}  // namespace

const std::vector<Example>& builtin_examples() {
  static const std::vector<Example> examples = make_examples();
  return examples;
}

const Example& builtin_example(int id) {
  const auto& all = builtin_examples();
  if (id < 1 || id > static_cast<int>(all.size()))
    throw UnknownExample("unknown example " + std::to_string(id) + " (valid ids are 1..7)");
  return all[static_cast<std::size_t>(id - 1)];
}

}  // namespace oscint
