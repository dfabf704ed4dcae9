#include "oscint/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>

#include <CLI11.hpp>

#include "oscint/errors.hpp"
#include "oscint/expr.hpp"
#include "oscint/levin.hpp"
#include "oscint/oracle.hpp"
#include "oscint/phase.hpp"

namespace oscint {

namespace {

constexpr double kOracleTolerance = 1e-13;

class UsageError : public Error {
public:
  using Error::Error;
};

std::string format_complex(cplx z) { return format_number(z.real()) + " " + format_number(z.imag()); }

cplx parse_exact(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--exact expects <re,im>, got '" + text + "'");
  const auto read = [&text](std::size_t first, std::size_t last) {
    double v = 0.0;
    const char* b = text.data() + first;
    const char* e = text.data() + last;
    while (b < e && *b == ' ') ++b;
    if (b < e && *b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e || b == e)
      throw UsageError("--exact expects <re,im>, got '" + text + "'");
    return v;
  };
  return {read(0, comma), read(comma + 1, text.size())};
}

Expression parse_flag_expression(const std::string& flag, const std::string& text) {
  try {
    return parse_amplitude(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

RealFunction real_part(Expression e, const char* what) {
  return [e = std::move(e), what](double x) {
    const cplx v = e(x);
    if (v.imag() != 0.0)
      throw Error(std::string(what) + " is not real at x = " + format_number(x));
    return v.real();
  };
}

struct IntegrateOptions {
  std::string amplitude;
  double omega = 0.0;
  int n = 0;
  double a = -1.0;
  double b = 1.0;
  std::string phase;
  std::string phase_derivative;
};

struct ConvergeOptions {
  std::string amplitude;
  int example = 0;
  double omega = 0.0;
  int n_min = 0;
  int n_max = 0;
  int n_step = 1;
  std::string exact;
  std::optional<double> alpha;
};

struct ExampleOptions {
  int id = 0;
  double omega = 0.0;
  std::optional<double> alpha;
  int n = 0;
};

void run_integrate(const IntegrateOptions& o, std::ostream& out) {
  Amplitude amplitude = parse_flag_expression("--amplitude", o.amplitude).as_amplitude();
  const bool has_phase = !o.phase.empty();
  if (has_phase != !o.phase_derivative.empty())
    throw UsageError("--phase and --phase-derivative must be given together");

  double a = o.a;
  double b = o.b;
  double omega = o.omega;
  if (has_phase) {
    PhaseSpec phase;
    phase.g = real_part(parse_flag_expression("--phase", o.phase), "phase");
    phase.g_prime =
        real_part(parse_flag_expression("--phase-derivative", o.phase_derivative), "phase derivative");
    phase.a = a;
    phase.b = b;
    SubstitutedProblem s = substitute(amplitude, phase, omega);
    amplitude = std::move(s.amplitude);
    a = s.a;
    b = s.b;
    omega = s.omega;
  }
  const IntegralResult r = integrate_on_interval(amplitude, omega, a, b, o.n);
  out << format_complex(r.value) << ' ' << to_string(r.path) << ' '
      << format_number(r.residual_norm) << ' ' << r.n_used << '\n';
}

struct Reference {
  cplx value;
  std::string source;
};

Reference oracle_reference(const Amplitude& amplitude, double omega, double a, double b) {
  if (omega == 0.0)
    throw ZeroFrequency("omega = 0: the Levin system is singular without oscillation");
  const QuadratureResult q = oscillatory_reference_quadrature(amplitude, omega, a, b, kOracleTolerance);
  return {q.value, "oracle quadrature (tol 1e-13)"};
}

double resolve_alpha(const Example& ex, const std::optional<double>& alpha) {
  if (!ex.uses_alpha) {
    if (alpha) throw UsageError("example " + std::to_string(ex.id) + " takes no --alpha");
    return 0.0;
  }
  return alpha.value_or(ex.default_alpha);
}

const Example& lookup_example(int id) {
  try {
    return builtin_example(id);
  } catch (const UnknownExample& e) {
    throw UsageError(e.what());
  }
}

void run_converge(const ConvergeOptions& o, std::ostream& out) {
  if ((o.example != 0) == !o.amplitude.empty())
    throw UsageError("converge needs exactly one of --amplitude and --example");
  if (o.n_min < 2 || o.n_max < o.n_min || o.n_step < 1)
    throw UsageError("converge needs 2 <= n-min <= n-max and n-step >= 1");

  Amplitude amplitude;
  double a = -1.0;
  double b = 1.0;
  std::optional<Reference> reference;
  if (!o.exact.empty()) reference = Reference{parse_exact(o.exact), "--exact"};

  if (o.example != 0) {
    const Example& ex = lookup_example(o.example);
    const double alpha = resolve_alpha(ex, o.alpha);
    amplitude = ex.amplitude(alpha);
    a = ex.a;
    b = ex.b;
    if (!reference)
      if (const auto exact = ex.exact(alpha, o.omega)) reference = Reference{exact->value, exact->source};
  } else {
    if (o.alpha) throw UsageError("--alpha applies only to --example");
    amplitude = parse_flag_expression("--amplitude", o.amplitude).as_amplitude();
  }
  if (!reference) reference = oracle_reference(amplitude, o.omega, a, b);

  std::string text = "n,abs_error,real,imag,path\n";
  for (int n = o.n_min; n <= o.n_max; n += o.n_step) {
    const IntegralResult r = integrate_on_interval(amplitude, o.omega, a, b, n);
    text += std::to_string(n) + ',' + format_number(std::abs(r.value - reference->value)) + ',' +
            format_number(r.value.real()) + ',' + format_number(r.value.imag()) + ',' +
            std::string(to_string(r.path)) + '\n';
    if (o.n_max - n < o.n_step) break;
  }
  out << text;
}

void run_example(const ExampleOptions& o, std::ostream& out) {
  const Example& ex = lookup_example(o.id);
  const double alpha = resolve_alpha(ex, o.alpha);
  const Amplitude amplitude = ex.amplitude(alpha);
  const IntegralResult r = integrate_on_interval(amplitude, o.omega, ex.a, ex.b, o.n);

  std::string text = "example " + std::to_string(ex.id) + ": " + ex.title + '\n';
  text += "amplitude " + ex.formula;
  if (ex.uses_alpha) text += " with alpha = " + format_number(alpha);
  text += "\ninterval " + format_number(ex.a) + ' ' + format_number(ex.b) + '\n';
  text += "value " + format_complex(r.value) + '\n';
  if (const auto exact = ex.exact(alpha, o.omega)) {
    text += "exact " + format_complex(exact->value) + " (" + exact->source + ")\n";
    text += "abs_error " + format_number(std::abs(r.value - exact->value)) + '\n';
  } else {
    const Reference ref = oracle_reference(amplitude, o.omega, ex.a, ex.b);
    text += "reference " + format_complex(ref.value) + " (" + ref.source + ")\n";
    text += "abs_error " + format_number(std::abs(r.value - ref.value)) + '\n';
  }
  text += "path " + std::string(to_string(r.path)) + " n " + std::to_string(r.n_used) +
          " residual " + format_number(r.residual_norm) + '\n';
  out << text;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 40> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillatory integrals of f(x) exp(i omega x) by Chebyshev collocation", "oscint"};
  app.require_subcommand(1);

  IntegrateOptions io;
  auto* integrate = app.add_subcommand("integrate", "integrate one amplitude");
  integrate->add_option("--amplitude", io.amplitude, "amplitude expression in x")->required();
  integrate->add_option("--omega", io.omega, "frequency")->required();
  integrate->add_option("--n", io.n, "collocation degree")->required();
  integrate->add_option("--a", io.a, "lower limit")->capture_default_str();
  integrate->add_option("--b", io.b, "upper limit")->capture_default_str();
  integrate->add_option("--phase", io.phase, "monotone phase g(x)");
  integrate->add_option("--phase-derivative", io.phase_derivative, "g'(x)");

  ConvergeOptions co;
  auto* converge = app.add_subcommand("converge", "CSV of the error against n");
  converge->add_option("--amplitude", co.amplitude, "amplitude expression in x");
  converge->add_option("--example", co.example, "built-in example id")->check(CLI::Range(1, 7));
  converge->add_option("--omega", co.omega, "frequency")->required();
  converge->add_option("--n-min", co.n_min, "first degree")->required();
  converge->add_option("--n-max", co.n_max, "last degree")->required();
  converge->add_option("--n-step", co.n_step, "degree increment")->capture_default_str();
  converge->add_option("--exact", co.exact, "reference value re,im");
  converge->add_option("--alpha", co.alpha, "example parameter");

  ExampleOptions eo;
  auto* example = app.add_subcommand("example", "run a built-in example");
  example->add_option("id", eo.id, "example id (1..7)")->required();
  example->add_option("--omega", eo.omega, "frequency")->required();
  example->add_option("--alpha", eo.alpha, "example parameter");
  example->add_option("--n", eo.n, "collocation degree")->required();

  std::vector<std::string> argv_storage{"oscint"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (integrate->parsed()) run_integrate(io, out);
    if (converge->parsed()) run_converge(co, out);
    if (example->parsed()) {
      if (eo.id < 1 || eo.id > 7)
        throw UsageError("unknown example " + std::to_string(eo.id) + " (valid ids are 1..7)");
      run_example(eo, out);
    }
  } catch (const UsageError& e) {
    err << "oscint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "oscint: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitOk;
}

}  // namespace oscint
