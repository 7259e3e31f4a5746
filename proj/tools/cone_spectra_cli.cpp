// cone-spectra: command-line front end for the cone_spectra library.
//
// Exit codes: 0 success, 1 numerical failure or failed validation,
// 2 input error, 3 geometry failure, 4 ambiguous negative spectrum,
// 5 oracle disagreement.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cone_spectra/asymptotics.hpp"
#include "cone_spectra/error.hpp"
#include "cone_spectra/serialization.hpp"

namespace cs = cone_spectra;

namespace {

struct Config {
  std::string spec;
  std::string in;
  std::string out;
  std::optional<std::size_t> n;
  double emin = 1e-12;
  double emax = 1e-4;
  int per_decade = 6;
  std::string model = "layer-D";
  std::string bc = "D";
  double L = 0.0;
  double delta = 0.0;
  double b = 1.0;
  std::uint64_t seed = 7;
  std::string format = "json";
  bool quick = false;
};

int exit_code(cs::ErrorKind kind) {
  using K = cs::ErrorKind;
  switch (kind) {
    case K::InvalidInput:
    case K::WindowOverlap:
      return 2;
    case K::NonRegularCurve:
    case K::NonInjectiveCurve:
    case K::FrameIdentityViolated:
    case K::OrientationAmbiguous:
      return 3;
    case K::NearZeroEigenvalue:
    case K::Unconverged:
      return 4;
    case K::OracleDisagreement:
    case K::WallTooClose:
      return 5;
    default:
      return 1;
  }
}

void require_power_of_two(std::size_t n) {
  if (n < 64 || !cs::is_power_of_two(n)) {
    throw cs::Error(cs::ErrorKind::InvalidInput, "--n must be a power of two >= 64");
  }
}

// What an input argument resolved to.
struct Input {
  std::optional<cs::CurveSpec> curve;
  std::optional<cs::CurvatureProfile> profile;
  std::optional<cs::SpectrumResult> spectrum;
};

Input load_input(const Config& c) {
  if (c.spec.empty() == c.in.empty()) {
    throw cs::Error(cs::ErrorKind::InvalidInput, "give exactly one of --spec and --in");
  }
  const std::string text = c.spec.empty() ? cs::read_text_file(c.in) : c.spec;
  const auto first = text.find_first_not_of(" \t\r\n");
  Input input;
  if (first != std::string::npos && text[first] == '{') {
    if (text.find("\"eigenvalues\"") != std::string::npos) {
      input.spectrum = cs::spectrum_from_json(text);
    } else {
      input.curve = cs::parse_curve_spec(text);
    }
  } else {
    input.profile = cs::profile_from_csv(text);
  }
  return input;
}

std::string kind_name(const cs::CurveSpec& spec) {
  if (const auto* s = std::get_if<cs::SphericalLoop>(&spec)) {
    if (std::holds_alternative<cs::CircleLoop>(s->kind())) return "circle";
    if (std::holds_alternative<cs::FourierLoop>(s->kind())) return "fourier";
    return "samples";
  }
  return "synthetic";
}

cs::SpectrumResult spectrum_of(const Input& input, std::size_t n) {
  if (input.spectrum) return *input.spectrum;
  if (input.profile) {
    // A single sampled grid: pair it with every other node for Richardson.
    return cs::eigenvalues(cs::halve(*input.profile), *input.profile);
  }
  require_power_of_two(n);
  if (const auto* loop = std::get_if<cs::SphericalLoop>(&*input.curve)) {
    const cs::CurveGeometry geom(*loop);
    geom.validate();
    return cs::compute_spectrum([&](std::size_t m) { return geom.curvature_profile(m); }, n);
  }
  const auto& synth = std::get<cs::SyntheticSpec>(*input.curve);
  return cs::compute_spectrum([&](std::size_t m) { return cs::synthetic_profile(synth, m); }, n);
}

void emit(const Config& c, const std::string& json, const std::string& csv, const char* csv_ext = ".csv",
          const char* json_ext = ".json") {
  if (!c.out.empty()) {
    cs::write_file_atomic(c.out + json_ext, json);
    if (!csv.empty()) cs::write_file_atomic(c.out + csv_ext, csv);
  }
  std::cout << (c.format == "csv" && !csv.empty() ? csv : json);
}

int cmd_curve(const Config& c) {
  const std::size_t n = c.n.value_or(1024);
  require_power_of_two(n);
  const Input input = load_input(c);
  if (!input.curve) throw cs::Error(cs::ErrorKind::InvalidInput, "curve expects a curve spec");
  cs::CurveSummary summary;
  summary.kind = kind_name(*input.curve);
  summary.n = n;
  cs::CurvatureProfile profile;
  if (const auto* loop = std::get_if<cs::SphericalLoop>(&*input.curve)) {
    const cs::CurveGeometry geom(*loop);
    geom.validate();
    profile = geom.curvature_profile(n);
    summary.area = geom.enclosed_area();
  } else {
    profile = cs::synthetic_profile(std::get<cs::SyntheticSpec>(*input.curve), n);
  }
  summary.length = profile.length;
  summary.integral_kappa = cs::integrate_kappa(profile);
  if (summary.area) {
    summary.gauss_bonnet_residual = summary.integral_kappa + *summary.area - 2.0 * std::numbers::pi;
  }
  emit(c, cs::curve_summary_to_json(summary), cs::profile_to_csv(profile));
  return 0;
}

std::string eigen_csv(const cs::SpectrumResult& s) {
  std::ostringstream out;
  out.precision(17);
  out << "# schema=" << cs::kSchemaMajor << "\nj,eigenvalue,error\n";
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    out << j + 1 << ',' << s.eigenvalues[j] << ',' << s.richardson_error[j] << '\n';
  }
  return out.str();
}

int cmd_ks(const Config& c) {
  const Input input = load_input(c);
  const auto spectrum = spectrum_of(input, c.n.value_or(2048));
  const auto ks = cs::accumulation_constant(spectrum);
  std::vector<std::string> warnings;
  if (ks.vanishing_curvature) {
    warnings.emplace_back("kappa vanishes identically: the cross-section is a great circle (planar cone)");
    std::cerr << "warning: " << warnings.back() << '\n';
  }
  emit(c, cs::spectrum_to_json(spectrum, ks, warnings), eigen_csv(spectrum));
  return 0;
}

int cmd_count(const Config& c) {
  const Input input = load_input(c);
  const auto spectrum = spectrum_of(input, c.n.value_or(2048));
  const auto grid = cs::log_energy_grid(c.emin, c.emax, c.per_decade);
  std::vector<cs::HalfLineOperatorSpec> modes;
  if (c.model == "layer-D") {
    modes = cs::layer_modes(spectrum, cs::BoundaryCondition::Dirichlet, c.b, 1.0);
  } else if (c.model == "layer-N") {
    modes = cs::layer_modes(spectrum, cs::BoundaryCondition::Neumann, -c.b, 1.0);
  } else {
    modes = cs::delta_modes(spectrum, c.delta);
  }
  const auto curve = cs::counting_curve(modes, grid);

  // Every oscillation count is re-derived from the finite-element inertia.
  for (const auto& row : curve.rows) {
    for (const auto& m : modes) {
      const long ode = cs::count_below(m, row.E).count;
      const long mat = cs::count_below_matrix_auto(m, row.E).count;
      if (std::abs(ode - mat) > 1) {
        throw cs::Error(cs::ErrorKind::OracleDisagreement,
                        "E = " + std::to_string(row.E) + ", a = " + std::to_string(m.a) + ": oscillation count " +
                            std::to_string(ode) + " vs matrix count " + std::to_string(mat));
      }
    }
  }
  const auto ks = cs::accumulation_constant(spectrum);
  emit(c, cs::slope_to_json(curve, c.model, ks.k_S), cs::counting_to_csv(curve));
  return 0;
}

int cmd_model1d(const Config& c) {
  const cs::IntervalDeltaSpec spec{c.L, cs::parse_boundary_condition(c.bc)};
  const auto result = c.n ? cs::solve_finite_difference(spec, *c.n) : cs::solve_transcendental(spec);
  emit(c, cs::model_to_json(spec, result), "");
  return 0;
}

int cmd_validate(const Config& c) {
  cs::SuiteOptions options;
  options.quick = c.quick;
  options.seed = c.seed;
  options.n = c.n.value_or(c.quick ? 256 : 2048);
  require_power_of_two(options.n);
  const auto reports = cs::run_validation_suite(options);
  if (!c.out.empty()) {
    cs::write_file_atomic(c.out + ".jsonl", cs::reports_to_jsonl(reports));
    cs::write_file_atomic(c.out + ".csv", cs::reports_to_csv(reports));
  }
  for (const auto& r : reports) {
    std::size_t failed = 0, inconclusive = 0;
    for (const auto& m : r.measured) {
      failed += m.status == cs::CheckStatus::Fail;
      inconclusive += m.status == cs::CheckStatus::Inconclusive;
    }
    std::printf("%-28s %-13s %4zu measurements, %zu failed, %zu inconclusive\n", r.check.c_str(),
                std::string(cs::to_string(r.status)).c_str(), r.measured.size(), failed, inconclusive);
  }
  return cs::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature-induced spectra of conical surfaces"};
  app.require_subcommand(1);
  Config c;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--spec", c.spec, "Inline JSON curve spec");
    sub->add_option("--in", c.in, "Curve spec JSON, profile CSV, or spectrum JSON file");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output stem; extensions are appended");
    sub->add_option("--format", c.format, "What to print on stdout")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_n = [&](CLI::App* sub, const char* what) { sub->add_option("--n", c.n, what); };

  auto* curve = app.add_subcommand("curve", "Curvature profile and geometry summary");
  add_input(curve);
  add_output(curve);
  add_n(curve, "Profile grid size (power of two, default 1024)");

  auto* ks = app.add_subcommand("ks", "Spectrum of K_S and the accumulation constant k_S");
  add_input(ks);
  add_output(ks);
  add_n(ks, "Coarse grid of the Richardson pair (default 2048)");

  auto* count = app.add_subcommand("count", "Counting curve of a reduced model and its log slope");
  add_input(count);
  add_output(count);
  add_n(count, "Coarse grid of the Richardson pair (default 2048)");
  count->add_option("--model", c.model, "layer-D, layer-N or delta")
      ->check(CLI::IsMember({"layer-D", "layer-N", "delta"}));
  count->add_option("--emin", c.emin, "Smallest E (default 1e-12)");
  count->add_option("--emax", c.emax, "Largest E (default 1e-4)");
  count->add_option("--per-decade", c.per_decade, "E points per decade (default 6)");
  count->add_option("--b", c.b, "Magnitude of the 1/rho^3 coefficient for layer models (default 1)");
  count->add_option("--delta", c.delta, "Shift parameter of the delta model, in [0, 0.1]");

  auto* model = app.add_subcommand("model1d", "Two lowest eigenvalues of the interval delta model");
  add_output(model);
  model->add_option("--L", c.L, "Half-length of the interval")->required();
  model->add_option("--bc", c.bc, "D or N (default D)");
  add_n(model, "Use finite differences on this many intervals instead of the matching equation");

  auto* validate = app.add_subcommand("validate", "Run the validation suite");
  add_output(validate);
  add_n(validate, "Coarse K_S grid (default 2048, 256 with --quick)");
  validate->add_option("--seed", c.seed, "Seed for random loops and specs (default 7)");
  validate->add_flag("--quick", c.quick, "Reduced grids and sample counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*curve) return cmd_curve(c);
    if (*ks) return cmd_ks(c);
    if (*count) return cmd_count(c);
    if (*model) return cmd_model1d(c);
    if (*validate) return cmd_validate(c);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
