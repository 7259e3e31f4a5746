#include "cone_spectra/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cone_spectra/error.hpp"

namespace cone_spectra {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void check_schema(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "expected a JSON object");
  if (j.contains("schema")) {
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaMajor) {
      throw Error(ErrorKind::InvalidInput, "unsupported schema major " + j["schema"].dump());
    }
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' has the wrong type");
  }
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

// Splits comment lines "# key=value" off the front of a CSV document.
std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

CurveSpec parse_curve_spec(std::string_view text) {
  const json j = parse_json(text);
  check_schema(j);
  const auto kind = field<std::string>(j, "kind");
  if (kind == "circle") return SphericalLoop::circle(field<double>(j, "theta"));
  if (kind == "fourier") {
    std::vector<FourierTerm> terms;
    for (const auto& c : field<json>(j, "coeffs")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
        throw Error(ErrorKind::InvalidInput, "fourier coeffs must be [a, b] pairs");
      }
      terms.push_back({c[0].get<double>(), c[1].get<double>()});
    }
    return SphericalLoop::fourier(field<double>(j, "theta0"), std::move(terms));
  }
  if (kind == "samples") {
    std::vector<Vec3> points;
    for (const auto& p : field<json>(j, "points")) {
      if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number()) {
        throw Error(ErrorKind::InvalidInput, "sample points must be [x, y, z]");
      }
      points.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
    }
    return SphericalLoop::samples(std::move(points));
  }
  if (kind == "synthetic") {
    SyntheticSpec s;
    s.length = field<double>(j, "length");
    s.baseline = j.contains("baseline") ? field<double>(j, "baseline") : 0.2;
    const auto w = field<json>(j, "windows");
    s.windows = field<int>(w, "m");
    s.eps = field<double>(w, "eps");
    return s;
  }
  throw Error(ErrorKind::InvalidInput, "unknown curve kind '" + kind + "'");
}

std::string profile_to_csv(const CurvatureProfile& p) {
  std::ostringstream out;
  out.precision(17);
  out << "# schema=" << kSchemaMajor << "\n# length=" << p.length << "\ns,kappa\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << p.node(i) << ',' << p.kappa[i] << '\n';
  return out.str();
}

CurvatureProfile profile_from_csv(std::string_view text) {
  CurvatureProfile p;
  p.source = ProfileSource::Synthetic;
  std::optional<double> length;
  std::vector<double> s;
  bool header = false;
  for (const auto& line : lines_of(text)) {
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string value = line.substr(eq + 1);
      try {
        if (key == "schema" && std::stoi(value) != kSchemaMajor) {
          throw Error(ErrorKind::InvalidInput, "unsupported schema major " + value);
        }
        if (key == "length") length = std::stod(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "bad metadata line: " + line);
      }
      continue;
    }
    if (!header) {
      if (line != "s,kappa") throw Error(ErrorKind::InvalidInput, "profile CSV header must be 's,kappa'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(line);
      s.push_back(std::stod(line.substr(0, comma)));
      p.kappa.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad profile row: " + line);
    }
  }
  if (s.size() < 2) throw Error(ErrorKind::InvalidInput, "profile CSV has fewer than two rows");
  const double h = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
  p.length = length.value_or(s.back() + h);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i] - p.node(i)) > 1e-9 * p.length) {
      throw Error(ErrorKind::InvalidInput, "profile rows must lie on the uniform grid i * length / N");
    }
  }
  if (p.size() < 64 || !is_power_of_two(p.size())) {
    throw Error(ErrorKind::InvalidInput, "profile CSV needs a power-of-two row count >= 64");
  }
  return p;
}

std::string curve_summary_to_json(const CurveSummary& c) {
  json j;
  j["schema"] = kSchemaMajor;
  j["kind"] = c.kind;
  j["length"] = number(c.length);
  j["n"] = c.n;
  j["integral_kappa"] = number(c.integral_kappa);
  j["area"] = c.area ? number(*c.area) : json(nullptr);
  j["gauss_bonnet_residual"] = c.gauss_bonnet_residual ? number(*c.gauss_bonnet_residual) : json(nullptr);
  return dump(j);
}

std::string spectrum_to_json(const SpectrumResult& s, const AccumulationConstant& ks,
                             const std::vector<std::string>& warnings) {
  json j;
  j["schema"] = kSchemaMajor;
  j["length"] = number(s.length);
  j["eigenvalues"] = numbers(s.eigenvalues);
  j["errors"] = numbers(s.richardson_error);
  j["grid_sizes"] = s.grid_sizes;
  j["max_abs_kappa"] = number(s.max_abs_kappa);
  j["k_S"] = number(ks.k_S);
  j["k_S_error"] = number(ks.error);
  j["negative"] = numbers(ks.negative);
  j["threshold"] = ks.threshold;
  j["warnings"] = warnings;
  return dump(j);
}

SpectrumResult spectrum_from_json(std::string_view text) {
  const json j = parse_json(text);
  check_schema(j);
  SpectrumResult s;
  s.length = field<double>(j, "length");
  s.eigenvalues = field<std::vector<double>>(j, "eigenvalues");
  s.richardson_error = j.contains("errors") ? field<std::vector<double>>(j, "errors")
                                            : std::vector<double>(s.eigenvalues.size(), 0.0);
  if (j.contains("grid_sizes")) s.grid_sizes = field<std::vector<std::size_t>>(j, "grid_sizes");
  s.max_abs_kappa = j.contains("max_abs_kappa") ? field<double>(j, "max_abs_kappa") : 1.0;
  if (s.richardson_error.size() != s.eigenvalues.size()) {
    throw Error(ErrorKind::InvalidInput, "eigenvalues and errors differ in length");
  }
  if (!std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end())) {
    throw Error(ErrorKind::InvalidInput, "eigenvalues must be ascending");
  }
  return s;
}

std::string model_to_json(const IntervalDeltaSpec& spec, const ModelSpectrum& m) {
  json j;
  j["schema"] = kSchemaMajor;
  j["L"] = spec.L;
  j["bc"] = std::string(to_string(spec.bc));
  j["lambda1"] = number(m.lambda1);
  j["lambda2"] = number(m.lambda2);
  j["method"] = m.method == ModelMethod::Transcendental ? "transcendental" : "finite_difference";
  j["residual"] = number(m.residual);
  return dump(j);
}

std::string counting_to_csv(const CountingCurve& c) {
  std::ostringstream out;
  out.precision(17);
  out << "# schema=" << kSchemaMajor << "\nE,N,uncertainty\n";
  for (const auto& r : c.rows) out << r.E << ',' << r.N << ',' << to_string(r.uncertainty) << '\n';
  return out.str();
}

std::string slope_to_json(const CountingCurve& c, std::string_view model, double k_S_reference) {
  json j;
  j["schema"] = kSchemaMajor;
  j["model"] = std::string(model);
  j["slope"] = number(c.fit.slope);
  j["intercept"] = number(c.fit.intercept);
  j["residual"] = number(c.fit.residual);
  j["integer_slope"] = number(c.fit.integer_slope);
  j["points"] = c.fit.points;
  j["modes"] = c.modes;
  j["k_S_reference"] = number(k_S_reference);
  return dump(j);
}

std::string reports_to_jsonl(const std::vector<ValidationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    json j;
    j["schema"] = kSchemaMajor;
    j["check"] = r.check;
    j["status"] = std::string(to_string(r.status));
    j["measurements"] = json::array();
    for (const auto& m : r.measured) {
      j["measurements"].push_back({{"name", m.name},
                                   {"value", number(m.value)},
                                   {"reference", number(m.reference)},
                                   {"tolerance", number(m.tolerance)},
                                   {"error", number(m.error)},
                                   {"status", std::string(to_string(m.status))}});
    }
    j["notes"] = r.notes;
    out += j.dump() + "\n";
  }
  return out;
}

std::string reports_to_csv(const std::vector<ValidationReport>& reports) {
  std::ostringstream out;
  out << "# schema=" << kSchemaMajor << "\ncheck,status,measurements,failed,inconclusive\n";
  for (const auto& r : reports) {
    std::size_t failed = 0, inconclusive = 0;
    for (const auto& m : r.measured) {
      failed += m.status == CheckStatus::Fail;
      inconclusive += m.status == CheckStatus::Inconclusive;
    }
    out << r.check << ',' << to_string(r.status) << ',' << r.measured.size() << ',' << failed << ','
        << inconclusive << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::InvalidInput, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::InvalidInput, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace cone_spectra
