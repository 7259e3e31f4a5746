#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cone_spectra/asymptotics.hpp"
#include "cone_spectra/cross_section_operator.hpp"
#include "cone_spectra/point_interaction.hpp"
#include "cone_spectra/radial_counting.hpp"
#include "cone_spectra/sphere_curves.hpp"

namespace cone_spectra {

inline constexpr int kSchemaMajor = 1;

/// Parsed curve description: a loop on the sphere or a prescribed profile.
using CurveSpec = std::variant<SphericalLoop, SyntheticSpec>;

/// Accepts {"kind": "circle" | "fourier" | "samples" | "synthetic", ...}.
/// An optional "schema" field must equal 1. Throws InvalidInput.
CurveSpec parse_curve_spec(std::string_view json);

/// Profile CSV: "# schema=1" and "# length=..." comment lines, then "s,kappa".
std::string profile_to_csv(const CurvatureProfile& profile);
CurvatureProfile profile_from_csv(std::string_view text);

struct CurveSummary {
  std::string kind;
  double length = 0.0;
  std::size_t n = 0;
  double integral_kappa = 0.0;
  std::optional<double> area;
  std::optional<double> gauss_bonnet_residual;
};
std::string curve_summary_to_json(const CurveSummary& summary);

std::string spectrum_to_json(const SpectrumResult& spectrum, const AccumulationConstant& ks,
                             const std::vector<std::string>& warnings = {});
SpectrumResult spectrum_from_json(std::string_view json);

std::string model_to_json(const IntervalDeltaSpec& spec, const ModelSpectrum& result);

/// Counting CSV with header "E,N,uncertainty".
std::string counting_to_csv(const CountingCurve& curve);
std::string slope_to_json(const CountingCurve& curve, std::string_view model, double k_S_reference);

/// One JSON object per line, in report order.
std::string reports_to_jsonl(const std::vector<ValidationReport>& reports);
/// Summary table: check,status,measurements,failed,inconclusive.
std::string reports_to_csv(const std::vector<ValidationReport>& reports);

std::string read_text_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace cone_spectra
