#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include <unistd.h>

#include <json.hpp>

#include "cone_spectra/error.hpp"
#include "cone_spectra/serialization.hpp"
#include "test_support.hpp"

using namespace cone_spectra;
using cone_spectra::testing::kind_of;
namespace fs = std::filesystem;

TEST_CASE("curve specs") {
  const auto circle = std::get<SphericalLoop>(parse_curve_spec(R"({"schema":1,"kind":"circle","theta":0.5})"));
  CHECK(std::get<CircleLoop>(circle.kind()).theta == 0.5);

  const auto fourier = std::get<SphericalLoop>(
      parse_curve_spec(R"({"kind":"fourier","theta0":1.0,"coeffs":[[0.05,0.0],[0.0,0.02]]})"));
  const auto& f = std::get<FourierLoop>(fourier.kind());
  CHECK(f.coeffs.size() == 2);
  CHECK(f.coeffs[1].b == 0.02);

  const auto samples = std::get<SphericalLoop>(
      parse_curve_spec(R"({"kind":"samples","points":[[1,0,0],[0,1,0],[-1,0,0],[0,-1,0]]})"));
  CHECK(std::get<SampledLoop>(samples.kind()).points.size() == 4);

  const auto syn = std::get<SyntheticSpec>(parse_curve_spec(R"({"kind":"synthetic","length":6.0,"windows":{"m":3,"eps":0.05}})"));
  CHECK(syn.windows == 3);
  CHECK(syn.eps == 0.05);
  CHECK(syn.baseline == 0.2);
}

TEST_CASE("malformed curve specs") {
  for (const char* bad : {R"({"schema":2,"kind":"circle","theta":0.5})", R"({"kind":"ellipse"})",
                          R"({"kind":"circle"})", R"({"kind":"circle","theta":"x"})", "[1,2]", "{not json",
                          R"({"kind":"fourier","theta0":1.0,"coeffs":[[0.1]]})",
                          R"({"kind":"samples","points":[[1,0]]})"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_curve_spec(bad); }) == ErrorKind::InvalidInput);
  }
}

TEST_CASE("profile CSV round trip") {
  const auto p = geodesic_curvature(SphericalLoop::fourier(1.0, {{0.05, 0.01}}), 128);
  const std::string csv = profile_to_csv(p);
  CHECK(csv.rfind("# schema=1\n", 0) == 0);
  const auto q = profile_from_csv(csv);
  CHECK(q.length == p.length);
  REQUIRE(q.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(q.kappa[i] == p.kappa[i]);

  std::string future = csv;
  future.replace(0, 10, "# schema=2");
  CHECK(kind_of([&] { profile_from_csv(future); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { profile_from_csv("x,y\n0,1\n1,1\n"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { profile_from_csv("s,kappa\n0,1\n0.5,1\n1.5,1\n"); }) == ErrorKind::InvalidInput);
  // 100 rows is not a power of two.
  std::string rows = "s,kappa\n";
  for (int i = 0; i < 100; ++i) rows += std::to_string(0.01 * i) + ",1\n";
  CHECK(kind_of([&] { profile_from_csv(rows); }) == ErrorKind::InvalidInput);
}

TEST_CASE("spectrum JSON round trip") {
  SpectrumResult s;
  s.length = 3.5;
  s.eigenvalues = {-0.4, -0.01, 2.0};
  s.richardson_error = {1e-9, 2e-9, 3e-8};
  s.grid_sizes = {1024, 2048};
  s.max_abs_kappa = 1.3;
  const auto ks = accumulation_constant(s);
  const std::string text = spectrum_to_json(s, ks, {"note"});
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["k_S"].get<double>() == doctest::Approx((std::sqrt(0.4) + 0.1) / (2 * std::numbers::pi)));
  CHECK(j["warnings"][0] == "note");
  const auto back = spectrum_from_json(text);
  CHECK(back.eigenvalues == s.eigenvalues);
  CHECK(back.richardson_error == s.richardson_error);
  CHECK(back.grid_sizes == s.grid_sizes);
  CHECK(back.max_abs_kappa == s.max_abs_kappa);

  CHECK(kind_of([] { spectrum_from_json(R"({"schema":3,"length":1,"eigenvalues":[1]})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { spectrum_from_json(R"({"length":1,"eigenvalues":[1,0]})"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { spectrum_from_json(R"({"length":1,"eigenvalues":[0,1],"errors":[0]})"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("every JSON document carries the schema") {
  CurveSummary c{"circle", 1.0, 64, 2.0, std::nullopt, std::nullopt};
  CHECK(nlohmann::json::parse(curve_summary_to_json(c))["schema"] == 1);
  CHECK(nlohmann::json::parse(curve_summary_to_json(c))["area"].is_null());
  const auto m = nlohmann::json::parse(model_to_json({5.0, BoundaryCondition::Neumann}, ModelSpectrum{-0.3, 0.1}));
  CHECK(m["schema"] == 1);
  CHECK(m["bc"] == "N");
  CHECK(m["method"] == "transcendental");
  CountingCurve curve;
  curve.rows = {{1e-6, 3, CountUncertainty::PlusMinusOne, 3.2}};
  CHECK(nlohmann::json::parse(slope_to_json(curve, "delta", 0.1))["schema"] == 1);
  CHECK(counting_to_csv(curve) == "# schema=1\nE,N,uncertainty\n9.9999999999999995e-07,3,pm1\n");
}

TEST_CASE("report serialization") {
  ValidationReport r{"c00_demo", CheckStatus::Inconclusive, {}, {"a note"}};
  r.measured.push_back({"x", 1.0, 1.0, 0.1, 0.5, CheckStatus::Inconclusive});
  r.measured.push_back({"y", 2.0, 1.0, 0.1, 0.0, CheckStatus::Fail});
  const std::string jsonl = reports_to_jsonl({r, r});
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
  const auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(first["schema"] == 1);
  CHECK(first["status"] == "inconclusive");
  CHECK(first["measurements"][1]["status"] == "fail");
  CHECK(reports_to_csv({r}) == "# schema=1\ncheck,status,measurements,failed,inconclusive\nc00_demo,inconclusive,2,1,1\n");
}

TEST_CASE("atomic writes") {
  const fs::path dir = fs::temp_directory_path() / ("cone_spectra_ser_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path target = dir / "out.json";
  write_file_atomic(target, "first");
  write_file_atomic(target, "second");
  CHECK(read_text_file(target) == "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK(kind_of([&] { write_file_atomic(dir / "missing" / "x.json", "data"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { read_text_file(dir / "nope"); }) == ErrorKind::InvalidInput);
  fs::remove_all(dir);
}
