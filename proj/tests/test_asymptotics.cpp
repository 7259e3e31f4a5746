#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cone_spectra/asymptotics.hpp"
#include "cone_spectra/serialization.hpp"

using namespace cone_spectra;

namespace {

SuiteOptions quick() {
  SuiteOptions o;
  o.quick = true;
  o.n = 256;
  return o;
}

const ValidationReport& find(const std::vector<ValidationReport>& reports, std::string_view prefix) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.check.starts_with(prefix); });
  REQUIRE(it != reports.end());
  return *it;
}

}  // namespace

TEST_CASE("random loops are admissible and reproducible") {
  const auto a = random_fourier_loops(12, 3);
  const auto b = random_fourier_loops(12, 3);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& fa = std::get<FourierLoop>(a[i].kind());
    const auto& fb = std::get<FourierLoop>(b[i].kind());
    CHECK(fa.theta0 == fb.theta0);
    CHECK(fa.coeffs.size() == 4);
    for (const auto& c : fa.coeffs) {
      CHECK(std::abs(c.a) <= 0.1);
      CHECK(std::abs(c.b) <= 0.1);
    }
    CHECK(ArcLengthMap(a[i]).length() <= 2 * std::numbers::pi);
  }
  CHECK(std::get<FourierLoop>(random_fourier_loops(1, 4)[0].kind()).theta0 != std::get<FourierLoop>(a[0].kind()).theta0);
}

TEST_CASE("quick suite has no failures") {
  const auto reports = run_validation_suite(quick());
  REQUIRE(reports.size() == 9);
  CHECK(reports.front().check.starts_with("c01"));
  CHECK(reports.back().check.starts_with("c09"));
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CHECK(r.status != CheckStatus::Fail);
  }
  CHECK(all_passed(reports));
  for (const char* id : {"c02", "c04", "c05", "c06", "c07", "c09"}) {
    CAPTURE(id);
    CHECK(find(reports, id).status == CheckStatus::Pass);
  }
}

TEST_CASE("the long loop is skipped, not judged") {
  auto o = quick();
  auto loops = isoperimetric_test_loops(o);
  loops.erase(loops.begin() + 4, loops.end());
  const auto r = check_isoperimetric(loops, o);
  const auto skipped = std::count_if(r.measured.begin(), r.measured.end(), [](const Measurement& m) {
    return m.status == CheckStatus::Skipped && m.name.find("length_above_2pi") != std::string::npos;
  });
  CHECK(skipped == 1);
}

TEST_CASE("coarse grids are inconclusive rather than wrong") {
  auto o = quick();
  o.n = 64;
  const auto c01 = check_circle_closed_forms(o);
  CHECK(c01.status == CheckStatus::Inconclusive);
  const auto c08 = check_multiplicity_growth(5, {0.05, 0.025, 0.02, 0.0125}, o, 0.02);
  CHECK(c08.status == CheckStatus::Inconclusive);
}

TEST_CASE("flipping the potential sign is detected") {
  auto o = quick();
  o.potential = PotentialSign::Repulsive;
  CHECK(check_circle_closed_forms(o).status == CheckStatus::Fail);
  CHECK(check_multiplicity_growth(5, {0.05, 0.025}, o, 0.025).status == CheckStatus::Fail);
}

TEST_CASE("suite output is deterministic") {
  const auto o = quick();
  const auto a = run_validation_suite(o);
  const auto b = run_validation_suite(o);
  CHECK(reports_to_jsonl(a) == reports_to_jsonl(b));
  CHECK(reports_to_csv(a) == reports_to_csv(b));
}
