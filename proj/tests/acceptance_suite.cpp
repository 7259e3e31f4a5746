// Acceptance harness: one PASS/FAIL line per criterion, each check at full
// resolution and inside its runtime budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "cone_spectra/asymptotics.hpp"

using namespace cone_spectra;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;
int only = 0;  // run a single criterion when nonzero

void report(int id, const char* title, std::optional<double> budget_s, const std::function<Outcome()>& body) {
  if (only && only != id) return;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s && secs > *budget_s) {
    o.pass = false;
    o.detail += " over budget";
  }
  failures += !o.pass;
  char budget[32] = "no budget";
  if (budget_s) std::snprintf(budget, sizeof budget, "budget %.0f s", *budget_s);
  std::printf("criterion %2d %s  %-34s %7.1f s (%s) %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, budget,
              o.detail.c_str());
  std::fflush(stdout);
}

Outcome judge(const ValidationReport& r) {
  std::ostringstream why;
  why << r.check << '=' << to_string(r.status);
  int shown = 0;
  for (const auto& m : r.measured) {
    if (m.status == CheckStatus::Fail || m.status == CheckStatus::Inconclusive) {
      if (shown++ < 3) why << " [" << m.name << ' ' << to_string(m.status) << " value=" << m.value << " ref=" << m.reference << ']';
    }
  }
  return {r.status == CheckStatus::Pass, why.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "usage: acceptance_suite [criterion 1-10]\n");
    return 2;
  }
  const SuiteOptions o;  // n = 2048 (Richardson pair 2048/4096), seed 7

  report(1, "circle closed forms", 30, [&] { return judge(check_circle_closed_forms(o)); });

  report(2, "min-max bound", 60, [&] {
    SuiteOptions o2 = o;
    o2.seed = o.seed + 1;
    return judge(check_minmax_bound(random_fourier_loops(20, o2.seed), o2));
  });

  std::optional<ValidationReport> gauss_bonnet;
  report(3, "isoperimetric inequality", 300, [&] {
    auto [iso, gb] = check_isoperimetric_and_gauss_bonnet(isoperimetric_test_loops(o), o);
    gauss_bonnet = std::move(gb);
    return judge(iso);
  });
  report(4, "Gauss-Bonnet", std::nullopt, [&] {
    if (!gauss_bonnet) gauss_bonnet = check_isoperimetric_and_gauss_bonnet(isoperimetric_test_loops(o), o).second;
    return judge(*gauss_bonnet);
  });

  report(5, "interval delta models", 60, [&] { return judge(check_interval_models(o)); });
  report(6, "log slope law", 300, [&] { return judge(check_log_slope_law(o)); });
  report(7, "reduced-model slopes", 600, [&] { return judge(check_reduced_model_slopes(o)); });
  report(8, "multiplicity growth", 60, [&] {
    return judge(check_multiplicity_growth(5, {0.05, 0.025, 0.02, 0.0125}, o, 0.02));
  });
  report(9, "oracle consistency", 300, [&] { return judge(check_oracle_consistency(o)); });

  report(10, "deterministic reports", std::nullopt, [&] {
    const fs::path dir = fs::temp_directory_path() / ("cone_spectra_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (const char* stem : {"run1", "run2"}) {
      const std::string cmd = std::string("'") + CONE_SPECTRA_CLI + "' validate --seed 7 --out '" +
                              (dir / stem).string() + "' > /dev/null";
      if (std::system(cmd.c_str()) != 0) {
        fs::remove_all(dir);
        return Outcome{false, std::string("validate run ") + stem + " exited nonzero"};
      }
    }
    const bool same = slurp(dir / "run1.jsonl") == slurp(dir / "run2.jsonl") &&
                      slurp(dir / "run1.csv") == slurp(dir / "run2.csv") && !slurp(dir / "run1.jsonl").empty();
    fs::remove_all(dir);
    return Outcome{same, same ? "jsonl and csv byte-identical" : "report files differ"};
  });

  if (!only) std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
