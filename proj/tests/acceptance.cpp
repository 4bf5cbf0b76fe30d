#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbracket/cli.hpp"
#include "dbracket/sweep.hpp"

using namespace dbracket;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome from_checks(const std::vector<CheckResult>& results) {
  std::size_t cases = 0;
  for (const auto& r : results) {
    if (!r.passed) return {false, r.family + ": " + r.counterexample};
    cases += r.cases;
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome golden_info(const std::string& m, const std::string& n, const std::string& r, std::size_t levi,
                    std::size_t radical, std::size_t center) {
  std::ostringstream out, err;
  const int code = run_cli({"info", m, n, r, "--format", "json"}, out, err);
  if (code != 0) return {false, "exit " + std::to_string(code) + ": " + err.str()};
  const auto rec = nlohmann::json::parse(out.str());
  const std::size_t got_levi = rec["dim_levi"], got_radical = rec["dim_radical"], got_center = rec["dim_center"];
  const std::string got = "(" + std::to_string(got_levi) + ", " + std::to_string(got_radical) + ", " +
                          std::to_string(got_center) + ")";
  return {got_levi == levi && got_radical == radical && got_center == center, got};
}

std::uint64_t seed() {
  const char* text = std::getenv("DB_SEED");
  return text && *text ? std::strtoull(text, nullptr, 10) : 0;
}

}  // namespace

int main() {
  const std::uint64_t s = seed();
  const std::vector<Criterion> criteria{
      {1, "golden gl(5|6) r=2 -> (3, 27, 12)", 1.0, [] { return golden_info("5", "6", "2", 3, 27, 12); }},
      {2, "golden gl(7|7) r=5 -> (24, 25, 4)", 1.0, [] { return golden_info("7", "7", "5", 24, 25, 4); }},
      {3, "antisymmetry and Jacobi, m,n <= 3, 20 random B per shape", 30.0,
       [s] { return from_checks({check_lie_axioms_sweep(3, s, 20)}); }},
      {4, "center brute force equals closed form, m,n <= 4", 30.0,
       [] { return from_checks({check_center_oracle(4)}); }},
      {5, "Killing radical equals closed form, m,n <= 4", 60.0,
       [] { return from_checks({check_radical_oracle(4)}); }},
      {6, "Levi decomposition verified, m,n <= 4", 60.0,
       [] { return from_checks({check_levi_decompositions(4)}); }},
      {7, "conjugation and flip isomorphisms, m,n <= 4", 60.0,
       [s] { return from_checks({check_conjugation_isomorphisms(4, s, 20), check_flip_isomorphisms(4)}); }},
      {8, "classification soundness, m,n,p,q <= 4", 120.0,
       [] { return from_checks({check_classification(4)}); }},
      {9, "gl(n) degeneration, n <= 4", 10.0, [] { return from_checks({check_gl_degeneration(4)}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s  criterion %d  %s  [%.3fs < %.0fs%s]  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, in_time ? "" : " EXCEEDED", outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
