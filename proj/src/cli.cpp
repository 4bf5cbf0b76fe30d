#include "dbracket/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "dbracket/classifier.hpp"
#include "dbracket/errors.hpp"
#include "dbracket/format.hpp"
#include "dbracket/structure.hpp"
#include "dbracket/sweep.hpp"

namespace dbracket {

namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

AlgebraSpec spec_from(long m, long n, long r) {
  if (m < 1 || n < 1) throw UsageError("m and n must be at least 1");
  if (r < 0 || r > std::min(m, n)) throw UsageError("r must satisfy 0 <= r <= min(m, n)");
  return {static_cast<std::size_t>(m), static_cast<std::size_t>(n), static_cast<std::size_t>(r)};
}

std::uint64_t seed_from_env() {
  const char* text = std::getenv("DB_SEED");
  if (!text || !*text) return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0') throw UsageError(std::string("DB_SEED is not an integer: ") + text);
  return value;
}

void write_results_text(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.family.size());
  for (const auto& r : results) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.family << (r.passed ? "PASS" : "FAIL") << "  "
       << r.cases << " cases\n";
    if (!r.passed) os << "  counterexample: " << r.counterexample << "\n";
  }
}

nlohmann::json results_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json families = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json j{{"family", r.family}, {"passed", r.passed}, {"cases", r.cases}};
    if (!r.passed) j["counterexample"] = r.counterexample;
    families.push_back(std::move(j));
    all = all && r.passed;
  }
  return {{"passed", all}, {"families", std::move(families)}};
}

// A loaded table is checked on its own axioms and against the table the
// derived bracket produces for the same (m, n, r).
std::vector<CheckResult> verify_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  const DerivedAlgebra loaded = constants_from_json(record);
  std::vector<CheckResult> results{check_lie_axioms(loaded)};

  CheckResult match{"constants_match_derived_bracket", true, 0, {}};
  const DerivedAlgebra rebuilt = build_algebra(loaded.shape(), loaded.rank_r());
  for (std::size_t u = 0; u < loaded.dim() && match.passed; ++u)
    for (std::size_t v = u + 1; v < loaded.dim() && match.passed; ++v) {
      ++match.cases;
      if (loaded.bracket_basis(u, v) != rebuilt.bracket_basis(u, v)) {
        match.passed = false;
        match.counterexample = "gl(" + std::to_string(loaded.shape().m()) + "|" + std::to_string(loaded.shape().n()) +
                               ") r=" + std::to_string(loaded.rank_r()) + ": table entry (" +
                               label_name(loaded.label(u)) + ", " + label_name(loaded.label(v)) +
                               ") differs from the derived bracket";
      }
    }
  results.push_back(std::move(match));
  return results;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& program) {
  CLI::App app{"Lie algebras from gl(m|n) via the derived bracket", program};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  long m = 0, n = 0, r = 0, p = 0, q = 0, r2 = 0;

  auto* info = app.add_subcommand("info", "Levi-Malcev decomposition report for gl(M|N) with rank R");
  info->add_option("M", m)->required();
  info->add_option("N", n)->required();
  info->add_option("R", r)->required();
  add_format(info);

  bool verify_witness = false;
  auto* classify = app.add_subcommand("classify", "Decide whether (M, N, R1) and (P, Q, R2) give isomorphic algebras");
  classify->add_option("M", m)->required();
  classify->add_option("N", n)->required();
  classify->add_option("R1", r)->required();
  classify->add_option("P", p)->required();
  classify->add_option("Q", q)->required();
  classify->add_option("R2", r2)->required();
  classify->add_flag("--verify-witness", verify_witness, "Check the witness on every basis pair");
  add_format(classify);

  auto* constants = app.add_subcommand("constants", "Nonzero structure constants in the F_i_j basis");
  constants->add_option("M", m)->required();
  constants->add_option("N", n)->required();
  constants->add_option("R", r)->required();
  add_format(constants);

  std::size_t max_dim = 4;
  std::string constants_file;
  auto* verify = app.add_subcommand("verify", "Exhaustive property sweep over all m, n <= K");
  verify->add_option("--max-dim", max_dim, "Sweep bound K")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  verify->add_option("--constants", constants_file, "Check a structure-constant JSON file instead")
      ->check(CLI::ExistingFile);
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  const bool json = format == "json";
  try {
    if (info->parsed()) {
      const AlgebraSpec spec = spec_from(m, n, r);
      const DecompositionReport report = verify_levi_decomposition(spec.shape(), spec.r);
      if (json)
        out << report_to_json(report).dump(2) << "\n";
      else
        write_report_text(out, report);
      return exit_ok;
    }

    if (classify->parsed()) {
      const AlgebraSpec first = spec_from(m, n, r);
      const AlgebraSpec second = spec_from(p, q, r2);
      const ClassificationVerdict verdict = iso_decision(first, second);
      if (verify_witness && verdict.isomorphic &&
          !verify_homomorphism(*verdict.witness, build_algebra(first.shape(), first.r),
                               build_algebra(second.shape(), second.r))) {
        err << "error: witness failed verification\n";
        return exit_failure;
      }
      if (json) {
        nlohmann::json j = verdict_to_json(first, second, verdict);
        if (verify_witness && verdict.isomorphic) j["witness_verified"] = true;
        out << j.dump(2) << "\n";
      } else {
        write_verdict_text(out, first, second, verdict);
        if (verify_witness && verdict.isomorphic) out << "  verified   yes\n";
      }
      return verdict.isomorphic ? exit_ok : exit_failure;
    }

    if (constants->parsed()) {
      const AlgebraSpec spec = spec_from(m, n, r);
      const DerivedAlgebra algebra = build_algebra(spec.shape(), spec.r);
      if (json)
        out << constants_to_json(algebra).dump(2) << "\n";
      else
        write_constants_text(out, algebra);
      return exit_ok;
    }

    if (verify->parsed()) {
      std::vector<CheckResult> results;
      if (!constants_file.empty()) {
        results = verify_constants_file(constants_file);
      } else {
        SweepOptions options;
        options.max_dim = max_dim;
        options.seed = seed_from_env();
        results = run_verification_sweep(options);
      }
      if (json)
        out << results_to_json(results).dump(2) << "\n";
      else
        write_results_text(out, results);
      const auto failed = std::find_if(results.begin(), results.end(), [](const auto& x) { return !x.passed; });
      if (failed == results.end()) return exit_ok;
      err << "verification failed: " << failed->family << ": " << failed->counterexample << "\n";
      return exit_failure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace dbracket
