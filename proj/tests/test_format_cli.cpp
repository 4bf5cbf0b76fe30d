#include <doctest.h>

#include <sstream>

#include "dbracket/cli.hpp"
#include "dbracket/errors.hpp"
#include "dbracket/format.hpp"

using namespace dbracket;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DBRACKET_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("constants json round-trips") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t r = 0; r <= std::min(m, n); ++r) {
        const DerivedAlgebra a = build_algebra(SuperShape(m, n), r);
        const auto text = constants_to_json(a).dump();
        CHECK(constants_from_json(nlohmann::json::parse(text)) == a);
      }
}

TEST_CASE("constants json layout") {
  const nlohmann::json j = constants_to_json(build_algebra(SuperShape(2, 2), 1));
  CHECK(j["basis"] == nlohmann::json::array({"F_1_1", "F_1_2", "F_2_1", "F_2_2"}));
  CHECK(j["brackets"][0]["left"] == "F_1_1");
  CHECK(j["brackets"][0]["right"] == "F_1_2");
  CHECK(j["brackets"][0]["terms"][0]["basis"] == "F_1_2");
  CHECK(j["brackets"][0]["terms"][0]["coeff"] == "1/1");
}

TEST_CASE("reversed pairs in a record are normalized") {
  auto j = constants_to_json(build_algebra(SuperShape(2, 2), 1));
  auto& first = j["brackets"][0];
  std::swap(first["left"], first["right"]);
  first["terms"][0]["coeff"] = "-1/1";
  CHECK(constants_from_json(j) == build_algebra(SuperShape(2, 2), 1));
}

TEST_CASE("malformed records") {
  auto j = constants_to_json(build_algebra(SuperShape(2, 2), 1));
  auto bad_label = j;
  bad_label["brackets"][0]["left"] = "G_1_1";
  CHECK_THROWS_AS(constants_from_json(bad_label), ParseError);
  auto bad_coeff = j;
  bad_coeff["brackets"][0]["terms"][0]["coeff"] = 0.5;
  CHECK_THROWS_AS(constants_from_json(bad_coeff), ParseError);
  auto bad_basis = j;
  bad_basis["basis"][0] = "F_1_2";
  CHECK_THROWS_AS(constants_from_json(bad_basis), ParseError);
  auto duplicate = j;
  duplicate["brackets"].push_back(j["brackets"][0]);
  CHECK_THROWS_AS(constants_from_json(duplicate), ParseError);
  auto bad_rank = j;
  bad_rank["r"] = 3;
  CHECK_THROWS_AS(constants_from_json(bad_rank), ParseError);
  CHECK_THROWS_AS(constants_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("info reports the decomposition") {
  const Run r = run({"info", "5", "6", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim_levi      3  (sl(2))") != std::string::npos);
  CHECK(r.out.find("dim_radical   27") != std::string::npos);
  CHECK(r.out.find("dim_center    12") != std::string::npos);

  const Run j = run({"info", "7", "7", "5", "--format", "json"});
  CHECK(j.code == 0);
  const auto rec = nlohmann::json::parse(j.out);
  CHECK(rec["dim_levi"] == 24);
  CHECK(rec["dim_radical"] == 25);
  CHECK(rec["dim_center"] == 4);
  CHECK(rec["levi_factor"] == "sl(5)");

  const Run z = run({"info", "2", "2", "0", "--format", "json"});
  const auto zr = nlohmann::json::parse(z.out);
  CHECK(zr["abelian"] == true);
  CHECK(zr["dim_center"] == 4);
}

TEST_CASE("classify exit codes and verdicts") {
  const Run iso = run({"classify", "5", "6", "2", "6", "5", "2"});
  CHECK(iso.code == 0);
  CHECK(iso.out.rfind("ISOMORPHIC", 0) == 0);
  CHECK(iso.out.find("flip") != std::string::npos);

  const Run sep = run({"classify", "5", "6", "2", "5", "6", "3", "--format", "json"});
  CHECK(sep.code == 1);
  const auto rec = nlohmann::json::parse(sep.out);
  CHECK(rec["isomorphic"] == false);
  CHECK(rec["separator"]["invariant"] == "dim_levi");
  CHECK(rec["separator"]["first"] == 3);
  CHECK(rec["separator"]["second"] == 8);

  CHECK(run({"classify", "1", "1", "0", "1", "1", "1"}).code == 0);
  const Run verified = run({"classify", "3", "4", "2", "4", "3", "2", "--verify-witness"});
  CHECK(verified.code == 0);
  CHECK(verified.out.find("verified   yes") != std::string::npos);
}

TEST_CASE("constants subcommand") {
  const Run r = run({"constants", "2", "2", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[F_1_1, F_1_2] = F_1_2") != std::string::npos);
  for (const char* shape : {"1 1 1", "2 2 0"}) {
    std::istringstream is(shape);
    std::string m, n, k;
    is >> m >> n >> k;
    const Run e = run({"constants", m, n, k, "--format", "json"});
    CHECK(nlohmann::json::parse(e.out)["brackets"].empty());
  }
}

TEST_CASE("usage errors exit with 2 and go to stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"info", "2", "2", "3"},
                                                                {"info", "0", "2", "0"},
                                                                {"info", "2", "2"},
                                                                {"info", "a", "2", "1"},
                                                                {"classify", "1", "1", "1"},
                                                                {"constants", "2", "2", "1", "--format", "xml"},
                                                                {"verify", "--max-dim", "0"},
                                                                {"frobnicate"},
                                                                {}}) {
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("verify sweep") {
  const Run one = run({"verify", "--max-dim", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("FAIL") == std::string::npos);
  const Run two = run({"verify", "--max-dim", "2", "--format", "json"});
  CHECK(two.code == 0);
  CHECK(nlohmann::json::parse(two.out)["passed"] == true);
}

TEST_CASE("verify rejects corrupted constants tables") {
  for (const char* name : {"corrupted_coefficient.json", "corrupted_jacobi.json", "corrupted_missing_brackets.json"}) {
    CAPTURE(name);
    const Run r = run({"verify", "--constants", fixture(name)});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.err.find("verification failed") != std::string::npos);
  }
  CHECK(run({"verify", "--constants", fixture("corrupted_label.json")}).code == 2);
  CHECK(run({"verify", "--constants", fixture("no_such_file.json")}).code == 2);
}
