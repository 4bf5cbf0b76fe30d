#include "dbracket/format.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dbracket/errors.hpp"

namespace dbracket {

using nlohmann::json;

namespace {

std::size_t parse_label(const SuperShape& shape, const std::string& text) {
  std::size_t i = 0;
  std::size_t j = 0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "F_%zu_%zu%c", &i, &j, &trailing) != 2)
    throw ParseError("bad basis label '" + text + "'");
  try {
    return basis_index(shape, i, j);
  } catch (const DimensionMismatch&) {
    throw ParseError("basis label '" + text + "' outside the shape");
  }
}

std::string format_terms(const SuperShape& shape, const Terms& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const std::string name = label_name(basis_label(shape, t.basis));
    const Rational magnitude = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (first)
      os << (t.coeff.sign() < 0 ? "-" : "");
    else
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    if (magnitude != Rational(1)) os << magnitude << "*";
    os << name;
    first = false;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json constants_to_json(const DerivedAlgebra& algebra) {
  const SuperShape& shape = algebra.shape();
  json basis = json::array();
  for (const auto& l : algebra.basis_labels()) basis.push_back(label_name(l));

  json brackets = json::array();
  for (const auto& [key, terms] : algebra.constants()) {
    json jterms = json::array();
    for (const auto& t : terms)
      jterms.push_back({{"basis", label_name(basis_label(shape, t.basis))}, {"coeff", t.coeff.to_exact_string()}});
    brackets.push_back({{"left", label_name(basis_label(shape, key.first))},
                        {"right", label_name(basis_label(shape, key.second))},
                        {"terms", std::move(jterms)}});
  }
  return {{"m", shape.m()}, {"n", shape.n()}, {"r", algebra.rank_r()}, {"basis", std::move(basis)},
          {"brackets", std::move(brackets)}};
}

DerivedAlgebra constants_from_json(const json& record) {
  try {
    const SuperShape shape(record.at("m").get<std::size_t>(), record.at("n").get<std::size_t>());
    const auto r = record.at("r").get<std::size_t>();

    const auto& basis = record.at("basis");
    if (basis.size() != shape.m() * shape.n()) throw ParseError("basis length differs from m*n");
    for (std::size_t u = 0; u < basis.size(); ++u)
      if (basis[u].get<std::string>() != label_name(basis_label(shape, u)))
        throw ParseError("basis is not in lexicographic F_i_j order");

    DerivedAlgebra::Constants constants;
    for (const auto& entry : record.at("brackets")) {
      std::size_t u = parse_label(shape, entry.at("left").get<std::string>());
      std::size_t v = parse_label(shape, entry.at("right").get<std::string>());
      if (u == v) throw ParseError("bracket of a basis element with itself must be zero");
      Terms terms;
      for (const auto& t : entry.at("terms"))
        terms.push_back({parse_label(shape, t.at("basis").get<std::string>()),
                         Rational::parse(t.at("coeff").get<std::string>())});
      if (u > v) {
        std::swap(u, v);
        for (auto& t : terms) t.coeff = -t.coeff;
      }
      if (!constants.emplace(std::pair{u, v}, std::move(terms)).second)
        throw ParseError("duplicate bracket entry");
    }
    return {shape, r, std::move(constants)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed constants record: ") + e.what());
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  } catch (const RankOutOfRange& e) {
    throw ParseError(e.what());
  }
}

void write_constants_text(std::ostream& os, const DerivedAlgebra& algebra) {
  const SuperShape& shape = algebra.shape();
  os << "algebra   gl(" << shape.m() << "|" << shape.n() << ")  r=" << algebra.rank_r() << "  dim=" << algebra.dim()
     << "\n";
  os << "basis    ";
  for (const auto& l : algebra.basis_labels()) os << " " << label_name(l);
  os << "\n";
  os << "brackets  " << algebra.constants().size() << " nonzero\n";

  std::size_t width = 0;
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [key, terms] : algebra.constants()) {
    std::string lhs = "[" + label_name(basis_label(shape, key.first)) + ", " +
                      label_name(basis_label(shape, key.second)) + "]";
    width = std::max(width, lhs.size());
    rows.emplace_back(std::move(lhs), format_terms(shape, terms));
  }
  for (const auto& [lhs, rhs] : rows) os << "  " << std::left << std::setw(static_cast<int>(width)) << lhs << " = " << rhs << "\n";
}

std::string levi_factor_name(std::size_t r) { return r == 0 ? "0" : "sl(" + std::to_string(r) + ")"; }

json report_to_json(const DecompositionReport& report) {
  return {{"m", report.shape.m()},
          {"n", report.shape.n()},
          {"r", report.rank_r},
          {"dim_total", report.dim_total},
          {"dim_levi", report.dim_levi},
          {"dim_radical", report.dim_radical},
          {"dim_center", report.dim_center},
          {"levi_factor", levi_factor_name(report.rank_r)},
          {"abelian", report.is_abelian},
          {"solvable", report.is_solvable},
          {"checks", report.checks}};
}

void write_report_text(std::ostream& os, const DecompositionReport& report) {
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << "\n";
  };
  row("algebra", "gl(" + std::to_string(report.shape.m()) + "|" + std::to_string(report.shape.n()) +
                     ")  r=" + std::to_string(report.rank_r));
  row("dim_total", std::to_string(report.dim_total));
  row("dim_levi", std::to_string(report.dim_levi) + "  (" + levi_factor_name(report.rank_r) + ")");
  row("dim_radical", std::to_string(report.dim_radical));
  row("dim_center", std::to_string(report.dim_center));
  row("abelian", yes_no(report.is_abelian));
  row("solvable", yes_no(report.is_solvable));
  row("checks", std::to_string(report.checks.size()) + " passed");
}

json verdict_to_json(const AlgebraSpec& first, const AlgebraSpec& second, const ClassificationVerdict& verdict) {
  json j{{"first", {{"m", first.m}, {"n", first.n}, {"r", first.r}}},
         {"second", {{"m", second.m}, {"n", second.n}, {"r", second.r}}},
         {"isomorphic", verdict.isomorphic},
         {"abelian_extension", verdict.abelian_extension}};
  if (verdict.witness_kind) j["witness"] = to_string(*verdict.witness_kind);
  if (verdict.separator)
    j["separator"] = {{"invariant", verdict.separator->invariant},
                      {"first", verdict.separator->first},
                      {"second", verdict.separator->second}};
  return j;
}

void write_verdict_text(std::ostream& os, const AlgebraSpec& first, const AlgebraSpec& second,
                        const ClassificationVerdict& verdict) {
  auto row = [&](const std::string& key, const std::string& value) {
    os << "  " << std::left << std::setw(11) << key << value << "\n";
  };
  os << (verdict.isomorphic ? "ISOMORPHIC" : "NOT ISOMORPHIC") << "\n";
  row("first", to_string(first));
  row("second", to_string(second));
  if (verdict.witness_kind) {
    std::string description = to_string(*verdict.witness_kind);
    if (*verdict.witness_kind == WitnessKind::flip) description += "  (F_i_j -> -F_j_i)";
    row("witness", description);
  }
  if (verdict.separator)
    row("separator", verdict.separator->invariant + "  " + std::to_string(verdict.separator->first) + " vs " +
                         std::to_string(verdict.separator->second));
  if (verdict.abelian_extension) row("note", "abelian case: isomorphic iff dimensions agree");
}

}  // namespace dbracket
