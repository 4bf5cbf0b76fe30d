#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dbracket/classifier.hpp"
#include "dbracket/derived_bracket.hpp"
#include "dbracket/structure.hpp"

namespace dbracket {

// Structure-constant record:
//   {"m": M, "n": N, "r": R,
//    "basis": ["F_1_1", "F_1_2", ...],            // lexicographic (i, j)
//    "brackets": [{"left": "F_1_1", "right": "F_1_2",
//                  "terms": [{"basis": "F_1_2", "coeff": "1/1"}]}, ...]}
// Only left < right pairs with a nonzero bracket are listed. Coefficients
// are exact "numerator/denominator" strings.
nlohmann::json constants_to_json(const DerivedAlgebra& algebra);

/// Throws ParseError on malformed input.
DerivedAlgebra constants_from_json(const nlohmann::json& record);

void write_constants_text(std::ostream& os, const DerivedAlgebra& algebra);

std::string levi_factor_name(std::size_t r);

nlohmann::json report_to_json(const DecompositionReport& report);
void write_report_text(std::ostream& os, const DecompositionReport& report);

nlohmann::json verdict_to_json(const AlgebraSpec& first, const AlgebraSpec& second,
                               const ClassificationVerdict& verdict);
void write_verdict_text(std::ostream& os, const AlgebraSpec& first, const AlgebraSpec& second,
                        const ClassificationVerdict& verdict);

}  // namespace dbracket
