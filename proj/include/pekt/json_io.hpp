#pragma once

#include <string>

#include "json.hpp"

#include "pekt/characters.hpp"
#include "pekt/jfunction.hpp"
#include "pekt/lambda.hpp"

namespace pekt {

/// {"k": e_k} for a power-sum monomial.
nlohmann::ordered_json exponents_to_json(const Partition& monomial);

/// [{"powersum_exponents": {...}, "coefficient": ["p/q", ...]}, ...]
nlohmann::ordered_json to_json(const LambdaElement& a);

/// Inverse of to_json; weight cap, q-order and algebra are supplied.
LambdaElement lambda_from_json(const nlohmann::json& j, unsigned weight_cap, unsigned q_order,
                               Algebra algebra);

/// {"mode", "algebra", "q_order", "weight_cap", "complete_weight",
///  "terms": [{"powersum_exponents", "q_coefficients"}]}
nlohmann::ordered_json to_json(const JSeries& j);

nlohmann::ordered_json to_json(const CharacterTable& t);
/// Header row of class partitions, then one row per irreducible.
std::string to_csv(const CharacterTable& t);

}  // namespace pekt
