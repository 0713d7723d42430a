#pragma once

#include <string_view>

#include "pekt/lambda.hpp"

namespace pekt {

/// Parses a power-sum polynomial such as "N1^2 + 1/2*N2" or "x - 3*x^2".
///
/// Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | atom ('^' integer)?
///   atom    := integer ('/' integer)? | 'N' integer | 'x' | '(' expr ')'
///
/// Using x selects the rank-one algebra; mixing x with N_k is a
/// DomainError. Syntax errors raise ParseError with the offending offset.
/// Terms heavier than `weight_cap` are rejected.
LambdaElement parse_nu(std::string_view text, unsigned weight_cap, unsigned q_order);

}  // namespace pekt
