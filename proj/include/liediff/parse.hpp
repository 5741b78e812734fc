#pragma once

#include "liediff/normalpoly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace liediff {

// Field grammar:
//   expr   := term (('+'|'-') term)*
//   term   := ('-')? factor (('*'|'/') factor)*
//   factor := atom ('^' nonneg-integer)?
//   atom   := integer | variable | '(' expr ')'
// A leading '-' negates the whole term. Errors: SyntaxError (with byte
// offset), UnknownVariable, DivisionByZero.
RatFunc parse_field_expr(std::string_view text, std::span<const std::string> variables);

// Operator grammar: the field grammar plus derivation symbols D1..Dn as
// atoms; '*' is composition, '^' repeats it. Division is only by field
// elements. Errors additionally include UnknownDerivation.
OpWord parse_operator_expr(std::string_view text, const Presentation& p);

// Normal-polynomial grammar: the field grammar plus X[i1,...,in] for X_I and
// S[j] (1-based) for placeholder slots.
NormalPoly parse_normal_poly(std::string_view text, const Presentation& p);

} // namespace liediff
