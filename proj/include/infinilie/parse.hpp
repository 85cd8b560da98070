#pragma once

#include <string_view>

#include "infinilie/series.hpp"

namespace infinilie {

// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' power)?
//   power  := integer | '(' '-'? integer ('/' integer)? ')'
//   atom   := integer | 'e' | 'i' | '(' expr ')' | 'sqrt(' expr ')'
// 'e' is the positive infinitesimal ε, 'i' the imaginary unit. Evaluation
// runs with extra precision headroom and the result is cut back to the
// context truncation, so finite sums parse exactly.

/// Real-valued expression; imaginary results are rejected.
ValSeries parse_expr(std::string_view text);
GaussSeries parse_gauss_expr(std::string_view text);
/// A constant (no ε) in the scalar tower.
GaussScalar parse_scalar(std::string_view text);

}  // namespace infinilie
