#pragma once

#include <string>
#include <string_view>

#include "dq/series.hpp"

namespace dq {

/// Parses the shared expression grammar: rational literals `p/q`, variables
/// by name, the reserved formal parameter `lam`, `^` powers, `*` products,
/// `+`/`-` and parentheses. Example: `x^2*y + 1/2*lam*z`.
PolySeries parse_poly_series(std::string_view text, const Vars& vars, int order);

/// Same grammar with `lam` rejected; the result is a plain polynomial.
Poly parse_poly(std::string_view text, const Vars& vars);

/// Grammar restricted to rational literals and `lam` (series literals such
/// as `1 + 2*lam^2`).
ScalarSeries parse_scalar_series(std::string_view text, int order);

/// Canonical printing: terms in descending graded-lex order within each
/// lambda order, lambda orders ascending. Zero prints as "0". Output
/// re-parses to an equal value.
std::string to_string(const Poly& p);
std::string to_string(const PolySeries& s);
std::string to_string(const ScalarSeries& s);

/// Machine-readable structured text: one exponent row per term, per lambda
/// order, in canonical order (see README for the exact format).
std::string machine_format(const PolySeries& s);
std::string machine_format(const ScalarSeries& s);

}  // namespace dq
