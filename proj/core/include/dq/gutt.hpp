#pragma once

#include <functional>

#include "dq/uea.hpp"

namespace dq {

/// Star exponential of a g_lambda element whose coordinates all vanish at
/// lambda^0, computed honestly as sum_k xi^{*k} / k! with Gutt-product
/// powers (the sum is finite at the truncation order). Input with a nonzero
/// lambda^0 part is rejected.
PolySeries exp_gutt(const GuttContext& ctx, const GVector& xi);

/// Both sides of the exponential group law: the Gutt product of the two
/// star exponentials, and the star exponential of the Campbell-Hausdorff
/// combination. The two sides are computed by independent code paths.
struct ExpGroupLaw {
  PolySeries product_side;  // exp(xi) * exp(eta)
  PolySeries ch_side;       // exp(CH_lambda(xi, eta))
};
ExpGroupLaw exp_group_law(const GuttContext& ctx, const GVector& xi, const GVector& eta);

/// Algebra-homomorphism handle for generator extraction: maps an element of
/// the Gutt algebra to its image (identity, or a quotient projection).
using HomHandle = std::function<PolySeries(const PolySeries&)>;

/// Generator extraction: expands the star exponential of a formal linear
/// combination alpha^l X_l as a table of alpha-monomial coefficients up to
/// total alpha-degree d (star products of coordinate words, passed through
/// the homomorphism), then applies the plain partial derivative for the
/// multi-index J at alpha = 0. For the identity homomorphism the result is
/// the image of mu^J itself. Requires d >= |J|.
PolySeries generator_extract(const GuttContext& ctx, const HomHandle& hom, const Exponents& J,
                             int degree);

}  // namespace dq
