#pragma once

#include "dq/lie.hpp"

namespace dq {

/// Campbell-Hausdorff series for the rescaled bracket: the element Z of
/// g_lambda with exp(xi) exp(eta) = exp(Z). Each bracket carries one power
/// of lambda, so only bracket words of depth <= N contribute and the result
/// is exact at truncation order N.
///
/// Computed by multiplying the two exponentials in the truncated free
/// associative algebra, taking the logarithm, and evaluating each word of
/// the (primitive) result through the Dynkin-Specht-Wever bracketing
/// w_1 ... w_m -> (1/m) [w_1, [w_2, [... , w_m]]] with the concrete
/// structure constants.
GVector ch_lambda(const GVector& xi, const GVector& eta, int order);

}  // namespace dq
