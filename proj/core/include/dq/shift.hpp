#pragma once

#include <vector>

#include "dq/series.hpp"

namespace dq {

/// Formal Taylor shift: given a polynomial u in variables y_1..y_m and a
/// shift map p with components p_j over a disjoint x-universe, each with a
/// vanishing lambda^0 coefficient, returns the series
///   u(y) + sum_{0<|J|} (1/J!) p^J(x) (d^J u)(y)
/// over the combined universe (x..., y...). For polynomial u this equals the
/// substitution u(y + p(x)), and it is a ring morphism in u.
PolySeries formal_shift(const Poly& u, const std::vector<PolySeries>& p, int order);

/// Composition u(v): u a polynomial of arity v.size(), v components sharing
/// one universe. Computed as the Taylor shift at the lambda^0 base point
/// v_0, then evaluated at y = v_0(x); equals direct substitution of v in u.
PolySeries compose(const Poly& u, const std::vector<PolySeries>& v, int order);

}  // namespace dq
