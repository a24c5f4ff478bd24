#include "dq/shift.hpp"

#include "dq/errors.hpp"

namespace dq {

namespace {

Poly embed(const Poly& p, const Vars& target, size_t offset) {
  Poly r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents ext(target->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ext[offset + i] = e[i];
    r.set_coeff(ext, c);
  }
  return r;
}

PolySeries embed(const PolySeries& s, const Vars& target, size_t offset) {
  PolySeries r = poly_series_zero(target, s.order());
  for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, embed(s.coeff(k), target, offset));
  return r;
}

Rational multi_factorial(const Exponents& J) {
  Rational f(1);
  for (uint8_t j : J)
    for (uint8_t i = 2; i <= j; ++i) f *= Rational(i);
  return f;
}

}  // namespace

PolySeries formal_shift(const Poly& u, const std::vector<PolySeries>& p, int order) {
  const size_t m = u.nvars();
  if (p.size() != m) throw ParseError("formal_shift: arity mismatch between u and the shift map");
  if (m == 0) {
    Vars only_y = u.vars();
    return PolySeries::constant(u, order);
  }
  const Vars& xvars = p[0].coeff(0).vars();
  for (const auto& comp : p) {
    if (!same_vars(comp.coeff(0).vars(), xvars))
      throw ParseError("formal_shift: shift components live in different universes");
    if (!comp.coeff(0).is_zero())
      throw MathError("formal_shift: shift component has a nonzero lambda^0 coefficient");
  }

  Vars combined = concat_vars(xvars, u.vars());
  const size_t x_count = xvars->size();

  // p^J terminates because every component has valuation >= 1 in lambda
  std::vector<PolySeries> p_embedded;
  p_embedded.reserve(m);
  for (const auto& comp : p) p_embedded.push_back(embed(comp.truncated(order), combined, 0));

  PolySeries result = PolySeries::constant(embed(u, combined, x_count), order);

  // enumerate multi-indices J over the y-variables with 0 < |J| <= order,
  // pruning branches where the iterated derivative already vanished
  Exponents J(m, 0);
  std::vector<Poly> dstack;
  dstack.push_back(u);
  auto rec = [&](auto&& self, size_t var, int remaining) -> void {
    const Poly du = dstack.back();  // by value: the stack reallocates below
    if (var == m) {
      if (total_degree(J) == 0) return;
      PolySeries term = PolySeries::constant(embed(du, combined, x_count), order);
      for (size_t j = 0; j < m; ++j)
        for (uint8_t t = 0; t < J[j]; ++t) term = term * p_embedded[j];
      term.scale_rational(multi_factorial(J).inverse());
      result += term;
      return;
    }
    self(self, var + 1, remaining);  // J[var] = 0 branch
    Poly d = du;
    for (int k = 1; k <= remaining; ++k) {
      d = d.derivative(var);
      if (d.is_zero()) break;
      J[var] = static_cast<uint8_t>(k);
      dstack.push_back(d);
      self(self, var + 1, remaining - k);
      dstack.pop_back();
    }
    J[var] = 0;
  };
  rec(rec, 0, order);
  return result;
}

PolySeries compose(const Poly& u, const std::vector<PolySeries>& v, int order) {
  if (v.size() != u.nvars()) throw ParseError("compose: arity mismatch between u and v");
  if (u.nvars() == 0) return PolySeries::constant(u, order);
  const Vars& xvars = v[0].coeff(0).vars();

  std::vector<PolySeries> p;
  std::vector<Poly> base;
  p.reserve(v.size());
  base.reserve(v.size());
  for (const auto& comp : v) {
    PolySeries rest = comp.truncated(order);
    base.push_back(rest.coeff(0));
    rest.set_coeff(0, Poly(xvars));
    p.push_back(std::move(rest));
  }

  PolySeries shifted = formal_shift(u, p, order);

  // evaluate at y = v_0(x): substitute into the combined (x..., y...) universe
  std::vector<Poly> values;
  values.reserve(xvars->size() + u.nvars());
  for (size_t i = 0; i < xvars->size(); ++i) values.push_back(Poly::variable(xvars, i));
  for (const auto& b : base) values.push_back(b);

  PolySeries result = poly_series_zero(xvars, shifted.order());
  for (int k = 0; k <= shifted.order(); ++k) result.set_coeff(k, shifted.coeff(k).substitute(values));
  return result;
}

}  // namespace dq
