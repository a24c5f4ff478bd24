#include "dq/gutt.hpp"

#include "dq/bch.hpp"
#include "dq/errors.hpp"

namespace dq {

PolySeries exp_gutt(const GuttContext& ctx, const GVector& xi) {
  for (const auto& c : xi.coords)
    if (!c.coeff(0).is_zero())
      throw MathError("exp_gutt: coordinate with nonzero lambda^0 coefficient");
  const int n = ctx.order();
  PolySeries linear = to_linear_series(xi).truncated(n);
  PolySeries result = poly_series_constant(Poly::constant(ctx.coords(), Rational(1)), n);
  PolySeries power = result;
  Rational fact(1);
  for (int k = 1; k <= n; ++k) {
    power = ctx.gutt_mul(power, linear);
    if (power.is_zero()) break;
    fact *= Rational(k);
    PolySeries term = power;
    term.scale_rational(fact.inverse());
    result += term;
  }
  return result;
}

ExpGroupLaw exp_group_law(const GuttContext& ctx, const GVector& xi, const GVector& eta) {
  ExpGroupLaw out{ctx.gutt_mul(exp_gutt(ctx, xi), exp_gutt(ctx, eta)),
                  exp_gutt(ctx, ch_lambda(xi, eta, ctx.order()))};
  return out;
}

PolySeries generator_extract(const GuttContext& ctx, const HomHandle& hom, const Exponents& J,
                             int degree) {
  const size_t n = ctx.algebra()->dim();
  if (J.size() != n) throw ParseError("generator_extract: multi-index size mismatch");
  if (degree < total_degree(J))
    throw MathError("generator_extract: expansion degree below |J|");

  // alpha-coefficient table of exp_*(alpha^l X_l): the alpha^K coefficient is
  // (1/|K|!) sum over words with content K of the star product of the word's
  // coordinate functions
  std::map<Exponents, PolySeries, GrlexGreater> table;
  const Vars& coords = ctx.coords();
  const int order = ctx.order();

  std::vector<PolySeries> vars;
  for (size_t l = 0; l < n; ++l)
    vars.push_back(poly_series_constant(Poly::variable(coords, l), order));

  // unit contribution (empty word)
  table.emplace(Exponents(n, 0),
                hom(poly_series_constant(Poly::constant(coords, Rational(1)), order)));

  Rational fact(1);
  std::vector<std::pair<Exponents, PolySeries>> words;
  words.emplace_back(Exponents(n, 0),
                     poly_series_constant(Poly::constant(coords, Rational(1)), order));
  for (int len = 1; len <= degree; ++len) {
    fact *= Rational(len);
    std::vector<std::pair<Exponents, PolySeries>> next;
    std::map<Exponents, PolySeries, GrlexGreater> sums;
    for (const auto& [content, value] : words) {
      for (size_t l = 0; l < n; ++l) {
        Exponents c2 = content;
        c2[l] += 1;
        PolySeries star = ctx.gutt_mul(value, vars[l]);
        auto it = sums.find(c2);
        if (it == sums.end())
          sums.emplace(c2, star);
        else
          it->second += star;
        next.emplace_back(std::move(c2), std::move(star));
      }
    }
    for (auto& [content, sum] : sums) {
      PolySeries coeff = sum;
      coeff.scale_rational(fact.inverse());
      table.emplace(content, hom(coeff));
    }
    words = std::move(next);
  }

  // plain partial derivative d^J at alpha = 0 picks J! times the alpha^J entry
  auto it = table.find(J);
  if (it == table.end()) return poly_series_zero(coords, order);
  Rational jfact(1);
  for (uint8_t j : J)
    for (uint8_t i = 2; i <= j; ++i) jfact *= Rational(i);
  PolySeries out = it->second;
  out.scale_rational(jfact);
  return out;
}

}  // namespace dq
