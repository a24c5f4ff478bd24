#include <doctest.h>

#include <algorithm>

#include "dq/bch.hpp"
#include "dq/errors.hpp"
#include "dq/expr.hpp"
#include "dq/gutt.hpp"

using namespace dq;

namespace {

uint64_t state = 31337;
uint64_t next() {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 33;
}
int coeff_range(int lo, int hi) { return lo + int(next() % uint64_t(hi - lo + 1)); }

Poly random_poly(const Vars& vars, int deg) {
  Poly p(vars);
  for (int t = 0; t < 6; ++t) {
    Exponents e(vars->size(), 0);
    int budget = int(next() % (deg + 1));
    for (size_t i = 0; i < vars->size() && budget > 0; ++i) {
      int k = int(next() % (budget + 1));
      e[i] = uint8_t(k);
      budget -= k;
    }
    p.add_term(e, Rational(coeff_range(-3, 3)));
  }
  return p;
}

GVector random_nilpotent(const AlgebraPtr& alg, int order) {
  GVector v = gvector_zero(alg, order);
  for (auto& c : v.coords)
    for (int k = 1; k <= order; ++k) c.set_coeff(k, Rational(coeff_range(-2, 2)));
  return v;
}

// test-local oracle: symmetrization by direct enumeration of all distinct
// orderings of the multiset (averaged), straightening each word
UEAElement sym_enumerate(const GuttContext& ctx, const Exponents& J) {
  GenWord word;
  for (size_t i = 0; i < J.size(); ++i)
    for (uint8_t t = 0; t < J[i]; ++t) word.push_back(i);
  UEAElement acc(ctx.algebra(), ctx.order());
  Rational count(0);
  std::sort(word.begin(), word.end());
  do {
    acc += ctx.straighten(word);
    count += Rational(1);
  } while (std::next_permutation(word.begin(), word.end()));
  acc.scale(count.inverse());
  return acc;
}

}  // namespace

TEST_CASE("straighten basics on so3") {
  GuttContext ctx(LieAlgebra::so3(), 6);
  const Vars& v = ctx.coords();

  // word (X2, X1) -> X1 X2 - lambda X3
  UEAElement got = ctx.straighten({1, 0});
  UEAElement expect(ctx.algebra(), 6);
  expect.add_term({1, 1, 0}, ScalarSeries::constant(Rational(1), 6));
  ScalarSeries neg_lam(Rational(0), 6);
  neg_lam.set_coeff(1, Rational(-1));
  expect.add_term({0, 0, 1}, neg_lam);
  CHECK(got == expect);

  // ordered words are fixed points
  UEAElement ordered = ctx.straighten({0, 0, 1, 2});
  UEAElement direct(ctx.algebra(), 6);
  direct.add_term({2, 1, 1}, ScalarSeries::constant(Rational(1), 6));
  CHECK(ordered == direct);

  // straightening is independent of the strategy: compare against a naive
  // single-swap rewriter on random words
  auto naive = [&](const GenWord& w0) {
    std::vector<std::pair<GenWord, ScalarSeries>> queue{
        {w0, ScalarSeries::constant(Rational(1), 6)}};
    UEAElement acc(ctx.algebra(), 6);
    while (!queue.empty()) {
      auto [w, c] = queue.back();
      queue.pop_back();
      // find the rightmost descent
      size_t pos = w.size();
      for (size_t i = w.size(); i-- > 1;)
        if (w[i - 1] > w[i]) {
          pos = i - 1;
          break;
        }
      if (pos == w.size()) {
        Exponents J(ctx.algebra()->dim(), 0);
        for (size_t g : w) J[g] += 1;
        acc.add_term(J, c);
        continue;
      }
      GenWord swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      queue.emplace_back(swapped, c);
      for (size_t k = 0; k < ctx.algebra()->dim(); ++k) {
        const Rational& ck = ctx.algebra()->c(w[pos], w[pos + 1], k);
        if (ck.is_zero()) continue;
        GenWord shorter;
        shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
        shorter.push_back(k);
        shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
        ScalarSeries c2 = c;
        c2 *= ck;
        queue.emplace_back(std::move(shorter), c2.shifted(1));
      }
    }
    return acc;
  };
  for (int rep = 0; rep < 20; ++rep) {
    GenWord w;
    for (int i = 0; i < 6; ++i) w.push_back(next() % 3);
    CHECK(ctx.straighten(w) == naive(w));
  }

  // abelian: any word is its sorted monomial
  GuttContext ab(LieAlgebra::abelian(3), 4);
  UEAElement sorted = ab.straighten({2, 0, 1, 0});
  UEAElement expect_ab(ab.algebra(), 4);
  expect_ab.add_term({2, 1, 1}, ScalarSeries::constant(Rational(1), 4));
  CHECK(sorted == expect_ab);

  (void)v;
}

TEST_CASE("symmetrize examples and enumeration oracle") {
  GuttContext ctx(LieAlgebra::so3(), 6);
  const Vars& v = ctx.coords();

  // s(x) = X1, s(1) = unit
  CHECK(ctx.symmetrize(parse_poly_series("x", v, 6)) == UEAElement::generator(ctx.algebra(), 0, 6));
  CHECK(ctx.symmetrize(parse_poly_series("1", v, 6)) == UEAElement::unit(ctx.algebra(), 6));

  // s(xy) = X1X2 - (lambda/2) X3
  UEAElement got = ctx.symmetrize(parse_poly_series("x*y", v, 6));
  UEAElement expect(ctx.algebra(), 6);
  expect.add_term({1, 1, 0}, ScalarSeries::constant(Rational(1), 6));
  ScalarSeries half_lam(Rational(0), 6);
  half_lam.set_coeff(1, Rational(-1, 2));
  expect.add_term({0, 0, 1}, half_lam);
  CHECK(got == expect);

  // recursion agrees with direct enumeration for random monomials
  for (auto alg : {LieAlgebra::so3(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
    GuttContext c2(alg, 5);
    for (int rep = 0; rep < 12; ++rep) {
      Exponents J = {uint8_t(next() % 3), uint8_t(next() % 3), uint8_t(next() % 2)};
      CHECK(c2.symmetrize_monomial(J) == sym_enumerate(c2, J));
    }
  }
}

TEST_CASE("unsymmetrize inverts symmetrize") {
  for (auto alg : {LieAlgebra::so3(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
    GuttContext ctx(alg, 6);
    const Vars& v = ctx.coords();
    CHECK(ctx.unsymmetrize(UEAElement::unit(alg, 6)) ==
          poly_series_constant(Poly::constant(v, Rational(1)), 6));
    for (int rep = 0; rep < 25; ++rep) {
      PolySeries u = poly_series_zero(v, 6);
      for (int k = 0; k <= 6; ++k) u.set_coeff(k, random_poly(v, 4));
      CHECK(ctx.unsymmetrize(ctx.symmetrize(u)) == u);
    }
  }

  // so3: s^{-1}(X1 X2) = xy + (lambda/2) z
  GuttContext ctx(LieAlgebra::so3(), 6);
  UEAElement a(ctx.algebra(), 6);
  a.add_term({1, 1, 0}, ScalarSeries::constant(Rational(1), 6));
  CHECK(ctx.unsymmetrize(a) == parse_poly_series("x*y + 1/2*lam*z", ctx.coords(), 6));
}

TEST_CASE("gutt product basics") {
  GuttContext ctx(LieAlgebra::so3(), 6);
  const Vars& v = ctx.coords();
  PolySeries one = parse_poly_series("1", v, 6);

  PolySeries u = parse_poly_series("x^2*y - 3*z + 1/2", v, 6);
  CHECK(ctx.gutt_mul(one, u) == u);
  CHECK(ctx.gutt_mul(u, one) == u);

  CHECK(ctx.gutt_mul(parse_poly_series("x", v, 6), parse_poly_series("y", v, 6)) ==
        parse_poly_series("x*y + 1/2*lam*z", v, 6));

  CHECK(ctx.gutt_comm(u, u).is_zero());
  CHECK(ctx.gutt_comm(parse_poly_series("x", v, 6), parse_poly_series("y", v, 6)) ==
        parse_poly_series("lam*z", v, 6));

  // classical limit: lambda^0 part of u*v is u0 v0
  for (int rep = 0; rep < 10; ++rep) {
    Poly a = random_poly(v, 4), b = random_poly(v, 4);
    PolySeries prod = ctx.gutt_mul(poly_series_constant(a, 6), poly_series_constant(b, 6));
    CHECK(prod.coeff(0) == a * b);
    // first-order antisymmetric part is the Poisson bracket
    PolySeries comm =
        ctx.gutt_comm(poly_series_constant(a, 6), poly_series_constant(b, 6));
    CHECK(comm.coeff(0).is_zero());
    CHECK(comm.coeff(1) == kirillov_poisson(a, b, *ctx.algebra()));
  }
}

TEST_CASE("gutt associativity and Casimir centrality on so3") {
  GuttContext ctx(LieAlgebra::so3(), 6);
  const Vars& v = ctx.coords();
  for (int rep = 0; rep < 10; ++rep) {
    PolySeries a = poly_series_constant(random_poly(v, 4), 6);
    PolySeries b = poly_series_constant(random_poly(v, 4), 6);
    PolySeries c = poly_series_constant(random_poly(v, 4), 6);
    CHECK(ctx.gutt_mul(ctx.gutt_mul(a, b), c) == ctx.gutt_mul(a, ctx.gutt_mul(b, c)));
  }

  PolySeries p = parse_poly_series("x^2+y^2+z^2", v, 6);
  // centrality against all monomials of degree <= 4
  MonomialTable table(3);
  table.grow_to_degree(4);
  for (size_t m = 0; m < table.size(); ++m) {
    PolySeries mono = poly_series_constant(Poly::monomial(v, table.exponents(m), Rational(1)), 6);
    CHECK(ctx.gutt_comm(p, mono).is_zero());
  }
}

TEST_CASE("weyl property: powers of linear functions are undeformed") {
  for (auto alg : {LieAlgebra::so3(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
    GuttContext ctx(alg, 6);
    const Vars& v = ctx.coords();
    for (int rep = 0; rep < 8; ++rep) {
      Poly lin(v);
      for (size_t i = 0; i < 3; ++i) {
        Exponents e(3, 0);
        e[i] = 1;
        lin.add_term(e, Rational(coeff_range(-3, 3)));
      }
      PolySeries xi = poly_series_constant(lin, 6);
      PolySeries starpow = xi;
      Poly plain = lin;
      for (int k = 2; k <= 6; ++k) {
        starpow = ctx.gutt_mul(starpow, xi);
        plain = plain * lin;
        CHECK(starpow == poly_series_constant(plain, 6));
      }
    }
  }
}

TEST_CASE("strong invariance and derivation property") {
  GuttContext ctx(LieAlgebra::sl2(), 6);
  const Vars& v = ctx.coords();
  for (int rep = 0; rep < 10; ++rep) {
    Poly lin(v);
    for (size_t i = 0; i < 3; ++i) {
      Exponents e(3, 0);
      e[i] = 1;
      lin.add_term(e, Rational(coeff_range(-3, 3)));
    }
    PolySeries xi = poly_series_constant(lin, 6);
    PolySeries u = poly_series_constant(random_poly(v, 4), 6);
    PolySeries w = poly_series_constant(random_poly(v, 3), 6);

    // gutt_comm(xi, u) = lambda * Pi(xi, u)  (kappa = 1)
    PolySeries pi = kirillov_poisson(xi, u, *ctx.algebra());
    CHECK(ctx.gutt_comm(xi, u) == pi.shifted(1));

    // the commutator with a linear function is a derivation of the product
    CHECK(ctx.gutt_comm(xi, ctx.gutt_mul(u, w)) ==
          ctx.gutt_mul(ctx.gutt_comm(xi, u), w) + ctx.gutt_mul(u, ctx.gutt_comm(xi, w)));
  }
}

TEST_CASE("exp_gutt and the exponential group law") {
  auto so3 = LieAlgebra::so3();
  GuttContext ctx(so3, 5);
  const Vars& v = ctx.coords();

  CHECK(exp_gutt(ctx, gvector_zero(so3, 5)) == parse_poly_series("1", v, 5));

  // exp of lambda*x is the commutative exponential series
  GVector lx = gvector_zero(so3, 5);
  lx.coords[0].set_coeff(1, Rational(1));
  CHECK(exp_gutt(ctx, lx) ==
        parse_poly_series("1 + lam*x + 1/2*lam^2*x^2 + 1/6*lam^3*x^3 + 1/24*lam^4*x^4 + "
                          "1/120*lam^5*x^5",
                          v, 5));

  GVector xi = random_nilpotent(so3, 5);
  CHECK(ctx.gutt_mul(exp_gutt(ctx, xi), exp_gutt(ctx, -xi)) == parse_poly_series("1", v, 5));
  CHECK_THROWS_AS(exp_gutt(ctx, basis_vector(so3, 0, 5)), MathError);

  // group law, both sides on independent code paths
  for (int rep = 0; rep < 4; ++rep) {
    GVector a = random_nilpotent(so3, 5), b = random_nilpotent(so3, 5);
    ExpGroupLaw law = exp_group_law(ctx, a, b);
    CHECK(law.product_side == law.ch_side);
  }
  // (xi, 0): both sides are exp(xi)
  ExpGroupLaw law0 = exp_group_law(ctx, xi, gvector_zero(so3, 5));
  CHECK(law0.product_side == exp_gutt(ctx, xi));
  CHECK(law0.ch_side == exp_gutt(ctx, xi));

  // Heisenberg: CH(lambda P, lambda Q) = lambda P + lambda Q + (lambda^3/2) Z
  auto h3 = LieAlgebra::heisenberg();
  GuttContext hctx(h3, 5);
  GVector lp = gvector_zero(h3, 5), lq = gvector_zero(h3, 5);
  lp.coords[0].set_coeff(1, Rational(1));
  lq.coords[1].set_coeff(1, Rational(1));
  GVector ch = ch_lambda(lp, lq, 5);
  GVector expect = lp + lq;
  expect.coords[2].set_coeff(3, Rational(1, 2));
  CHECK(ch == expect);
  ExpGroupLaw hlaw = exp_group_law(hctx, lp, lq);
  CHECK(hlaw.product_side == hlaw.ch_side);
}

TEST_CASE("generator extraction") {
  auto so3 = LieAlgebra::so3();
  GuttContext ctx(so3, 6);
  const Vars& v = ctx.coords();
  HomHandle id = [](const PolySeries& s) { return s; };

  CHECK(generator_extract(ctx, id, {1, 0, 0}, 2) == parse_poly_series("x", v, 6));
  CHECK(generator_extract(ctx, id, {1, 1, 0}, 3) == parse_poly_series("x*y", v, 6));
  CHECK(generator_extract(ctx, id, {2, 0, 0}, 3) == parse_poly_series("x^2", v, 6));
  CHECK(generator_extract(ctx, id, {1, 1, 1}, 3) == parse_poly_series("x*y*z", v, 6));
  CHECK_THROWS_AS(generator_extract(ctx, id, {2, 1, 0}, 2), MathError);
}

TEST_CASE("caching does not change results") {
  auto alg = LieAlgebra::sl2();
  GuttContext cached(alg, 5, /*enable_cache=*/true);
  GuttContext uncached(alg, 5, /*enable_cache=*/false);
  const Vars& v = alg->coords();
  for (int rep = 0; rep < 6; ++rep) {
    PolySeries a = poly_series_constant(random_poly(v, 3), 5);
    PolySeries b = poly_series_constant(random_poly(v, 3), 5);
    PolySeries r1 = cached.gutt_mul(a, b);
    PolySeries r2 = uncached.gutt_mul(a, b);
    CHECK(r1 == r2);
    CHECK(to_string(r1) == to_string(r2));
  }
}

TEST_CASE("grading is preserved by products") {
  GuttContext ctx(LieAlgebra::so3(), 6);
  // straighten of a word of length m is homogeneous of grade 2m
  for (int rep = 0; rep < 10; ++rep) {
    GenWord w;
    int m = 1 + int(next() % 5);
    for (int i = 0; i < m; ++i) w.push_back(next() % 3);
    auto g = ctx.straighten(w).grade();
    REQUIRE(g.has_value());
    CHECK(*g == 2 * m);
  }
  // products add grades
  UEAElement a = ctx.straighten({2, 0});
  UEAElement b = ctx.straighten({1, 1, 0});
  auto ga = a.grade(), gb = b.grade(), gab = ctx.mul(a, b).grade();
  REQUIRE(ga);
  REQUIRE(gb);
  REQUIRE(gab);
  CHECK(*gab == *ga + *gb);
}
