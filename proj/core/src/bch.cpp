#include "dq/bch.hpp"

#include "dq/errors.hpp"

namespace dq {

namespace {

/// Series in the free associative algebra on two generators, truncated by
/// word length. Level m holds the 2^m coefficients of all length-m words;
/// word bits are read most-significant-letter-first.
struct FreeSeries2 {
  int max_len;
  std::vector<std::vector<Rational>> level;  // level[m][bits]

  explicit FreeSeries2(int L) : max_len(L), level(L + 1) {
    for (int m = 0; m <= L; ++m) level[m].assign(size_t(1) << m, Rational(0));
  }

  static FreeSeries2 one(int L) {
    FreeSeries2 s(L);
    s.level[0][0] = Rational(1);
    return s;
  }

  static FreeSeries2 generator(int L, int g) {
    FreeSeries2 s(L);
    s.level[1][g] = Rational(1);
    return s;
  }

  bool is_zero() const {
    for (const auto& lv : level)
      for (const auto& c : lv)
        if (!c.is_zero()) return false;
    return true;
  }

  FreeSeries2& operator+=(const FreeSeries2& o) {
    for (int m = 0; m <= max_len; ++m)
      for (size_t w = 0; w < level[m].size(); ++w) level[m][w] += o.level[m][w];
    return *this;
  }

  FreeSeries2& operator-=(const FreeSeries2& o) {
    for (int m = 0; m <= max_len; ++m)
      for (size_t w = 0; w < level[m].size(); ++w) level[m][w] -= o.level[m][w];
    return *this;
  }

  FreeSeries2& scale(const Rational& q) {
    for (auto& lv : level)
      for (auto& c : lv) c *= q;
    return *this;
  }

  friend FreeSeries2 operator*(const FreeSeries2& a, const FreeSeries2& b) {
    FreeSeries2 r(a.max_len);
    for (int ma = 0; ma <= a.max_len; ++ma)
      for (size_t wa = 0; wa < a.level[ma].size(); ++wa) {
        if (a.level[ma][wa].is_zero()) continue;
        for (int mb = 0; ma + mb <= a.max_len; ++mb)
          for (size_t wb = 0; wb < b.level[mb].size(); ++wb) {
            if (b.level[mb][wb].is_zero()) continue;
            r.level[ma + mb][(wa << mb) | wb] += a.level[ma][wa] * b.level[mb][wb];
          }
      }
    return r;
  }
};

FreeSeries2 exp_free(const FreeSeries2& a) {
  FreeSeries2 r = FreeSeries2::one(a.max_len);
  FreeSeries2 p = FreeSeries2::one(a.max_len);
  Rational fact(1);
  for (int k = 1; k <= a.max_len; ++k) {
    p = p * a;
    if (p.is_zero()) break;
    fact *= Rational(k);
    FreeSeries2 t = p;
    t.scale(fact.inverse());
    r += t;
  }
  return r;
}

FreeSeries2 log_free(const FreeSeries2& s) {
  // log(1 + t) with t = s - 1, valuation(t) >= 1
  FreeSeries2 t = s;
  t.level[0][0] -= Rational(1);
  if (!t.level[0][0].is_zero()) throw MathError("log_free: constant term must be 1");
  FreeSeries2 r(s.max_len);
  FreeSeries2 p = FreeSeries2::one(s.max_len);
  for (int m = 1; m <= s.max_len; ++m) {
    p = p * t;
    if (p.is_zero()) break;
    FreeSeries2 q = p;
    q.scale(Rational(m % 2 == 1 ? 1 : -1, m));
    r += q;
  }
  return r;
}

}  // namespace

GVector ch_lambda(const GVector& xi, const GVector& eta, int order) {
  if (!xi.alg->same_as(*eta.alg)) throw MathError("ch_lambda: Lie algebra mismatch");
  const int L = order + 1;  // a length-m word contributes at lambda^(m-1)

  FreeSeries2 ea = exp_free(FreeSeries2::generator(L, 0));
  FreeSeries2 eb = exp_free(FreeSeries2::generator(L, 1));
  FreeSeries2 z = log_free(ea * eb);

  GVector a = xi.order() == order ? xi : [&] {
    GVector t = gvector_zero(xi.alg, order);
    for (size_t l = 0; l < t.coords.size(); ++l)
      for (int k = 0; k <= std::min(order, xi.order()); ++k)
        t.coords[l].set_coeff(k, xi.coords[l].coeff(k));
    return t;
  }();
  GVector b = eta.order() == order ? eta : [&] {
    GVector t = gvector_zero(eta.alg, order);
    for (size_t l = 0; l < t.coords.size(); ++l)
      for (int k = 0; k <= std::min(order, eta.order()); ++k)
        t.coords[l].set_coeff(k, eta.coords[l].coeff(k));
    return t;
  }();

  GVector result = gvector_zero(a.alg, order);
  for (int m = 1; m <= L; ++m) {
    for (size_t w = 0; w < z.level[m].size(); ++w) {
      const Rational& c = z.level[m][w];
      if (c.is_zero()) continue;
      // right-nested bracketing [w_1, [w_2, [..., w_m]]], Dynkin factor 1/m
      GVector nested = ((w >> 0) & 1u) ? b : a;  // last letter
      for (int pos = 1; pos < m; ++pos) {
        const GVector& x = ((w >> pos) & 1u) ? b : a;
        nested = bracket_lambda(x, nested);
        if (nested.is_zero()) break;
      }
      if (nested.is_zero()) continue;
      nested.scale(c / Rational(m));
      result += nested;
    }
  }
  return result;
}

}  // namespace dq
