#pragma once

#include <vector>

#include "dq/errors.hpp"
#include "dq/poly.hpp"
#include "dq/rational.hpp"

namespace dq {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Poly zero_like(const Poly& p) { return Poly(p.vars()); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Poly one_like(const Poly& p) { return Poly::constant(p.vars(), Rational(1)); }
inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline bool ring_is_zero(const Poly& p) { return p.is_zero(); }

/// Truncated formal power series in the deformation parameter over a
/// coefficient ring R (Rational or Poly). Coefficients c_0..c_N are stored
/// densely; the truncation order N is inclusive. Binary operations carry the
/// minimum of the operands' truncation orders, and equality compares
/// coefficientwise up to the common truncation order.
template <class R>
class LambdaSeries {
 public:
  LambdaSeries(R zero, int order) : order_(order), c_(static_cast<size_t>(order) + 1, zero) {
    if (order < 0) throw MathError("series truncation order must be >= 0");
  }

  static LambdaSeries constant(R c0, int order) {
    LambdaSeries s(zero_like(c0), order);
    s.c_[0] = std::move(c0);
    return s;
  }

  int order() const { return order_; }
  const R& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  R& coeff_mut(int k) { return c_.at(static_cast<size_t>(k)); }
  void set_coeff(int k, R v) { c_.at(static_cast<size_t>(k)) = std::move(v); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  /// Order of the lowest nonzero coefficient; order()+1 when zero.
  int valuation() const {
    for (int k = 0; k <= order_; ++k)
      if (!ring_is_zero(c_[k])) return k;
    return order_ + 1;
  }

  LambdaSeries truncated(int new_order) const {
    int n = std::min(new_order, order_);
    LambdaSeries r(zero_like(c_[0]), n);
    for (int k = 0; k <= n; ++k) r.c_[k] = c_[k];
    return r;
  }

  /// Multiplication by lambda^k (coefficients above the window are lost).
  LambdaSeries shifted(int k) const {
    LambdaSeries r(zero_like(c_[0]), order_);
    for (int j = 0; j + k <= order_; ++j) r.c_[j + k] = c_[j];
    return r;
  }

  /// Exact division by lambda^k; throws std::logic_error when any of the low
  /// coefficients is nonzero (an implementation bug, never a data error).
  LambdaSeries divided_by_lambda(int k) const {
    for (int j = 0; j < k && j <= order_; ++j)
      if (!ring_is_zero(c_[j]))
        throw std::logic_error("series not divisible by lambda^" + std::to_string(k));
    LambdaSeries r(zero_like(c_[0]), order_);
    for (int j = k; j <= order_; ++j) r.c_[j - k] = c_[j];
    return r;
  }

  LambdaSeries& operator+=(const LambdaSeries& o) { return merge(o, +1); }
  LambdaSeries& operator-=(const LambdaSeries& o) { return merge(o, -1); }
  friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
  friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }

  LambdaSeries operator-() const {
    LambdaSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    int n = std::min(a.order_, b.order_);
    LambdaSeries r(zero_like(a.c_[0]), n);
    for (int i = 0; i <= n; ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  LambdaSeries& operator*=(const LambdaSeries& o) { return *this = *this * o; }

  LambdaSeries& operator*=(const R& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }
  friend LambdaSeries operator*(LambdaSeries a, const R& s) { return a *= s; }
  friend LambdaSeries operator*(const R& s, LambdaSeries a) { return a *= s; }

  /// Scales every coefficient by a rational (works for both Rational and
  /// Poly coefficient rings).
  LambdaSeries& scale_rational(const Rational& q) {
    for (auto& x : c_) x = x * q;
    return *this;
  }

  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int k = 0; k <= n; ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }
  friend bool operator!=(const LambdaSeries& a, const LambdaSeries& b) { return !(a == b); }

 private:
  LambdaSeries& merge(const LambdaSeries& o, int sig) {
    if (o.order_ < order_) {
      c_.erase(c_.begin() + o.order_ + 1, c_.end());
      order_ = o.order_;
    }
    for (int k = 0; k <= order_; ++k) {
      if (sig > 0)
        c_[k] += o.c_[k];
      else
        c_[k] -= o.c_[k];
    }
    return *this;
  }

  int order_;
  std::vector<R> c_;
};

using ScalarSeries = LambdaSeries<Rational>;
using PolySeries = LambdaSeries<Poly>;

/// exp of a series whose constant (lambda^0) term vanishes; the sum is then
/// finite at the truncation order. A nonzero constant term is not
/// representable in this ring and is rejected.
template <class R>
LambdaSeries<R> exp_nilpotent(const LambdaSeries<R>& a) {
  if (!ring_is_zero(a.coeff(0)))
    throw MathError("exp_nilpotent: series has a nonzero lambda^0 coefficient");
  LambdaSeries<R> result = LambdaSeries<R>::constant(one_like(a.coeff(0)), a.order());
  LambdaSeries<R> power = result;
  Rational factorial(1);
  for (int k = 1; k <= a.order(); ++k) {
    power = power * a;
    if (power.is_zero()) break;
    factorial *= Rational(k);
    LambdaSeries<R> term = power;
    term.scale_rational(factorial.inverse());
    result += term;
  }
  return result;
}

/// Helpers for building scalar series.
ScalarSeries inline scalar_series(Rational c0, int order) {
  return ScalarSeries::constant(std::move(c0), order);
}

PolySeries inline poly_series_zero(const Vars& vars, int order) {
  return PolySeries(Poly(vars), order);
}

PolySeries inline poly_series_constant(Poly p0, int order) {
  return PolySeries::constant(std::move(p0), order);
}

/// Multiplies a poly-series by a scalar series (coefficients act diagonally).
PolySeries inline scale(const PolySeries& p, const ScalarSeries& s) {
  int n = std::min(p.order(), s.order());
  PolySeries r = poly_series_zero(p.coeff(0).vars(), n);
  for (int i = 0; i <= n; ++i) {
    if (s.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) r.coeff_mut(i + j) += p.coeff(j) * s.coeff(i);
  }
  return r;
}

}  // namespace dq
