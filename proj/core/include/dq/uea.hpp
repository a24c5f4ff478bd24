#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dq/lie.hpp"
#include "dq/series.hpp"

namespace dq {

/// Element of the universal enveloping algebra of g_lambda in PBW normal
/// form: a map from ordered monomials X^J (J an exponent vector over the
/// fixed basis) to scalar lambda-series coefficients. Only PBW-ordered
/// monomials are represented; the grading assigns X^J lambda^k degree
/// 2|J| + 2k.
class UEAElement {
 public:
  using TermMap = std::map<Exponents, ScalarSeries, GrlexGreater>;

  UEAElement(AlgebraPtr alg, int order) : alg_(std::move(alg)), order_(order) {}

  static UEAElement unit(AlgebraPtr alg, int order);
  static UEAElement generator(AlgebraPtr alg, size_t index, int order);

  const AlgebraPtr& algebra() const { return alg_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ScalarSeries coeff(const Exponents& J) const;
  void add_term(const Exponents& J, const ScalarSeries& c);
  void add_scaled(const UEAElement& o, const ScalarSeries& c);
  void add_scaled_shifted(const UEAElement& o, const Rational& c, int lambda_shift);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  UEAElement operator-() const;
  UEAElement& scale(const Rational& q);
  UEAElement& scale(const ScalarSeries& s);
  friend bool operator==(const UEAElement& a, const UEAElement& b);

  /// 2|J| + 2k over the support; nullopt when inhomogeneous or zero.
  std::optional<int> grade() const;

 private:
  AlgebraPtr alg_;
  int order_;
  TermMap terms_;
};

/// Word of generator indices, to be PBW-straightened.
using GenWord = std::vector<size_t>;

/// Gutt-product engine for one algebra at one truncation order. Owns the
/// memoization caches (symmetrized basis monomials, single-generator PBW
/// rewrites, and Gutt products of monomial pairs). All operations are pure;
/// caching only trades time for memory and never changes a result, which can
/// be checked by constructing a context with caching disabled.
class GuttContext {
 public:
  GuttContext(AlgebraPtr alg, int order, bool enable_cache = true);
  ~GuttContext();
  GuttContext(const GuttContext&) = delete;
  GuttContext& operator=(const GuttContext&) = delete;

  const AlgebraPtr& algebra() const;
  int order() const;
  const Vars& coords() const;
  bool cache_enabled() const;

  size_t max_word_length() const;
  void set_max_word_length(size_t n);

  /// PBW normal form of X_{w_1} ... X_{w_m} (times an optional coefficient);
  /// each swap correction X_j X_i -> X_i X_j + [X_j, X_i]_lambda carries one
  /// power of lambda.
  UEAElement straighten(const GenWord& word) const;
  UEAElement straighten(const GenWord& word, const ScalarSeries& coeff) const;

  /// The symmetrization map on a polynomial series in the dual coordinates.
  UEAElement symmetrize(const PolySeries& u) const;
  /// s(mu^J) for a single monomial.
  UEAElement symmetrize_monomial(const Exponents& J) const;
  /// Inverse of the symmetrization map, by downward induction on degree.
  PolySeries unsymmetrize(const UEAElement& A) const;

  /// Product in the enveloping algebra (PBW normal form of the result).
  UEAElement mul(const UEAElement& A, const UEAElement& B) const;

  /// The Gutt star product u * v = s^{-1}(s(u) s(v)), and its commutator.
  PolySeries gutt_mul(const PolySeries& u, const PolySeries& v) const;
  PolySeries gutt_comm(const PolySeries& u, const PolySeries& v) const;

  /// Gutt product of two basis monomials (exposed for tests and tooling).
  PolySeries monomial_product(const Exponents& I, const Exponents& J) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dq
