#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dq/monomial.hpp"
#include "dq/rational.hpp"

namespace dq {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable universe. Terms are kept in descending graded-lex order
/// (the canonical printing order); zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(Vars vars) : vars_(std::move(vars)) {}
  static Poly constant(Vars vars, Rational c);
  static Poly variable(Vars vars, size_t index);
  static Poly monomial(Vars vars, Exponents e, Rational c);

  const Vars& vars() const { return vars_; }
  size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the unit monomial

  /// Total degree; nullopt is the "minus infinity" degree of the zero poly.
  std::optional<int> degree() const;

  Rational coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, Rational c);
  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly& operator*=(const Rational& c);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(size_t var) const;
  /// Iterated plain partial derivative for a multi-index.
  Poly derivative_multi(const Exponents& index) const;

  Poly pow(unsigned k) const;

  /// Substitutes values[i] for variable i; all values share one universe.
  Poly substitute(const std::vector<Poly>& values) const;

  /// Leading term under the given order (largest monomial). Zero poly: none.
  std::optional<std::pair<Exponents, Rational>> leading_term(TermOrder ord) const;

 private:
  void check_same_universe(const Poly& o) const;

  Vars vars_;
  TermMap terms_;
};

}  // namespace dq
