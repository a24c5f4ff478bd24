#pragma once

#include <map>
#include <optional>

#include "dq/series.hpp"

namespace dq {

/// Constant symplectic structure on R^{2n}: the 2-form matrix omega_{ij} and
/// its inverse omega^{ij} (the Poisson tensor entering the Moyal rule).
struct SymplecticData {
  size_t dim;                       // 2n
  std::vector<Rational> omega;      // row-major dim x dim, antisymmetric
  std::vector<Rational> omega_inv;  // omega_inv * omega = identity

  SymplecticData(size_t dim, std::vector<Rational> omega_matrix);
  /// Block-diagonal standard structure: omega^{2k,2k+1} = 1.
  static SymplecticData standard(size_t n);

  const Rational& w(size_t i, size_t j) const { return omega[i * dim + j]; }
  const Rational& winv(size_t i, size_t j) const { return omega_inv[i * dim + j]; }
};

/// Moyal-Weyl product with a constant Poisson tensor:
///   a o b = sum_k (lambda/2)^k (1/k!) w^{i1 j1} ... w^{ik jk}
///           d_{i1..ik} a  d_{j1..jk} b,
/// differentiating the `dim` consecutive variables starting at var_offset.
/// Associative; the lambda^0 part is the pointwise product.
PolySeries moyal_product(const PolySeries& a, const PolySeries& b, const SymplecticData& symp,
                         size_t var_offset, int order);

/// Workspace for Weyl-bundle computations over a flat base: variables are
/// the base coordinates x^1..x^{2n} followed by the fiber coordinates
/// y^1..y^{2n}; coefficients are lambda-series. The filtration assigns
/// deg(y) = 1 and deg(lambda) = 2.
class WeylContext {
 public:
  WeylContext(SymplecticData symp, int order, std::vector<std::string> base_names = {});

  const SymplecticData& symplectic() const { return symp_; }
  size_t dim() const { return symp_.dim; }
  int order() const { return order_; }
  const Vars& vars() const { return vars_; }
  const std::vector<std::string>& base_names() const { return base_names_; }

  size_t x_var(size_t i) const { return i; }
  size_t y_var(size_t i) const { return symp_.dim + i; }

  PolySeries zero() const { return poly_series_zero(vars_, order_); }
  PolySeries one() const {
    return poly_series_constant(Poly::constant(vars_, Rational(1)), order_);
  }
  /// Lifts a polynomial series over the base names into the full universe.
  PolySeries lift_base(const PolySeries& base_fn) const;
  /// Restriction to y = 0 (the sigma projection keeps base dependence).
  PolySeries restrict_to_base(const PolySeries& section) const;

  PolySeries moyal(const PolySeries& a, const PolySeries& b) const {
    return moyal_product(a, b, symp_, symp_.dim, order_);
  }

  /// Filtration degree bounds of an element: min/max over terms of
  /// (y-degree + 2 lambda-power). nullopt for zero.
  std::optional<int> min_filtration(const PolySeries& a) const;
  std::optional<int> max_filtration(const PolySeries& a) const;
  int y_degree(const Exponents& e) const;

 private:
  SymplecticData symp_;
  int order_;
  std::vector<std::string> base_names_;
  Vars vars_;
};

/// Form index: strictly increasing base indices of a wedge dx^{i1} ^ ... .
using FormIndex = std::vector<uint8_t>;

/// Weyl-algebra element with antisymmetric form indices (possibly of mixed
/// form degree). Zero-value components are never stored.
class WeylForm {
 public:
  explicit WeylForm(const WeylContext* ctx) : ctx_(ctx) {}
  static WeylForm scalar(const WeylContext* ctx, PolySeries value);

  const WeylContext& ctx() const { return *ctx_; }
  const std::map<FormIndex, PolySeries>& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  PolySeries component(const FormIndex& idx) const;

  /// Adds value on dx^{i1} ^ ... with an arbitrary (possibly unsorted) index
  /// tuple; the sign of the sorting permutation is applied, repeated indices
  /// drop the term.
  void add(FormIndex idx, const PolySeries& value);

  WeylForm& operator+=(const WeylForm& o);
  WeylForm& operator-=(const WeylForm& o);
  friend WeylForm operator+(WeylForm a, const WeylForm& b) { return a += b; }
  friend WeylForm operator-(WeylForm a, const WeylForm& b) { return a -= b; }
  WeylForm operator-() const;
  WeylForm& scale_rational(const Rational& q);
  friend bool operator==(const WeylForm& a, const WeylForm& b);

  /// Wedge product with Moyal multiplication on coefficients.
  friend WeylForm wedge_mul(const WeylForm& a, const WeylForm& b);
  /// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba, degrees per component.
  friend WeylForm graded_comm(const WeylForm& a, const WeylForm& b);

  WeylForm divided_by_lambda(int k) const;  // exact, throws std::logic_error
  WeylForm shifted_lambda(int k) const;

  std::optional<int> min_filtration() const;  // over all components

 private:
  void add_canonical(const FormIndex& idx, const PolySeries& value);

  const WeylContext* ctx_;
  std::map<FormIndex, PolySeries> comp_;
};

/// delta a = dx^k ^ da/dy^k; an odd derivation with delta^2 = 0.
WeylForm delta(const WeylForm& a);
/// The de Rham-type homotopy: on a term of y-degree p and form degree q it
/// multiplies by 1/(p+q), applies y^k times the contraction of dx^k, and
/// vanishes on p + q = 0. Satisfies (delta_inv)^2 = 0 and the termwise
/// decomposition a = delta delta_inv a + delta_inv delta a + a|_{y=dx=0}.
WeylForm delta_inv(const WeylForm& a);
/// Flat-base covariant derivative: d in the base variables with a wedge.
WeylForm partial_d(const WeylForm& a);
/// The (y = 0, dx = 0) part entering the Hodge-type decomposition.
WeylForm center_part(const WeylForm& a);

}  // namespace dq
