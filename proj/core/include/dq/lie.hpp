#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dq/series.hpp"

namespace dq {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct LieValidation {
  bool ok = true;
  std::string detail;  // first violated identity, with indices
};

/// Finite-dimensional Lie algebra given by structure constants
/// [X_i, X_j] = sum_k c_{ij}^k X_k over the rationals. The coordinate
/// functions on the dual carry the basis names.
class LieAlgebra {
 public:
  /// Bracket entries (i, j, k, c) meaning [X_i,X_j] contains c*X_k.
  /// The antisymmetric counterpart of every unset entry is filled in
  /// automatically; conflicting explicit entries are kept as given so that
  /// validate() can report them.
  struct BracketEntry {
    size_t i, j, k;
    Rational c;
  };
  static AlgebraPtr from_brackets(std::string name, std::vector<std::string> basis,
                                  const std::vector<BracketEntry>& entries);

  static AlgebraPtr so3();
  static AlgebraPtr heisenberg();
  static AlgebraPtr sl2();
  static AlgebraPtr abelian(size_t n);
  /// Looks up "so3", "h3", "sl2", "abelian<n>"; nullptr when unknown.
  static AlgebraPtr preset(const std::string& name);

  const std::string& name() const { return name_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Rational& c(size_t i, size_t j, size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  /// Variable universe of polynomials on the dual, named by the basis.
  const Vars& coords() const { return coords_; }

  LieValidation validate() const;

  bool same_as(const LieAlgebra& o) const;

 private:
  LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<Rational> c);

  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Rational> c_;  // dense n^3, row-major (i, j, k)
  Vars coords_;
};

/// Element of g_lambda: coordinates are scalar lambda-series in the fixed
/// basis, all with one truncation order.
struct GVector {
  AlgebraPtr alg;
  std::vector<ScalarSeries> coords;

  int order() const { return coords.at(0).order(); }
  bool is_zero() const;

  GVector& operator+=(const GVector& o);
  GVector& operator-=(const GVector& o);
  friend GVector operator+(GVector a, const GVector& b) { return a += b; }
  friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
  GVector operator-() const;
  GVector& scale(const Rational& q);
  GVector& scale(const ScalarSeries& s);
  friend bool operator==(const GVector& a, const GVector& b);
};

GVector gvector_zero(AlgebraPtr alg, int order);
GVector basis_vector(AlgebraPtr alg, size_t index, int order);

/// The rescaled bracket of g_lambda: [xi, eta]_lambda = lambda [xi, eta].
GVector bracket_lambda(const GVector& xi, const GVector& eta);

/// Kirillov-Poisson bracket on polynomials over the dual:
/// Pi(u,v) = sum c_{ij}^k mu_k (d_i u)(d_j v).
Poly kirillov_poisson(const Poly& u, const Poly& v, const LieAlgebra& alg);
PolySeries kirillov_poisson(const PolySeries& u, const PolySeries& v, const LieAlgebra& alg);

/// The linear polynomial series sum_l xi^l mu_l.
PolySeries to_linear_series(const GVector& xi);
/// Inverse of to_linear_series; throws MathError when the input is not
/// linear without constant term.
GVector from_linear_series(const PolySeries& s, AlgebraPtr alg);

}  // namespace dq
