#include "dq/lie.hpp"

#include <sstream>

#include "dq/errors.hpp"

namespace dq {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<Rational> c)
    : name_(std::move(name)), basis_(std::move(basis)), c_(std::move(c)) {
  coords_ = make_vars(basis_);
}

AlgebraPtr LieAlgebra::from_brackets(std::string name, std::vector<std::string> basis,
                                     const std::vector<BracketEntry>& entries) {
  const size_t n = basis.size();
  std::vector<Rational> c(n * n * n, Rational(0));
  std::vector<bool> given(n * n * n, false);
  auto at = [n](size_t i, size_t j, size_t k) { return (i * n + j) * n + k; };
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n) throw ParseError("bracket index out of range");
    size_t idx = at(e.i, e.j, e.k);
    if (given[idx]) throw ParseError("duplicate bracket entry for the same (i, j, k)");
    c[idx] = e.c;
    given[idx] = true;
  }
  // antisymmetric completion of unspecified mirror entries
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (given[at(i, j, k)] && !given[at(j, i, k)]) {
          c[at(j, i, k)] = -c[at(i, j, k)];
          given[at(j, i, k)] = true;
        }
  return AlgebraPtr(new LieAlgebra(std::move(name), std::move(basis), std::move(c)));
}

AlgebraPtr LieAlgebra::so3() {
  static AlgebraPtr alg = from_brackets("so3", {"x", "y", "z"},
                                        {{0, 1, 2, Rational(1)},
                                         {1, 2, 0, Rational(1)},
                                         {2, 0, 1, Rational(1)}});
  return alg;
}

AlgebraPtr LieAlgebra::heisenberg() {
  static AlgebraPtr alg = from_brackets("h3", {"P", "Q", "Z"}, {{0, 1, 2, Rational(1)}});
  return alg;
}

AlgebraPtr LieAlgebra::sl2() {
  static AlgebraPtr alg = from_brackets("sl2", {"H", "E", "F"},
                                        {{0, 1, 1, Rational(2)},
                                         {0, 2, 2, Rational(-2)},
                                         {1, 2, 0, Rational(1)}});
  return alg;
}

AlgebraPtr LieAlgebra::abelian(size_t n) {
  std::vector<std::string> basis;
  for (size_t i = 1; i <= n; ++i) basis.push_back("a" + std::to_string(i));
  return from_brackets("abelian" + std::to_string(n), std::move(basis), {});
}

AlgebraPtr LieAlgebra::preset(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "h3") return heisenberg();
  if (name == "sl2") return sl2();
  if (name.rfind("abelian", 0) == 0) {
    std::string tail = name.substr(7);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      size_t n = std::stoul(tail);
      if (n >= 1 && n <= 64) return abelian(n);
    }
  }
  return nullptr;
}

LieValidation LieAlgebra::validate() const {
  const size_t n = dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry violation at (" << i + 1 << "," << j + 1 << "," << k + 1 << "): c["
             << basis_[i] << "," << basis_[j] << "->" << basis_[k] << "] = " << c(i, j, k).str()
             << " but c[" << basis_[j] << "," << basis_[i] << "->" << basis_[k]
             << "] = " << c(j, i, k).str();
          return {false, os.str()};
        }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          Rational sum(0);
          for (size_t m = 0; m < n; ++m) {
            sum += c(i, j, m) * c(m, k, l);
            sum += c(j, k, m) * c(m, i, l);
            sum += c(k, i, m) * c(m, j, l);
          }
          if (!sum.is_zero()) {
            std::ostringstream os;
            os << "Jacobi violation at (i,j,k;l) = (" << i + 1 << "," << j + 1 << "," << k + 1
               << ";" << l + 1 << "): sum = " << sum.str();
            return {false, os.str()};
          }
        }
  return {true, "ok"};
}

bool LieAlgebra::same_as(const LieAlgebra& o) const {
  return this == &o || (basis_ == o.basis_ && c_ == o.c_);
}

namespace {
void check_compatible(const GVector& a, const GVector& b) {
  if (!a.alg || !b.alg || !a.alg->same_as(*b.alg)) throw MathError("Lie algebra mismatch");
}
}  // namespace

bool GVector::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

GVector& GVector::operator+=(const GVector& o) {
  check_compatible(*this, o);
  for (size_t l = 0; l < coords.size(); ++l) coords[l] += o.coords[l];
  return *this;
}

GVector& GVector::operator-=(const GVector& o) {
  check_compatible(*this, o);
  for (size_t l = 0; l < coords.size(); ++l) coords[l] -= o.coords[l];
  return *this;
}

GVector GVector::operator-() const {
  GVector r(*this);
  for (auto& c : r.coords) c = -c;
  return r;
}

GVector& GVector::scale(const Rational& q) {
  for (auto& c : coords) c *= q;
  return *this;
}

GVector& GVector::scale(const ScalarSeries& s) {
  for (auto& c : coords) c = c * s;
  return *this;
}

bool operator==(const GVector& a, const GVector& b) {
  check_compatible(a, b);
  for (size_t l = 0; l < a.coords.size(); ++l)
    if (a.coords[l] != b.coords[l]) return false;
  return true;
}

GVector gvector_zero(AlgebraPtr alg, int order) {
  GVector v;
  v.coords.assign(alg->dim(), ScalarSeries(Rational(0), order));
  v.alg = std::move(alg);
  return v;
}

GVector basis_vector(AlgebraPtr alg, size_t index, int order) {
  GVector v = gvector_zero(std::move(alg), order);
  v.coords.at(index).set_coeff(0, Rational(1));
  return v;
}

GVector bracket_lambda(const GVector& xi, const GVector& eta) {
  check_compatible(xi, eta);
  if (xi.order() != eta.order()) throw MathError("bracket_lambda: truncation orders differ");
  const LieAlgebra& alg = *xi.alg;
  const size_t n = alg.dim();
  GVector r = gvector_zero(xi.alg, xi.order());
  for (size_t i = 0; i < n; ++i) {
    if (xi.coords[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (eta.coords[j].is_zero()) continue;
      ScalarSeries prod = xi.coords[i] * eta.coords[j];
      for (size_t k = 0; k < n; ++k) {
        const Rational& ck = alg.c(i, j, k);
        if (ck.is_zero()) continue;
        ScalarSeries t = prod;
        t *= ck;
        r.coords[k] += t.shifted(1);  // one factor of lambda per bracket
      }
    }
  }
  return r;
}

Poly kirillov_poisson(const Poly& u, const Poly& v, const LieAlgebra& alg) {
  if (!same_vars(u.vars(), alg.coords()) || !same_vars(v.vars(), alg.coords()))
    throw ParseError("kirillov_poisson: polynomials must live on the dual coordinates");
  const size_t n = alg.dim();
  Poly r(alg.coords());
  std::vector<Poly> du, dv;
  du.reserve(n);
  dv.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    du.push_back(u.derivative(i));
    dv.push_back(v.derivative(i));
  }
  for (size_t i = 0; i < n; ++i) {
    if (du[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (dv[j].is_zero()) continue;
      Poly prod = du[i] * dv[j];
      for (size_t k = 0; k < n; ++k) {
        const Rational& ck = alg.c(i, j, k);
        if (ck.is_zero()) continue;
        r += prod * Poly::variable(alg.coords(), k) * ck;
      }
    }
  }
  return r;
}

PolySeries kirillov_poisson(const PolySeries& u, const PolySeries& v, const LieAlgebra& alg) {
  int n = std::min(u.order(), v.order());
  PolySeries r = poly_series_zero(alg.coords(), n);
  for (int i = 0; i <= n; ++i) {
    if (u.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (v.coeff(j).is_zero()) continue;
      r.coeff_mut(i + j) += kirillov_poisson(u.coeff(i), v.coeff(j), alg);
    }
  }
  return r;
}

PolySeries to_linear_series(const GVector& xi) {
  const Vars& vars = xi.alg->coords();
  PolySeries r = poly_series_zero(vars, xi.order());
  for (size_t l = 0; l < xi.coords.size(); ++l)
    for (int k = 0; k <= xi.order(); ++k)
      if (!xi.coords[l].coeff(k).is_zero())
        r.coeff_mut(k) += Poly::variable(vars, l) * xi.coords[l].coeff(k);
  return r;
}

GVector from_linear_series(const PolySeries& s, AlgebraPtr alg) {
  GVector v = gvector_zero(alg, s.order());
  for (int k = 0; k <= s.order(); ++k) {
    const Poly& p = s.coeff(k);
    for (const auto& [e, c] : p.terms()) {
      if (total_degree(e) != 1)
        throw MathError("expected a linear expression without constant term");
      for (size_t l = 0; l < e.size(); ++l)
        if (e[l] == 1) v.coords[l].set_coeff(k, c);
    }
  }
  return v;
}

}  // namespace dq
