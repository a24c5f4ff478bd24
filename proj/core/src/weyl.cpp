#include "dq/weyl.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

namespace {

// exact inverse of a small rational matrix by Gauss-Jordan elimination
std::vector<Rational> invert_matrix(const std::vector<Rational>& m, size_t n) {
  std::vector<Rational> a = m;
  std::vector<Rational> inv(n * n, Rational(0));
  for (size_t i = 0; i < n; ++i) inv[i * n + i] = Rational(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) throw MathError("symplectic matrix is singular");
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    Rational p = a[col * n + col];
    for (size_t j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      Rational f = a[r * n + col];
      for (size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

SymplecticData::SymplecticData(size_t d, std::vector<Rational> omega_matrix)
    : dim(d), omega(std::move(omega_matrix)) {
  if (dim == 0 || dim % 2 != 0) throw MathError("symplectic dimension must be even and positive");
  if (omega.size() != dim * dim) throw ParseError("omega matrix has wrong shape");
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      if (w(i, j) != -w(j, i)) throw MathError("omega matrix is not antisymmetric");
  omega_inv = invert_matrix(omega, dim);
}

SymplecticData SymplecticData::standard(size_t n) {
  size_t d = 2 * n;
  std::vector<Rational> m(d * d, Rational(0));
  for (size_t k = 0; k < n; ++k) {
    // omega_{2k,2k+1} = -1 so that the Poisson tensor has w^{2k,2k+1} = +1
    m[(2 * k) * d + (2 * k + 1)] = Rational(-1);
    m[(2 * k + 1) * d + (2 * k)] = Rational(1);
  }
  return SymplecticData(d, std::move(m));
}

PolySeries moyal_product(const PolySeries& a, const PolySeries& b, const SymplecticData& symp,
                         size_t var_offset, int order) {
  const Vars& vars = a.coeff(0).vars();
  if (!same_vars(vars, b.coeff(0).vars())) throw ParseError("moyal_product: universe mismatch");
  if (vars->size() < var_offset + symp.dim) throw ParseError("moyal_product: dimension mismatch");
  int n = std::min({order, a.order(), b.order()});

  PolySeries result = poly_series_zero(vars, n);

  // iterated first-order bidifferential step: tables of derivatives d^K a
  // are built on demand, organized by |K| = k
  using DerivMap = std::map<Exponents, PolySeries, GrlexGreater>;  // K (dim-sized) -> d^K
  DerivMap da, db;
  Exponents zero(symp.dim, 0);
  da.emplace(zero, a.truncated(n));
  db.emplace(zero, b.truncated(n));

  auto derive = [&](const DerivMap& prev) {
    DerivMap next;
    for (const auto& [K, val] : prev) {
      for (size_t i = 0; i < symp.dim; ++i) {
        Exponents K2 = K;
        K2[i] += 1;
        if (next.count(K2)) continue;
        PolySeries d = poly_series_zero(vars, n);
        bool nonzero = false;
        for (int t = 0; t <= n; ++t) {
          Poly dp = val.coeff(t).derivative(var_offset + i);
          if (!dp.is_zero()) nonzero = true;
          d.set_coeff(t, std::move(dp));
        }
        if (nonzero) next.emplace(std::move(K2), std::move(d));
      }
    }
    return next;
  };

  // contraction coefficients: B^k where B = sum w^{ij} s_i t_j, expanded as
  // coefficients over pairs of multi-indices (K, L)
  struct Contraction {
    Exponents K, L;
    Rational c;
  };
  std::vector<Contraction> current{{zero, zero, Rational(1)}};

  Rational half_pow(1);
  Rational factorial(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      // advance B^k = B^{k-1} * B and the derivative tables
      std::map<std::pair<Exponents, Exponents>, Rational> acc;
      for (const auto& t : current) {
        for (size_t i = 0; i < symp.dim; ++i)
          for (size_t j = 0; j < symp.dim; ++j) {
            const Rational& w = symp.winv(i, j);
            if (w.is_zero()) continue;
            Exponents K2 = t.K, L2 = t.L;
            K2[i] += 1;
            L2[j] += 1;
            acc[{std::move(K2), std::move(L2)}] += t.c * w;
          }
      }
      current.clear();
      for (auto& [kl, c] : acc)
        if (!c.is_zero()) current.push_back({kl.first, kl.second, c});
      if (current.empty()) break;
      da = derive(da);
      db = derive(db);
      if (da.empty() || db.empty()) break;
      half_pow *= Rational(1, 2);
      factorial *= Rational(k);
    }
    Rational scale = half_pow / factorial;  // (1/2)^k / k!
    for (const auto& t : current) {
      auto ia = da.find(t.K);
      if (ia == da.end()) continue;
      auto ib = db.find(t.L);
      if (ib == db.end()) continue;
      PolySeries prod = ia->second * ib->second;
      prod.scale_rational(t.c * scale);
      result += prod.shifted(k);  // lambda^k
    }
  }
  return result;
}

WeylContext::WeylContext(SymplecticData symp, int order, std::vector<std::string> base_names)
    : symp_(std::move(symp)), order_(order), base_names_(std::move(base_names)) {
  if (base_names_.empty()) {
    if (symp_.dim == 2) {
      base_names_ = {"q", "p"};
    } else {
      for (size_t k = 0; k < symp_.dim / 2; ++k) {
        base_names_.push_back("q" + std::to_string(k + 1));
        base_names_.push_back("p" + std::to_string(k + 1));
      }
    }
  }
  if (base_names_.size() != symp_.dim) throw ParseError("base variable count must equal 2n");
  std::vector<std::string> names = base_names_;
  for (size_t i = 1; i <= symp_.dim; ++i) names.push_back("y" + std::to_string(i));
  vars_ = make_vars(std::move(names));
}

PolySeries WeylContext::lift_base(const PolySeries& base_fn) const {
  PolySeries out = zero();
  int n = std::min(order_, base_fn.order());
  for (int k = 0; k <= n; ++k) {
    Poly lifted(vars_);
    for (const auto& [e, c] : base_fn.coeff(k).terms()) {
      Exponents ext(vars_->size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ext[i] = e[i];
      lifted.add_term(ext, c);
    }
    out.set_coeff(k, std::move(lifted));
  }
  return out;
}

PolySeries WeylContext::restrict_to_base(const PolySeries& section) const {
  PolySeries out = zero();
  for (int k = 0; k <= std::min(order_, section.order()); ++k) {
    Poly kept(vars_);
    for (const auto& [e, c] : section.coeff(k).terms()) {
      bool pure_base = true;
      for (size_t i = 0; i < symp_.dim; ++i)
        if (e[y_var(i)] != 0) {
          pure_base = false;
          break;
        }
      if (pure_base) kept.add_term(e, c);
    }
    out.set_coeff(k, std::move(kept));
  }
  return out;
}

int WeylContext::y_degree(const Exponents& e) const {
  int d = 0;
  for (size_t i = 0; i < symp_.dim; ++i) d += e[y_var(i)];
  return d;
}

std::optional<int> WeylContext::min_filtration(const PolySeries& a) const {
  std::optional<int> best;
  for (int k = 0; k <= a.order(); ++k)
    for (const auto& [e, c] : a.coeff(k).terms()) {
      int d = y_degree(e) + 2 * k;
      if (!best || d < *best) best = d;
    }
  return best;
}

std::optional<int> WeylContext::max_filtration(const PolySeries& a) const {
  std::optional<int> best;
  for (int k = 0; k <= a.order(); ++k)
    for (const auto& [e, c] : a.coeff(k).terms()) {
      int d = y_degree(e) + 2 * k;
      if (!best || d > *best) best = d;
    }
  return best;
}

// --- WeylForm ---------------------------------------------------------------

WeylForm WeylForm::scalar(const WeylContext* ctx, PolySeries value) {
  WeylForm f(ctx);
  f.add_canonical({}, value);
  return f;
}

PolySeries WeylForm::component(const FormIndex& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? ctx_->zero() : it->second;
}

void WeylForm::add_canonical(const FormIndex& idx, const PolySeries& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = comp_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

void WeylForm::add(FormIndex idx, const PolySeries& value) {
  // sort the wedge index, tracking the permutation sign
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return;  // repeated dx
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return;
  if (sign > 0) {
    add_canonical(idx, value);
  } else {
    PolySeries neg = -value;
    add_canonical(idx, neg);
  }
}

WeylForm& WeylForm::operator+=(const WeylForm& o) {
  for (const auto& [idx, v] : o.comp_) add_canonical(idx, v);
  return *this;
}

WeylForm& WeylForm::operator-=(const WeylForm& o) {
  for (const auto& [idx, v] : o.comp_) add_canonical(idx, -v);
  return *this;
}

WeylForm WeylForm::operator-() const {
  WeylForm r(ctx_);
  for (const auto& [idx, v] : comp_) r.comp_.emplace(idx, -v);
  return r;
}

WeylForm& WeylForm::scale_rational(const Rational& q) {
  if (q.is_zero()) {
    comp_.clear();
    return *this;
  }
  for (auto& [idx, v] : comp_) v.scale_rational(q);
  return *this;
}

bool operator==(const WeylForm& a, const WeylForm& b) {
  if (a.comp_.size() != b.comp_.size()) return false;
  auto ia = a.comp_.begin();
  auto ib = b.comp_.begin();
  for (; ia != a.comp_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

WeylForm wedge_mul(const WeylForm& a, const WeylForm& b) {
  WeylForm r(a.ctx_);
  for (const auto& [ia, va] : a.comp_)
    for (const auto& [ib, vb] : b.comp_) {
      FormIndex merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add(std::move(merged), a.ctx_->moyal(va, vb));
    }
  return r;
}

WeylForm graded_comm(const WeylForm& a, const WeylForm& b) {
  WeylForm r(a.ctx_);
  for (const auto& [ia, va] : a.comp_)
    for (const auto& [ib, vb] : b.comp_) {
      FormIndex merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add(merged, a.ctx_->moyal(va, vb));
      int sign = (ia.size() * ib.size()) % 2 == 0 ? 1 : -1;
      FormIndex merged_rev = ib;
      merged_rev.insert(merged_rev.end(), ia.begin(), ia.end());
      PolySeries ba = a.ctx_->moyal(vb, va);
      if (sign > 0) ba = -ba;  // subtract (-1)^{|a||b|} b a
      // wedge sign of (ib, ia) ordering is handled by add()
      WeylForm tmp(a.ctx_);
      tmp.add(std::move(merged_rev), ba);
      r += tmp;
    }
  return r;
}

WeylForm WeylForm::divided_by_lambda(int k) const {
  WeylForm r(ctx_);
  for (const auto& [idx, v] : comp_) r.comp_.emplace(idx, v.divided_by_lambda(k));
  return r;
}

WeylForm WeylForm::shifted_lambda(int k) const {
  WeylForm r(ctx_);
  for (const auto& [idx, v] : comp_) {
    PolySeries s = v.shifted(k);
    if (!s.is_zero()) r.comp_.emplace(idx, std::move(s));
  }
  return r;
}

std::optional<int> WeylForm::min_filtration() const {
  std::optional<int> best;
  for (const auto& [idx, v] : comp_) {
    auto m = ctx_->min_filtration(v);
    if (m && (!best || *m < *best)) best = m;
  }
  return best;
}

WeylForm delta(const WeylForm& a) {
  const WeylContext& ctx = a.ctx();
  WeylForm r(&ctx);
  for (const auto& [idx, v] : a.components()) {
    for (size_t k = 0; k < ctx.dim(); ++k) {
      PolySeries d = poly_series_zero(ctx.vars(), v.order());
      bool nonzero = false;
      for (int t = 0; t <= v.order(); ++t) {
        Poly dp = v.coeff(t).derivative(ctx.y_var(k));
        if (!dp.is_zero()) nonzero = true;
        d.set_coeff(t, std::move(dp));
      }
      if (!nonzero) continue;
      FormIndex ext;
      ext.push_back(uint8_t(k));
      ext.insert(ext.end(), idx.begin(), idx.end());
      r.add(std::move(ext), d);
    }
  }
  return r;
}

WeylForm delta_inv(const WeylForm& a) {
  const WeylContext& ctx = a.ctx();
  WeylForm r(&ctx);
  for (const auto& [idx, v] : a.components()) {
    const int q = int(idx.size());
    if (q == 0) continue;  // pure y-terms and the center are annihilated
    // split the coefficient by y-degree: the homotopy factor is 1/(p+q)
    for (int t = 0; t <= v.order(); ++t) {
      for (const auto& [e, c] : v.coeff(t).terms()) {
        int p = ctx.y_degree(e);
        Rational f = Rational(1, p + q) * c;
        for (size_t m = 0; m < idx.size(); ++m) {
          // contraction of dx^{idx[m]} carries (-1)^m; multiply by y^{idx[m]}
          Exponents e2 = e;
          size_t yv = ctx.y_var(idx[m]);
          if (e2[yv] == 255) throw MathError("fiber exponent overflow");
          e2[yv] += 1;
          FormIndex rest;
          for (size_t mm = 0; mm < idx.size(); ++mm)
            if (mm != m) rest.push_back(idx[mm]);
          PolySeries val = poly_series_zero(ctx.vars(), v.order());
          val.set_coeff(t, Poly::monomial(ctx.vars(), e2, m % 2 == 0 ? f : -f));
          r.add(std::move(rest), val);
        }
      }
    }
  }
  return r;
}

WeylForm partial_d(const WeylForm& a) {
  const WeylContext& ctx = a.ctx();
  WeylForm r(&ctx);
  for (const auto& [idx, v] : a.components()) {
    for (size_t k = 0; k < ctx.dim(); ++k) {
      PolySeries d = poly_series_zero(ctx.vars(), v.order());
      bool nonzero = false;
      for (int t = 0; t <= v.order(); ++t) {
        Poly dp = v.coeff(t).derivative(ctx.x_var(k));
        if (!dp.is_zero()) nonzero = true;
        d.set_coeff(t, std::move(dp));
      }
      if (!nonzero) continue;
      FormIndex ext;
      ext.push_back(uint8_t(k));
      ext.insert(ext.end(), idx.begin(), idx.end());
      r.add(std::move(ext), d);
    }
  }
  return r;
}

WeylForm center_part(const WeylForm& a) {
  const WeylContext& ctx = a.ctx();
  WeylForm r(&ctx);
  auto it = a.components().find(FormIndex{});
  if (it == a.components().end()) return r;
  PolySeries kept = poly_series_zero(ctx.vars(), it->second.order());
  for (int t = 0; t <= it->second.order(); ++t) {
    Poly keep(ctx.vars());
    for (const auto& [e, c] : it->second.coeff(t).terms())
      if (ctx.y_degree(e) == 0) keep.add_term(e, c);
    kept.set_coeff(t, std::move(keep));
  }
  r.add_canonical({}, kept);
  return r;
}

}  // namespace dq
