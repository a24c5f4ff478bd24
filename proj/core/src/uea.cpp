#include "dq/uea.hpp"

#include <mutex>
#include <unordered_map>

#include "dq/errors.hpp"
#include "dq/monomial.hpp"

namespace dq {

UEAElement UEAElement::unit(AlgebraPtr alg, int order) {
  UEAElement e(std::move(alg), order);
  e.add_term(Exponents(e.alg_->dim(), 0), ScalarSeries::constant(Rational(1), order));
  return e;
}

UEAElement UEAElement::generator(AlgebraPtr alg, size_t index, int order) {
  UEAElement e(std::move(alg), order);
  Exponents J(e.alg_->dim(), 0);
  J[index] = 1;
  e.add_term(J, ScalarSeries::constant(Rational(1), order));
  return e;
}

ScalarSeries UEAElement::coeff(const Exponents& J) const {
  auto it = terms_.find(J);
  return it == terms_.end() ? ScalarSeries(Rational(0), order_) : it->second;
}

void UEAElement::add_term(const Exponents& J, const ScalarSeries& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(J, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UEAElement::add_scaled(const UEAElement& o, const ScalarSeries& c) {
  if (c.is_zero()) return;
  for (const auto& [J, v] : o.terms_) add_term(J, v * c);
}

void UEAElement::add_scaled_shifted(const UEAElement& o, const Rational& c, int lambda_shift) {
  if (c.is_zero()) return;
  for (const auto& [J, v] : o.terms_) {
    ScalarSeries t = v;
    t *= c;
    if (lambda_shift > 0) t = t.shifted(lambda_shift);
    add_term(J, t);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [J, v] : o.terms_) add_term(J, v);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [J, v] : o.terms_) add_term(J, -v);
  return *this;
}

UEAElement UEAElement::operator-() const {
  UEAElement r(alg_, order_);
  for (const auto& [J, v] : terms_) r.terms_.emplace(J, -v);
  return r;
}

UEAElement& UEAElement::scale(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [J, v] : terms_) v *= q;
  return *this;
}

UEAElement& UEAElement::scale(const ScalarSeries& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap out;
  for (auto& [J, v] : terms_) {
    ScalarSeries t = v * s;
    if (!t.is_zero()) out.emplace(J, std::move(t));
  }
  terms_ = std::move(out);
  return *this;
}

bool operator==(const UEAElement& a, const UEAElement& b) {
  if (!a.alg_->same_as(*b.alg_)) throw MathError("UEAElement: algebra mismatch");
  return a.terms_ == b.terms_;
}

std::optional<int> UEAElement::grade() const {
  std::optional<int> g;
  for (const auto& [J, v] : terms_) {
    for (int k = 0; k <= order_; ++k) {
      if (v.coeff(k).is_zero()) continue;
      int this_grade = 2 * total_degree(J) + 2 * k;
      if (!g)
        g = this_grade;
      else if (*g != this_grade)
        return std::nullopt;
    }
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

// compact form of a Gutt monomial product: (monomial index, lambda power,
// coefficient) triples; basis products are lambda-graded so every triple
// holds a single rational
struct CompactEntry {
  uint32_t mono;
  int32_t lam;
  Rational c;
};
struct CompactSeries {
  std::vector<CompactEntry> entries;
};

uint64_t pair_key(uint32_t a, uint32_t b) { return (uint64_t(a) << 32) | b; }

}  // namespace

struct GuttContext::Impl {
  AlgebraPtr alg;
  int order;
  bool cache_enabled;
  size_t max_word_len = 64;

  mutable std::recursive_mutex mu;
  mutable MonomialTable table;
  // caches keyed by monomial index (and generator where applicable)
  mutable std::unordered_map<uint64_t, std::shared_ptr<const UEAElement>> right_mul_cache;
  mutable std::unordered_map<uint64_t, std::shared_ptr<const UEAElement>> left_mul_cache;
  mutable std::unordered_map<uint32_t, std::shared_ptr<const UEAElement>> sym_cache;
  mutable std::unordered_map<uint64_t, std::shared_ptr<const CompactSeries>> pair_cache;

  Impl(AlgebraPtr a, int n, bool cache)
      : alg(std::move(a)), order(n), cache_enabled(cache), table(alg->dim()) {}

  size_t dim() const { return alg->dim(); }

  // --- X^I * X_j ---------------------------------------------------------
  UEAElement right_mul_basis_gen(const Exponents& I, size_t j) const {
    std::unique_lock<std::recursive_mutex> lock(mu);
    uint32_t idx = table.index_of(I);
    uint64_t key = pair_key(idx, uint32_t(j));
    if (cache_enabled) {
      auto it = right_mul_cache.find(key);
      if (it != right_mul_cache.end()) return *it->second;
    }
    UEAElement r = right_mul_basis_gen_compute(I, j);
    if (cache_enabled) right_mul_cache.emplace(key, std::make_shared<UEAElement>(r));
    return r;
  }

  UEAElement right_mul_basis_gen_compute(const Exponents& I, size_t j) const {
    const size_t n = dim();
    // largest letter of I
    size_t top = n;
    for (size_t l = n; l-- > 0;)
      if (I[l] > 0) {
        top = l;
        break;
      }
    UEAElement out(alg, order);
    if (top == n || top <= j) {  // empty monomial or already ordered: append
      Exponents J = I;
      if (J[j] == 255) throw MathError("PBW exponent overflow");
      J[j] += 1;
      out.add_term(J, ScalarSeries::constant(Rational(1), order));
      return out;
    }
    // X^I X_j = (X^{I'} X_j) X_top + lambda sum_k c(top, j, k) X^{I'} X_k
    Exponents Ip = I;
    Ip[top] -= 1;
    UEAElement swapped = right_mul_basis_gen(Ip, j);
    out = mul_gen_right(swapped, top);
    for (size_t k = 0; k < n; ++k) {
      const Rational& ck = alg->c(top, j, k);
      if (ck.is_zero()) continue;
      UEAElement corr = right_mul_basis_gen(Ip, k);
      out.add_scaled_shifted(corr, ck, 1);
    }
    return out;
  }

  UEAElement mul_gen_right(const UEAElement& E, size_t j) const {
    UEAElement out(alg, order);
    for (const auto& [I, c] : E.terms()) {
      UEAElement part = right_mul_basis_gen(I, j);
      out.add_scaled(part, c);
    }
    return out;
  }

  // --- X_i * X^K ---------------------------------------------------------
  UEAElement left_mul_basis_gen(size_t i, const Exponents& K) const {
    std::unique_lock<std::recursive_mutex> lock(mu);
    uint32_t idx = table.index_of(K);
    uint64_t key = pair_key(idx, uint32_t(i));
    if (cache_enabled) {
      auto it = left_mul_cache.find(key);
      if (it != left_mul_cache.end()) return *it->second;
    }
    UEAElement r = left_mul_basis_gen_compute(i, K);
    if (cache_enabled) left_mul_cache.emplace(key, std::make_shared<UEAElement>(r));
    return r;
  }

  UEAElement left_mul_basis_gen_compute(size_t i, const Exponents& K) const {
    const size_t n = dim();
    size_t bottom = n;
    for (size_t l = 0; l < n; ++l)
      if (K[l] > 0) {
        bottom = l;
        break;
      }
    UEAElement out(alg, order);
    if (bottom == n || i <= bottom) {  // empty monomial or already ordered: prepend
      Exponents J = K;
      if (J[i] == 255) throw MathError("PBW exponent overflow");
      J[i] += 1;
      out.add_term(J, ScalarSeries::constant(Rational(1), order));
      return out;
    }
    // X_i X^K = X_bottom (X_i X^{K'}) + lambda sum_k c(i, bottom, k) X_k X^{K'}
    Exponents Kp = K;
    Kp[bottom] -= 1;
    UEAElement swapped = left_mul_basis_gen(i, Kp);
    out = mul_gen_left(bottom, swapped);
    for (size_t k = 0; k < n; ++k) {
      const Rational& ck = alg->c(i, bottom, k);
      if (ck.is_zero()) continue;
      UEAElement corr = left_mul_basis_gen(k, Kp);
      out.add_scaled_shifted(corr, ck, 1);
    }
    return out;
  }

  UEAElement mul_gen_left(size_t i, const UEAElement& E) const {
    UEAElement out(alg, order);
    for (const auto& [K, c] : E.terms()) {
      UEAElement part = left_mul_basis_gen(i, K);
      out.add_scaled(part, c);
    }
    return out;
  }

  // --- symmetrized basis monomials ---------------------------------------
  UEAElement sym_monomial(const Exponents& J) const {
    std::unique_lock<std::recursive_mutex> lock(mu);
    uint32_t idx = table.index_of(J);
    if (cache_enabled) {
      auto it = sym_cache.find(idx);
      if (it != sym_cache.end()) return *it->second;
    }
    UEAElement r = sym_monomial_compute(J);
    if (cache_enabled) sym_cache.emplace(idx, std::make_shared<UEAElement>(r));
    return r;
  }

  // s(mu^J) = (1/m) sum_i J_i X_i s(mu^(J - e_i)); equals the average over
  // all orderings of the multiset (tests check this against direct
  // enumeration)
  UEAElement sym_monomial_compute(const Exponents& J) const {
    int m = total_degree(J);
    if (m == 0) return UEAElement::unit(alg, order);
    UEAElement acc(alg, order);
    Exponents Jp = J;
    for (size_t i = 0; i < dim(); ++i) {
      if (J[i] == 0) continue;
      Jp[i] -= 1;
      UEAElement part = mul_gen_left(i, sym_monomial(Jp));
      Jp[i] += 1;
      part.scale(Rational(J[i], m));
      acc += part;
    }
    return acc;
  }

  // --- Gutt products of basis monomials ----------------------------------
  CompactSeries compactify(const PolySeries& p) const {
    CompactSeries out;
    for (int k = 0; k <= p.order(); ++k)
      for (const auto& [e, c] : p.coeff(k).terms())
        out.entries.push_back(CompactEntry{table.index_of(e), k, c});
    return out;
  }

  std::shared_ptr<const CompactSeries> monomial_pair_product(uint32_t idx_i, uint32_t idx_j) const {
    std::unique_lock<std::recursive_mutex> lock(mu);
    uint64_t key = pair_key(idx_i, idx_j);
    if (cache_enabled) {
      auto it = pair_cache.find(key);
      if (it != pair_cache.end()) return it->second;
    }
    Exponents I = table.exponents(idx_i);
    Exponents J = table.exponents(idx_j);
    UEAElement prod = mul_elements(sym_monomial(I), sym_monomial(J));
    auto result = std::make_shared<CompactSeries>(compactify(unsym(prod)));
    if (cache_enabled) pair_cache.emplace(key, result);
    return result;
  }

  // --- products of general elements --------------------------------------
  UEAElement mul_elements(const UEAElement& A, const UEAElement& B) const {
    UEAElement out(alg, order);
    for (const auto& [J, cb] : B.terms()) {
      // X^I * X^J for all terms of A, folding J's letters from the left
      UEAElement partial = A;
      for (size_t j = 0; j < dim(); ++j)
        for (uint8_t t = 0; t < J[j]; ++t) partial = mul_gen_right(partial, j);
      out.add_scaled(partial, cb);
    }
    return out;
  }

  // --- unsymmetrize -------------------------------------------------------
  PolySeries unsym(const UEAElement& A) const {
    PolySeries result = poly_series_zero(alg->coords(), order);
    UEAElement rest = A;
    while (!rest.is_zero()) {
      // leading PBW monomial (largest graded-lex): its coefficient is final
      auto it = rest.terms().begin();
      Exponents J = it->first;
      ScalarSeries c = it->second;
      for (int k = 0; k <= order; ++k)
        if (!c.coeff(k).is_zero()) result.coeff_mut(k).add_term(J, c.coeff(k));
      UEAElement sub = sym_monomial(J);
      sub.scale(c);
      rest -= sub;  // cancels the leading term, touches lower degrees only
    }
    return result;
  }

  // --- the Gutt product ---------------------------------------------------
  PolySeries gutt_mul(const PolySeries& u, const PolySeries& v) const {
    if (!same_vars(u.coeff(0).vars(), alg->coords()) ||
        !same_vars(v.coeff(0).vars(), alg->coords()))
      throw ParseError("gutt_mul: operands must live on the dual coordinates");
    int nmin = std::min({order, u.order(), v.order()});

    // collect operands as (monomial index, coefficient series)
    int max_deg = 0;
    auto collect = [&](const PolySeries& s) {
      std::unordered_map<uint32_t, ScalarSeries> coeffs;
      for (int k = 0; k <= nmin; ++k) {
        for (const auto& [e, c] : s.coeff(k).terms()) {
          std::unique_lock<std::recursive_mutex> lock(mu);
          uint32_t idx = table.index_of(e);
          auto [it, fresh] = coeffs.try_emplace(idx, ScalarSeries(Rational(0), order));
          it->second.coeff_mut(k) += c;
          max_deg = std::max(max_deg, total_degree(e));
        }
      }
      return std::vector<std::pair<uint32_t, ScalarSeries>>(coeffs.begin(), coeffs.end());
    };
    auto su = collect(u);
    auto sv = collect(v);

    {
      std::unique_lock<std::recursive_mutex> lock(mu);
      table.grow_to_degree(2 * max_deg);
    }
    size_t slots = 0;
    {
      std::unique_lock<std::recursive_mutex> lock(mu);
      slots = table.size();
    }
    std::vector<Rational> acc(slots * size_t(order + 1), Rational(0));

    for (const auto& [idx_i, ci] : su) {
      for (const auto& [idx_j, cj] : sv) {
        ScalarSeries cs = ci * cj;
        if (cs.is_zero()) continue;
        auto pij = monomial_pair_product(idx_i, idx_j);
        for (const auto& entry : pij->entries) {
          for (int t = 0; t + entry.lam <= order; ++t) {
            const Rational& a = cs.coeff(t);
            if (a.is_zero()) continue;
            acc[size_t(entry.mono) * (order + 1) + entry.lam + t] += entry.c * a;
          }
        }
      }
    }

    PolySeries result = poly_series_zero(alg->coords(), order);
    {
      std::unique_lock<std::recursive_mutex> lock(mu);
      for (size_t m = 0; m < slots; ++m)
        for (int k = 0; k <= order; ++k) {
          const Rational& c = acc[m * (order + 1) + k];
          if (!c.is_zero()) result.coeff_mut(k).add_term(table.exponents(uint32_t(m)), c);
        }
    }
    return result.truncated(nmin);
  }
};

GuttContext::GuttContext(AlgebraPtr alg, int order, bool enable_cache)
    : impl_(std::make_unique<Impl>(std::move(alg), order, enable_cache)) {
  if (order < 0) throw MathError("GuttContext: truncation order must be >= 0");
}

GuttContext::~GuttContext() = default;

const AlgebraPtr& GuttContext::algebra() const { return impl_->alg; }
int GuttContext::order() const { return impl_->order; }
const Vars& GuttContext::coords() const { return impl_->alg->coords(); }
bool GuttContext::cache_enabled() const { return impl_->cache_enabled; }
size_t GuttContext::max_word_length() const { return impl_->max_word_len; }
void GuttContext::set_max_word_length(size_t n) { impl_->max_word_len = n; }

UEAElement GuttContext::straighten(const GenWord& word) const {
  return straighten(word, ScalarSeries::constant(Rational(1), impl_->order));
}

UEAElement GuttContext::straighten(const GenWord& word, const ScalarSeries& coeff) const {
  if (word.size() > impl_->max_word_len)
    throw MathError("straighten: word longer than the configured bound");
  UEAElement acc = UEAElement::unit(impl_->alg, impl_->order);
  for (size_t g : word) {
    if (g >= impl_->dim()) throw ParseError("straighten: generator index out of range");
    acc = impl_->mul_gen_right(acc, g);
  }
  acc.scale(coeff);
  return acc;
}

UEAElement GuttContext::symmetrize(const PolySeries& u) const {
  if (!same_vars(u.coeff(0).vars(), impl_->alg->coords()))
    throw ParseError("symmetrize: operand must live on the dual coordinates");
  UEAElement out(impl_->alg, impl_->order);
  int nmin = std::min(impl_->order, u.order());
  for (int k = 0; k <= nmin; ++k)
    for (const auto& [J, c] : u.coeff(k).terms()) {
      ScalarSeries cs(Rational(0), impl_->order);
      cs.set_coeff(k, c);
      out.add_scaled(impl_->sym_monomial(J), cs);
    }
  return out;
}

UEAElement GuttContext::symmetrize_monomial(const Exponents& J) const {
  return impl_->sym_monomial(J);
}

PolySeries GuttContext::unsymmetrize(const UEAElement& A) const { return impl_->unsym(A); }

UEAElement GuttContext::mul(const UEAElement& A, const UEAElement& B) const {
  if (!A.algebra()->same_as(*impl_->alg) || !B.algebra()->same_as(*impl_->alg))
    throw MathError("mul: algebra mismatch");
  return impl_->mul_elements(A, B);
}

PolySeries GuttContext::gutt_mul(const PolySeries& u, const PolySeries& v) const {
  return impl_->gutt_mul(u, v);
}

PolySeries GuttContext::gutt_comm(const PolySeries& u, const PolySeries& v) const {
  return impl_->gutt_mul(u, v) - impl_->gutt_mul(v, u);
}

PolySeries GuttContext::monomial_product(const Exponents& I, const Exponents& J) const {
  std::unique_lock<std::recursive_mutex> lock(impl_->mu);
  impl_->table.grow_to_degree(total_degree(I) + total_degree(J));
  auto p = impl_->monomial_pair_product(impl_->table.index_of(I), impl_->table.index_of(J));
  PolySeries out = poly_series_zero(impl_->alg->coords(), impl_->order);
  for (const auto& e : p->entries)
    out.coeff_mut(e.lam).add_term(impl_->table.exponents(e.mono), e.c);
  return out;
}

}  // namespace dq
