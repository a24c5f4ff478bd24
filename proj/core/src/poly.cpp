#include "dq/poly.hpp"

#include <unordered_map>

#include "dq/errors.hpp"

namespace dq {

Poly Poly::constant(Vars vars, Rational c) {
  Poly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.nvars(), 0), std::move(c));
  return p;
}

Poly Poly::variable(Vars vars, size_t index) {
  Poly p(std::move(vars));
  if (index >= p.nvars()) throw ParseError("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::monomial(Vars vars, Exponents e, Rational c) {
  Poly p(std::move(vars));
  if (e.size() != p.nvars()) throw ParseError("exponent vector size mismatch");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents(nvars(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // leading (first) term has maximal graded-lex order, hence maximal degree
  return total_degree(terms_.begin()->first);
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coeff(const Exponents& e, Rational c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = std::move(c);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same_universe(const Poly& o) const {
  if (!same_vars(vars_, o.vars_)) throw ParseError("polynomial variable universes differ");
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_universe(b);
  // accumulate through a hash map, then rebuild the ordered term map
  std::unordered_map<Exponents, Rational, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * 2);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = exp_add(ea, eb);
      auto [it, inserted] = acc.try_emplace(std::move(e), ca);
      if (inserted)
        it->second *= cb;
      else
        it->second += ca * cb;
    }
  }
  Poly r(a.vars_);
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace(std::move(const_cast<Exponents&>(e)), std::move(c));
  return r;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  check_same_universe(o);
  return terms_ == o.terms_;
}

Poly Poly::derivative(size_t var) const {
  if (var >= nvars()) throw ParseError("derivative variable out of range");
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * Rational(e[var]));
  }
  return r;
}

Poly Poly::derivative_multi(const Exponents& index) const {
  if (index.size() != nvars()) throw ParseError("multi-index size mismatch");
  Poly r = *this;
  for (size_t v = 0; v < index.size(); ++v)
    for (uint8_t k = 0; k < index[v]; ++k) r = r.derivative(v);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(vars_, Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  if (values.size() != nvars()) throw ParseError("substitution arity mismatch");
  for (size_t i = 1; i < values.size(); ++i)
    if (!same_vars(values[0].vars(), values[i].vars()))
      throw ParseError("substitution values live in different universes");
  Vars target = values.empty() ? vars_ : values[0].vars();
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * values[v].pow(e[v]);
    r += term;
  }
  return r;
}

std::optional<std::pair<Exponents, Rational>> Poly::leading_term(TermOrder ord) const {
  if (terms_.empty()) return std::nullopt;
  if (ord == TermOrder::Grlex) return std::make_pair(terms_.begin()->first, terms_.begin()->second);
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (term_order_less(ord, best->first, it->first)) best = it;
  return std::make_pair(best->first, best->second);
}

}  // namespace dq
