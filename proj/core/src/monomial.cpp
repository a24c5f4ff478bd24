#include "dq/monomial.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

Vars make_vars(std::vector<std::string> names) {
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw ParseError("duplicate variable name: " + names[i]);
  for (const auto& n : names)
    if (n == "lam") throw ParseError("'lam' is reserved for the formal parameter");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const Vars& a, const Vars& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Vars concat_vars(const Vars& a, const Vars& b) {
  std::vector<std::string> names(*a);
  names.insert(names.end(), b->begin(), b->end());
  return make_vars(std::move(names));
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (uint8_t x : e) d += x;
  return d;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 255) throw MathError("monomial exponent overflow");
    r[i] = static_cast<uint8_t>(s);
  }
  return r;
}

bool exp_sub(const Exponents& a, const Exponents& b, Exponents& out) {
  out.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    out[i] = static_cast<uint8_t>(a[i] - b[i]);
  }
  return true;
}

bool exp_divides(const Exponents& divisor, const Exponents& e) {
  for (size_t i = 0; i < e.size(); ++i)
    if (divisor[i] > e[i]) return false;
  return true;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // same degree: lexicographic with earlier variables more significant
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool lex_less(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool term_order_less(TermOrder ord, const Exponents& a, const Exponents& b) {
  return ord == TermOrder::Lex ? lex_less(a, b) : grlex_less(a, b);
}

size_t ExponentsHash::operator()(const Exponents& e) const {
  // FNV-1a over the exponent bytes
  uint64_t h = 1469598103934665603ULL;
  for (uint8_t b : e) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

MonomialTable::MonomialTable(size_t nvars) : nvars_(nvars) { grow_to_degree(0); }

namespace {
// enumerate all exponent vectors of given total degree in grlex tie order
// (lexicographic, earlier variable more significant, ascending)
void enumerate_degree(size_t nvars, int deg, std::vector<Exponents>& out) {
  Exponents cur(nvars, 0);
  // recursive distribution, ascending lexicographic order
  auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = static_cast<uint8_t>(remaining);
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = static_cast<uint8_t>(v);
      self(self, pos + 1, remaining - v);
    }
    cur[pos] = 0;
  };
  if (deg > 255) throw MathError("monomial degree exceeds representable range");
  rec(rec, 0, deg);
}
}  // namespace

void MonomialTable::grow_to_degree(int deg) {
  if (deg <= max_degree_) return;
  for (int d = max_degree_ + 1; d <= deg; ++d) {
    std::vector<Exponents> level;
    enumerate_degree(nvars_, d, level);
    for (auto& e : level) {
      lookup_.emplace_back(e, static_cast<uint32_t>(monos_.size()));
      monos_.push_back(std::move(e));
    }
  }
  max_degree_ = deg;
  std::sort(lookup_.begin(), lookup_.end(),
            [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
}

uint32_t MonomialTable::find_sorted(const Exponents& e) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), e,
                             [](const auto& p, const Exponents& x) { return grlex_less(p.first, x); });
  if (it != lookup_.end() && it->first == e) return it->second;
  return UINT32_MAX;
}

uint32_t MonomialTable::index_of(const Exponents& e) {
  uint32_t idx = find_sorted(e);
  if (idx != UINT32_MAX) return idx;
  grow_to_degree(total_degree(e));
  idx = find_sorted(e);
  return idx;
}

}  // namespace dq
