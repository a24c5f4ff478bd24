#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dq {

/// Exponent vector of a monomial; one entry per variable of the universe.
using Exponents = std::vector<uint8_t>;

/// A shared, immutable variable universe. Polynomials over the same universe
/// (by value) are compatible.
using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);
bool same_vars(const Vars& a, const Vars& b);
/// Concatenation of two universes; throws ParseError on a name clash.
Vars concat_vars(const Vars& a, const Vars& b);

int total_degree(const Exponents& e);
Exponents exp_add(const Exponents& a, const Exponents& b);
/// Componentwise a - b; returns false when some component would go negative.
bool exp_sub(const Exponents& a, const Exponents& b, Exponents& out);
bool exp_divides(const Exponents& divisor, const Exponents& e);

/// Graded-lexicographic comparison: total degree first, ties broken
/// lexicographically with earlier variables more significant.
bool grlex_less(const Exponents& a, const Exponents& b);
/// Pure lexicographic comparison, earlier variables more significant.
bool lex_less(const Exponents& a, const Exponents& b);

/// Map comparator placing the leading (largest) monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(b, a); }
};

struct ExponentsHash {
  size_t operator()(const Exponents& e) const;
};

enum class TermOrder { Lex, Grlex };

bool term_order_less(TermOrder ord, const Exponents& a, const Exponents& b);

/// Stable bijection between exponent vectors and dense indices, used by the
/// hot term-rewriting paths. Indices are grlex-ascending and remain stable as
/// the table grows.
class MonomialTable {
 public:
  explicit MonomialTable(size_t nvars);

  uint32_t index_of(const Exponents& e);
  const Exponents& exponents(uint32_t idx) const { return monos_[idx]; }
  size_t size() const { return monos_.size(); }
  size_t nvars() const { return nvars_; }

  /// Ensures all monomials of total degree <= deg are present (grlex order).
  void grow_to_degree(int deg);

 private:
  size_t nvars_;
  int max_degree_ = -1;
  std::vector<Exponents> monos_;
  std::vector<std::pair<Exponents, uint32_t>> lookup_;  // sorted by grlex

  uint32_t find_sorted(const Exponents& e) const;
};

}  // namespace dq
