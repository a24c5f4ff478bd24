#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dq {

/// Exact rational number.
///
/// Stored as a reduced int64 fraction (denominator > 0) as long as it fits;
/// values that overflow promote transparently to a heap-allocated GMP
/// rational and demote again when they shrink. All arithmetic is exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  /// Parses "p" or "p/q" with optional leading '-'. Arbitrary precision.
  static Rational from_string(std::string_view text);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// True when the value currently fits the inline int64 representation.
  bool is_small() const { return !big_; }
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  /// The value as an int64, when it is an integer that fits. Throws otherwise.
  long long as_int64() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  static int cmp(const Rational& a, const Rational& b);

  Rational abs() const;
  Rational inverse() const;

  /// Canonical form: "p" for integers, "p/q" otherwise.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  mpq_class to_mpq() const;
  static Rational from_mpq(const mpq_class& q);

 private:
  explicit Rational(const mpq_class& q);
  void set_from_i128(__int128 n, __int128 d);  // d > 0, gcd-reduced by caller
  const mpq_class& as_big_ref(mpq_class& scratch) const;

  int64_t num_, den_;               // valid iff !big_; reduced, den_ > 0
  std::unique_ptr<mpq_class> big_;  // engaged on overflow; canonicalized
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace dq
