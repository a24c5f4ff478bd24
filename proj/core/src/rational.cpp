#include "dq/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "dq/errors.hpp"

namespace dq {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 u128_abs(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kI64Max = std::numeric_limits<int64_t>::max();

bool fits_i64(i128 v) { return v >= -kI64Max && v <= kI64Max; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 a = u128_abs(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den == 0) throw MathError("Rational: zero denominator");
  set_from_i128(num, den);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(c));
  }
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

void Rational::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd_u128(u128_abs(n), u128(d));
  if (g > 1) {
    n = (n < 0) ? -i128(u128_abs(n) / g) : i128(u128(n) / g);
    d = i128(u128(d) / g);
  }
  if (fits_i64(n) && fits_i64(d)) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

const mpq_class& Rational::as_big_ref(mpq_class& scratch) const {
  if (big_) return *big_;
  scratch = mpq_class(static_cast<long>(num_), static_cast<long>(den_));
  return scratch;
}

mpq_class Rational::to_mpq() const {
  mpq_class s;
  return as_big_ref(s);
}

Rational Rational::from_mpq(const mpq_class& q) { return Rational(q); }

bool Rational::is_integer() const {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (!big_) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  return mpq_sgn(big_->get_mpq_t());
}

long long Rational::as_int64() const {
  if (!big_) {
    if (den_ != 1) throw MathError("Rational: not an integer");
    return num_;
  }
  if (big_->get_den() != 1 || !big_->get_num().fits_slong_p())
    throw MathError("Rational: does not fit int64");
  return big_->get_num().get_si();
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  mpq_class sa, sb;
  mpq_class r = as_big_ref(sa) + o.as_big_ref(sb);
  *this = Rational(r);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  mpq_class sa, sb;
  mpq_class r = as_big_ref(sa) - o.as_big_ref(sb);
  *this = Rational(r);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  mpq_class sa, sb;
  mpq_class r = as_big_ref(sa) * o.as_big_ref(sb);
  *this = Rational(r);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("Rational: division by zero");
  if (!big_ && !o.big_) {
    i128 n = i128(num_) * o.den_;
    i128 d = i128(den_) * o.num_;
    set_from_i128(n, d);
    return *this;
  }
  mpq_class sa, sb;
  mpq_class r = as_big_ref(sa) / o.as_big_ref(sb);
  *this = Rational(r);
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (!r.big_) {
    r.num_ = -r.num_;
  } else {
    *r.big_ = -*r.big_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  mpq_class sa, sb;
  return a.as_big_ref(sa) == b.as_big_ref(sb);
}

int Rational::cmp(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  mpq_class sa, sb;
  return ::cmp(a.as_big_ref(sa), b.as_big_ref(sb));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("Rational: inverse of zero");
  Rational one(1);
  return one /= *this;
}

std::string Rational::str() const {
  if (!big_) {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }
  return big_->get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::from_string(std::string_view text) {
  // strict format check: -?digits(/digits)?
  size_t i = 0;
  auto bad = [&] { throw ParseError("bad rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  if (text[i] == '-') ++i;
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) bad();
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) bad();
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) bad();
  if (q.get_den() == 0) throw MathError("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

}  // namespace dq
