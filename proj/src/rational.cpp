#include "pleth/rational.hpp"

#include <limits>
#include <stdexcept>

namespace pleth {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b != 0) {
    uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

uint64_t uabs(int64_t v) { return v < 0 ? 0 - static_cast<uint64_t>(v) : static_cast<uint64_t>(v); }

void set_mpz_i128(mpz_class& z, i128 v) {
  bool neg = v < 0;
  u128 a = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  uint64_t limbs[2] = {static_cast<uint64_t>(a), static_cast<uint64_t>(a >> 64)};
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
  if (neg) z = -z;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  assign_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    if (big_) *big_ = *o.big_;
    else big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(an, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
    big_.reset();
    return;
  }
  mpz_class zn, zd;
  set_mpz_i128(zn, n);
  set_mpz_i128(zd, d);
  big_ = std::make_unique<mpq_class>(zn, zd);
}

void Rational::assign_big(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) *big_ = std::move(q);
  else big_ = std::make_unique<mpq_class>(std::move(q));
}

bool Rational::is_integer() const {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (!big_) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  std::string str(s);
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + str + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(q);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_big(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  if (big_) {
    mpq_class q = 1 / *big_;
    r.assign_big(std::move(q));
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rational result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != std::numeric_limits<int64_t>::min()) {
        num_ = r;
        return *this;
      }
    }
    uint64_t g = gcd_u64(static_cast<uint64_t>(den_), static_cast<uint64_t>(o.den_));
    i128 da = den_ / static_cast<int64_t>(g), db = o.den_ / static_cast<int64_t>(g);
    i128 t = static_cast<i128>(num_) * db + static_cast<i128>(o.num_) * da;
    // gcd(t, den_*o.den_ / g) = gcd(t, g) since t is coprime to da*db.
    i128 tm = t % static_cast<i128>(g);
    if (tm < 0) tm = -tm;
    uint64_t g2 = gcd_u64(static_cast<uint64_t>(tm), g);
    i128 n = t / static_cast<i128>(g2);
    i128 d = da * (static_cast<i128>(o.den_) / static_cast<i128>(g2));
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    assign_i128(n, d);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != std::numeric_limits<int64_t>::min()) {
        num_ = r;
        return *this;
      }
    }
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    uint64_t g1 = gcd_u64(uabs(num_), static_cast<uint64_t>(o.den_));
    uint64_t g2 = gcd_u64(uabs(o.num_), static_cast<uint64_t>(den_));
    i128 n = static_cast<i128>(num_ / static_cast<int64_t>(g1)) * (o.num_ / static_cast<int64_t>(g2));
    i128 d = static_cast<i128>(den_ / static_cast<int64_t>(g2)) * (o.den_ / static_cast<int64_t>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    assign_i128(n, d);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation: sizes differ
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

size_t Rational::hash() const {
  if (!big_) {
    uint64_t h = static_cast<uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<uint64_t>(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
  return std::hash<std::string>()(big_->get_str());
}

Rational integer_gcd(const Rational& a, const Rational& b) {
  if (!a.is_integer() || !b.is_integer()) throw std::invalid_argument("integer_gcd: non-integer");
  if (a.is_small() && b.is_small()) {
    return Rational(static_cast<int64_t>(gcd_u64(uabs(a.small_num()), uabs(b.small_num()))));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return Rational(mpq_class(g));
}

Rational integer_lcm(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  return (a * b).abs() / integer_gcd(a, b);
}

}  // namespace pleth
