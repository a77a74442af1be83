#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace pleth {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in int64 are kept
/// inline; anything larger lives in a GMP mpq. The choice of representation
/// is canonical (small iff it fits), so equality and hashing never need to
/// look at both forms.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(int n) : num_(n) {}      // NOLINT(implicit)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Only meaningful when is_small().
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;

  std::string str() const;
  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view s);

  Rational operator-() const;
  Rational inverse() const;
  Rational pow(int e) const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  size_t hash() const;

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  void assign_i128(__int128 n, __int128 d);
  void assign_big(mpq_class&& q);
};

/// Greatest common divisor of two integers given as Rationals (both must be
/// integers). Result is nonnegative.
Rational integer_gcd(const Rational& a, const Rational& b);
Rational integer_lcm(const Rational& a, const Rational& b);

}  // namespace pleth
