#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pleth/factor.hpp"
#include "pleth/mpoly.hpp"

namespace pleth {

/// Rational function: Laurent numerator over a product of interned atoms.
///
/// Invariant: the numerator is not divisible by any atom of the denominator
/// (checked by exact trial division). With only cyclotomic atoms, which are
/// irreducible, this makes the representation unique. Opaque atoms may still
/// share factors with the numerator until normalize() runs a GCD pass.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(implicit)
  RatFunc(int c) : num_(Rational(c)) {}    // NOLINT(implicit)
  RatFunc(Var v) : num_(v) {}              // NOLINT(implicit)
  RatFunc(const MPoly& p) : num_(p) {}     // NOLINT(implicit)
  RatFunc(MPoly&& p) : num_(std::move(p)) {}  // NOLINT(implicit)

  static RatFunc fraction(const MPoly& num, const MPoly& den);
  static RatFunc monomial(const Monomial& m, const Rational& c = Rational(1));
  /// Parses expressions such as "(1-q)*(1-t)^-1 + 3/2*q^2" or "(1+q)/(1-q*t)".
  static RatFunc parse(std::string_view text);

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  bool has_opaque_factors() const;
  const MPoly& numerator() const { return num_; }
  const std::vector<AtomPower>& denominator_atoms() const { return den_; }
  MPoly denominator() const;
  /// Numerator as a polynomial; throws unless the denominator is trivial.
  const MPoly& polynomial() const;
  Rational constant_value() const;
  uint32_t denominator_support() const;
  uint32_t support() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& c);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc adams(int k) const;
  RatFunc mul_monomial(const Monomial& m) const;

  /// Pure monomial substitution: each listed variable v := x^image.
  RatFunc map_monomials(const std::vector<std::pair<int, Monomial>>& images) const;
  /// General substitution v := value.
  RatFunc substitute(Var v, const RatFunc& value) const;
  RatFunc substitute(const std::map<int, RatFunc>& values) const;
  /// Evaluates at a point; throws PoleError if the denominator vanishes.
  RatFunc evaluate(const std::map<int, Rational>& values) const;
  Rational evaluate_full(const std::map<int, Rational>& values) const;

  /// Coefficients of powers of v; the denominator must be free of v.
  std::map<int, RatFunc> coefficients_in(Var v) const;
  RatFunc coefficient_in(Var v, int exp) const;
  /// Drops terms with v-degree above max_deg; the denominator must be free of v.
  RatFunc truncate_in(Var v, int max_deg) const;

  /// Full reduction (GCD against opaque factors).
  RatFunc normalize() const;
  bool is_laurent_polynomial() const;

  /// Canonical text: reduced N/D, D primitive with positive leading
  /// coefficient and no monomial factor.
  std::string str() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  MPoly num_;
  std::vector<AtomPower> den_;  // sorted by atom id, positive exponents

  void reduce();
  void reduce_against(const std::vector<AtomPower>& atoms);
  static RatFunc from_factorization_inverse(const Factorization& f);
};

RatFunc pow(const RatFunc& a, int e);
inline RatFunc adams(const RatFunc& a, int k) { return a.adams(k); }

/// plethystic lambda: prod over monomials m of A of (1 - u m)^{c_m},
/// A given as a Laurent polynomial with integer coefficients.
RatFunc lambda_eval(const MPoly& A, const RatFunc& u);

/// After substituting v := -v for each listed variable, are all coefficients
/// of the (Laurent polynomial) value nonnegative integers?
bool has_nonneg_coeffs(const RatFunc& f, const std::vector<Var>& sign_flips = {});

/// Conjugation x -> x^-1 on all variables.
RatFunc conj(const RatFunc& f);
MPoly conj(const MPoly& f);

}  // namespace pleth
