#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pleth/monomial.hpp"
#include "pleth/rational.hpp"

namespace pleth {

/// Sparse multivariate Laurent polynomial with rational coefficients.
/// Terms are kept sorted by decreasing grlex order with no zero coefficients.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(implicit)
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(implicit)
  MPoly(Var v);  // NOLINT(implicit)
  MPoly(const Monomial& m, const Rational& c);

  /// Builds from arbitrary terms: sorts, combines, drops zeros.
  static MPoly from_terms(std::vector<Term> terms);
  static MPoly variable(Var v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  Rational constant_term() const;
  /// Scalar value of a constant polynomial.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;

  int degree_in(int var) const;
  int min_degree_in(int var) const;
  bool depends_on(int var) const;
  uint32_t support() const;
  /// Componentwise minimum of the exponents (the largest monomial divisor).
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  int max_total_degree() const;
  int min_total_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  MPoly mul_monomial(const Monomial& m) const;
  MPoly mul_term(const Monomial& m, const Rational& c) const;
  MPoly pow(int e) const;

  /// Applies an exponent map to every term (result re-sorted).
  MPoly map_monomials(const std::function<Monomial(const Monomial&)>& f) const;
  MPoly adams(int k) const;
  /// Substitutes var := c * x^mono. c must be nonzero if var appears with
  /// negative exponent.
  MPoly substitute_monomial(int var, const Rational& c, const Monomial& mono) const;
  /// Substitutes var := value (value must be a unit if negative powers occur).
  MPoly substitute(int var, const MPoly& value) const;
  /// Evaluates all variables listed in `values` (index -> value).
  MPoly evaluate(const std::map<int, Rational>& values) const;
  /// Full evaluation; throws if a variable is missing from `values`.
  Rational evaluate_full(const std::map<int, Rational>& values) const;

  /// Coefficients with respect to one variable: exponent -> polynomial free of var.
  std::map<int, MPoly> coefficients_in(int var) const;
  MPoly coefficient_in(int var, int exp) const;

  /// Integer content: positive rational c with this/c having coprime integer coefficients.
  Rational content() const;
  /// this / (content * sign(lc) * x^min_exponents): primitive, no monomial factor,
  /// positive leading coefficient.
  MPoly canonical_associate(Rational* scalar = nullptr, Monomial* shift = nullptr) const;

  std::string str() const;
  size_t hash() const;
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
  friend MPoly merge_sum(const MPoly& a, const MPoly& b, bool subtract);
};

MPoly merge_sum(const MPoly& a, const MPoly& b, bool subtract);

struct MPolyHash {
  size_t operator()(const MPoly& p) const { return p.hash(); }
};

/// Exact division a / b in the Laurent ring; nullopt if b does not divide a.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Greatest common divisor in the Laurent ring, returned as a canonical
/// associate (primitive, no monomial factor, positive leading coefficient).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace pleth
