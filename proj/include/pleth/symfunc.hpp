#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/ratfunc.hpp"

namespace pleth {

enum class Basis { p, m, e, h, s };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view s);

/// Change of basis at one degree. Rows of to_p give b_lambda in the power
/// sums; rows of from_p give p_mu in b.
struct Transition {
  const std::vector<Partition>* index = nullptr;
  std::vector<std::vector<Rational>> to_p;
  std::vector<std::vector<Rational>> from_p;
};

const Transition& transition(Basis b, int n);
/// Position of a partition of n in partitions(n).
size_t partition_index(const Partition& p);
/// Character value chi^lambda(mu) by Murnaghan-Nakayama.
long character(const Partition& lambda, const Partition& mu);

/// Values of q and t used by inner products and operators. The natural
/// coordinates use the variables q, t; the (z, w) coordinates set q=z^2, t=w^2.
struct QT {
  RatFunc q{Var("q")};
  RatFunc t{Var("t")};
  static QT natural() { return QT{}; }
  static QT zw();
  RatFunc M() const { return (RatFunc(1) - q) * (RatFunc(1) - t); }
};

inline constexpr int kUnbounded = 1 << 20;

/// Symmetric function with rational-function coefficients in a chosen basis,
/// truncated above max_degree.
class SymFunc {
 public:
  using Map = std::map<Partition, RatFunc, PartitionOrder>;

  explicit SymFunc(Basis b = Basis::p, int max_degree = kUnbounded) : basis_(b), max_degree_(max_degree) {}
  static SymFunc element(Basis b, const Partition& lambda, int max_degree = kUnbounded);
  static SymFunc constant(const RatFunc& c, int max_degree = kUnbounded);

  Basis basis() const { return basis_; }
  int max_degree() const { return max_degree_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const RatFunc& c);
  void set(const Partition& lambda, const RatFunc& c);
  /// Highest and lowest degree present (0 for the zero function).
  int degree() const;
  int min_degree() const;

  SymFunc to(Basis b) const;
  SymFunc in_p() const { return to(Basis::p); }
  SymFunc truncated(int max_degree) const;
  SymFunc homogeneous(int n) const;
  SymFunc map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const RatFunc& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const RatFunc& c) { return a *= c; }
  friend SymFunc operator*(const RatFunc& c, SymFunc a) { return a *= c; }
  /// Product, computed in the power sums; result is in the p basis.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

  /// psi_k: p_mu -> p_{k mu}, coefficients by Adams.
  SymFunc adams(int k) const;

  /// Equality of the underlying symmetric functions (bases may differ).
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  Basis basis_;
  int max_degree_;
  Map terms_;
};

inline SymFunc adams(const SymFunc& f, int k) { return f.adams(k); }

/// A plethystic alphabet: a finite sum of terms c * x^(k) where x^(k) is
/// either the Adams image of a rational function or the k-th power of a
/// rational number.
class Alphabet {
 public:
  struct Term {
    Rational mult{1};
    Rational value{1};
    RatFunc expr{1};
  };

  Alphabet() = default;
  static Alphabet symbolic(const RatFunc& a);
  static Alphabet number(const Rational& x, const Rational& mult = Rational(1));
  static Alphabet numbers(const std::vector<Rational>& xs, const Rational& mult = Rational(1));

  /// A^(k).
  RatFunc adams(int k) const;
  const std::vector<Term>& terms() const { return terms_; }

  Alphabet operator-() const;
  Alphabet operator+(const Alphabet& o) const;
  Alphabet operator-(const Alphabet& o) const { return *this + -o; }
  Alphabet operator*(const Alphabet& o) const;
  Alphabet scaled(const Rational& c) const;

 private:
  std::vector<Term> terms_;
};

// Inner products, all diagonal in the power sums.
RatFunc hall(const SymFunc& f, const SymFunc& g);
RatFunc inner_qt(const SymFunc& f, const SymFunc& g, const QT& qt = QT::natural());
RatFunc inner_star(const SymFunc& f, const SymFunc& g, const QT& qt = QT::natural());
/// Weights of the diagonal forms for p_mu.
RatFunc hall_weight(const Partition& mu);
RatFunc qt_weight(const Partition& mu, const QT& qt = QT::natural());
RatFunc star_weight(const Partition& mu, const QT& qt = QT::natural());

/// f[g] (g in any basis; g should have no constant term).
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree);
/// f[X] -> f[X + A].
SymFunc gamma_plus(const SymFunc& f, const Alphabet& A);
/// f -> Exp(A X) f, truncated at max_degree.
SymFunc gamma_minus(const SymFunc& f, const Alphabet& A, int max_degree);
/// Exp(A X) = sum_n h_n[A X] up to max_degree, in the p basis.
SymFunc exp_alphabet(const Alphabet& A, int max_degree);
/// p_k -> A^(k) p_k.
SymFunc upsilon(const SymFunc& f, const Alphabet& A);
/// Hall adjoint of multiplication by p_k: k d/dp_k.
SymFunc p_derivative(const SymFunc& f, int k);

/// Element of the k-fold tensor power, stored in the power sums of each factor.
class Tensor {
 public:
  using Key = std::vector<Partition>;
  using Map = std::map<Key, RatFunc>;

  explicit Tensor(int arity = 0) : arity_(arity) {}
  static Tensor one(int arity);
  static Tensor constant(int arity, const RatFunc& c);
  /// f_1 (x) ... (x) f_k.
  static Tensor product_of(const std::vector<SymFunc>& factors);

  int arity() const { return arity_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Key& k) const;
  void add(const Key& k, const RatFunc& c);

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const RatFunc& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const RatFunc& c) { return a *= c; }
  friend Tensor operator*(const RatFunc& c, Tensor a) { return a *= c; }
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  Tensor adams(int k) const;

  /// Concatenation of factors: (a (x) b).
  Tensor tensor(const Tensor& o) const;
  /// Pairs factor i with factor j by a form diagonal in the power sums.
  Tensor contract(int i, int j, const std::function<RatFunc(const Partition&)>& weight) const;
  /// Pairs factor i with factor j by an arbitrary bilinear form on p-basis elements.
  Tensor contract_general(int i, int j, const std::function<RatFunc(const Partition&, const Partition&)>& form) const;
  /// Coefficients after converting every factor to basis b.
  Map in_basis(Basis b) const;
  /// Extracts a single-factor tensor as a SymFunc (arity 1).
  SymFunc as_symfunc() const;
  static Tensor from_symfunc(const SymFunc& f);

  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  int arity_;
  Map terms_;
};

inline Tensor adams(const Tensor& t, int k) { return t.adams(k); }

std::string key_str(const Tensor::Key& k);

}  // namespace pleth
