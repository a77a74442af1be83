#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pleth {

inline constexpr int kMaxVars = 16;

/// Handle to an entry of the process-wide variable registry.
///
/// Variables are identified by name; the first use of a name assigns the next
/// free slot. A fixed set of names is registered up front so the relative
/// order of the common variables never depends on call order.
class Var {
 public:
  Var() = default;
  explicit Var(std::string_view name);
  static Var from_index(int index);

  int index() const { return index_; }
  std::string name() const;

  friend bool operator==(Var a, Var b) { return a.index_ == b.index_; }
  friend bool operator<(Var a, Var b) { return a.index_ < b.index_; }

 private:
  int index_ = -1;
};

inline Var var(std::string_view name) { return Var(name); }

/// Number of registered variables.
int variable_count();
/// Look up a name without registering it; -1 if unknown.
int find_variable(std::string_view name);

/// An Adams-invariant variable is left fixed by the Adams operations
/// (used for the formal symbol m in Gamma^m).
void set_adams_invariant(Var v, bool invariant);
bool is_adams_invariant(int index);
uint32_t adams_invariant_mask();

/// Ordered list of variable names, used as a header for serialized data.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<Var> vars);
  static VarSet all_registered();
  static VarSet parse(std::string_view line);

  const std::vector<Var>& vars() const { return vars_; }
  std::string str() const;
  bool contains(Var v) const;
  friend bool operator==(const VarSet& a, const VarSet& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Var> vars_;
};

/// Laurent monomial: one signed exponent per registry slot.
struct Monomial {
  std::array<int16_t, kMaxVars> e{};

  static Monomial unit() { return Monomial{}; }
  static Monomial of(Var v, int exp = 1);

  int degree() const;
  bool is_one() const;
  bool is_nonnegative() const;
  uint32_t support() const;

  int operator[](int i) const { return e[static_cast<size_t>(i)]; }
  void set(int i, int value);

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial pow(int k) const;
  Monomial inverse() const;
  Monomial adams(int k) const;
  /// Componentwise min / max.
  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

  std::string str() const;
  size_t hash() const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded lexicographic comparison: total degree first, then the first
/// differing exponent (lower registry index is more significant).
int grlex_compare(const Monomial& a, const Monomial& b);
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; }

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

}  // namespace pleth
