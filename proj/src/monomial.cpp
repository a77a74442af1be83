#include "pleth/monomial.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pleth {

namespace {

struct Registry {
  std::mutex mu;
  std::array<std::string, kMaxVars> names;
  std::atomic<int> count{0};
  std::atomic<uint32_t> invariant{0};

  Registry() {
    for (const char* n : {"q", "t", "z", "w", "u", "u_1", "u_2", "u_3", "x", "y", "T", "m", "s"}) add(n);
  }

  int find(std::string_view name) {
    int c = count.load(std::memory_order_acquire);
    for (int i = 0; i < c; ++i)
      if (names[static_cast<size_t>(i)] == name) return i;
    return -1;
  }

  int add(std::string_view name) {
    std::lock_guard<std::mutex> lock(mu);
    int found = find(name);
    if (found >= 0) return found;
    int c = count.load(std::memory_order_relaxed);
    if (c >= kMaxVars) throw std::length_error("variable registry full; cannot add '" + std::string(name) + "'");
    names[static_cast<size_t>(c)] = std::string(name);
    count.store(c + 1, std::memory_order_release);
    return c;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

bool valid_name(std::string_view n) {
  if (n.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

int16_t checked(int v) {
  if (v > 30000 || v < -30000) throw std::overflow_error("monomial exponent overflow");
  return static_cast<int16_t>(v);
}

}  // namespace

Var::Var(std::string_view name) {
  if (!valid_name(name)) throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
  int f = registry().find(name);
  index_ = f >= 0 ? f : registry().add(name);
}

Var Var::from_index(int index) {
  if (index < 0 || index >= variable_count()) throw std::out_of_range("Var::from_index");
  Var v;
  v.index_ = index;
  return v;
}

std::string Var::name() const {
  if (index_ < 0) return "?";
  return registry().names[static_cast<size_t>(index_)];
}

int variable_count() { return registry().count.load(std::memory_order_acquire); }
int find_variable(std::string_view name) { return registry().find(name); }

void set_adams_invariant(Var v, bool invariant) {
  uint32_t bit = 1U << v.index();
  if (invariant) registry().invariant.fetch_or(bit);
  else registry().invariant.fetch_and(~bit);
}

bool is_adams_invariant(int index) { return (registry().invariant.load() >> index) & 1U; }
uint32_t adams_invariant_mask() { return registry().invariant.load(); }

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {}

VarSet VarSet::all_registered() {
  std::vector<Var> v;
  for (int i = 0; i < variable_count(); ++i) v.push_back(Var::from_index(i));
  return VarSet(std::move(v));
}

VarSet VarSet::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<Var> v;
  std::string tok;
  while (in >> tok) v.emplace_back(tok);
  return VarSet(std::move(v));
}

std::string VarSet::str() const {
  std::string s;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ' ';
    s += vars_[i].name();
  }
  return s;
}

bool VarSet::contains(Var v) const {
  for (Var x : vars_)
    if (x == v) return true;
  return false;
}

Monomial Monomial::of(Var v, int exp) {
  Monomial m;
  m.e[static_cast<size_t>(v.index())] = checked(exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int16_t x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (int16_t x : e)
    if (x) return false;
  return true;
}

bool Monomial::is_nonnegative() const {
  for (int16_t x : e)
    if (x < 0) return false;
  return true;
}

uint32_t Monomial::support() const {
  uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[static_cast<size_t>(i)]) s |= 1U << i;
  return s;
}

void Monomial::set(int i, int value) { e[static_cast<size_t>(i)] = checked(value); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[static_cast<size_t>(i)] = checked(e[static_cast<size_t>(i)] + o.e[static_cast<size_t>(i)]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[static_cast<size_t>(i)] = checked(e[static_cast<size_t>(i)] - o.e[static_cast<size_t>(i)]);
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) { return *this = *this * o; }

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[static_cast<size_t>(i)] = checked(e[static_cast<size_t>(i)] * k);
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::adams(int k) const {
  uint32_t inv = adams_invariant_mask();
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int x = e[static_cast<size_t>(i)];
    r.e[static_cast<size_t>(i)] = checked(((inv >> i) & 1U) ? x : x * k);
  }
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    int x = e[static_cast<size_t>(i)];
    if (!x) continue;
    if (!s.empty()) s += '*';
    s += Var::from_index(i).name();
    if (x != 1) s += '^' + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

size_t Monomial::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (int16_t x : e) {
    h ^= static_cast<uint16_t>(x);
    h *= 0x100000001b3ULL;
  }
  return static_cast<size_t>(h ^ (h >> 29));
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace pleth
