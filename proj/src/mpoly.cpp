#include "pleth/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleth {

namespace {

bool term_order(const MPoly::Term& a, const MPoly::Term& b) { return grlex_greater(a.first, b.first); }

// Sorts and combines like terms in place.
void normalize_terms(std::vector<MPoly::Term>& t) {
  std::sort(t.begin(), t.end(), term_order);
  size_t out = 0;
  for (size_t i = 0; i < t.size();) {
    size_t j = i + 1;
    Rational c = std::move(t[i].second);
    while (j < t.size() && t[j].first == t[i].first) {
      c += t[j].second;
      ++j;
    }
    if (!c.is_zero()) {
      t[out].first = t[i].first;
      t[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MPoly::MPoly(Var v) { terms_.emplace_back(Monomial::of(v), Rational(1)); }

MPoly::MPoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(m, c);
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  normalize_terms(terms);
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

MPoly MPoly::variable(Var v, int exp) { return MPoly(Monomial::of(v, exp), Rational(1)); }

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }

Rational MPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("MPoly::constant_value on non-constant " + str());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grlex_greater(t.first, x); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int MPoly::degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

int MPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::min(d, t.first[var]);
  return d;
}

bool MPoly::depends_on(int var) const {
  for (const auto& t : terms_)
    if (t.first[var] != 0) return true;
  return false;
}

uint32_t MPoly::support() const {
  uint32_t s = 0;
  for (const auto& t : terms_) s |= t.first.support();
  return s;
}

Monomial MPoly::min_exponents() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].first;
  for (const auto& t : terms_) m = Monomial::min(m, t.first);
  return m;
}

Monomial MPoly::max_exponents() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].first;
  for (const auto& t : terms_) m = Monomial::max(m, t.first);
  return m;
}

int MPoly::max_total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

int MPoly::min_total_degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly merge_sum(const MPoly& a, const MPoly& b, bool subtract) {
  MPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = grlex_compare(a.terms_[i].first, b.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j]);
      if (subtract) r.terms_.back().second = -r.terms_.back().second;
      ++j;
    } else {
      Rational s = a.terms_[i].second;
      if (subtract) s -= b.terms_[j].second;
      else s += b.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  return *this = merge_sum(*this, o, false);
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  return *this = merge_sum(*this, o, true);
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly MPoly::mul_monomial(const Monomial& m) const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.first *= m;
  return r;  // grlex is translation invariant, order is preserved
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r(*this);
  for (auto& t : r.terms_) {
    t.first *= m;
    t.second *= c;
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].first, small.terms_[0].second);
  if (small.size() * large.size() <= 64) {
    std::vector<MPoly::Term> t;
    t.reserve(small.size() * large.size());
    for (const auto& x : small.terms_)
      for (const auto& y : large.terms_) t.emplace_back(x.first * y.first, x.second * y.second);
    return MPoly::from_terms(std::move(t));
  }
  // Each shifted copy of `large` is already sorted; merge them pairwise.
  std::vector<MPoly> runs;
  runs.reserve(small.size());
  for (const auto& x : small.terms_) runs.push_back(large.mul_term(x.first, x.second));
  while (runs.size() > 1) {
    std::vector<MPoly> next;
    next.reserve((runs.size() + 1) / 2);
    for (size_t i = 0; i + 1 < runs.size(); i += 2) next.push_back(merge_sum(runs[i], runs[i + 1], false));
    if (runs.size() % 2) next.push_back(std::move(runs.back()));
    runs = std::move(next);
  }
  return std::move(runs[0]);
}

MPoly MPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw std::domain_error("MPoly::pow: negative power of non-monomial");
    return MPoly(terms_[0].first.pow(e), terms_[0].second.pow(e));
  }
  MPoly result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.emplace_back(f(x.first), x.second);
  return from_terms(std::move(t));
}

MPoly MPoly::adams(int k) const {
  if (k == 1) return *this;
  uint32_t inv = adams_invariant_mask();
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.emplace_back(x.first.adams(k), x.second);
  if (k > 0 && inv == 0) {
    MPoly r;
    r.terms_ = std::move(t);  // positive scaling preserves grlex order
    return r;
  }
  return from_terms(std::move(t));
}

MPoly MPoly::substitute_monomial(int var, const Rational& c, const Monomial& mono) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    int e = x.first[var];
    Monomial m = x.first;
    m.set(var, 0);
    if (e != 0) {
      if (c.is_zero()) {
        if (e < 0) throw std::domain_error("substitute: zero substituted into negative power");
        continue;
      }
      m *= mono.pow(e);
      t.emplace_back(m, x.second * c.pow(e));
    } else {
      t.emplace_back(m, x.second);
    }
  }
  return from_terms(std::move(t));
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  if (value.is_zero() || value.is_monomial()) {
    if (value.is_zero()) return substitute_monomial(var, Rational(0), Monomial{});
    return substitute_monomial(var, value.terms_[0].second, value.terms_[0].first);
  }
  auto coeffs = coefficients_in(var);
  MPoly r;
  for (const auto& [e, c] : coeffs) {
    if (e < 0) throw std::domain_error("substitute: non-unit substituted into negative power");
    r += c * value.pow(e);
  }
  return r;
}

MPoly MPoly::evaluate(const std::map<int, Rational>& values) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m = x.first;
    Rational c = x.second;
    for (const auto& [v, val] : values) {
      int e = m[v];
      if (e == 0) continue;
      if (val.is_zero() && e < 0) throw std::domain_error("evaluate: zero into negative power");
      c *= val.pow(e);
      m.set(v, 0);
    }
    if (!c.is_zero()) t.emplace_back(m, std::move(c));
  }
  return from_terms(std::move(t));
}

Rational MPoly::evaluate_full(const std::map<int, Rational>& values) const {
  MPoly r = evaluate(values);
  if (!r.is_constant()) throw std::invalid_argument("evaluate_full: unassigned variables remain in " + r.str());
  return r.constant_value();
}

std::map<int, MPoly> MPoly::coefficients_in(int var) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& x : terms_) {
    Monomial m = x.first;
    int e = m[var];
    m.set(var, 0);
    parts[e].emplace_back(m, x.second);
  }
  std::map<int, MPoly> r;
  for (auto& [e, t] : parts) {
    MPoly p;
    p.terms_ = std::move(t);  // removing one variable from a fixed-exponent slice keeps order
    r.emplace(e, std::move(p));
  }
  return r;
}

MPoly MPoly::coefficient_in(int var, int exp) const {
  MPoly p;
  for (const auto& x : terms_) {
    if (x.first[var] != exp) continue;
    Monomial m = x.first;
    m.set(var, 0);
    p.terms_.emplace_back(m, x.second);
  }
  return p;
}

Rational MPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Rational g(0), l(1);
  for (const auto& x : terms_) {
    Rational n(mpq_class(x.second.numerator()));
    Rational d(mpq_class(x.second.denominator()));
    g = integer_gcd(g, n);
    l = integer_lcm(l, d);
  }
  return g / l;
}

MPoly MPoly::canonical_associate(Rational* scalar, Monomial* shift) const {
  if (terms_.empty()) {
    if (scalar) *scalar = Rational(0);
    if (shift) *shift = Monomial{};
    return MPoly();
  }
  Rational c = content();
  if (terms_[0].second.sign() < 0) c = -c;
  Monomial m = min_exponents();
  MPoly r;
  r.terms_.reserve(terms_.size());
  Rational ci = c.inverse();
  for (const auto& x : terms_) r.terms_.emplace_back(x.first / m, x.second * ci);
  if (scalar) *scalar = c;
  if (shift) *shift = m;
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        s += "-";
        a = -a;
      }
    } else {
      if (a.sign() < 0) {
        s += " - ";
        a = -a;
      } else {
        s += " + ";
      }
    }
    first = false;
    if (m.is_one()) {
      s += a.str();
    } else if (a.is_one()) {
      s += m.str();
    } else {
      s += a.str() + "*" + m.str();
    }
  }
  return s;
}

size_t MPoly::hash() const {
  size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& [m, c] : terms_) {
    h ^= m.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_monomial()) {
    const auto& [m, c] = b.leading_term();
    return a.mul_term(m.inverse(), c.inverse());
  }
  Monomial bs = b.min_exponents();
  Monomial as = a.min_exponents();
  MPoly bp = b.mul_monomial(bs.inverse());
  MPoly ap = a.mul_monomial(as.inverse());
  // Degree and trailing-term filters.
  Monomial bmax = bp.max_exponents(), amax = ap.max_exponents();
  for (size_t i = 0; i < kMaxVars; ++i)
    if (bmax.e[i] > amax.e[i]) return std::nullopt;
  if (ap.size() < 2) return std::nullopt;
  if (!divides(bp.terms().back().first, ap.terms().back().first)) return std::nullopt;
  if (!divides(bp.leading_term().first, ap.leading_term().first)) return std::nullopt;

  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : ap.terms()) rem.emplace(t.first, t.second);
  const Monomial& lb = bp.leading_term().first;
  Rational lci = bp.leading_term().second.inverse();
  int lbdeg = lb.degree();
  std::vector<MPoly::Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first.degree() < lbdeg || !divides(lb, it->first)) return std::nullopt;
    Monomial qm = it->first / lb;
    Rational qc = it->second * lci;
    for (const auto& t : bp.terms()) {
      Monomial m = t.first * qm;
      auto [pos, inserted] = rem.try_emplace(m, Rational(0));
      pos->second -= t.second * qc;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    quot.emplace_back(qm, std::move(qc));
  }
  MPoly q = MPoly::from_terms(std::move(quot));
  return q.mul_monomial(as / bs);
}

namespace {

MPoly gcd_canonical(const MPoly& A, const MPoly& B);

// Content of a polynomial with respect to var: gcd of its coefficients.
MPoly content_in(const MPoly& p, int var) {
  auto cs = p.coefficients_in(var);
  MPoly g;
  bool first = true;
  for (auto& [e, c] : cs) {
    MPoly cc = c.canonical_associate();
    if (first) {
      g = cc;
      first = false;
    } else {
      g = gcd_canonical(g, cc);
    }
    if (g.is_one()) break;
  }
  return g;
}

MPoly primitive_in(const MPoly& p, int var) {
  MPoly c = content_in(p, var);
  if (c.is_one()) return p.canonical_associate();
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("gcd: content does not divide");
  return q->canonical_associate();
}

MPoly pseudo_remainder(const MPoly& F, const MPoly& G, int var) {
  int dg = G.degree_in(var);
  MPoly lcg = G.coefficient_in(var, dg);
  MPoly R = F;
  while (!R.is_zero()) {
    int dr = R.degree_in(var);
    if (dr < dg) break;
    MPoly lcr = R.coefficient_in(var, dr);
    R = lcg * R - (lcr * G).mul_monomial(Monomial::of(Var::from_index(var), dr - dg));
    if (!R.is_zero()) {
      Rational c = R.content();
      R *= c.inverse();
    }
  }
  return R;
}

MPoly gcd_canonical(const MPoly& A, const MPoly& B) {
  if (A.is_zero()) return B;
  if (B.is_zero()) return A;
  if (A.is_constant() || B.is_constant()) return MPoly(1);
  if (A == B) return A;
  uint32_t sa = A.support(), sb = B.support();
  for (int v = 0; v < kMaxVars; ++v) {
    uint32_t bit = 1U << v;
    if ((sa & bit) && !(sb & bit)) {
      // Every common divisor is free of v, so it divides each v-coefficient of A.
      MPoly g = B;
      for (auto& [e, c] : A.coefficients_in(v)) {
        g = gcd_canonical(g, c.canonical_associate());
        if (g.is_one()) break;
      }
      return g;
    }
    if ((sb & bit) && !(sa & bit)) return gcd_canonical(B, A);
  }
  if (A.size() <= B.size()) {
    if (auto q = divide_exact(B, A)) return A;
  } else {
    if (auto q = divide_exact(A, B)) return B;
  }
  // Main variable: smallest degree.
  int var = -1, best = 1 << 30;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(sa & (1U << v))) continue;
    int d = std::max(A.degree_in(v), B.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  MPoly ca = content_in(A, var), cb = content_in(B, var);
  MPoly gc = gcd_canonical(ca, cb);
  MPoly F = primitive_in(A, var), G = primitive_in(B, var);
  if (F.degree_in(var) < G.degree_in(var)) std::swap(F, G);
  while (true) {
    MPoly R = pseudo_remainder(F, G, var);
    if (R.is_zero()) break;
    if (R.degree_in(var) == 0) {
      G = MPoly(1);
      break;
    }
    F = std::move(G);
    G = primitive_in(R, var);
  }
  return (gc * G).canonical_associate();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return MPoly();
  return gcd_canonical(a.canonical_associate(), b.canonical_associate());
}

}  // namespace pleth
