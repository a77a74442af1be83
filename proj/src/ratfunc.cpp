#include "pleth/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace pleth {

namespace {

MPoly expand_atoms(const std::vector<AtomPower>& atoms) {
  MPoly r(1);
  for (const auto& [a, e] : atoms) r *= a->value.pow(e);
  return r;
}

MPoly expand_atoms(const std::vector<AtomPower>& atoms, const std::vector<AtomPower>& minus) {
  // prod atom^(e - e_minus), exponents of `minus` never exceed those of `atoms`.
  MPoly r(1);
  size_t j = 0;
  for (const auto& [a, e] : atoms) {
    int k = e;
    while (j < minus.size() && minus[j].first->id < a->id) ++j;
    if (j < minus.size() && minus[j].first == a) k -= minus[j].second;
    if (k > 0) r *= a->value.pow(k);
  }
  return r;
}

// Divides p by atoms while possible, decrementing their exponents.
void cancel(MPoly& p, std::vector<AtomPower>& atoms) {
  if (p.is_zero()) {
    atoms.clear();
    return;
  }
  for (auto& [a, e] : atoms) {
    while (e > 0) {
      auto q = divide_by_atom(p, a);
      if (!q) break;
      p = std::move(*q);
      --e;
    }
  }
  std::erase_if(atoms, [](const AtomPower& x) { return x.second == 0; });
}

std::vector<AtomPower> max_atoms(const std::vector<AtomPower>& a, const std::vector<AtomPower>& b) {
  std::vector<AtomPower> r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first->id < b[j].first->id)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first->id < a[i].first->id) r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

std::vector<AtomPower> scale_atoms(const std::vector<AtomPower>& a, int k) {
  std::vector<AtomPower> r(a);
  for (auto& x : r) x.second *= k;
  return r;
}

// ---- parser ----

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("RatFunc::parse: " + msg + " at position " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else break;
    }
    return r;
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else break;
    }
    return r;
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (eat('^')) {
      int e = exponent();
      return base.pow(e);
    }
    return base;
  }

  int exponent() {
    bool paren = eat('(');
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return sign * e;
  }

  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RatFunc(Var(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RatFunc RatFunc::fraction(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  Factorization f = factor_polynomial(den);
  RatFunc r;
  r.num_ = num.mul_term(f.shift.inverse(), f.scalar.inverse());
  r.den_ = std::move(f.atoms);
  r.reduce();
  return r;
}

RatFunc RatFunc::monomial(const Monomial& m, const Rational& c) { return RatFunc(MPoly(m, c)); }

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse(); }

bool RatFunc::has_opaque_factors() const {
  for (const auto& [a, e] : den_)
    if (!a->is_cyclotomic()) return true;
  return false;
}

MPoly RatFunc::denominator() const { return expand_atoms(den_); }

const MPoly& RatFunc::polynomial() const {
  if (!den_.empty()) throw std::logic_error("RatFunc::polynomial: nontrivial denominator in " + str());
  return num_;
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("RatFunc::constant_value: not constant: " + str());
  return num_.is_zero() ? Rational(0) : num_.constant_value();
}

uint32_t RatFunc::denominator_support() const {
  uint32_t s = 0;
  for (const auto& [a, e] : den_) s |= a->support;
  return s;
}

uint32_t RatFunc::support() const { return num_.support() | denominator_support(); }

void RatFunc::reduce() { cancel(num_, den_); }

void RatFunc::reduce_against(const std::vector<AtomPower>& atoms) {
  std::vector<AtomPower> a = atoms;
  cancel(num_, a);
}

RatFunc RatFunc::from_factorization_inverse(const Factorization& f) {
  RatFunc r;
  r.num_ = MPoly(f.shift.inverse(), f.scalar.inverse());
  r.den_ = f.atoms;
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  if (o.den_.empty()) {
    num_ += o.num_ * expand_atoms(den_);
    reduce();
    return *this;
  }
  std::vector<AtomPower> l = max_atoms(den_, o.den_);
  MPoly a = num_ * expand_atoms(l, den_);
  MPoly b = o.num_ * expand_atoms(l, o.den_);
  num_ = a + b;
  den_ = std::move(l);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_ = MPoly();
    den_.clear();
    return *this;
  }
  if (o.den_.empty() && den_.empty()) {
    num_ *= o.num_;
    return *this;
  }
  MPoly b = o.num_;
  std::vector<AtomPower> da = den_, db = o.den_;
  cancel(num_, db);
  cancel(b, da);
  num_ *= b;
  den_ = merge_atoms(da, db);
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& c) {
  if (c.is_zero()) {
    num_ = MPoly();
    den_.clear();
  } else {
    num_ *= c;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  Factorization f = factor_polynomial(num_);
  RatFunc r;
  r.num_ = expand_atoms(den_).mul_term(f.shift.inverse(), f.scalar.inverse());
  r.den_ = std::move(f.atoms);
  r.reduce();
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatFunc pow(const RatFunc& a, int e) { return a.pow(e); }

RatFunc RatFunc::mul_monomial(const Monomial& m) const {
  RatFunc r(*this);
  r.num_ = r.num_.mul_monomial(m);
  return r;
}

RatFunc RatFunc::adams(int k) const {
  if (k == 1) return *this;
  RatFunc r;
  r.num_ = num_.adams(k);
  if (den_.empty()) return r;
  std::vector<AtomPower> den;
  for (const auto& [a, e] : den_) {
    const Factorization& f = adams_atom(a, k);
    r.num_ = r.num_.mul_term(f.shift.pow(-e), f.scalar.pow(-e));
    den = merge_atoms(den, scale_atoms(f.atoms, e));
  }
  r.den_ = std::move(den);
  r.reduce();
  return r;
}

RatFunc RatFunc::map_monomials(const std::vector<std::pair<int, Monomial>>& images) const {
  auto map = [&](const Monomial& m) {
    Monomial out = m;
    for (const auto& [v, img] : images) {
      int e = m[v];
      if (!e) continue;
      out.set(v, out[v] - e);
      out *= img.pow(e);
    }
    return out;
  };
  RatFunc r;
  r.num_ = num_.map_monomials(map);
  std::vector<AtomPower> den;
  try {
    for (const auto& [a, e] : den_) {
      uint32_t touched = 0;
      for (const auto& [v, img] : images) touched |= 1U << v;
      if (!(a->support & touched)) {
        den = merge_atoms(den, {{a, e}});
        continue;
      }
      Factorization f = map_atom(a, images);
      r.num_ = r.num_.mul_term(f.shift.pow(-e), f.scalar.pow(-e));
      den = merge_atoms(den, scale_atoms(f.atoms, e));
    }
  } catch (const PoleError&) {
    RatFunc n = normalize();
    if (n.den_ == den_ && n.num_ == num_) throw;
    return n.map_monomials(images);
  }
  r.den_ = std::move(den);
  r.reduce();
  return r;
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
  return substitute(std::map<int, RatFunc>{{v.index(), value}});
}

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& values) const {
  // Pure monomial images go through the atom-preserving path.
  std::vector<std::pair<int, Monomial>> images;
  bool all_monomial = true;
  for (const auto& [v, val] : values) {
    if (val.is_polynomial() && val.num_.is_monomial() && val.num_.leading_term().second.is_one()) {
      images.emplace_back(v, val.num_.leading_term().first);
    } else {
      all_monomial = false;
    }
  }
  if (all_monomial) return map_monomials(images);

  auto subst_poly = [&](const MPoly& p) {
    // Expand variable by variable.
    RatFunc acc(p);
    for (const auto& [v, val] : values) {
      if (!acc.num_.depends_on(v)) continue;
      auto coeffs = acc.num_.coefficients_in(v);
      RatFunc s;
      for (auto& [e, c] : coeffs) s += RatFunc(c) * val.pow(e);
      acc = s;
    }
    return acc;
  };
  uint32_t touched = 0;
  for (const auto& [v, val] : values) touched |= 1U << v;
  RatFunc result = subst_poly(num_);
  RatFunc den(1);
  for (const auto& [a, e] : den_) {
    if (!(a->support & touched)) {
      RatFunc f;
      f.num_ = MPoly(1);
      f.den_ = {{a, e}};
      result *= f;
      continue;
    }
    RatFunc img = subst_poly(a->value);
    if (img.is_zero()) {
      RatFunc n = normalize();
      if (n.den_ == den_ && n.num_ == num_) throw PoleError("substitution hits a pole at factor " + a->value.str());
      return n.substitute(values);
    }
    den *= img.pow(e);
  }
  return result / den;
}

RatFunc RatFunc::evaluate(const std::map<int, Rational>& values) const {
  std::map<int, RatFunc> v;
  for (const auto& [k, x] : values) v.emplace(k, RatFunc(x));
  return substitute(v);
}

Rational RatFunc::evaluate_full(const std::map<int, Rational>& values) const {
  RatFunc r = evaluate(values);
  if (!r.is_constant()) throw std::invalid_argument("evaluate_full: free variables remain in " + r.str());
  return r.constant_value();
}

std::map<int, RatFunc> RatFunc::coefficients_in(Var v) const {
  if (denominator_support() & (1U << v.index()))
    throw std::invalid_argument("coefficients_in: denominator depends on " + v.name());
  std::map<int, RatFunc> out;
  for (auto& [e, c] : num_.coefficients_in(v.index())) {
    RatFunc r;
    r.num_ = c;
    r.den_ = den_;
    r.reduce();
    out.emplace(e, std::move(r));
  }
  return out;
}

RatFunc RatFunc::coefficient_in(Var v, int exp) const {
  if (denominator_support() & (1U << v.index()))
    throw std::invalid_argument("coefficient_in: denominator depends on " + v.name());
  RatFunc r;
  r.num_ = num_.coefficient_in(v.index(), exp);
  r.den_ = den_;
  r.reduce();
  return r;
}

RatFunc RatFunc::truncate_in(Var v, int max_deg) const {
  if (denominator_support() & (1U << v.index()))
    throw std::invalid_argument("truncate_in: denominator depends on " + v.name());
  std::vector<MPoly::Term> t;
  for (const auto& term : num_.terms())
    if (term.first[v.index()] <= max_deg) t.push_back(term);
  RatFunc r;
  r.num_ = MPoly::from_terms(std::move(t));
  r.den_ = den_;
  r.reduce();
  return r;
}

RatFunc RatFunc::normalize() const {
  if (!has_opaque_factors()) return *this;
  RatFunc r(*this);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < r.den_.size(); ++i) {
      const Atom* a = r.den_[i].first;
      if (a->is_cyclotomic()) continue;
      MPoly g = gcd(r.num_, a->value);
      if (g.is_constant()) continue;
      auto nq = divide_exact(r.num_, g);
      auto cq = divide_exact(a->value, g);
      if (!nq || !cq) throw std::logic_error("normalize: gcd does not divide");
      r.num_ = std::move(*nq);
      std::vector<AtomPower> rest = r.den_;
      rest[i].second -= 1;
      std::erase_if(rest, [](const AtomPower& x) { return x.second == 0; });
      if (!cq->is_constant()) {
        Factorization f = factor_polynomial(*cq);
        r.num_ = r.num_.mul_term(f.shift.inverse(), f.scalar.inverse());
        rest = merge_atoms(rest, f.atoms);
      } else {
        r.num_ *= cq->constant_value().inverse();
      }
      r.den_ = std::move(rest);
      r.reduce();
      changed = true;
      break;
    }
  }
  return r;
}

bool RatFunc::is_laurent_polynomial() const { return normalize().den_.empty(); }

std::string RatFunc::str() const {
  RatFunc n = normalize();
  if (n.den_.empty()) return n.num_.str();
  MPoly d = expand_atoms(n.den_);
  Rational c;
  Monomial s;
  MPoly dc = d.canonical_associate(&c, &s);
  MPoly nc = n.num_.mul_term(s.inverse(), c.inverse());
  if (dc.is_one()) return nc.str();
  return "(" + nc.str() + ")/(" + dc.str() + ")";
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!a.has_opaque_factors() && !b.has_opaque_factors()) return a.den_ == b.den_ && a.num_ == b.num_;
  return (a - b).is_zero();
}

RatFunc lambda_eval(const MPoly& A, const RatFunc& u) {
  RatFunc r(1);
  for (const auto& [m, c] : A.terms()) {
    if (!c.is_integer() || !c.is_small()) throw std::invalid_argument("lambda_eval: non-integer multiplicity");
    RatFunc factor = RatFunc(1) - u * RatFunc::monomial(m);
    r *= factor.pow(static_cast<int>(c.small_num()));
  }
  return r;
}

bool has_nonneg_coeffs(const RatFunc& f, const std::vector<Var>& sign_flips) {
  RatFunc n = f.normalize();
  if (!n.is_polynomial()) return false;
  for (const auto& [m, c] : n.numerator().terms()) {
    int s = 0;
    for (Var v : sign_flips) s += m[v.index()];
    Rational x = (s % 2) ? -c : c;
    if (!x.is_integer() || x.sign() < 0) return false;
  }
  return true;
}

MPoly conj(const MPoly& f) { return f.map_monomials([](const Monomial& m) { return m.inverse(); }); }

RatFunc conj(const RatFunc& f) {
  std::vector<std::pair<int, Monomial>> images;
  uint32_t s = f.support();
  for (int i = 0; i < kMaxVars; ++i)
    if (s & (1U << i)) images.emplace_back(i, Monomial::of(Var::from_index(i), -1));
  return f.map_monomials(images);
}

}  // namespace pleth
