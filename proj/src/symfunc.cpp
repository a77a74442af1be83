#include "pleth/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pleth {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view s) {
  if (s == "p") return Basis::p;
  if (s == "m") return Basis::m;
  if (s == "e") return Basis::e;
  if (s == "h") return Basis::h;
  if (s == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(s) + "'");
}

QT QT::zw() {
  QT r;
  r.q = RatFunc(Var("z")).pow(2);
  r.t = RatFunc(Var("w")).pow(2);
  return r;
}

size_t partition_index(const Partition& p) {
  const auto& all = partitions(p.size());
  auto it = std::lower_bound(all.begin(), all.end(), p, [](const Partition& a, const Partition& b) { return a > b; });
  if (it == all.end() || *it != p) throw std::logic_error("partition_index: not found");
  return static_cast<size_t>(it - all.begin());
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(const Matrix& a) {
  size_t n = a.size();
  Matrix m = a, inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("transition matrix is singular");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational s = m[c][c].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (size_t j = 0; j < n; ++j) {
        if (!m[c][j].is_zero()) m[r][j] -= f * m[c][j];
        if (!inv[c][j].is_zero()) inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Coefficient of m_lambda in p_mu: assignments of the parts of mu to the rows of lambda.
int64_t p_to_m_coefficient(const Partition& mu, const Partition& lambda) {
  std::map<std::vector<int>, int64_t> states{{lambda.parts(), 1}};
  for (int a : mu.parts()) {
    std::map<std::vector<int>, int64_t> next;
    for (const auto& [rem, cnt] : states) {
      for (size_t j = 0; j < rem.size(); ++j) {
        if (rem[j] < a) continue;
        std::vector<int> r = rem;
        r[j] -= a;
        next[r] += cnt;
      }
    }
    states = std::move(next);
  }
  int64_t total = 0;
  for (const auto& [rem, cnt] : states) total += cnt;
  return total;
}

// Power-sum expansion of a product of single-row elements (h_k or e_k).
std::vector<Rational> row_product_in_p(const Partition& lambda, bool elementary) {
  int n = lambda.size();
  std::map<Partition, Rational, PartitionOrder> acc{{Partition(), Rational(1)}};
  for (int k : lambda.parts()) {
    std::map<Partition, Rational, PartitionOrder> next;
    for (const auto& mu : partitions(k)) {
      Rational c = mu.z().inverse();
      if (elementary && mu.sign() < 0) c = -c;
      for (const auto& [nu, d] : acc) next[nu.join(mu)] += c * d;
    }
    acc = std::move(next);
  }
  std::vector<Rational> row(partitions(n).size());
  for (const auto& [mu, c] : acc) row[partition_index(mu)] = c;
  return row;
}

std::unique_ptr<Transition> build_transition(Basis b, int n) {
  auto t = std::make_unique<Transition>();
  const auto& parts = partitions(n);
  t->index = &parts;
  size_t N = parts.size();
  Matrix to(N, std::vector<Rational>(N));
  switch (b) {
    case Basis::p:
      for (size_t i = 0; i < N; ++i) to[i][i] = Rational(1);
      t->to_p = to;
      t->from_p = to;
      return t;
    case Basis::m: {
      Matrix r(N, std::vector<Rational>(N));
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) r[i][j] = Rational(p_to_m_coefficient(parts[i], parts[j]));
      t->from_p = r;
      t->to_p = invert(r);
      return t;
    }
    case Basis::h:
    case Basis::e:
      for (size_t i = 0; i < N; ++i) to[i] = row_product_in_p(parts[i], b == Basis::e);
      break;
    case Basis::s:
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) to[i][j] = Rational(character(parts[i], parts[j])) / parts[j].z();
      break;
  }
  t->to_p = to;
  t->from_p = invert(to);
  return t;
}

struct MNKey {
  Partition lambda, mu;
  bool operator<(const MNKey& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return mu < o.mu;
  }
};

long character_rec(const Partition& lambda, const Partition& mu, std::map<MNKey, long>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  MNKey key{lambda, mu};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int k = mu.parts()[0];
  Partition rest = Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  int L = lambda.length();
  std::vector<int> beta(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lambda[i] + L - 1 - i;
  long total = 0;
  for (int i = 0; i < L; ++i) {
    int x = beta[static_cast<size_t>(i)], y = x - k;
    if (y < 0 || std::find(beta.begin(), beta.end(), y) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > y && b < x) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<size_t>(i)] = y;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < L; ++j) parts.push_back(nb[static_cast<size_t>(j)] - (L - 1 - j));
    long sub = character_rec(Partition::from_unsorted(parts), rest, memo);
    total += (between % 2) ? -sub : sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& mu) {
  static std::mutex mu_lock;
  static std::map<MNKey, long> memo;
  if (lambda.size() != mu.size()) return 0;
  std::lock_guard<std::mutex> lock(mu_lock);
  return character_rec(lambda, mu, memo);
}

const Transition& transition(Basis b, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Transition>> cache;
  std::pair<int, int> key{static_cast<int>(b), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto t = build_transition(b, n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(t));
  return *it->second;
}

// ---- SymFunc ----

SymFunc SymFunc::element(Basis b, const Partition& lambda, int max_degree) {
  SymFunc f(b, max_degree);
  f.add(lambda, RatFunc(1));
  return f;
}

SymFunc SymFunc::constant(const RatFunc& c, int max_degree) {
  SymFunc f(Basis::p, max_degree);
  f.add(Partition(), c);
  return f;
}

RatFunc SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero() || lambda.size() > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymFunc::set(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) terms_.erase(lambda);
  else if (lambda.size() <= max_degree_) terms_[lambda] = c;
}

int SymFunc::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
int SymFunc::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

SymFunc SymFunc::to(Basis b) const {
  if (b == basis_) return *this;
  SymFunc p(Basis::p, max_degree_);
  if (basis_ == Basis::p) {
    p = *this;
  } else {
    for (const auto& [lambda, c] : terms_) {
      const auto& tr = transition(basis_, lambda.size());
      const auto& row = tr.to_p[partition_index(lambda)];
      for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) p.add((*tr.index)[j], c * RatFunc(row[j]));
    }
  }
  if (b == Basis::p) return p;
  SymFunc out(b, max_degree_);
  for (const auto& [mu, c] : p.terms_) {
    const auto& tr = transition(b, mu.size());
    const auto& row = tr.from_p[partition_index(mu)];
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) out.add((*tr.index)[j], c * RatFunc(row[j]));
  }
  return out;
}

SymFunc SymFunc::truncated(int max_degree) const {
  SymFunc r(basis_, std::min(max_degree, max_degree_));
  for (const auto& [l, c] : terms_)
    if (l.size() <= max_degree) r.terms_.emplace(l, c);
  return r;
}

SymFunc SymFunc::homogeneous(int n) const {
  SymFunc r(basis_, max_degree_);
  for (const auto& [l, c] : terms_)
    if (l.size() == n) r.terms_.emplace(l, c);
  return r;
}

SymFunc SymFunc::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  SymFunc r(basis_, max_degree_);
  for (const auto& [l, c] : terms_) r.add(l, f(c));
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r(*this);
  for (auto& [l, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  max_degree_ = std::min(max_degree_, o.max_degree_);
  if (o.basis_ != basis_) return *this += o.to(basis_);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.size() > max_degree_; });
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, x] : terms_) x *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = a.in_p(), pb = b.in_p();
  int N = std::min(a.max_degree_, b.max_degree_);
  SymFunc r(Basis::p, N);
  for (const auto& [la, ca] : pa.terms_)
    for (const auto& [lb, cb] : pb.terms_)
      if (la.size() + lb.size() <= N) r.add(la.join(lb), ca * cb);
  return r;
}

SymFunc SymFunc::adams(int k) const {
  SymFunc p = in_p();
  SymFunc r(Basis::p, max_degree_);
  for (const auto& [l, c] : p.terms_)
    if (l.size() * k <= max_degree_) r.add(l.scaled(k), c.adams(k));
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = a.in_p(), pb = b.in_p();
  int N = std::min(a.max_degree_, b.max_degree_);
  auto ia = pa.terms_.begin(), ib = pb.terms_.begin();
  auto skip = [&](auto& it, const SymFunc::Map& m) {
    while (it != m.end() && it->first.size() > N) ++it;
  };
  while (true) {
    skip(ia, pa.terms_);
    skip(ib, pb.terms_);
    if (ia == pa.terms_.end() || ib == pb.terms_.end()) break;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
  skip(ia, pa.terms_);
  skip(ib, pb.terms_);
  return ia == pa.terms_.end() && ib == pb.terms_.end();
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + basis_name(basis_) + l.str();
  }
  return s;
}

// ---- Alphabet ----

Alphabet Alphabet::symbolic(const RatFunc& a) {
  Alphabet r;
  if (!a.is_zero()) r.terms_.push_back(Term{Rational(1), Rational(1), a});
  return r;
}

Alphabet Alphabet::number(const Rational& x, const Rational& mult) {
  Alphabet r;
  if (!mult.is_zero()) r.terms_.push_back(Term{mult, x, RatFunc(1)});
  return r;
}

Alphabet Alphabet::numbers(const std::vector<Rational>& xs, const Rational& mult) {
  Alphabet r;
  for (const auto& x : xs) r = r + number(x, mult);
  return r;
}

RatFunc Alphabet::adams(int k) const {
  RatFunc r;
  for (const auto& t : terms_) r += t.expr.adams(k) * RatFunc(t.mult * t.value.pow(k));
  return r;
}

Alphabet Alphabet::operator-() const { return scaled(Rational(-1)); }

Alphabet Alphabet::operator+(const Alphabet& o) const {
  Alphabet r(*this);
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  return r;
}

Alphabet Alphabet::operator*(const Alphabet& o) const {
  Alphabet r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back(Term{a.mult * b.mult, a.value * b.value, a.expr * b.expr});
  return r;
}

Alphabet Alphabet::scaled(const Rational& c) const {
  Alphabet r(*this);
  for (auto& t : r.terms_) t.mult *= c;
  if (c.is_zero()) r.terms_.clear();
  return r;
}

// ---- inner products ----

RatFunc hall_weight(const Partition& mu) { return RatFunc(mu.z()); }

RatFunc qt_weight(const Partition& mu, const QT& qt) {
  RatFunc w(mu.z());
  for (int k : mu.parts()) w *= (RatFunc(1) - qt.q.pow(k)) / (RatFunc(1) - qt.t.pow(k));
  return w;
}

RatFunc star_weight(const Partition& mu, const QT& qt) {
  RatFunc w(mu.z());
  if (mu.length() % 2) w = -w;
  for (int k : mu.parts()) w *= (RatFunc(1) - qt.q.pow(k)) * (RatFunc(1) - qt.t.pow(k));
  return w;
}

namespace {

RatFunc diagonal_pairing(const SymFunc& f, const SymFunc& g, const std::function<RatFunc(const Partition&)>& w) {
  SymFunc pf = f.in_p(), pg = g.in_p();
  RatFunc r;
  for (const auto& [l, c] : pf.terms()) {
    auto it = pg.terms().find(l);
    if (it == pg.terms().end()) continue;
    r += c * it->second * w(l);
  }
  return r;
}

}  // namespace

RatFunc hall(const SymFunc& f, const SymFunc& g) { return diagonal_pairing(f, g, hall_weight); }

RatFunc inner_qt(const SymFunc& f, const SymFunc& g, const QT& qt) {
  return diagonal_pairing(f, g, [&](const Partition& m) { return qt_weight(m, qt); });
}

RatFunc inner_star(const SymFunc& f, const SymFunc& g, const QT& qt) {
  return diagonal_pairing(f, g, [&](const Partition& m) { return star_weight(m, qt); });
}

// ---- operators ----

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree) {
  SymFunc pf = f.in_p();
  SymFunc pg = g.in_p().truncated(max_degree);
  if (!pg.coefficient(Partition()).is_zero()) throw std::invalid_argument("plethysm: inner function has a constant term");
  std::map<int, SymFunc> adams_cache;
  auto ad = [&](int k) -> const SymFunc& {
    auto it = adams_cache.find(k);
    if (it == adams_cache.end()) it = adams_cache.emplace(k, pg.adams(k).truncated(max_degree)).first;
    return it->second;
  };
  SymFunc r(Basis::p, max_degree);
  for (const auto& [mu, c] : pf.terms()) {
    SymFunc term = SymFunc::constant(c, max_degree);
    for (int k : mu.parts()) {
      term = term * ad(k);
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

SymFunc gamma_plus(const SymFunc& f, const Alphabet& A) {
  SymFunc pf = f.in_p();
  SymFunc r(Basis::p, pf.max_degree());
  std::map<int, RatFunc> ak;
  auto a = [&](int k) -> const RatFunc& {
    auto it = ak.find(k);
    if (it == ak.end()) it = ak.emplace(k, A.adams(k)).first;
    return it->second;
  };
  for (const auto& [mu, c] : pf.terms()) {
    auto mult = mu.multiplicities();
    std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
    for (size_t k = 1; k < mult.size(); ++k)
      if (mult[k]) groups.emplace_back(static_cast<int>(k), mult[k]);
    // Enumerate how many copies of each part survive.
    std::vector<int> keep(groups.size(), 0);
    while (true) {
      RatFunc coeff = c;
      std::vector<int> parts;
      for (size_t g = 0; g < groups.size(); ++g) {
        auto [k, m] = groups[g];
        int j = keep[g];
        // binomial(m, j) * a_k^(m-j)
        Rational binom(1);
        for (int i = 0; i < j; ++i) binom = binom * Rational(m - i) / Rational(i + 1);
        coeff *= binom;
        if (m - j > 0) coeff *= a(k).pow(m - j);
        for (int i = 0; i < j; ++i) parts.push_back(k);
        if (coeff.is_zero()) break;
      }
      if (!coeff.is_zero()) r.add(Partition::from_unsorted(parts), coeff);
      size_t g = 0;
      while (g < groups.size() && keep[g] == groups[g].second) keep[g++] = 0;
      if (g == groups.size()) break;
      ++keep[g];
    }
  }
  return r;
}

SymFunc exp_alphabet(const Alphabet& A, int max_degree) {
  SymFunc r(Basis::p, max_degree);
  std::vector<RatFunc> ak(static_cast<size_t>(max_degree) + 1);
  for (int k = 1; k <= max_degree; ++k) ak[static_cast<size_t>(k)] = A.adams(k);
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& mu : partitions(n)) {
      RatFunc c(mu.z().inverse());
      for (int k : mu.parts()) {
        c *= ak[static_cast<size_t>(k)];
        if (c.is_zero()) break;
      }
      r.add(mu, c);
    }
  }
  return r;
}

SymFunc gamma_minus(const SymFunc& f, const Alphabet& A, int max_degree) {
  SymFunc pf = f.in_p().truncated(max_degree);
  int room = max_degree - pf.min_degree();
  if (room < 0) return SymFunc(Basis::p, max_degree);
  SymFunc e(Basis::p, max_degree);
  SymFunc ex = exp_alphabet(A, room);
  for (const auto& [mu, c] : ex.terms()) e.add(mu, c);
  return e * pf;
}

SymFunc upsilon(const SymFunc& f, const Alphabet& A) {
  SymFunc pf = f.in_p();
  SymFunc r(Basis::p, pf.max_degree());
  std::map<int, RatFunc> ak;
  for (const auto& [mu, c] : pf.terms()) {
    RatFunc x = c;
    for (int k : mu.parts()) {
      auto it = ak.find(k);
      if (it == ak.end()) it = ak.emplace(k, A.adams(k)).first;
      x *= it->second;
    }
    r.add(mu, x);
  }
  return r;
}

SymFunc p_derivative(const SymFunc& f, int k) {
  SymFunc pf = f.in_p();
  SymFunc r(Basis::p, pf.max_degree());
  for (const auto& [mu, c] : pf.terms()) {
    int m = 0;
    for (int x : mu.parts())
      if (x == k) ++m;
    if (!m) continue;
    r.add(mu.remove_part(k), c * RatFunc(Rational(k * m)));
  }
  return r;
}

// ---- Tensor ----

Tensor Tensor::one(int arity) { return constant(arity, RatFunc(1)); }

Tensor Tensor::constant(int arity, const RatFunc& c) {
  Tensor t(arity);
  t.add(Key(static_cast<size_t>(arity)), c);
  return t;
}

Tensor Tensor::product_of(const std::vector<SymFunc>& factors) {
  Tensor t = one(0);
  for (const auto& f : factors) t = t.tensor(from_symfunc(f));
  return t;
}

RatFunc Tensor::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void Tensor::add(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(k.size()) != arity_) throw std::invalid_argument("Tensor::add: key arity mismatch");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor Tensor::operator-() const {
  Tensor r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("Tensor: arity mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) { return *this += -o; }

Tensor& Tensor::operator*=(const RatFunc& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("Tensor: arity mismatch");
  Tensor r(a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Tensor::Key k(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) k[i] = ka[i].join(kb[i]);
      r.add(k, ca * cb);
    }
  }
  return r;
}

Tensor Tensor::adams(int k) const {
  Tensor r(arity_);
  for (const auto& [key, c] : terms_) {
    Key nk(key.size());
    for (size_t i = 0; i < key.size(); ++i) nk[i] = key[i].scaled(k);
    r.add(nk, c.adams(k));
  }
  return r;
}

Tensor Tensor::tensor(const Tensor& o) const {
  Tensor r(arity_ + o.arity_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k(ka);
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  }
  return r;
}

namespace {

Tensor::Key drop_two(const Tensor::Key& k, int i, int j) {
  Tensor::Key r;
  for (int x = 0; x < static_cast<int>(k.size()); ++x)
    if (x != i && x != j) r.push_back(k[static_cast<size_t>(x)]);
  return r;
}

}  // namespace

Tensor Tensor::contract(int i, int j, const std::function<RatFunc(const Partition&)>& weight) const {
  Tensor r(arity_ - 2);
  std::map<Partition, RatFunc, PartitionOrder> wcache;
  for (const auto& [k, c] : terms_) {
    const Partition& a = k[static_cast<size_t>(i)];
    if (a != k[static_cast<size_t>(j)]) continue;
    auto it = wcache.find(a);
    if (it == wcache.end()) it = wcache.emplace(a, weight(a)).first;
    r.add(drop_two(k, i, j), c * it->second);
  }
  return r;
}

Tensor Tensor::contract_general(int i, int j,
                                const std::function<RatFunc(const Partition&, const Partition&)>& form) const {
  Tensor r(arity_ - 2);
  std::map<std::pair<Partition, Partition>, RatFunc> cache;
  for (const auto& [k, c] : terms_) {
    std::pair<Partition, Partition> key{k[static_cast<size_t>(i)], k[static_cast<size_t>(j)]};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, form(key.first, key.second)).first;
    if (it->second.is_zero()) continue;
    r.add(drop_two(k, i, j), c * it->second);
  }
  return r;
}

Tensor::Map Tensor::in_basis(Basis b) const {
  Map cur = terms_;
  if (b == Basis::p) return cur;
  for (int s = 0; s < arity_; ++s) {
    Map next;
    for (const auto& [k, c] : cur) {
      const Partition& mu = k[static_cast<size_t>(s)];
      const auto& tr = transition(b, mu.size());
      const auto& row = tr.from_p[partition_index(mu)];
      for (size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        Key nk = k;
        nk[static_cast<size_t>(s)] = (*tr.index)[j];
        RatFunc v = c * RatFunc(row[j]);
        auto [it, inserted] = next.try_emplace(nk, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

SymFunc Tensor::as_symfunc() const {
  if (arity_ != 1) throw std::logic_error("Tensor::as_symfunc: arity must be 1");
  SymFunc f(Basis::p);
  for (const auto& [k, c] : terms_) f.add(k[0], c);
  return f;
}

Tensor Tensor::from_symfunc(const SymFunc& f) {
  Tensor t(1);
  SymFunc pf = f.in_p();
  for (const auto& [l, c] : pf.terms()) t.add({l}, c);
  return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string key_str(const Tensor::Key& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += " ";
    s += k[i].str();
  }
  return s;
}

}  // namespace pleth
