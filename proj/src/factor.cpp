#include "pleth/factor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace pleth {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct DeltaKey {
  int d;
  Monomial delta;
  bool operator==(const DeltaKey& o) const { return d == o.d && delta == o.delta; }
};

struct DeltaKeyHash {
  size_t operator()(const DeltaKey& k) const { return k.delta.hash() * 31 + static_cast<size_t>(k.d); }
};

struct AdamsKey {
  uint32_t id;
  int k;
  bool operator==(const AdamsKey& o) const { return id == o.id && k == o.k; }
};

struct AdamsKeyHash {
  size_t operator()(const AdamsKey& a) const { return (static_cast<size_t>(a.id) << 8) ^ static_cast<size_t>(a.k); }
};

struct Registry {
  std::mutex mu;
  std::deque<Atom> atoms;
  std::unordered_map<DeltaKey, const Atom*, DeltaKeyHash> cyclo;
  std::unordered_map<MPoly, const Atom*, MPolyHash> opaque;
  std::unordered_map<MPoly, Factorization, MPolyHash> factor_cache;
  std::unordered_map<AdamsKey, Factorization, AdamsKeyHash> adams_cache;
  std::map<int, std::vector<int64_t>> cyclo_coeffs;
};

Registry& reg() {
  static Registry r;
  return r;
}

// Exact division of integer coefficient vectors, b monic.
std::vector<int64_t> divide_int_poly(std::vector<int64_t> a, const std::vector<int64_t>& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  std::vector<int64_t> q(static_cast<size_t>(da - db) + 1, 0);
  for (int k = da; k >= db; --k) {
    int64_t c = a[static_cast<size_t>(k)];
    q[static_cast<size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(k - db + i)] -= c * b[static_cast<size_t>(i)];
  }
  return q;
}

std::vector<int64_t> compute_cyclotomic(int d, std::map<int, std::vector<int64_t>>& cache) {
  std::vector<int64_t> p(static_cast<size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    auto it = cache.find(e);
    std::vector<int64_t> phi = it != cache.end() ? it->second : compute_cyclotomic(e, cache);
    cache[e] = phi;
    p = divide_int_poly(p, phi);
  }
  return p;
}

MPoly cyclotomic_value(int d, const Monomial& delta) {
  const auto& c = cyclotomic_coefficients(d);
  std::vector<MPoly::Term> t;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) t.emplace_back(delta.pow(static_cast<int>(i)), Rational(c[i]));
  return MPoly::from_terms(std::move(t));
}

int pivot_of(const Monomial& m) {
  for (int i = 0; i < kMaxVars; ++i)
    if (m[i] != 0) return i;
  return -1;
}

// v = g * prim with prim oriented (first nonzero entry positive); g may be negative.
int primitive_part(const Monomial& v, Monomial& prim) {
  int g = 0;
  for (int i = 0; i < kMaxVars; ++i) g = std::gcd(g, std::abs(v[i]));
  if (g == 0) {
    prim = Monomial{};
    return 0;
  }
  int p = pivot_of(v);
  if (v[p] < 0) g = -g;
  for (int i = 0; i < kMaxVars; ++i) prim.set(i, v[i] / g);
  return g;
}

// Leading term of a product of atoms.
MPoly::Term atoms_leading_term(const std::vector<AtomPower>& atoms) {
  Monomial m;
  Rational c(1);
  for (const auto& [a, e] : atoms) {
    const auto& lt = a->value.leading_term();
    m *= lt.first.pow(e);
    c *= lt.second.pow(e);
  }
  return {m, c};
}

void set_unit(Factorization& f, const MPoly& p) {
  auto lt = atoms_leading_term(f.atoms);
  const auto& lp = p.leading_term();
  f.scalar = lp.second / lt.second;
  f.shift = lp.first / lt.first;
}

void add_atom(std::vector<AtomPower>& v, const Atom* a, int e) {
  for (auto& [x, k] : v)
    if (x == a) {
      k += e;
      return;
    }
  v.emplace_back(a, e);
}

void sort_atoms(std::vector<AtomPower>& v) {
  std::sort(v.begin(), v.end(), [](const AtomPower& a, const AtomPower& b) { return a.first->id < b.first->id; });
  v.erase(std::remove_if(v.begin(), v.end(), [](const AtomPower& a) { return a.second == 0; }), v.end());
}

// Collinear support: returns primitive direction and span, or false.
bool collinear_direction(const MPoly& p, Monomial& delta, int& span) {
  const auto& terms = p.terms();
  if (terms.size() < 2) return false;
  Monomial base = terms[0].first;
  Monomial diff = terms[1].first / base;
  primitive_part(diff, delta);
  int piv = pivot_of(delta);
  int lo = 0, hi = 0;
  for (const auto& t : terms) {
    Monomial d = t.first / base;
    int k = d[piv] / delta[piv];
    if (d != delta.pow(k)) return false;
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  span = hi - lo;
  return true;
}

// Hull edge directions of a bivariate support with their lattice lengths.
std::vector<std::pair<Monomial, int>> newton_edges(const MPoly& p, int vi, int vj) {
  std::vector<std::pair<int, int>> pts;
  for (const auto& t : p.terms()) pts.emplace_back(t.first[vi], t.first[vj]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<int, int>> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k > 0 ? k - 1 : 0);
  std::vector<std::pair<Monomial, int>> out;
  for (size_t i = 0; i < hull.size(); ++i) {
    auto a = hull[i], b = hull[(i + 1) % hull.size()];
    Monomial v;
    v.set(vi, b.first - a.first);
    v.set(vj, b.second - a.second);
    Monomial prim;
    int g = primitive_part(v, prim);
    if (g == 0) continue;
    int len = std::abs(g);
    bool merged = false;
    for (auto& [d, l] : out)
      if (d == prim) {
        l = std::max(l, len);
        merged = true;
      }
    if (!merged) out.emplace_back(prim, len);
  }
  return out;
}

std::optional<MPoly> divide_by_cyclotomic(const MPoly& p, int d, const Monomial& delta);

// Divides out cyclotomic atoms along the given direction as long as possible.
bool peel_direction(MPoly& w, const Monomial& delta, int span, std::vector<AtomPower>& atoms) {
  bool any = false;
  for (int d = 1; d <= 6 * span + 6; ++d) {
    if (euler_phi(d) > span) continue;
    while (w.size() > 1) {
      auto q = divide_by_cyclotomic(w, d, delta);
      if (!q) break;
      w = q->canonical_associate();
      add_atom(atoms, cyclotomic_atom(d, delta), 1);
      any = true;
    }
  }
  return any;
}

Factorization factor_uncached(const MPoly& p) {
  Factorization f;
  MPoly w = p.canonical_associate();
  bool progress = true;
  while (progress && !w.is_constant()) {
    progress = false;
    Monomial delta;
    int span = 0;
    if (collinear_direction(w, delta, span)) {
      progress = peel_direction(w, delta, span, f.atoms);
      continue;
    }
    uint32_t sup = w.support();
    if (__builtin_popcount(sup) == 2) {
      int vi = __builtin_ctz(sup);
      int vj = __builtin_ctz(sup & (sup - 1));
      for (const auto& [dir, len] : newton_edges(w, vi, vj)) {
        if (peel_direction(w, dir, len, f.atoms)) {
          progress = true;
          break;
        }
      }
      continue;
    }
    // Three or more variables: try the cyclotomic atoms seen so far.
    std::vector<const Atom*> cands;
    {
      std::lock_guard<std::mutex> lock(reg().mu);
      for (const Atom& a : reg().atoms)
        if (a.is_cyclotomic() && (a.support & ~sup) == 0) cands.push_back(&a);
    }
    for (const Atom* a : cands) {
      while (w.size() > 1) {
        auto q = divide_by_atom(w, a);
        if (!q) break;
        w = q->canonical_associate();
        add_atom(f.atoms, a, 1);
        progress = true;
      }
    }
  }
  if (!w.is_constant()) add_atom(f.atoms, opaque_atom(w), 1);
  sort_atoms(f.atoms);
  set_unit(f, p);
  return f;
}

Factorization transform_cyclotomic(const Atom* a, const Monomial& new_delta, const MPoly& new_value) {
  Factorization f;
  if (new_delta.is_one()) {
    Rational c = new_value.constant_value();
    if (c.is_zero()) throw PoleError("denominator factor " + a->value.str() + " maps to zero");
    f.scalar = c;
    return f;
  }
  Monomial prim;
  int g = std::abs(primitive_part(new_delta, prim));
  int d = a->cyclo;
  for (int e = 1; e <= d * g; ++e) {
    if ((d * g) % e) continue;
    if (e / std::gcd(e, g) == d) add_atom(f.atoms, cyclotomic_atom(e, prim), 1);
  }
  sort_atoms(f.atoms);
  set_unit(f, new_value);
  return f;
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<int64_t>& cyclotomic_coefficients(int d) {
  Registry& r = reg();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.cyclo_coeffs.find(d);
  if (it != r.cyclo_coeffs.end()) return it->second;
  auto v = compute_cyclotomic(d, r.cyclo_coeffs);
  return r.cyclo_coeffs[d] = std::move(v);
}

const Atom* cyclotomic_atom(int d, const Monomial& delta) {
  Registry& r = reg();
  DeltaKey key{d, delta};
  {
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.cyclo.find(key);
    if (it != r.cyclo.end()) return it->second;
  }
  MPoly value = cyclotomic_value(d, delta);
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.cyclo.find(key);
  if (it != r.cyclo.end()) return it->second;
  Atom a;
  a.id = static_cast<uint32_t>(r.atoms.size());
  a.value = std::move(value);
  a.cyclo = d;
  a.delta = delta;
  a.pivot = pivot_of(delta);
  a.support = delta.support();
  r.atoms.push_back(std::move(a));
  const Atom* ptr = &r.atoms.back();
  r.cyclo.emplace(key, ptr);
  return ptr;
}

const Atom* opaque_atom(const MPoly& p) {
  MPoly c = p.canonical_associate();
  Registry& r = reg();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.opaque.find(c);
  if (it != r.opaque.end()) return it->second;
  Atom a;
  a.id = static_cast<uint32_t>(r.atoms.size());
  a.support = c.support();
  a.value = c;
  r.atoms.push_back(std::move(a));
  const Atom* ptr = &r.atoms.back();
  r.opaque.emplace(std::move(c), ptr);
  return ptr;
}

size_t atom_count() {
  std::lock_guard<std::mutex> lock(reg().mu);
  return reg().atoms.size();
}

Factorization factor_polynomial(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_polynomial: zero");
  if (p.is_monomial()) {
    Factorization f;
    f.scalar = p.leading_term().second;
    f.shift = p.leading_term().first;
    return f;
  }
  Rational c;
  Monomial s;
  MPoly key = p.canonical_associate(&c, &s);
  Registry& r = reg();
  {
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.factor_cache.find(key);
    if (it != r.factor_cache.end()) {
      Factorization f = it->second;
      f.scalar *= c;
      f.shift *= s;
      return f;
    }
  }
  Factorization f = factor_uncached(key);
  {
    std::lock_guard<std::mutex> lock(r.mu);
    r.factor_cache.emplace(key, f);
  }
  f.scalar *= c;
  f.shift *= s;
  return f;
}

const Factorization& adams_atom(const Atom* a, int k) {
  Registry& r = reg();
  AdamsKey key{a->id, k};
  {
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.adams_cache.find(key);
    if (it != r.adams_cache.end()) return it->second;
  }
  MPoly nv = a->value.adams(k);
  Factorization f = a->is_cyclotomic() ? transform_cyclotomic(a, a->delta.adams(k), nv) : factor_polynomial(nv);
  std::lock_guard<std::mutex> lock(r.mu);
  auto [it, inserted] = r.adams_cache.emplace(key, std::move(f));
  return it->second;
}

Factorization map_atom(const Atom* a, const std::vector<std::pair<int, Monomial>>& images) {
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
  MPoly nv = a->value.map_monomials(map);
  if (a->is_cyclotomic()) return transform_cyclotomic(a, map(a->delta), nv);
  if (nv.is_zero()) throw PoleError("denominator factor " + a->value.str() + " maps to zero");
  return factor_polynomial(nv);
}

namespace {

std::optional<MPoly> divide_by_cyclotomic(const MPoly& p, int cyclo, const Monomial& delta) {
  if (p.is_zero()) return MPoly();
  int piv = pivot_of(delta);
  int dp = delta[piv];
  const auto& phi = cyclotomic_coefficients(cyclo);
  int deg = static_cast<int>(phi.size()) - 1;
  std::unordered_map<Monomial, std::vector<std::pair<int, const Rational*>>, MonomialHash> classes;
  classes.reserve(p.size());
  for (const auto& t : p.terms()) {
    int j = floor_div(t.first[piv], dp);
    Monomial rep = t.first / delta.pow(j);
    classes[rep].emplace_back(j, &t.second);
  }
  std::vector<MPoly::Term> out;
  out.reserve(p.size());
  std::vector<Rational> c;
  for (auto& [rep, items] : classes) {
    int jmin = items[0].first, jmax = items[0].first;
    for (const auto& it : items) {
      jmin = std::min(jmin, it.first);
      jmax = std::max(jmax, it.first);
    }
    int span = jmax - jmin;
    if (span < deg) return std::nullopt;
    if (cyclo == 1) {
      Rational s;
      for (const auto& it : items) s += *it.second;
      if (!s.is_zero()) return std::nullopt;
    }
    c.assign(static_cast<size_t>(span) + 1, Rational(0));
    for (const auto& it : items) c[static_cast<size_t>(it.first - jmin)] = *it.second;
    std::vector<Rational> quot(static_cast<size_t>(span - deg) + 1);
    for (int k = span; k >= deg; --k) {
      Rational qk = c[static_cast<size_t>(k)];
      if (qk.is_zero()) continue;
      quot[static_cast<size_t>(k - deg)] = qk;
      for (int i = 0; i <= deg; ++i) {
        if (phi[static_cast<size_t>(i)] == 0) continue;
        c[static_cast<size_t>(k - deg + i)] -= qk * Rational(phi[static_cast<size_t>(i)]);
      }
    }
    for (int k = 0; k < deg; ++k)
      if (!c[static_cast<size_t>(k)].is_zero()) return std::nullopt;
    for (size_t k = 0; k < quot.size(); ++k)
      if (!quot[k].is_zero()) out.emplace_back(rep * delta.pow(jmin + static_cast<int>(k)), std::move(quot[k]));
  }
  return MPoly::from_terms(std::move(out));
}

}  // namespace

std::optional<MPoly> divide_by_atom(const MPoly& p, const Atom* a) {
  if (p.is_zero()) return MPoly();
  if (!a->is_cyclotomic()) return divide_exact(p, a->value);
  return divide_by_cyclotomic(p, a->cyclo, a->delta);
}

std::vector<AtomPower> merge_atoms(const std::vector<AtomPower>& a, const std::vector<AtomPower>& b, int sign_b) {
  std::vector<AtomPower> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first->id < b[j].first->id)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first->id < a[i].first->id) {
      r.emplace_back(b[j].first, sign_b * b[j].second);
      ++j;
    } else {
      int e = a[i].second + sign_b * b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace pleth
