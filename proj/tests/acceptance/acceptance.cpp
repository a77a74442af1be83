// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "pleth/coreidentities.hpp"

using namespace pleth;

namespace {

struct Outcome {
  bool pass = true;
  size_t checks = 0;
  std::string detail;

  void add(const Report& r) {
    checks += r.items.size();
    if (!r.pass && detail.empty()) {
      const CheckItem* f = r.first_failure();
      detail = r.identity + ": " + (f ? f->label : std::string("failed"));
    }
    pass = pass && r.pass;
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && detail.empty()) detail = what;
    pass = pass && ok;
  }
};

Outcome macdonald_foundation() {
  Outcome o;
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : partitions(n)) {
      const SymFunc& h = modified_H(mu);
      o.expect(inner_star(h, h) == h_norm(mu), "norm " + mu.str());
      for (const auto& nu : partitions(n))
        if (nu < mu) o.expect(inner_star(h, modified_H(nu)).is_zero(), "orthogonality " + mu.str() + " " + nu.str());
      o.expect(apply_D0(h) == h * psi_of(mu), "D_0 eigenvalue " + mu.str());
      o.expect(h == swap_qt(modified_H(mu.conjugate())), "q,t symmetry " + mu.str());
    }
  return o;
}

Outcome cno() {
  Outcome o;
  o.add(verify_cno(4));
  RatFunc u(Var("u"));
  o.expect(n_coeff({2}, {1, 1}, u) == RatFunc::parse("u^-2*t*(1-u)*(1-u*t)*(1-u*q^2*t^-1)*(1-u*q*t)"), "N_[2],[1,1]");
  o.expect(gamma_u_pairing(modified_H({2}), modified_H({1, 1}), u) == n_coeff({2}, {1, 1}, u), "pairing [2],[1,1]");
  return o;
}

Outcome genus_one() {
  Outcome o;
  o.add(verify_genus1(4));
  o.add(verify_tennis(4));
  return o;
}

Outcome gluing() {
  Outcome o;
  o.add(verify_gluing(0, 0, 3));
  o.add(verify_boundary_gluing(3, 3, 3));
  return o;
}

Outcome table_subgrid() {
  Outcome o;
  struct Cell {
    int g, k, n;
  };
  for (Cell c : {Cell{0, 0, 4}, Cell{0, 1, 4}, Cell{0, 2, 4}, Cell{0, 3, 3}, Cell{1, 0, 3}, Cell{1, 1, 3}, Cell{2, 0, 3}})
    o.add(verify_positivity(SurfaceSpec{c.g, c.k, c.n, {}}));
  return o;
}

Outcome section_four() {
  Outcome o;
  o.add(verify_mac_id(2, 12));
  o.add(verify_mac_id(3, 12));
  o.add(verify_2core(8));
  o.add(verify_t_core(3, 12));
  o.add(verify_t_core(5, 10));
  o.add(verify_bernstein_suite(2, 10, 5, 11));
  o.add(verify_bernstein_suite(3, 12, 5, 13));
  o.add(verify_bernstein_suite(5, 10, 5, 17));
  return o;
}

Outcome fern() {
  Outcome o;
  o.add(verify_fernlem(5, 5));
  return o;
}

Outcome h2() {
  Outcome o;
  for (int g : {1, 2}) {
    o.add(verify_h2_formula(g));
    o.add(verify_h2_specialization(g));
  }
  o.add(verify_cmn_polynomiality(0, 3, 3));
  o.add(verify_cmn_polynomiality(1, 3, 3));
  return o;
}

// ---- randomized infrastructure properties ----

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 3), k(1, 4);
  MPoly n;
  for (int i = 0; i < 3; ++i) {
    Monomial m;
    m.set(var("q").index(), e(rng));
    m.set(var("t").index(), e(rng));
    n += MPoly(m, Rational(c(rng)));
  }
  RatFunc r(n);
  if (k(rng) == 1) r /= RatFunc::parse("1-q");
  if (k(rng) == 1) r /= RatFunc::parse("1-q*t").pow(k(rng));
  if (k(rng) == 1) r /= RatFunc::parse("1+t^2");
  return r;
}

RatFunc random_poly(std::mt19937& rng, int terms, int max_e) {
  std::uniform_int_distribution<int> c(-2, 2), e(0, max_e);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    m.set(var("q").index(), e(rng));
    m.set(var("t").index(), e(rng));
    p += MPoly(m, Rational(c(rng)));
  }
  return RatFunc(p);
}

SymFunc random_symfunc(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> d(0, max_deg), b(0, 4);
  SymFunc f;
  for (int i = 0; i < 3; ++i) {
    const auto& ps = partitions(d(rng));
    std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
    f += SymFunc::element(static_cast<Basis>(b(rng)), ps[pick(rng)]) * random_poly(rng, 2, 2);
  }
  return f;
}

SymFunc truncate_coeffs(const SymFunc& f, Var v, int deg) {
  return f.map_coefficients([&](const RatFunc& c) { return c.truncate_in(v, deg); });
}

RatFunc scalar_exp(const Alphabet& A, int N) {
  RatFunc r;
  for (int n = 0; n <= N; ++n)
    for (const auto& mu : partitions(n)) {
      RatFunc c(mu.z().inverse());
      for (int k : mu.parts()) c *= A.adams(k);
      r += c;
    }
  return r;
}

constexpr int kCases = 1000;

Outcome properties() {
  Outcome o;
  std::mt19937 rng(20261014);
  // Ring axioms.
  for (int i = 0; i < kCases; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    bool ok = (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && a + b == b + a && (a - a).is_zero();
    if (!b.is_zero()) ok = ok && (a / b) * b == a;
    o.expect(ok, "ring axioms case " + std::to_string(i));
  }
  // Exp / Log inversion on scalar series.
  for (int i = 0; i < kCases; ++i) {
    TruncSeries<RatFunc> a(4, RatFunc(0));
    for (int n = 1; n <= 4; ++n) a[n] = random_poly(rng, 2, 2);
    auto back = a.exp(RatFunc(1)).log(RatFunc(1));
    bool ok = true;
    for (int n = 0; n <= 4; ++n) ok = ok && back[n] == a[n];
    o.expect(ok, "Exp/Log case " + std::to_string(i));
  }
  // Hall adjointness of Gamma_+ and Gamma_-.
  for (int i = 0; i < kCases; ++i) {
    SymFunc f = random_symfunc(rng, 4), g = random_symfunc(rng, 4);
    Alphabet A = Alphabet::symbolic(random_poly(rng, 2, 1));
    o.expect(hall(gamma_plus(f, A), g) == hall(f, gamma_minus(g, A, 4)), "adjointness case " + std::to_string(i));
  }
  // Gamma_+(A) Gamma_-(B) = Exp(AB) Gamma_-(B) Gamma_+(A) and the Upsilon relations.
  Var y("y");
  const int N = 4;
  for (int i = 0; i < kCases; ++i) {
    Alphabet A = Alphabet::symbolic(random_poly(rng, 2, 1));
    Alphabet B = Alphabet::symbolic(random_poly(rng, 2, 1) * RatFunc(y));
    std::uniform_int_distribution<int> d(0, 2);
    const auto& ps = partitions(d(rng));
    std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
    const Partition& mu = ps[pick(rng)];
    SymFunc f = SymFunc::element(Basis::p, mu);
    int room = N - mu.size();
    SymFunc lhs = gamma_plus(gamma_minus(f, B, N), A);
    SymFunc rhs = gamma_minus(gamma_plus(f, A), B, N) * scalar_exp(A * B, N);
    bool ok = truncate_coeffs(lhs, y, room) == truncate_coeffs(rhs, y, room);
    Alphabet C = Alphabet::symbolic(random_poly(rng, 2, 1));
    Alphabet D = Alphabet::symbolic(random_poly(rng, 2, 1));
    SymFunc g = random_symfunc(rng, 3);
    ok = ok && gamma_plus(upsilon(g, C), D) == upsilon(gamma_plus(g, C * D), C);
    ok = ok && upsilon(gamma_minus(g, D, N), C) == gamma_minus(upsilon(g, C), C * D, N);
    o.expect(ok, "commutation case " + std::to_string(i));
  }
  // Two routes to the Ext character.
  std::uniform_int_distribution<int> sz(0, 6);
  for (int i = 0; i < kCases; ++i) {
    const auto& pa = partitions(sz(rng));
    const auto& pb = partitions(sz(rng));
    std::uniform_int_distribution<size_t> ia(0, pa.size() - 1), ib(0, pb.size() - 1);
    const Partition& mu = pa[ia(rng)];
    const Partition& nu = pb[ib(rng)];
    MPoly e = ext_char(mu, nu);
    bool ok = e == ext_char_via_chi(mu, nu) && ext_monomials(mu, nu).size() == static_cast<size_t>(mu.size() + nu.size());
    o.expect(ok, "E character " + mu.str() + " " + nu.str());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"Macdonald foundation (|mu| <= 5)", macdonald_foundation},
      {"Gamma(u) matrix elements N_{lambda,mu}(u) (|lambda|,|mu| <= 4)", cno},
      {"genus one and tennis identities (n <= 4)", genus_one},
      {"gluing Omega_{0,2} -> Omega_{1,0}, Omega_{0,3} x Omega_{0,3} -> Omega_{0,4} (n <= 3)", gluing},
      {"HH polynomiality and sign positivity on the symbolic-u subgrid", table_subgrid},
      {"Macdonald identities, 2-cores, t-cores, Bernstein determinant", section_four},
      {"constant-term lemma (T^5, |u-order| <= 5)", fern},
      {"HH_(2) closed forms and C_{m,n} polynomiality", h2},
      {"randomized infrastructure properties (1000 cases each)", properties},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu. %s: %zu checks, %.1fs%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.checks, secs,
                o.pass ? "" : " | first failure: ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
