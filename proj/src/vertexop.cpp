#include "pleth/vertexop.hpp"

#include <stdexcept>

namespace pleth {

namespace {

Monomial qt_mono(int a, int b) {
  Monomial m;
  m.set(var("q").index(), a);
  m.set(var("t").index(), b);
  return m;
}

RatFunc qpow(int a) { return RatFunc::monomial(qt_mono(a, 0)); }

// Arm and leg of cell (i, j) measured in mu; the cell may lie outside mu.
int arm_in(const Partition& mu, int i, int j) { return mu[i] - j - 1; }
int leg_in(const Partition& mu, int i, int j) { return mu.conjugate()[j] - i - 1; }

}  // namespace

MPoly ext_char(const Partition& mu, const Partition& nu) {
  Partition muc = mu.conjugate(), nuc = nu.conjugate();
  MPoly e;
  for (auto [i, j] : mu.cells()) e += MPoly(qt_mono(-(nu[i] - j - 1), muc[j] - i), Rational(1));
  for (auto [i, j] : nu.cells()) e += MPoly(qt_mono(mu[i] - j, -(nuc[j] - i - 1)), Rational(1));
  return e;
}

MPoly ext_char_via_chi(const Partition& mu, const Partition& nu) {
  MPoly bm = B_of(mu), bn = conj(B_of(nu));
  MPoly qt = MPoly(qt_mono(1, 1), Rational(1));
  MPoly M = (MPoly(1) - MPoly(var("q"))) * (MPoly(1) - MPoly(var("t")));
  return bn + qt * bm - M * bm * bn;
}

std::vector<Monomial> ext_monomials(const Partition& mu, const Partition& nu) {
  std::vector<Monomial> out;
  MPoly e = ext_char(mu, nu);
  for (const auto& [m, c] : e.terms()) {
    if (!c.is_integer() || c.sign() <= 0) throw std::logic_error("ext_monomials: non-positive coefficient");
    for (long k = 0; k < c.numerator().get_si(); ++k) out.push_back(m);
  }
  return out;
}

RatFunc n_coeff(const Partition& lambda, const Partition& mu, const RatFunc& u) {
  RatFunc r = (-u).pow(-mu.size()) * RatFunc::monomial(qt_mono(mu.conjugate().n(), mu.n()));
  for (const auto& m : ext_monomials(lambda, mu)) r *= RatFunc(1) - u * RatFunc::monomial(m);
  return r;
}

SymFunc gamma_u(const SymFunc& f, const RatFunc& u, int max_degree) {
  QT qt = QT::natural();
  SymFunc g = gamma_plus(f.in_p(), Alphabet::symbolic(RatFunc(1) - u * qt.q * qt.t));
  return gamma_minus(g, Alphabet::symbolic((u.inverse() - RatFunc(1)) / qt.M()), max_degree);
}

RatFunc gamma_u_pairing(const SymFunc& f, const SymFunc& g, const RatFunc& u) {
  return inner_star(gamma_u(f, u, g.degree()), g);
}

Report verify_cno(int n_max) {
  Report rep("cno");
  rep.param("n", n_max);
  rep.order_checked = n_max;
  RatFunc u{Var("u")};
  QT qt;
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const auto& lam : partitions_up_to(n_max))
    for (const auto& mu : partitions_up_to(n_max)) pairs.emplace_back(lam, mu);
  auto items = parallel_map<Report>(pairs.size(), [&](size_t i) {
    const auto& [lam, mu] = pairs[i];
    Report r;
    const SymFunc& hl = modified_H(lam);
    const SymFunc& hm = modified_H(mu);
    RatFunc N = n_coeff(lam, mu, u);
    std::string tag = lam.str() + "," + mu.str();
    r.check("pairing " + tag, gamma_u_pairing(hl, hm, u), N);
    SymFunc left = gamma_plus(hl, Alphabet::symbolic(RatFunc(1) - u * qt.q * qt.t));
    SymFunc right = gamma_plus(hm, Alphabet::symbolic(RatFunc(1) - u.inverse()));
    r.check("adjoint " + tag, inner_star(left, right), N);
    return r;
  });
  for (const auto& r : items) rep.merge(r);
  auto lams = partitions_up_to(n_max);
  auto exps = parallel_map<Report>(lams.size(), [&](size_t i) {
    const Partition& lam = lams[i];
    Report r;
    SymFunc g = gamma_u(modified_H(lam), u, n_max);
    for (const auto& mu : partitions_up_to(n_max)) {
      // Coefficient of H~_mu: star-pair with H~_mu and divide by its norm.
      RatFunc c = inner_star(g.homogeneous(mu.size()), modified_H(mu)) / h_norm(mu);
      r.check("expansion " + lam.str() + "->" + mu.str(), c, n_coeff(lam, mu, u) / n_coeff(mu, mu));
    }
    SymFunc rebuilt(Basis::p, n_max);
    for (const auto& mu : partitions_up_to(n_max)) rebuilt += modified_H(mu) * (n_coeff(lam, mu, u) / n_coeff(mu, mu));
    r.check_true("expansion sum " + lam.str(), rebuilt == g);
    return r;
  });
  for (const auto& r : exps) rep.merge(r);
  return rep;
}

std::optional<std::pair<Partition, int>> bernstein_rule(int i, const Partition& mu) { return maya_insert(mu, i); }

SymFunc bernstein_component(int i, const SymFunc& f) {
  SymFunc r(Basis::s);
  SymFunc fs = f.to(Basis::s);
  for (const auto& [mu, c] : fs.terms()) {
    auto img = maya_insert(mu, i);
    if (img) r.add(img->first, c * RatFunc(img->second));
  }
  return r;
}

SymFunc bernstein_component_oracle(int i, const SymFunc& f) {
  Var x("x");
  RatFunc xinv = RatFunc::monomial(Monomial::of(x, -1));
  SymFunc shifted = gamma_plus(f.in_p(), Alphabet::symbolic(-xinv));
  std::map<int, SymFunc> by_power;  // x^-j part
  for (const auto& [mu, c] : shifted.terms())
    for (const auto& [e, ce] : c.coefficients_in(x)) by_power[-e].add(mu, ce);
  SymFunc r(Basis::p);
  for (const auto& [j, g] : by_power) {
    int n = i + j;
    if (n < 0) continue;
    r += SymFunc::element(Basis::h, n > 0 ? Partition{n} : Partition()) * g;
  }
  return r.to(Basis::s);
}

SymFunc gamma_prime(const SymFunc& f, int r, int max_degree) {
  RatFunc plus(0), minus(0);
  for (int i = 0; i < r; ++i) {
    minus += qpow(i);
    plus -= qpow(-i);
  }
  SymFunc g = gamma_plus(f.in_p(), Alphabet::symbolic(plus));
  return gamma_minus(g, Alphabet::symbolic(minus), max_degree);
}

namespace {

RatFunc a_factor(const Partition& mu, int sign) {
  RatFunc r = qpow(-sign * mu.n());
  for (int h : mu.hooks()) r *= RatFunc(1) - qpow(sign * h);
  return r;
}

}  // namespace

RatFunc gamma_prime_formula(const Partition& lambda, const Partition& mu, int r) {
  RatFunc v = qpow(-r * lambda.size());
  for (auto [i, j] : lambda.cells()) v *= RatFunc(1) - qpow(r + arm_in(mu, i, j) + leg_in(lambda, i, j) + 1);
  for (auto [i, j] : mu.cells()) v *= RatFunc(1) - qpow(r - arm_in(lambda, i, j) - leg_in(mu, i, j) - 1);
  return v / (a_factor(lambda, -1) * a_factor(mu, 1));
}

}  // namespace pleth
