#include "pleth/series.hpp"

#include <stdexcept>

namespace pleth {

namespace {

RatFunc zw_mono(int a, int b) {
  Monomial m;
  m.set(var("z").index(), a);
  m.set(var("w").index(), b);
  return RatFunc::monomial(m);
}

RatFunc zw_prefactor() { return (zw_mono(2, 0) - RatFunc(1)) * (RatFunc(1) - zw_mono(0, 2)); }

Tensor scalar_tensor(const RatFunc& c) { return Tensor::constant(0, c); }

void check_tensor(Report& rep, const std::string& label, const Tensor& a, const Tensor& b) {
  std::map<Tensor::Key, bool> keys;
  for (const auto& [k, c] : a.terms()) keys[k] = true;
  for (const auto& [k, c] : b.terms()) keys[k] = true;
  bool ok = true;
  for (const auto& [k, unused] : keys)
    if (!rat_equal(a.coefficient(k), b.coefficient(k))) {
      rep.check(label + " " + key_str(k), a.coefficient(k), b.coefficient(k));
      ok = false;
      break;
    }
  if (ok) rep.check_true(label, true);
}

}  // namespace

std::vector<Var> u_vars(int g) {
  if (g == 1) return {Var("u")};
  std::vector<Var> v;
  for (int i = 1; i <= g; ++i) v.emplace_back("u_" + std::to_string(i));
  return v;
}

std::vector<RatFunc> symbolic_u(int g) {
  std::vector<RatFunc> r;
  for (Var v : u_vars(g)) r.emplace_back(v);
  return r;
}

RatFunc hook_weight(const Partition& lambda, const std::vector<RatFunc>& u) {
  RatFunc r(1);
  for (auto [i, j] : lambda.cells()) {
    int a = lambda.arm(i, j), l = lambda.leg(i, j);
    for (const auto& ui : u) {
      RatFunc za = zw_mono(2 * a + 1, 0), wl = zw_mono(0, 2 * l + 1);
      r *= (za - ui * wl) * (za - ui.inverse() * wl);
    }
    r /= (zw_mono(2 * a + 2, 0) - zw_mono(0, 2 * l)) * (zw_mono(2 * a, 0) - zw_mono(0, 2 * l + 2));
  }
  return r;
}

RatFunc qt_weight_of(const Partition& lambda, const std::vector<RatFunc>& u) {
  RatFunc r = n_coeff(lambda, lambda).inverse();
  for (const auto& ui : u) r *= n_coeff(lambda, lambda, ui);
  return r;
}

RatFunc bridge_to_zw(const RatFunc& f, const std::vector<Var>& us) {
  std::vector<std::pair<int, Monomial>> img{{var("q").index(), Monomial::of(var("z"), 2)},
                                            {var("t").index(), Monomial::of(var("w"), 2)}};
  for (Var v : us) {
    Monomial m = Monomial::of(v);
    m.set(var("z").index(), -1);
    m.set(var("w").index(), -1);
    img.emplace_back(v.index(), m);
  }
  return f.map_monomials(img);
}

OmegaSeries build_omega(const SurfaceSpec& spec, Coords c, bool psi) {
  OmegaSeries s(spec.n_max, Tensor(spec.k));
  std::vector<RatFunc> u = spec.u_values();
  std::vector<Partition> parts = partitions_up_to(spec.n_max);
  auto terms = parallel_map<Tensor>(parts.size(), [&](size_t i) {
    const Partition& lam = parts[i];
    RatFunc w = c == Coords::zw ? hook_weight(lam, u) : qt_weight_of(lam, u);
    if (psi) w *= c == Coords::zw ? to_zw(psi_of(lam)) : psi_of(lam);
    if (spec.k == 0) return scalar_tensor(w);
    SymFunc h = c == Coords::zw ? to_zw(modified_H(lam)) : modified_H(lam);
    return Tensor::product_of(std::vector<SymFunc>(static_cast<size_t>(spec.k), h)) * w;
  });
  for (size_t i = 0; i < parts.size(); ++i) s[parts[i].size()] += terms[i];
  return s;
}

TruncSeries<RatFunc> scalar_series(const OmegaSeries& s) {
  TruncSeries<RatFunc> r(s.order(), RatFunc(0));
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].arity() != 0) throw std::invalid_argument("scalar_series: needs a k = 0 series");
    r[n] = s[n].coefficient({});
  }
  return r;
}

OmegaSeries hh_series(const SurfaceSpec& spec, Coords c, bool psi) {
  OmegaSeries omega = build_omega(spec, c, psi);
  OmegaSeries log = omega.log(Tensor::one(spec.k));
  RatFunc pre = c == Coords::zw ? zw_prefactor() : -QT::natural().M();
  for (int n = 0; n <= log.order(); ++n) log[n] *= pre;
  return log;
}

RatFunc HHTable::at(const Tensor::Key& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? RatFunc(0) : it->second;
}

HHTable hh_coefficients(const SurfaceSpec& spec, bool psi) {
  HHTable t;
  t.g = spec.g;
  t.k = spec.k;
  t.n_max = spec.n_max;
  OmegaSeries h = hh_series(spec, Coords::zw, psi);
  for (int n = 1; n <= h.order(); ++n) {
    if (spec.k == 0) {
      RatFunc c = h[n].coefficient({});
      if (!c.is_zero()) t.entries.emplace(Tensor::Key{Partition{n}}, c);
      continue;
    }
    for (auto& [key, c] : h[n].in_basis(Basis::m)) t.entries.emplace(key, c);
  }
  return t;
}

Report verify_positivity(const HHTable& table) {
  Report rep("positivity");
  rep.param("g", table.g).param("k", table.k).param("n", table.n_max);
  rep.order_checked = table.n_max;
  std::vector<std::pair<Tensor::Key, RatFunc>> entries(table.entries.begin(), table.entries.end());
  auto flags = parallel_map<std::pair<bool, bool>>(entries.size(), [&](size_t i) {
    RatFunc f = entries[i].second.normalize();
    bool poly = f.is_laurent_polynomial();
    return std::make_pair(poly, poly && has_nonneg_coeffs(f, {var("z")}));
  });
  for (size_t i = 0; i < entries.size(); ++i) {
    std::string key = key_str(entries[i].first);
    rep.check_true("polynomial " + key, flags[i].first, entries[i].second.str());
    rep.check_true("nonnegative " + key, flags[i].second, entries[i].second.str());
  }
  return rep;
}

Report verify_positivity(const SurfaceSpec& spec) { return verify_positivity(hh_coefficients(spec)); }

OmegaSeries glue_genus(const OmegaSeries& omega, const RatFunc& u) {
  int K = omega[0].arity();
  if (K < 2) throw std::invalid_argument("glue_genus: needs at least two alphabets");
  std::map<std::pair<Partition, int>, SymFunc> images;
  auto form = [&](const Partition& a, const Partition& b) {
    std::pair<Partition, int> key{a, b.size()};
    auto it = images.find(key);
    if (it == images.end()) it = images.emplace(key, gamma_u(SymFunc::element(Basis::p, a), u, b.size()).in_p()).first;
    return it->second.coefficient(b) * star_weight(b);
  };
  OmegaSeries r(omega.order(), Tensor(K - 2));
  for (int n = 0; n <= omega.order(); ++n) r[n] = omega[n].contract_general(K - 2, K - 1, form);
  return r;
}

OmegaSeries glue_boundary(const OmegaSeries& a, const OmegaSeries& b) {
  int ka = a[0].arity(), kb = b[0].arity();
  if (ka < 1 || kb < 1) throw std::invalid_argument("glue_boundary: both sides need an alphabet");
  int N = std::min(a.order(), b.order());
  OmegaSeries r(N, Tensor(ka + kb - 2));
  auto w = [](const Partition& mu) { return star_weight(mu); };
  for (int n = 0; n <= N; ++n) r[n] = a[n].tensor(b[n]).contract(ka - 1, ka + kb - 1, w);
  return r;
}

Report verify_gluing(int g, int k, int n_max) {
  Report rep("gluing");
  rep.param("g", g).param("k", k).param("n", n_max);
  rep.order_checked = n_max;
  std::vector<RatFunc> us = symbolic_u(g + 1);
  SurfaceSpec src{g, k + 2, n_max, std::vector<RatFunc>(us.begin(), us.end() - 1)};
  SurfaceSpec dst{g + 1, k, n_max, us};
  OmegaSeries glued = glue_genus(build_omega(src, Coords::qt), us.back());
  OmegaSeries direct = build_omega(dst, Coords::qt);
  for (int n = 0; n <= n_max; ++n) check_tensor(rep, "T^" + std::to_string(n), glued[n], direct[n]);
  return rep;
}

Report verify_boundary_gluing(int k1, int k2, int n_max) {
  Report rep("boundary-gluing");
  rep.param("k1", k1).param("k2", k2).param("n", n_max);
  rep.order_checked = n_max;
  OmegaSeries glued = glue_boundary(build_omega({0, k1, n_max, {}}, Coords::qt), build_omega({0, k2, n_max, {}}, Coords::qt));
  OmegaSeries direct = build_omega({0, k1 + k2 - 2, n_max, {}}, Coords::qt);
  for (int n = 0; n <= n_max; ++n) check_tensor(rep, "T^" + std::to_string(n), glued[n], direct[n]);
  return rep;
}

TruncSeries<RatFunc> genus1_trace(const RatFunc& u, int n_max, bool psi) {
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  for (const auto& lam : partitions_up_to(n_max)) {
    RatFunc w = n_coeff(lam, lam, u) / n_coeff(lam, lam);
    if (psi) w *= psi_of(lam);
    s[lam.size()] += w;
  }
  return s;
}

TruncSeries<RatFunc> operator_trace(const RatFunc& u, int n_max, bool with_D0, bool plus_only) {
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  QT qt;
  for (const auto& mu : partitions_up_to(n_max)) {
    SymFunc f = SymFunc::element(Basis::p, mu);
    if (with_D0) f = apply_D0(f);
    SymFunc g = plus_only ? gamma_plus(f, Alphabet::symbolic(RatFunc(1) - u * qt.q * qt.t)) : gamma_u(f, u, mu.size());
    s[mu.size()] += g.in_p().coefficient(mu);
  }
  return s;
}

TruncSeries<RatFunc> genus1_closed_form(const RatFunc& u, const RatFunc& x, int n_max) {
  QT qt;
  RatFunc a = (u.inverse() - RatFunc(1)) * (RatFunc(1) - u * qt.q * qt.t) / qt.M() * x + RatFunc(1);
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  for (int n = 1; n <= n_max; ++n) s[n] = a;
  return s.exp(RatFunc(1));
}

namespace {

void check_series(Report& rep, const std::string& label, const TruncSeries<RatFunc>& a, const TruncSeries<RatFunc>& b) {
  int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n) rep.check(label + " T^" + std::to_string(n), a[n], b[n]);
}

RatFunc P_of(const std::vector<RatFunc>& u) {
  RatFunc z(Var("z")), w(Var("w")), r(1);
  for (const auto& ui : u) r *= (z - ui * w) * (z - ui.inverse() * w);
  return r;
}

}  // namespace

Report verify_bridge(int n_max) {
  Report rep("bridge");
  rep.param("n", n_max);
  rep.order_checked = n_max;
  for (int g : {1, 2}) {
    std::vector<Var> us = u_vars(g);
    std::vector<RatFunc> u = symbolic_u(g);
    for (const auto& lam : partitions_up_to(n_max)) {
      std::string tag = "g=" + std::to_string(g) + " " + lam.str();
      rep.check("hook " + tag, hook_weight(lam, u), bridge_to_zw(qt_weight_of(lam, u), us));
      if (g == 1 && lam.size() > 0) {
        // Normalizing by N_lambda(1/(zw)) instead of N_lambda(1) does not give the hook function.
        RatFunc nu = bridge_to_zw(n_coeff(lam, lam, u[0]), us);
        RatFunc literal = nu / nu.substitute(us[0], RatFunc(1));
        rep.check_true("normalizer " + tag, !(literal == hook_weight(lam, u)));
      }
    }
  }
  return rep;
}

Report verify_genus1(int n_max) {
  Report rep("genus1");
  rep.param("n", n_max);
  rep.order_checked = n_max;
  RatFunc u(Var("u")), z(Var("z")), w(Var("w"));
  QT qt;
  RatFunc expect_zw = (z - u.inverse() * w) * (z - u * w);
  RatFunc expect_qt = -u.inverse() * (RatFunc(1) - u * qt.q) * (RatFunc(1) - u * qt.t);
  HHTable zwt = hh_coefficients({1, 0, n_max, {}});
  TruncSeries<RatFunc> hq = scalar_series(hh_series({1, 0, n_max, {}}, Coords::qt));
  for (int n = 1; n <= n_max; ++n) {
    std::string tag = " T^" + std::to_string(n);
    rep.check("zw" + tag, zwt.at({Partition{n}}), expect_zw);
    rep.check("qt" + tag, hq[n], expect_qt);
    rep.check("bridge" + tag, bridge_to_zw(hq[n], {Var("u")}), zwt.at({Partition{n}}));
  }
  TruncSeries<RatFunc> trace = genus1_trace(u, n_max);
  check_series(rep, "trace = F(1)", trace, genus1_closed_form(u, RatFunc(1), n_max));
  check_series(rep, "trace = Omega", trace, scalar_series(build_omega({1, 0, n_max, {}}, Coords::qt)));
  check_series(rep, "operator trace", operator_trace(u, n_max), trace);
  TruncSeries<RatFunc> f0 = genus1_closed_form(u, RatFunc(0), n_max);
  check_series(rep, "F(0) = Tr Gamma_+", operator_trace(u, n_max, false, true), f0);
  for (int n = 0; n <= n_max; ++n) rep.check("F(0) counts T^" + std::to_string(n), f0[n], RatFunc(static_cast<int>(partition_count(n))));
  HHTable unit = hh_coefficients({1, 0, n_max, {RatFunc(1)}});
  for (int n = 1; n <= n_max; ++n) rep.check("u=1 T^" + std::to_string(n), unit.at({Partition{n}}), (z - w).pow(2));
  return rep;
}

Report verify_tennis(int n_max) {
  Report rep("tennis");
  rep.param("n", n_max);
  rep.order_checked = n_max;
  RatFunc u(Var("u")), z(Var("z")), w(Var("w"));
  QT qt;
  RatFunc extra = z * z + w * w - z * z * w * w;
  RatFunc expect = (z - u * w) * (z - u.inverse() * w) * extra;
  HHTable t = hh_coefficients({1, 0, n_max, {}}, true);
  TruncSeries<RatFunc> hq = scalar_series(hh_series({1, 0, n_max, {}}, Coords::qt, true));
  RatFunc expect_qt = (RatFunc(1) - qt.M()) * -u.inverse() * (RatFunc(1) - u * qt.q) * (RatFunc(1) - u * qt.t);
  for (int n = 1; n <= n_max; ++n) {
    std::string tag = " T^" + std::to_string(n);
    rep.check("zw" + tag, t.at({Partition{n}}), expect);
    rep.check("qt" + tag, hq[n], expect_qt);
  }
  check_series(rep, "Tr Gamma D_0", operator_trace(u, n_max, true), genus1_trace(u, n_max, true));
  HHTable unit = hh_coefficients({1, 0, n_max, {RatFunc(1)}}, true);
  for (int n = 1; n <= n_max; ++n) rep.check("u=1 T^" + std::to_string(n), unit.at({Partition{n}}), (z - w).pow(2) * extra);
  return rep;
}

TruncSeries<RatFunc> fernlem_lhs(int n_max) {
  QT qt;
  Var xv("x");
  RatFunc u(Var("u")), x(xv);
  RatFunc a = u * qt.q * qt.t - RatFunc(1);
  // Exp(x(uqt-1)) as a power series in x, then the T >= 1 part.
  TruncSeries<RatFunc> ax(n_max, RatFunc(0));
  if (n_max >= 1) ax[1] = a;
  ax = ax.exp(RatFunc(1));
  TruncSeries<RatFunc> b(n_max, RatFunc(0));
  for (int n = 1; n <= n_max; ++n) b[n] = x * a + x.inverse() * (u.inverse() - RatFunc(1));
  b = b.exp(RatFunc(1));
  TruncSeries<RatFunc> r(n_max, RatFunc(0));
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j) r[n] += ax[j] * b[n].coefficient_in(xv, -j);
  return r;
}

TruncSeries<RatFunc> fernlem_rhs(int n_max) {
  QT qt;
  RatFunc u(Var("u"));
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  for (int n = 1; n <= n_max; ++n) s[n] = (RatFunc(1) - u.inverse()) * (RatFunc(1) - u * qt.q * qt.t);
  return s.exp(RatFunc(1));
}

Report verify_fernlem(int n_max, int u_order) {
  Report rep("fernlem");
  rep.param("n", n_max).param("u_order", u_order);
  rep.order_checked = n_max;
  Var uv("u");
  TruncSeries<RatFunc> l = fernlem_lhs(n_max), r = fernlem_rhs(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int j = -u_order; j <= u_order; ++j)
      rep.check("T^" + std::to_string(n) + " u^" + std::to_string(j), l[n].coefficient_in(uv, j), r[n].coefficient_in(uv, j));
    rep.check("T^" + std::to_string(n) + " full", l[n], r[n]);
  }
  return rep;
}

}  // namespace pleth
