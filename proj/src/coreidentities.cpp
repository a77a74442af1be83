#include "pleth/coreidentities.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace pleth {

namespace {

RatFunc qpow(int a) { return RatFunc::monomial(Monomial::of(var("q"), a)); }

RatFunc mono(const char* v, int a) { return RatFunc::monomial(Monomial::of(var(v), a)); }

RatFunc map_w(const RatFunc& f, int power) {
  return f.map_monomials({{var("w").index(), Monomial::of(var("w"), power)}});
}
RatFunc map_z(const RatFunc& f, int power) {
  return f.map_monomials({{var("z").index(), Monomial::of(var("z"), power)}});
}

RatFunc d_dw(const RatFunc& f) {
  Var w("w");
  RatFunc r(0);
  for (const auto& [e, c] : f.coefficients_in(w))
    if (e != 0) r += c * RatFunc(e) * mono("w", e - 1);
  return r;
}

Rational det(std::vector<std::vector<Rational>> a) {
  size_t n = a.size();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    Rational inv = a[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] * inv;
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

Rational power_det(const std::vector<Rational>& x, const std::vector<int>& v) {
  std::vector<std::vector<Rational>> a(x.size(), std::vector<Rational>(v.size()));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) a[i][j] = x[i].pow(v[j]);
  return det(std::move(a));
}

TruncSeries<RatFunc> log_of(const TruncSeries<RatFunc>& s) { return s.log(RatFunc(1)); }

}  // namespace

RatFunc euler_weight(const Partition& lambda, const RatFunc& u) {
  RatFunc r(1);
  for (int h : lambda.hooks()) r *= (RatFunc(1) - u * qpow(h)) * (RatFunc(1) - u.inverse() * qpow(h)) / (RatFunc(1) - qpow(h)).pow(2);
  return r;
}

RatFunc core_weight(const Partition& lambda, int r) {
  RatFunc v(1);
  for (int h : lambda.hooks()) v *= (RatFunc(1) - qpow(h + r)) * (RatFunc(1) - qpow(h - r)) / (RatFunc(1) - qpow(h)).pow(2);
  return v;
}

std::vector<int> core_shifted_vector(const Partition& lambda, int r) {
  if (!is_core(lambda, r)) throw std::invalid_argument("core_shifted_vector: not an r-core");
  std::vector<int> n = core_vector(lambda, r);
  for (int i = 0; i < r; ++i) n[static_cast<size_t>(i)] = r * n[static_cast<size_t>(i)] + i;
  return n;
}

RatFunc vandermonde_ratio(const std::vector<int>& v) {
  RatFunc num(1), den(1);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      num *= qpow(v[j]) - qpow(v[i]);
      den *= qpow(static_cast<int>(j)) - qpow(static_cast<int>(i));
    }
  return num / den;
}

TruncSeries<RatFunc> mac_id_product(int r, int n_max) {
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  s[0] = RatFunc(1);
  // Multiply by (1 - c T^n) in place.
  auto times = [&](const RatFunc& c, int n) {
    for (int m = n_max; m >= n; --m) s[m] -= c * s[m - n];
  };
  for (int n = 1; n <= n_max; ++n)
    for (int j = 1; j < r; ++j) {
      for (int e = 0; e < j; ++e) {
        times(qpow(r - j), n);
        times(qpow(j - r), n);
      }
      times(RatFunc(1), n);
    }
  return s;
}

TruncSeries<RatFunc> mac_id_sum(int r, int n_max) {
  TruncSeries<RatFunc> s(n_max, RatFunc(0));
  for (const auto& lam : partitions_up_to(n_max)) s[lam.size()] += core_weight(lam, r);
  return s;
}

Report verify_euler_specialization(int n_max) {
  Report rep("euler");
  rep.param("n", n_max);
  rep.order_checked = n_max;
  RatFunc u(Var("u")), q(Var("q"));
  TruncSeries<RatFunc> sum(n_max, RatFunc(0));
  for (const auto& lam : partitions_up_to(n_max)) sum[lam.size()] += euler_weight(lam, u);
  RatFunc c = (q - u) * (q - u.inverse()) / (q - RatFunc(1)).pow(2);
  TruncSeries<RatFunc> lhs = log_of(sum);
  for (int n = 1; n <= n_max; ++n) rep.check("Log T^" + std::to_string(n), lhs[n], c);
  // z = s, w = 1/s image of the genus one coefficients, with q = s^2.
  std::vector<std::pair<int, Monomial>> img{{var("z").index(), Monomial::of(var("s"))},
                                            {var("w").index(), Monomial::of(var("s"), -1)}};
  HHTable g1 = hh_coefficients({1, 0, n_max, {}});
  RatFunc s2 = mono("s", 2);
  RatFunc pre = (s2 - RatFunc(1)) * (RatFunc(1) - s2.inverse());
  RatFunc c_s = c.map_monomials({{var("q").index(), Monomial::of(var("s"), 2)}});
  for (int n = 1; n <= n_max; ++n)
    rep.check("genus one image T^" + std::to_string(n), g1.at({Partition{n}}).map_monomials(img), pre * c_s);
  // u = q kills every nonempty term.
  TruncSeries<RatFunc> at_q(n_max, RatFunc(0));
  for (const auto& lam : partitions_up_to(n_max)) at_q[lam.size()] += euler_weight(lam, q);
  for (int n = 1; n <= n_max; ++n) rep.check("u=q T^" + std::to_string(n), at_q[n], RatFunc(0));
  return rep;
}

Report verify_mac_id(int r, int n_max) {
  if (r < 2) throw std::invalid_argument("verify_mac_id: r >= 2");
  Report rep("macid");
  rep.param("r", r).param("n", n_max);
  rep.order_checked = n_max;
  std::vector<Partition> parts = partitions_up_to(n_max);
  auto weights = parallel_map<RatFunc>(parts.size(), [&](size_t i) { return core_weight(parts[i], r); });
  TruncSeries<RatFunc> lhs(n_max, RatFunc(0));
  size_t noncore_ok = 0, noncore = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    lhs[parts[i].size()] += weights[i];
    if (!is_core(parts[i], r)) {
      ++noncore;
      if (weights[i].is_zero()) ++noncore_ok;
      else rep.check("non-core " + parts[i].str(), weights[i], RatFunc(0));
    }
  }
  rep.check_true("non-core terms vanish (" + std::to_string(noncore) + ")", noncore_ok == noncore);
  TruncSeries<RatFunc> rhs = mac_id_product(r, n_max);
  for (int n = 0; n <= n_max; ++n) rep.check("T^" + std::to_string(n), lhs[n], rhs[n]);
  // Log form: the sum is the Euler series at u = q^r.
  TruncSeries<RatFunc> lg = log_of(lhs);
  RatFunc q(Var("q")), ur = qpow(r);
  RatFunc c = (q - ur) * (q - ur.inverse()) / (q - RatFunc(1)).pow(2);
  for (int n = 1; n <= n_max; ++n) rep.check("Log T^" + std::to_string(n), lg[n], c);
  return rep;
}

Report verify_2core(int m_max) {
  Report rep("2core");
  rep.param("m", m_max);
  rep.order_checked = m_max;
  RatFunc q(Var("q"));
  for (int m = 0; m <= m_max; ++m) {
    std::vector<int> parts;
    for (int i = m; i >= 1; --i) parts.push_back(i);
    Partition lam(parts);
    RatFunc expect = RatFunc(m % 2 ? -1 : 1) * (qpow(m + 1) - qpow(-m)) / (q - RatFunc(1));
    rep.check("m=" + std::to_string(m), core_weight(lam, 2), expect);
  }
  return rep;
}

Report verify_t_core(int r, int size_max) {
  Report rep("tcore");
  rep.param("r", r).param("size", size_max);
  rep.order_checked = size_max;
  std::vector<Partition> cores = cores_up_to(r, size_max);
  auto pairs = parallel_map<std::pair<RatFunc, RatFunc>>(cores.size(), [&](size_t i) {
    return std::make_pair(core_weight(cores[i], r), vandermonde_ratio(core_shifted_vector(cores[i], r)));
  });
  for (size_t i = 0; i < cores.size(); ++i) rep.check(cores[i].str(), pairs[i].first, pairs[i].second);
  rep.check_true("core count " + std::to_string(cores.size()), !cores.empty());
  return rep;
}

Rational bernstein_pairing(const Partition& lambda, const std::vector<Rational>& x) {
  std::vector<Rational> inv;
  for (const auto& xi : x) inv.push_back(xi.inverse());
  SymFunc s = SymFunc::element(Basis::s, lambda);
  SymFunc g = gamma_plus(s.in_p(), Alphabet::numbers(inv, Rational(-1)));
  g = gamma_minus(g, Alphabet::numbers(x), lambda.size());
  return hall(g, s).constant_value();
}

Rational bernstein_det_ratio(const Partition& lambda, int r, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != r) throw std::invalid_argument("bernstein_det_ratio: need r values");
  std::vector<int> rho(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) rho[static_cast<size_t>(i)] = i;
  Rational d = power_det(x, rho);
  if (d.is_zero()) throw std::invalid_argument("bernstein_det_ratio: x values must be distinct and nonzero");
  return power_det(x, core_shifted_vector(lambda, r)) / d;
}

Report verify_bernstein_det(int r, const Partition& lambda, const std::vector<std::vector<Rational>>& points) {
  Report rep("bernstein");
  rep.param("r", r).param("lambda", lambda.str());
  rep.order_checked = lambda.size();
  for (const auto& x : points) {
    std::string tag;
    for (const auto& xi : x) tag += (tag.empty() ? "" : ",") + xi.str();
    rep.check("x=(" + tag + ")", RatFunc(bernstein_pairing(lambda, x)), RatFunc(bernstein_det_ratio(lambda, r, x)));
  }
  // x_i = q^{i-1}: the operator is Gamma'(q) and the ratio becomes the hook product.
  RatFunc diag = hall(gamma_prime(SymFunc::element(Basis::s, lambda), r, lambda.size()), SymFunc::element(Basis::s, lambda));
  rep.check("x_i = q^(i-1)", diag, vandermonde_ratio(core_shifted_vector(lambda, r)));
  rep.check("hook product", diag, core_weight(lambda, r));
  rep.check("closed matrix element", diag, gamma_prime_formula(lambda, lambda, r));
  return rep;
}

Report verify_bernstein_suite(int r, int size_max, int count, unsigned seed) {
  Report rep("bernstein");
  rep.param("r", r).param("size", size_max).param("points", count);
  rep.order_checked = size_max;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (const auto& lam : cores_up_to(r, size_max)) {
    std::vector<std::vector<Rational>> pts;
    while (static_cast<int>(pts.size()) < count) {
      std::set<Rational> seen;
      std::vector<Rational> x;
      while (static_cast<int>(x.size()) < r) {
        int a = num(rng);
        if (a == 0) continue;
        Rational v(a, den(rng));
        if (seen.insert(v).second) x.push_back(v);
      }
      pts.push_back(x);
    }
    rep.merge(verify_bernstein_det(r, lam, pts), lam.str() + " ");
  }
  return rep;
}

Report verify_bernstein_symbolic(int r, int size_max) {
  if (r < 1 || r > 2) throw std::invalid_argument("verify_bernstein_symbolic: r must be 1 or 2");
  Report rep("bernstein");
  rep.param("r", r).param("size", size_max).param("x", "symbolic");
  rep.order_checked = size_max;
  std::vector<RatFunc> x{RatFunc(Var("x"))};
  if (r == 2) x.emplace_back(Var("y"));
  RatFunc sum, inv;
  for (const auto& xi : x) {
    sum += xi;
    inv += xi.inverse();
  }
  auto det = [&](const std::vector<int>& v) {
    if (r == 1) return x[0].pow(v[0]);
    return x[0].pow(v[0]) * x[1].pow(v[1]) - x[0].pow(v[1]) * x[1].pow(v[0]);
  };
  std::vector<int> rho(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) rho[static_cast<size_t>(i)] = i;
  for (const auto& lam : cores_up_to(r, size_max)) {
    SymFunc s = SymFunc::element(Basis::s, lam);
    SymFunc g = gamma_plus(s.in_p(), Alphabet::symbolic(-inv));
    g = gamma_minus(g, Alphabet::symbolic(sum), lam.size());
    rep.check(lam.str(), hall(g, s), det(core_shifted_vector(lam, r)) / det(rho));
  }
  return rep;
}

RatFunc P_poly(const std::vector<RatFunc>& u) {
  RatFunc z(Var("z")), w(Var("w")), r(1);
  for (const auto& ui : u) r *= (z - ui * w) * (z - ui.inverse() * w);
  return r;
}

RatFunc h2_closed_form(const RatFunc& P) {
  RatFunc z(Var("z")), w(Var("w")), one(1), half(Rational(1, 2));
  RatFunc z2 = z * z, w2 = w * w;
  RatFunc r = map_w(P, 3) / ((z2 - w2) * (one - w2 * w2));
  r += map_z(P, 3) / ((z2 - w2) * (z2 * z2 - one));
  r -= half * P / ((z2 - one) * (one - w2));
  r -= half * P.substitute(Var("w"), -w) / ((z2 + one) * (one + w2));
  return r;
}

RatFunc h2_at_z1(const RatFunc& P, int g) {
  RatFunc w(Var("w")), one(1), w2 = w * w;
  RatFunc Q = P.substitute(Var("z"), one);
  RatFunc A = map_w(Q, 3) / ((one - w2) * (one - w2 * w2));
  A += RatFunc(Rational(1, 4)) * (w2 - RatFunc(3)) * Q / (one - w2).pow(2);
  A += RatFunc(Rational(1, 2)) * (RatFunc(2 * g) * Q - w * d_dw(Q)) / (one - w2);
  A -= RatFunc(Rational(1, 4)) * Q.substitute(Var("w"), -w) / (one + w2);
  return Q * A;
}

Report verify_h2_formula(int g) {
  Report rep("h2");
  rep.param("g", g);
  rep.order_checked = 2;
  std::vector<RatFunc> u = symbolic_u(g);
  RatFunc P = P_poly(u);
  RatFunc H = hh_coefficients({g, 0, 2, {}}).at({Partition{2}});
  RatFunc closed = h2_closed_form(P);
  rep.check("HH_(2)/P", H / P, closed);
  rep.check_true("polynomial in z, w", closed.normalize().is_laurent_polynomial(), closed.str());
  // At u_i = 1.
  std::vector<RatFunc> ones(static_cast<size_t>(g), RatFunc(1));
  RatFunc H1 = hh_coefficients({g, 0, 2, ones}).at({Partition{2}});
  rep.check("u=1", H1 / P_poly(ones), h2_closed_form(P_poly(ones)));
  return rep;
}

Report verify_h2_specialization(int g) {
  Report rep("h2z1");
  rep.param("g", g);
  rep.order_checked = 2;
  RatFunc P = P_poly(symbolic_u(g));
  RatFunc H = hh_coefficients({g, 0, 2, {}}).at({Partition{2}}).normalize();
  rep.check("HH_(2)(u;1,w) = Q A", H.substitute(Var("z"), RatFunc(1)), h2_at_z1(P, g));
  return rep;
}

namespace {

struct CTerm {
  RatFunc coeff;  // includes the parity prefactor
  RatFunc a, b;   // 1 / ((1 - a x)(1 - b y))
};

std::vector<CTerm> c_terms(int parity) {
  RatFunc z(Var("z")), w(Var("w")), one(1), half(Rational(1, 2));
  RatFunc z2 = z * z, w2 = w * w;
  RatFunc d1 = (z2 - w2) * (one - w2 * w2), d2 = (z2 - w2) * (z2 * z2 - one);
  RatFunc d3 = (z2 - one) * (one - w2), d4 = (z2 + one) * (one + w2);
  RatFunc e1 = parity ? z * w.pow(3) : one, e2 = parity ? z.pow(3) * w : one;
  RatFunc e3 = parity ? z * w : one, e4 = parity ? -(z * w) : one;
  RatFunc z6 = z2.pow(3), w6 = w2.pow(3);
  return {{e1 / d1, z2, w6}, {e1 / d1, w6, z2}, {e2 / d2, z6, w2}, {e2 / d2, w2, z6},
          {-half * e3 / d3, z2, w2}, {-half * e3 / d3, w2, z2}, {-half * e4 / d4, z2, w2}, {-half * e4 / d4, w2, z2}};
}

RatFunc c_series_coefficient(int parity, int r, int s) {
  RatFunc total(0);
  for (const auto& t : c_terms(parity)) total += t.coeff * t.a.pow(r) * t.b.pow(s);
  return total;
}

}  // namespace

RatFunc c_generating_function(int parity) {
  RatFunc x(Var("x")), y(Var("y")), one(1), total(0);
  for (const auto& t : c_terms(parity)) total += t.coeff / ((one - t.a * x) * (one - t.b * y));
  return total;
}

RatFunc c_mn(int m, int n) {
  RatFunc z(Var("z")), w(Var("w"));
  return h2_closed_form(z.pow(m) * w.pow(n) + z.pow(n) * w.pow(m));
}

Report verify_cmn_polynomiality(int parity, int r_max, int s_max) {
  Report rep("cmn");
  rep.param("parity", parity ? "odd" : "even").param("r", r_max).param("s", s_max);
  rep.order_checked = std::max(r_max, s_max);
  RatFunc x(Var("x")), y(Var("y")), one(1);
  RatFunc z2 = mono("z", 2), w2 = mono("w", 2), z6 = mono("z", 6), w6 = mono("w", 6);
  RatFunc D8(1);
  for (const auto& c : {z2, w2, z6, w6}) D8 *= (one - c * x) * (one - c * y);
  RatFunc C = c_generating_function(parity);
  rep.check_true("denominator divides the 8 factors", (C * D8).normalize().is_laurent_polynomial(), C.str());
  std::vector<std::pair<int, int>> rs;
  for (int r = 0; r <= r_max; ++r)
    for (int s = 0; s <= s_max; ++s) rs.emplace_back(r, s);
  auto vals = parallel_map<std::pair<RatFunc, RatFunc>>(rs.size(), [&](size_t i) {
    auto [r, s] = rs[i];
    return std::make_pair(c_mn(2 * r + parity, 2 * s + parity).normalize(), c_series_coefficient(parity, r, s));
  });
  for (size_t i = 0; i < rs.size(); ++i) {
    auto [r, s] = rs[i];
    std::string tag = "C_" + std::to_string(2 * r + parity) + "," + std::to_string(2 * s + parity);
    const RatFunc& c = vals[i].first;
    rep.check(tag + " = series coefficient", c, vals[i].second);
    bool poly = c.is_laurent_polynomial();
    rep.check_true(tag + " polynomial", poly, c.str());
    // Sign pattern after z -> -z is recorded, not required.
    rep.items.push_back(CheckItem{tag + (poly && has_nonneg_coeffs(c, {var("z")}) ? " nonneg(-z): yes" : " nonneg(-z): no"), true, "", ""});
  }
  return rep;
}

}  // namespace pleth
