#include "test_util.hpp"

#include "pleth/vertexop.hpp"

using namespace pleth;

namespace {

RatFunc R(const char* s) { return RatFunc::parse(s); }
const RatFunc kU{Var("u")};

}  // namespace

TEST_CASE("Ext character", "[vertexop]") {
  REQUIRE(RatFunc(ext_char({1}, {1})) == R("q+t"));
  REQUIRE(RatFunc(ext_char(Partition(), Partition())).is_zero());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& mu : partitions(a))
        for (const auto& nu : partitions(b)) {
          MPoly e = ext_char(mu, nu);
          REQUIRE(e == ext_char_via_chi(mu, nu));
          REQUIRE(ext_monomials(mu, nu).size() == static_cast<size_t>(a + b));
          if (mu == nu) REQUIRE(e.constant_term().is_zero());
        }
}

TEST_CASE("N coefficients", "[vertexop]") {
  REQUIRE(n_coeff({2}, {1, 1}, kU) == R("u^-2*t*(1-u)*(1-u*t)*(1-u*q^2*t^-1)*(1-u*q*t)"));
  // N_mu(1) is the star norm of H~_mu.
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions(n)) REQUIRE(n_coeff(mu, mu) == h_norm(mu));
}

TEST_CASE("Gamma(u) matrix elements", "[vertexop]") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& lam : partitions(a))
        for (const auto& mu : partitions(b)) {
          const SymFunc& hl = modified_H(lam);
          const SymFunc& hm = modified_H(mu);
          RatFunc N = n_coeff(lam, mu, kU);
          REQUIRE(gamma_u_pairing(hl, hm, kU) == N);
          QT qt;
          SymFunc left = gamma_plus(hl, Alphabet::symbolic(RatFunc(1) - kU * qt.q * qt.t));
          SymFunc right = gamma_plus(hm, Alphabet::symbolic(RatFunc(1) - kU.inverse()));
          REQUIRE(inner_star(left, right) == N);
        }
}

TEST_CASE("Gamma(u) in the modified Macdonald basis", "[vertexop]") {
  for (int a = 0; a <= 2; ++a)
    for (const auto& lam : partitions(a)) {
      SymFunc g = gamma_u(modified_H(lam), kU, 3);
      SymFunc expect(Basis::p, 3);
      for (int b = 0; b <= 3; ++b)
        for (const auto& mu : partitions(b)) expect += modified_H(mu) * (n_coeff(lam, mu, kU) / h_norm(mu));
      REQUIRE(g == expect);
    }
}

TEST_CASE("Bernstein components", "[vertexop]") {
  REQUIRE(bernstein_rule(-1, {2}) == std::optional<std::pair<Partition, int>>({Partition{1}, -1}));
  REQUIRE_FALSE(bernstein_rule(-1, Partition()).has_value());
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions(n))
      for (int i = -n - 2; i <= 3; ++i) {
        SymFunc s = SymFunc::element(Basis::s, mu);
        REQUIRE(bernstein_component(i, s) == bernstein_component_oracle(i, s));
      }
}

TEST_CASE("Gamma prime matrix elements", "[vertexop]") {
  for (int r : {2, 3})
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const auto& lam : partitions(a))
          for (const auto& mu : partitions(b)) {
            INFO(r << " " << lam.str() << " " << mu.str());
            SymFunc g = gamma_prime(SymFunc::element(Basis::s, lam), r, b);
            REQUIRE(hall(g, SymFunc::element(Basis::s, mu)) == gamma_prime_formula(lam, mu, r));
          }
}

TEST_CASE("specialization t = 1/q gives Schur functions", "[vertexop]") {
  RatFunc q(Var("q"));
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions(n)) {
      SymFunc h = upsilon(modified_H(mu), Alphabet::symbolic(RatFunc(1) - q));
      h = h.map_coefficients([&](const RatFunc& c) { return c.substitute(Var("t"), q.inverse()); });
      RatFunc a = q.pow(-mu.n());
      for (int k : mu.hooks()) a *= RatFunc(1) - q.pow(k);
      REQUIRE(h == SymFunc::element(Basis::s, mu) * a);
    }
}

TEST_CASE("Gamma_+ images of H~_(2) and H~_(1,1)", "[vertexop]") {
  auto p = [](Partition mu) { return SymFunc::element(Basis::p, mu); };
  SymFunc a = gamma_plus(modified_H({2}), Alphabet::symbolic(R("1-u*q*t")));
  SymFunc a_expect = p({1, 1}) * R("(1+q)/2") + p({2}) * R("(1-q)/2") + p({1}) * R("(1-u*q*t)*(1+q)") +
                     SymFunc::constant(R("(1-u*q*t)*(1-u*q^2*t)"));
  REQUIRE(a == a_expect);
  // The p_1 coefficient carries a plus sign: shifting p_1 by (1 - u^-1) in (1+t)/2 p_1^2.
  SymFunc b = gamma_plus(modified_H({1, 1}), Alphabet::symbolic(R("1-u^-1")));
  SymFunc b_expect = p({1, 1}) * R("(1+t)/2") + p({2}) * R("(1-t)/2") + p({1}) * R("(1-u^-1)*(1+t)") +
                     SymFunc::constant(R("(1-u^-1)*(1-u^-1*t)"));
  REQUIRE(b == b_expect);
  REQUIRE(inner_star(a, b) == n_coeff({2}, {1, 1}, kU));
  REQUIRE(gamma_u_pairing(SymFunc::constant(RatFunc(1)), SymFunc::constant(RatFunc(1)), kU) == RatFunc(1));
}

TEST_CASE("Bernstein operators anticommute", "[vertexop]") {
  // psi_i psi_j = -psi_{j-1} psi_{i+1}
  for (int n = 0; n <= 3; ++n)
    for (const auto& mu : partitions(n))
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
          SymFunc s = SymFunc::element(Basis::s, mu);
          SymFunc lhs = bernstein_component_oracle(i, bernstein_component_oracle(j, s));
          SymFunc rhs = bernstein_component_oracle(j - 1, bernstein_component_oracle(i + 1, s));
          REQUIRE(lhs == -rhs);
          REQUIRE(lhs == bernstein_component(i, bernstein_component(j, s)));
        }
  for (int i = 0; i <= 4; ++i)
    REQUIRE(bernstein_component(i, SymFunc::constant(RatFunc(1))) == SymFunc::element(Basis::s, i ? Partition{i} : Partition()));
}

TEST_CASE("verify_cno report", "[vertexop]") {
  Report r = verify_cno(2);
  REQUIRE(r.pass);
  REQUIRE(r.failures() == 0);
  REQUIRE(r.items.size() > 20);
  set_worker_count(2);
  Report r2 = verify_cno(2);
  set_worker_count(1);
  REQUIRE(r2.items.size() == r.items.size());
  for (size_t i = 0; i < r.items.size(); ++i) REQUIRE(r2.items[i].label == r.items[i].label);
}
