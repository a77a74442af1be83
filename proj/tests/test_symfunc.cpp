#include "test_util.hpp"

#include <random>

#include "pleth/symfunc.hpp"
#include "pleth/truncseries.hpp"

using namespace pleth;

namespace {

RatFunc R(const char* s) { return RatFunc::parse(s); }

SymFunc el(Basis b, Partition p) { return SymFunc::element(b, p); }

// f[A] as the constant term of f[X + A].
RatFunc evaluate_at(const SymFunc& f, const Alphabet& A) { return gamma_plus(f, A).coefficient(Partition()); }

// Scalar Exp(A) to order N when A carries a grading variable.
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

SymFunc truncate_coeffs(const SymFunc& f, Var v, int deg) {
  return f.map_coefficients([&](const RatFunc& c) { return c.truncate_in(v, deg); });
}

SymFunc random_symfunc(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, max_deg);
  SymFunc f;
  for (int i = 0; i < 4; ++i) {
    const auto& ps = partitions(d(rng));
    std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
    RatFunc coeff = RatFunc(c(rng)) + RatFunc(c(rng)) * R("q") + RatFunc(c(rng)) * R("t");
    f.add(ps[pick(rng)], coeff);
  }
  return f;
}

}  // namespace

TEST_CASE("basis conversion", "[symfunc]") {
  SymFunc p11 = el(Basis::p, {1, 1}).to(Basis::m);
  REQUIRE(p11.coefficient({2}) == RatFunc(1));
  REQUIRE(p11.coefficient({1, 1}) == RatFunc(2));
  for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::s}) REQUIRE(el(b, {1}) == el(Basis::p, {1}));
  SymFunc h2 = el(Basis::h, {2}).in_p();
  REQUIRE(h2.coefficient({1, 1}) == RatFunc(Rational(1, 2)));
  REQUIRE(h2.coefficient({2}) == RatFunc(Rational(1, 2)));
  REQUIRE(el(Basis::s, {2, 1}).to(Basis::m).coefficient({1, 1, 1}) == RatFunc(2));
  REQUIRE(el(Basis::s, {1, 1}) == el(Basis::e, {2}));

  SECTION("round trips through every basis up to degree 6") {
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : partitions(n))
        for (Basis a : {Basis::p, Basis::m, Basis::e, Basis::h, Basis::s})
          for (Basis b : {Basis::p, Basis::m, Basis::e, Basis::h, Basis::s}) {
            SymFunc f = el(a, lam);
            SymFunc back = f.to(b).to(a);
            REQUIRE(back.basis() == a);
            REQUIRE(back.terms().size() == 1);
            REQUIRE(back.coefficient(lam) == RatFunc(1));
          }
  }
}

TEST_CASE("inner products", "[symfunc]") {
  REQUIRE(hall(el(Basis::h, {1, 1}), el(Basis::m, {1, 1})) == RatFunc(1));
  REQUIRE(hall(el(Basis::p, {2}), el(Basis::p, {2})) == RatFunc(2));
  REQUIRE(inner_star(el(Basis::p, {1}), el(Basis::p, {1})) == R("-(1-q)*(1-t)"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : partitions(n))
      for (const auto& b : partitions(n)) {
        RatFunc expect(a == b ? 1 : 0);
        REQUIRE(hall(el(Basis::s, a), el(Basis::s, b)) == expect);
        REQUIRE(hall(el(Basis::h, a), el(Basis::m, b)) == expect);
      }

  SECTION("plethystic forms agree with the diagonal forms") {
    std::mt19937 rng(11);
    Alphabet q = Alphabet::symbolic(R("q")), t = Alphabet::symbolic(R("t")), one = Alphabet::number(Rational(1));
    Alphabet minusM = (one - q) * (one - t);
    minusM = -minusM;
    for (int i = 0; i < 10; ++i) {
      SymFunc f = random_symfunc(rng, 4), g = random_symfunc(rng, 4);
      REQUIRE(inner_star(f, g) == hall(f, upsilon(g, minusM)));
      REQUIRE(inner_star(f, g) == inner_qt(upsilon(f, one - t), upsilon(g, t - one)));
    }
  }
}

TEST_CASE("plethystic substitution", "[symfunc]") {
  Alphabet xs = Alphabet::numbers({Rational(2), Rational(3), Rational(5)});
  // s_{2,1} = m_{2,1} + 2 m_{1,1,1}; at (2,3,5): 220 + 2*30.
  REQUIRE(evaluate_at(el(Basis::s, {2, 1}), xs) == RatFunc(280));
  REQUIRE(evaluate_at(el(Basis::p, {2}), Alphabet::symbolic(R("q+t"))) == R("q^2+t^2"));
  SECTION("e_i[A] matches the lambda operations") {
    MPoly A = R("1+q+t").polynomial();
    RatFunc lam = lambda_eval(A, R("u"));
    for (int i = 0; i <= 4; ++i) {
      RatFunc ei = evaluate_at(el(Basis::e, i ? Partition{i} : Partition()), Alphabet::symbolic(RatFunc(A)));
      RatFunc sign(i % 2 ? -1 : 1);
      REQUIRE(sign * ei == lam.coefficient_in(var("u"), i));
    }
  }
  SECTION("plethysm of symmetric functions") {
    // h_2[h_2] = s_4 + s_{2,2}
    SymFunc r = plethysm(el(Basis::h, {2}), el(Basis::h, {2}), 4);
    REQUIRE(r == el(Basis::s, {4}) + el(Basis::s, {2, 2}));
    // p_k[p_j] = p_{kj}
    REQUIRE(plethysm(el(Basis::p, {2}), el(Basis::p, {3}), 6) == el(Basis::p, {6}));
  }
}

TEST_CASE("gamma operators", "[symfunc]") {
  Alphabet A = Alphabet::symbolic(R("q+t"));
  REQUIRE(gamma_plus(el(Basis::p, {1}), A) == el(Basis::p, {1}) + SymFunc::constant(R("q+t")));
  REQUIRE(gamma_plus(SymFunc::constant(R("3-q")), A) == SymFunc::constant(R("3-q")));
  SymFunc f = el(Basis::s, {2, 1});
  REQUIRE(gamma_minus(f, Alphabet(), 5) == f);
  REQUIRE(exp_alphabet(Alphabet::number(Rational(1)), 4) == el(Basis::h, {4}) + el(Basis::h, {3}) + el(Basis::h, {2}) + el(Basis::h, {1}) + SymFunc::constant(RatFunc(1)));

  SECTION("symbolic multiplier m is fixed by Adams") {
    Var m("m");
    set_adams_invariant(m, true);
    SymFunc g = gamma_plus(el(Basis::p, {2}), Alphabet::symbolic(R("m*q")));
    REQUIRE(g.coefficient(Partition()) == R("m*q^2"));
    set_adams_invariant(m, false);
  }

  SECTION("exponential of derivations") {
    // exp(sum_i A^(i) d/dp_i) applied to random f.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      SymFunc f = random_symfunc(rng, 5);
      SymFunc acc = f, term = f;
      for (int n = 1; n <= 5; ++n) {
        SymFunc next;
        for (int i = 1; i <= 5; ++i) next += p_derivative(term, i) * (A.adams(i) / RatFunc(i));
        term = next * RatFunc(Rational(1, n));
        acc += term;
      }
      REQUIRE(acc == gamma_plus(f, A));
    }
  }

  SECTION("adjoint of gamma_plus is multiplication by Exp(AX)") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
      SymFunc f = random_symfunc(rng, 5), g = random_symfunc(rng, 5);
      REQUIRE(hall(gamma_plus(f, A), g) == hall(f, gamma_minus(g, A, 5)));
    }
  }
}

TEST_CASE("commutation relations", "[symfunc]") {
  const int N = 5;
  Var y("y");
  auto check = [&](const Alphabet& A, const Alphabet& B, const RatFunc& factor) {
    for (int d = 0; d <= 3; ++d)
      for (const auto& mu : partitions(d)) {
        SymFunc f = el(Basis::p, mu);
        int room = N - d;
        SymFunc lhs = gamma_plus(gamma_minus(f, B, N), A);
        SymFunc rhs = gamma_minus(gamma_plus(f, A), B, N) * factor;
        REQUIRE(truncate_coeffs(lhs, y, room) == truncate_coeffs(rhs, y, room));
      }
  };
  SECTION("gamma_+(x^-1) gamma_-(y)") {
    Alphabet A = Alphabet::symbolic(R("x^-1")), B = Alphabet::symbolic(R("y"));
    RatFunc factor;
    for (int j = 0; j <= N; ++j) factor += R("y/x").pow(j);
    check(A, B, factor);
  }
  SECTION("random monomial sums") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
    for (int trial = 0; trial < 4; ++trial) {
      auto rand_poly = [&]() {
        MPoly p;
        for (int i = 0; i < 2; ++i) {
          Monomial m;
          m.set(var("q").index(), e(rng));
          m.set(var("t").index(), e(rng));
          p += MPoly(m, Rational(c(rng)));
        }
        return RatFunc(p);
      };
      Alphabet A = Alphabet::symbolic(rand_poly());
      Alphabet B = Alphabet::symbolic(rand_poly() * R("y"));
      check(A, B, scalar_exp(A * B, N));
    }
  }
  SECTION("upsilon relations") {
    Alphabet A = Alphabet::symbolic(R("q-t^2")), B = Alphabet::symbolic(R("1+q*t"));
    for (int d = 0; d <= 5; ++d)
      for (const auto& mu : partitions(d)) {
        SymFunc f = el(Basis::p, mu);
        REQUIRE(gamma_plus(upsilon(f, A), B) == upsilon(gamma_plus(f, A * B), A));
        REQUIRE(upsilon(gamma_minus(f, B, N), A) == gamma_minus(upsilon(f, A), A * B, N));
        REQUIRE(upsilon(upsilon(f, B), A) == upsilon(f, A * B));
      }
  }
  SECTION("grading and omega") {
    Alphabet x = Alphabet::symbolic(R("x"));
    REQUIRE(upsilon(el(Basis::p, {3}), x) == el(Basis::p, {3}) * R("x^3"));
    SymFunc f = el(Basis::s, {3, 1});
    REQUIRE(upsilon(f, Alphabet::number(Rational(1))) == f);
    for (int n = 1; n <= 6; ++n) {
      SymFunc w = upsilon(el(Basis::h, {n}), -Alphabet::number(Rational(1))) * RatFunc(n % 2 ? -1 : 1);
      REQUIRE(w == el(Basis::e, {n}));
    }
  }
}

TEST_CASE("plethystic exponential and logarithm", "[symfunc]") {
  const int N = 10;
  SECTION("Exp(T/(1-T)) counts partitions") {
    TruncSeries<RatFunc> a(N, RatFunc(0));
    for (int n = 1; n <= N; ++n) a[n] = RatFunc(1);
    auto e = a.exp(RatFunc(1));
    for (int n = 0; n <= N; ++n) REQUIRE(e[n] == RatFunc(partition_count(n)));
    REQUIRE(e.log(RatFunc(1))[3] == RatFunc(1));
  }
  SECTION("Exp(0) = 1 and Log(1/(1-T)) = T") {
    TruncSeries<RatFunc> z(N, RatFunc(0));
    auto e = z.exp(RatFunc(1));
    REQUIRE(e[0] == RatFunc(1));
    for (int n = 1; n <= N; ++n) REQUIRE(e[n].is_zero());
    TruncSeries<RatFunc> g(N, RatFunc(0));
    for (int n = 0; n <= N; ++n) g[n] = RatFunc(1);
    auto l = g.log(RatFunc(1));
    REQUIRE(l[1] == RatFunc(1));
    for (int n = 2; n <= N; ++n) REQUIRE(l[n].is_zero());
    g[0] = RatFunc(2);
    REQUIRE_THROWS(g.log(RatFunc(1)));
  }
  SECTION("Exp(TX) = sum T^n h_n") {
    TruncSeries<SymFunc> a(6, SymFunc());
    a[1] = el(Basis::p, {1});
    auto e = a.exp(SymFunc::constant(RatFunc(1)));
    for (int n = 1; n <= 6; ++n) REQUIRE(e[n] == el(Basis::h, {n}));
  }
  SECTION("Log inverts Exp on random series") {
    std::mt19937 rng(2);
    const int M = 6;
    TruncSeries<SymFunc> a(M, SymFunc());
    a[1] = random_symfunc(rng, 2);
    a[2] = random_symfunc(rng, 1);
    a[1].set(Partition(), R("q/(1-t)"));
    auto one = SymFunc::constant(RatFunc(1));
    auto back = a.exp(one).log(one);
    for (int n = 0; n <= M; ++n) REQUIRE(back[n] == a[n]);
    // Exp(a + b) = Exp(a) Exp(b)
    TruncSeries<SymFunc> b(M, SymFunc());
    b[1] = random_symfunc(rng, 2);
    b[3] = random_symfunc(rng, 1);
    auto lhs = (a + b).exp(one), rhs = a.exp(one) * b.exp(one);
    for (int n = 0; n <= M; ++n) REQUIRE(lhs[n] == rhs[n]);
  }
}

TEST_CASE("tensors", "[symfunc]") {
  Tensor t = Tensor::product_of({el(Basis::s, {2}), el(Basis::s, {1, 1})});
  REQUIRE(t.arity() == 2);
  auto ins = t.in_basis(Basis::s);
  REQUIRE(ins.size() == 1);
  REQUIRE(ins.begin()->first == Tensor::Key{Partition{2}, Partition{1, 1}});
  Tensor u = Tensor::product_of({el(Basis::s, {2}), el(Basis::s, {2})});
  REQUIRE(u.contract(0, 1, hall_weight) == Tensor::constant(0, RatFunc(1)));
  REQUIRE(t.contract(0, 1, hall_weight).is_zero());
  REQUIRE(Tensor::from_symfunc(el(Basis::h, {2})).as_symfunc() == el(Basis::h, {2}));
}
