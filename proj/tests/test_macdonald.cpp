#include "test_util.hpp"

#include <filesystem>
#include <fstream>

#include "pleth/macdonald.hpp"

using namespace pleth;

namespace {

RatFunc R(const char* s) { return RatFunc::parse(s); }
SymFunc el(Basis b, Partition p) { return SymFunc::element(b, p); }

}  // namespace

TEST_CASE("small Macdonald polynomials", "[macdonald]") {
  REQUIRE(macdonald_P({1}) == el(Basis::m, {1}));
  REQUIRE(macdonald_P({2}) == el(Basis::m, {2}) + el(Basis::m, {1, 1}) * R("(1+q)*(1-t)/(1-q*t)"));
  REQUIRE(macdonald_J({1}) == el(Basis::m, {1}) * R("1-t"));
  REQUIRE(modified_H({1}) == el(Basis::s, {1}));
  REQUIRE(modified_H({2}) == el(Basis::s, {2}) + el(Basis::s, {1, 1}) * R("q"));
  REQUIRE(modified_H({1, 1}) == el(Basis::s, {2}) + el(Basis::s, {1, 1}) * R("t"));
  REQUIRE(modified_H(Partition()) == SymFunc::constant(RatFunc(1)));
}

TEST_CASE("triangularity, orthogonality and integrality", "[macdonald]") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : partitions(n)) {
      SymFunc pm = macdonald_P(mu).to(Basis::m);
      REQUIRE(pm.coefficient(mu) == RatFunc(1));
      for (const auto& [nu, c] : pm.terms()) REQUIRE(nu.dominated_by(mu));
      REQUIRE(inner_qt(macdonald_P(mu), macdonald_P(mu)) == p_norm(mu));
      REQUIRE(macdonald_J(mu) == macdonald_P(mu) * j_factor(mu));
      SymFunc jm = macdonald_J(mu).to(Basis::m);
      for (const auto& [nu, c] : jm.terms()) {
        REQUIRE(c.is_polynomial());
        for (const auto& [m, k] : c.numerator().terms()) REQUIRE(k.is_integer());
      }
      for (const auto& nu : partitions(n))
        if (nu < mu) REQUIRE(inner_qt(macdonald_P(mu), macdonald_P(nu)).is_zero());
    }
  }
}

TEST_CASE("modified Macdonald polynomials", "[macdonald]") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& mu : partitions(n)) {
      const SymFunc& h = modified_H(mu);
      // Schur coefficients are polynomials with nonnegative integer coefficients.
      SymFunc hs = h.to(Basis::s);
      for (const auto& [lam, c] : hs.terms()) {
        REQUIRE(c.is_polynomial());
        for (const auto& [m, k] : c.numerator().terms()) REQUIRE((k.is_integer() && k.sign() > 0));
      }
      REQUIRE(inner_star(h, h) == h_norm(mu));
      for (const auto& nu : partitions(n))
        if (nu < mu) REQUIRE(inner_star(h, modified_H(nu)).is_zero());
      REQUIRE(h == swap_qt(modified_H(mu.conjugate())));
      REQUIRE(apply_D0(h) == h * psi_of(mu));
      // H~[T] = T^|mu|
      REQUIRE(gamma_plus(h, Alphabet::symbolic(R("T"))).coefficient(Partition()) == R("T").pow(n));
    }
  }
}

TEST_CASE("psi and B statistics", "[macdonald]") {
  REQUIRE(B_of({1}) == MPoly(1));
  REQUIRE(B_of(Partition()).is_zero());
  REQUIRE(RatFunc(B_of({2, 1})) == R("1+q+t"));
  REQUIRE(psi_of(Partition()) == RatFunc(1));
  // D_0 on p_1 directly: the eigenvalue is 1 - (1-q)(1-t).
  REQUIRE(apply_D0(el(Basis::p, {1})) == el(Basis::p, {1}) * R("1-(1-q)*(1-t)"));
  REQUIRE(psi_of({1}) == R("1-(1-q)*(1-t)"));
  REQUIRE_FALSE(psi_of({1}) == R("1+(1-q)*(1-t)"));
  REQUIRE(apply_D0(SymFunc::constant(RatFunc(1))) == SymFunc::constant(RatFunc(1)));
}

TEST_CASE("table cache round trip", "[macdonald]") {
  auto dir = std::filesystem::temp_directory_path() / "pleth-test-cache";
  std::filesystem::remove_all(dir);
  MacdonaldTable t = MacdonaldTable::compute(3);
  std::string text = t.serialize();
  MacdonaldTable back = MacdonaldTable::parse(text);
  REQUIRE(back.serialize() == text);
  for (const auto& mu : partitions(3)) REQUIRE(back.at(mu).H == t.at(mu).H);

  SECTION("bad header, version and truncation are rejected") {
    std::string bad = text;
    bad.replace(0, 5, "xxxxx");
    REQUIRE_THROWS(MacdonaldTable::parse(bad));
    std::string v2 = text;
    v2.replace(v2.find(' '), 2, " 9");
    REQUIRE_THROWS(MacdonaldTable::parse(v2));
    REQUIRE_THROWS(MacdonaldTable::parse(text.substr(0, text.size() / 2)));
  }

  SECTION("warm run reads the file") {
    set_macdonald_cache_dir(dir);
    clear_macdonald_memo();
    int before = macdonald_cache_hits();
    std::string cold = macdonald_table(3).serialize();
    REQUIRE(std::filesystem::exists(macdonald_cache_file(dir, 3)));
    clear_macdonald_memo();
    std::string warm = macdonald_table(3).serialize();
    REQUIRE(macdonald_cache_hits() == before + 1);
    REQUIRE(cold == warm);
    // A corrupted file is ignored and rebuilt.
    {
      std::ofstream out(macdonald_cache_file(dir, 3));
      out << "garbage\n";
    }
    clear_macdonald_memo();
    REQUIRE(macdonald_table(3).serialize() == cold);
    set_macdonald_cache_dir(std::nullopt);
    clear_macdonald_memo();
    std::filesystem::remove_all(dir);
  }
}
