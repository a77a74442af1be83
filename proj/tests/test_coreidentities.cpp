#include "test_util.hpp"

#include "pleth/coreidentities.hpp"

using namespace pleth;

namespace {

RatFunc R(const char* s) { return RatFunc::parse(s); }

void require_pass(const Report& r) {
  const CheckItem* f = r.first_failure();
  INFO(r.identity << ": " << (f ? f->label + " | " + f->lhs + " | " + f->rhs : std::string("ok")));
  REQUIRE(r.pass);
}

}  // namespace

TEST_CASE("hook products", "[coreidentities]") {
  REQUIRE(core_weight({1}, 2) == R("-(q+1+q^-1)"));
  REQUIRE(core_weight(Partition(), 3) == RatFunc(1));
  REQUIRE(core_weight({2}, 2).is_zero());
  REQUIRE(euler_weight({1}, R("u")) == R("(1-u*q)*(1-u^-1*q)/(1-q)^2"));
}

TEST_CASE("core vectors and Vandermonde ratios", "[coreidentities]") {
  // (5,3,1,1) is a 3-core with n = (0,2,-2).
  REQUIRE(core_shifted_vector({5, 3, 1, 1}, 3) == std::vector<int>{0, 7, -4});
  REQUIRE(vandermonde_ratio({0, 1, 2}) == RatFunc(1));
  REQUIRE(vandermonde_ratio(core_shifted_vector({5, 3, 1, 1}, 3)) == core_weight({5, 3, 1, 1}, 3));
  REQUIRE_THROWS(core_shifted_vector({2}, 2));
}

TEST_CASE("Macdonald identities", "[coreidentities]") {
  auto p = mac_id_product(2, 3);
  REQUIRE(p[1] == R("-(q+1+q^-1)"));
  require_pass(verify_mac_id(2, 8));
  require_pass(verify_mac_id(3, 6));
  require_pass(verify_euler_specialization(4));
}

TEST_CASE("core formulas", "[coreidentities]") {
  require_pass(verify_2core(6));
  require_pass(verify_t_core(3, 9));
  require_pass(verify_t_core(5, 6));
  require_pass(verify_t_core(2, 10));
}

TEST_CASE("Bernstein determinant", "[coreidentities]") {
  REQUIRE(bernstein_pairing(Partition(), {Rational(2), Rational(3)}) == Rational(1));
  require_pass(verify_bernstein_det(2, {1}, {{Rational(2), Rational(-3)}, {Rational(1, 2), Rational(5)}}));
  require_pass(verify_bernstein_det(3, {5, 3, 1, 1}, {{Rational(2), Rational(-3), Rational(5, 7)}}));
  require_pass(verify_bernstein_suite(3, 4, 2, 7));
  require_pass(verify_bernstein_symbolic(2, 10));
  REQUIRE_THROWS(bernstein_det_ratio({1}, 2, {Rational(2), Rational(2)}));
}

TEST_CASE("HH_(2) closed forms", "[coreidentities]") {
  require_pass(verify_h2_formula(1));
  require_pass(verify_h2_specialization(1));
  REQUIRE(c_mn(0, 0).normalize().is_laurent_polynomial());
  require_pass(verify_cmn_polynomiality(0, 2, 2));
  require_pass(verify_cmn_polynomiality(1, 1, 1));
}
