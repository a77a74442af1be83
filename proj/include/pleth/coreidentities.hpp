#pragma once

#include <vector>

#include "pleth/report.hpp"
#include "pleth/series.hpp"

namespace pleth {

/// prod_s (1 - u q^h)(1 - u^-1 q^h) / (1 - q^h)^2.
RatFunc euler_weight(const Partition& lambda, const RatFunc& u);
/// prod_s (1 - q^{h+r})(1 - q^{h-r}) / (1 - q^h)^2.
RatFunc core_weight(const Partition& lambda, int r);

/// v = r n + (0, ..., r-1); the Vandermonde ratio is unchanged by a common shift.
std::vector<int> core_shifted_vector(const Partition& lambda, int r);
/// V(q^{v_1}, ..., q^{v_r}) / V(q^0, ..., q^{r-1}).
RatFunc vandermonde_ratio(const std::vector<int>& v);

/// prod_{j=1}^{r-1} prod_{n>=1} (1 - q^{r-j} T^n)^j (1 - q^{j-r} T^n)^j (1 - T^n).
TruncSeries<RatFunc> mac_id_product(int r, int n_max);
TruncSeries<RatFunc> mac_id_sum(int r, int n_max);

Report verify_euler_specialization(int n_max);
Report verify_mac_id(int r, int n_max);
Report verify_2core(int m_max);
Report verify_t_core(int r, int size_max);

/// (Gamma_-(sum x_i) Gamma_+(-sum x_i^-1) s_lambda, s_lambda).
Rational bernstein_pairing(const Partition& lambda, const std::vector<Rational>& x);
/// det(x_i^{v_j}) / det(x_i^{rho_j}).
Rational bernstein_det_ratio(const Partition& lambda, int r, const std::vector<Rational>& x);
/// At the given points, plus the symbolic point x_i = q^{i-1}.
Report verify_bernstein_det(int r, const Partition& lambda, const std::vector<std::vector<Rational>>& points);
/// Every r-core up to size_max at `count` seeded random x-specializations.
Report verify_bernstein_suite(int r, int size_max, int count, unsigned seed);
/// Same identity with x_1, x_2 kept as formal variables x, y (r <= 2).
Report verify_bernstein_symbolic(int r, int size_max);

/// P(z, w) = prod_i (z - u_i w)(z - u_i^-1 w).
RatFunc P_poly(const std::vector<RatFunc>& u);
/// Four-term right side of the HH_(2) / P formula for a given P(z, w).
RatFunc h2_closed_form(const RatFunc& P);
/// Q(w) A(w) with Q = P(1, w).
RatFunc h2_at_z1(const RatFunc& P, int g);
Report verify_h2_formula(int g);
Report verify_h2_specialization(int g);

/// Generating function of the C_{m,n} for one parity (0 even, 1 odd).
RatFunc c_generating_function(int parity);
/// h2_closed_form at P = z^m w^n + z^n w^m.
RatFunc c_mn(int m, int n);
Report verify_cmn_polynomiality(int parity, int r_max, int s_max);

}  // namespace pleth
