#pragma once

#include <map>
#include <vector>

#include "pleth/report.hpp"
#include "pleth/truncseries.hpp"
#include "pleth/vertexop.hpp"

namespace pleth {

/// Formal variables u_1..u_g (just u when g = 1).
std::vector<Var> u_vars(int g);
std::vector<RatFunc> symbolic_u(int g);

/// Genus, punctures and truncation of Omega_{g,k}. Empty u means symbolic.
struct SurfaceSpec {
  int g = 0;
  int k = 0;
  int n_max = 1;
  std::vector<RatFunc> u;

  std::vector<RatFunc> u_values() const { return u.empty() ? symbolic_u(g) : u; }
};

/// Either the (z, w) coordinates of the hook function or the natural q, t
/// with u entering through N_lambda(u).
enum class Coords { zw, qt };

/// prod over cells and i of (z^{2a+1} - u_i w^{2l+1})(z^{2a+1} - u_i^-1 w^{2l+1})
/// / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2})).
RatFunc hook_weight(const Partition& lambda, const std::vector<RatFunc>& u);
inline RatFunc hook_weight(const Partition& lambda, int g) { return hook_weight(lambda, symbolic_u(g)); }
/// prod_i N_lambda(u_i) / N_lambda(1) in q, t.
RatFunc qt_weight_of(const Partition& lambda, const std::vector<RatFunc>& u);

/// q = z^2, t = w^2 and u_i -> u_i / (z w), applied to a q, t expression.
RatFunc bridge_to_zw(const RatFunc& f, const std::vector<Var>& us);

using OmegaSeries = TruncSeries<Tensor>;

/// sum_{|lambda| <= n_max} weight_lambda H~_lambda[X_1] ... H~_lambda[X_k], graded
/// by |lambda|; psi multiplies each term by the D_0 eigenvalue psi_lambda.
OmegaSeries build_omega(const SurfaceSpec& spec, Coords c = Coords::zw, bool psi = false);
/// Scalar series of a k = 0 Omega.
TruncSeries<RatFunc> scalar_series(const OmegaSeries& s);

/// (z^2-1)(1-w^2) Log Omega in zw coordinates, -(1-q)(1-t) Log Omega in q, t.
OmegaSeries hh_series(const SurfaceSpec& spec, Coords c = Coords::zw, bool psi = false);

/// Coefficients of HH in the monomial basis of each alphabet. For k = 0 the
/// key of the degree-n entry is the single partition (n).
struct HHTable {
  int g = 0, k = 0, n_max = 0;
  std::map<Tensor::Key, RatFunc> entries;
  RatFunc at(const Tensor::Key& key) const;
};
HHTable hh_coefficients(const SurfaceSpec& spec, bool psi = false);

/// Laurent polynomiality and nonnegativity after z -> -z of every entry.
Report verify_positivity(const SurfaceSpec& spec);
Report verify_positivity(const HHTable& table);

/// phi_u on the last two alphabets: f (x) g -> (Gamma(u) f, g)_*. Natural q, t.
OmegaSeries glue_genus(const OmegaSeries& omega, const RatFunc& u);
/// Star pairing of the last alphabet of a with the last alphabet of b.
OmegaSeries glue_boundary(const OmegaSeries& a, const OmegaSeries& b);
Report verify_gluing(int g, int k, int n_max);
Report verify_boundary_gluing(int k1, int k2, int n_max);

/// sum T^|lambda| N_lambda(u) / N_lambda (times psi_lambda if requested).
TruncSeries<RatFunc> genus1_trace(const RatFunc& u, int n_max, bool psi = false);
/// Tr T^d Gamma(u) (D_0), traced over the power sums degree by degree.
TruncSeries<RatFunc> operator_trace(const RatFunc& u, int n_max, bool with_D0 = false, bool plus_only = false);
/// F(x) = Exp((u^-1 - 1)(1 - u q t)/M x T/(1-T) + T/(1-T)).
TruncSeries<RatFunc> genus1_closed_form(const RatFunc& u, const RatFunc& x, int n_max);

Report verify_bridge(int n_max);
Report verify_genus1(int n_max);
Report verify_tennis(int n_max);
/// [x^0] Exp(x(uqt-1)/(1-T) + x^-1 (u^-1 - 1)T/(1-T)) against
/// Exp((1-u^-1)(1-uqt)T/(1-T)), u-coefficients |j| <= u_order.
Report verify_fernlem(int n_max, int u_order);
/// Both sides of the constant-term identity, exposed for tests.
TruncSeries<RatFunc> fernlem_lhs(int n_max);
TruncSeries<RatFunc> fernlem_rhs(int n_max);

}  // namespace pleth
