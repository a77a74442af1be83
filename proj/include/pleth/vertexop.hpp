#pragma once

#include <optional>
#include <vector>

#include "pleth/macdonald.hpp"
#include "pleth/report.hpp"

namespace pleth {

/// Ext character E_{mu,nu} from arms and legs.
MPoly ext_char(const Partition& mu, const Partition& nu);
/// The same character from B: conj(B_nu) + qt B_mu - M B_mu conj(B_nu).
MPoly ext_char_via_chi(const Partition& mu, const Partition& nu);
/// Monomials of E with multiplicity (all coefficients are positive integers).
std::vector<Monomial> ext_monomials(const Partition& mu, const Partition& nu);

/// N_{lambda,mu}(u) = (-u)^{-|mu|} q^{n(mu')} t^{n(mu)} prod_{m in E} (1 - u m).
RatFunc n_coeff(const Partition& lambda, const Partition& mu, const RatFunc& u);
inline RatFunc n_coeff(const Partition& lambda, const Partition& mu) { return n_coeff(lambda, mu, RatFunc(1)); }

/// Gamma(u) = Gamma_-((u^-1 - 1)/M) Gamma_+(1 - u q t), truncated at max_degree.
SymFunc gamma_u(const SymFunc& f, const RatFunc& u, int max_degree);
/// (Gamma(u) f, g)_* for g homogeneous of known degree.
RatFunc gamma_u_pairing(const SymFunc& f, const SymFunc& g, const RatFunc& u);

/// Both forms of (Gamma(u) H~_lambda, H~_mu)_* = N_{lambda,mu}(u) and the
/// expansion of Gamma(u) H~_lambda in the H~ basis, for |lambda|, |mu| <= n_max.
Report verify_cno(int n_max);

/// psi_i s_mu by the Maya insertion rule: (sign, partition) or nullopt.
std::optional<std::pair<Partition, int>> bernstein_rule(int i, const Partition& mu);
/// psi_i f by the Maya rule, f in any basis; result in the s basis.
SymFunc bernstein_component(int i, const SymFunc& f);
/// [x^i] Gamma_-(x) Gamma_+(-x^-1) f, computed from the operators.
SymFunc bernstein_component_oracle(int i, const SymFunc& f);

/// Gamma'(q) = Gamma_-(1 + q + ... + q^{r-1}) Gamma_+(-1 - q^-1 - ... - q^{1-r}).
SymFunc gamma_prime(const SymFunc& f, int r, int max_degree);
/// Closed form of (Gamma'(q) s_lambda, s_mu).
RatFunc gamma_prime_formula(const Partition& lambda, const Partition& mu, int r);

}  // namespace pleth
