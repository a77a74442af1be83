#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pleth/mpoly.hpp"

namespace pleth {

/// Raised when a substitution or evaluation sends a denominator factor to zero.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An interned denominator factor. Atoms live for the whole process and are
/// compared by address.
///
/// Cyclotomic atoms (cyclo >= 1) are exactly Phi_d(x^delta) as Laurent
/// polynomials, with delta primitive and its first nonzero entry positive.
/// These are irreducible. Opaque atoms are canonical associates of
/// polynomials that could not be split further.
struct Atom {
  uint32_t id = 0;
  MPoly value;
  int cyclo = 0;
  Monomial delta;
  int pivot = -1;
  uint32_t support = 0;

  bool is_cyclotomic() const { return cyclo > 0; }
};

using AtomPower = std::pair<const Atom*, int>;

/// p == scalar * x^shift * prod(atom^e).
struct Factorization {
  Rational scalar{1};
  Monomial shift;
  std::vector<AtomPower> atoms;
};

/// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<int64_t>& cyclotomic_coefficients(int d);
int euler_phi(int n);

const Atom* cyclotomic_atom(int d, const Monomial& primitive_delta);
const Atom* opaque_atom(const MPoly& p);
size_t atom_count();

/// Splits a nonzero polynomial into interned atoms.
Factorization factor_polynomial(const MPoly& p);

/// Image of an atom under the Adams operation psi_k.
const Factorization& adams_atom(const Atom* a, int k);

/// Image of an atom under a pure monomial homomorphism given by the images
/// of each variable (identity where unspecified).
Factorization map_atom(const Atom* a, const std::vector<std::pair<int, Monomial>>& images);

/// p / atom when the atom divides p.
std::optional<MPoly> divide_by_atom(const MPoly& p, const Atom* a);

/// Sorted merge of atom lists, adding exponents.
std::vector<AtomPower> merge_atoms(const std::vector<AtomPower>& a, const std::vector<AtomPower>& b, int sign_b = 1);

}  // namespace pleth
