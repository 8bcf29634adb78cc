#pragma once

#include <cstddef>
#include <vector>

#include "descent/descent_algebra.hpp"
#include "descent/linalg.hpp"
#include "descent/polynomial.hpp"

namespace descent {

/// Dimensions d_0 = dim A, d_1 = dim Rad A, d_2 = dim (Rad A)^2, ... up to
/// the last non-zero power.
struct LoewyProfile {
  std::vector<std::size_t> dims;

  /// Smallest k >= 1 with (Rad A)^k = 0.
  int loewy_length() const { return static_cast<int>(dims.size()); }
  /// d_0 - d_1, the number of irreducible characters.
  std::size_t irreducible_count() const { return dims.size() > 1 ? dims[0] - dims[1] : dims[0]; }
  bool operator==(const LoewyProfile&) const = default;
};

/// Ker tau in x-coordinates.
Subspace radical_subspace(const DescentAlgebra& a);
std::vector<DescentVector> radical_basis(const AlgebraPtr& a);
/// span{x_I - x_J : I and J conjugate}
Subspace radical_from_shapes(const DescentAlgebra& a);

/// A ∩ Ker tau for the subalgebra A spanned by `basis` (x-coordinates).
Subspace subalgebra_radical(const DescentAlgebra& a, const std::vector<RationalVector>& basis);

/// Rad, Rad^2, ... down to (but excluding) the zero space, where
/// Rad^{k+1} = span{u r : u in Rad^k, r in Rad}.
std::vector<Subspace> radical_powers(const DescentAlgebra& a, const Subspace& radical);

LoewyProfile loewy_profile(const DescentAlgebra& a);
/// Profile of the subalgebra of dimension `dim` whose radical is given.
LoewyProfile loewy_profile(const DescentAlgebra& a, std::size_t dim, const Subspace& radical);

/// Minimal polynomial of a (equivalently of left multiplication by a),
/// monic, found from the first linear dependency among 1, a, a^2, ...
Polynomial minimal_polynomial(const DescentVector& a);

/// Elements a_1, ..., a_r of Rad Sigma(B_n) and the target tau_r, with
/// r = floor((n-1)/2); [i,j] = {s_i, ..., s_j}.
struct TypeBWitness {
  int n = 0;
  int r = 0;
  std::vector<DescentVector> a;
  DescentVector tau_r;
  /// a_r ... a_1
  DescentVector product;
  /// product = c tau_r + (terms x_I with |I| <= n - 2r - 1), c != 0
  bool matches_tau = false;
  Rational scale;
};

/// Throws WrongType unless the algebra is of type B_n, n >= 3.
TypeBWitness witness_elements_typeB(const AlgebraPtr& a);

/// The open question for B_{2r+1}: is (Ker tau)^r the line spanned by tau_r?
struct BTauReport {
  int n = 0;
  int r = 0;
  std::size_t power_dim = 0;
  bool contains_tau = false;
  bool equals_line() const { return power_dim == 1 && contains_tau; }
};

/// Throws WrongType unless the algebra is B_n with n odd, n >= 3.
BTauReport b_tau_report(const AlgebraPtr& a);

/// Sigma_k: x_I with |I| <= k.
bool supported_in_size(const RationalVector& x_coords, int k);

}  // namespace descent
