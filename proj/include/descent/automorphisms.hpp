#pragma once

#include <vector>

#include "descent/descent_algebra.hpp"
#include "descent/radical.hpp"

namespace descent {

/// A permutation of S preserving the Coxeter matrix.
struct DiagramAutomorphism {
  std::vector<int> permutation;
  int order = 1;
  bool is_inner_by_w0 = false;

  int operator()(int s) const { return permutation[static_cast<std::size_t>(s)]; }
  Subset apply(Subset I) const;
  bool is_identity() const { return order == 1; }
  DiagramAutomorphism inverse() const;
  bool operator==(const DiagramAutomorphism& o) const { return permutation == o.permutation; }
};

/// Identity first, then by order and lexicographic permutation.
std::vector<DiagramAutomorphism> diagram_automorphisms(const CoxeterSystem& w);

/// s -> w0 s w0
DiagramAutomorphism sigma0(const CoxeterSystem& w);

/// Throws AutomorphismMismatch unless sigma preserves the Coxeter matrix of w.
void check_automorphism(const CoxeterSystem& w, const DiagramAutomorphism& sigma);

/// sigma(x_I) = x_{sigma(I)} on x-coordinates.
RationalVector apply_to_coords(const DiagramAutomorphism& sigma, const RationalVector& x_coords);

/// sigma(lambda) = shape of sigma(I) for I in lambda; throws
/// AutomorphismMismatch if the members of lambda disagree.
int apply_to_shape(const CoxeterSystem& w, const DiagramAutomorphism& sigma, int shape);

/// The subalgebra of sigma-fixed elements, with the orbit sums as basis.
class FixedSubalgebra {
 public:
  FixedSubalgebra(AlgebraPtr parent, DiagramAutomorphism sigma);

  const DescentAlgebra& parent() const { return *parent_; }
  const AlgebraPtr& parent_ptr() const { return parent_; }
  const DiagramAutomorphism& sigma() const { return sigma_; }
  std::size_t dim() const { return orbits_.size(); }
  /// sigma-orbits on P(S), each sorted, ordered by their first member.
  const std::vector<std::vector<Subset>>& orbits() const { return orbits_; }
  /// Orbit sums in x-coordinates.
  const std::vector<RationalVector>& basis() const { return basis_; }
  /// Lambda / sigma
  const std::vector<std::vector<int>>& shape_orbits() const { return shape_orbits_; }

  bool contains(const RationalVector& x_coords) const;
  /// Every product of two basis elements is again fixed.
  bool is_closed() const;

  /// A ∩ Ker tau, computed inside the subalgebra.
  Subspace radical() const;
  /// (Rad Sigma(W))^sigma, obtained by averaging a basis of Rad Sigma(W).
  Subspace fixed_part_of_radical() const;

  LoewyProfile loewy_profile() const;

 private:
  AlgebraPtr parent_;
  DiagramAutomorphism sigma_;
  std::vector<std::vector<Subset>> orbits_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<RationalVector> basis_;
  std::vector<std::vector<int>> shape_orbits_;
};

LoewyProfile loewy_profile_fixed(const AlgebraPtr& a, const DiagramAutomorphism& sigma);

struct W0Centrality {
  bool is_central = false;
  /// J with y_J not invertible.
  std::vector<Subset> noninvertible;
};

/// w0 is central iff every y_J is a unit.
W0Centrality w0_centrality_criterion(const AlgebraPtr& a);

}  // namespace descent
