#pragma once

#include <string>
#include <vector>

#include "descent/automorphisms.hpp"
#include "descent/descent_algebra.hpp"
#include "descent/linalg.hpp"

namespace descent {

enum class MorphismKind { RES_K, RES_BD, PSI_K };

/// A linear map between descent algebras, stored on the x-bases:
/// column I of `matrix` holds the image of x_I.
struct AlgebraMorphism {
  AlgebraPtr domain;
  AlgebraPtr codomain;
  RationalMatrix matrix;  // codomain.dim() rows, domain.dim() columns
  MorphismKind kind = MorphismKind::RES_K;
  Subset K;   // RES_K, PSI_K
  int n = 0;  // RES_BD

  RationalVector operator()(const RationalVector& x_coords) const;
  DescentVector operator()(const DescentVector& x) const;
  /// Image of x_I.
  RationalVector column(Subset I) const;
  std::size_t rank() const;
  Subspace image() const;
  /// Kernel inside the domain, x-coordinates.
  Subspace kernel() const;
  bool maps_unit_to_unit() const;
  /// phi(x_I x_J) = phi(x_I) phi(x_J) on all basis pairs.
  bool is_multiplicative() const;
  bool operator==(const AlgebraMorphism& o) const { return matrix == o.matrix; }
};

/// f o g
AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g);

// -- restriction to a standard parabolic subgroup ----------------------------

/// Res_K : Sigma(W) -> Sigma(W_K), x_I -> sum_{d in X_{KI}} x^K_{K ∩ dId^-1}.
/// The codomain is built on parabolic_system(W, K).  Throws InvalidSubset.
AlgebraMorphism res_K(const AlgebraPtr& a, Subset K);
/// Same, into an already built codomain for W_K.
AlgebraMorphism res_K(const AlgebraPtr& a, Subset K, const AlgebraPtr& codomain);

/// The embedding Sigma(W_K) -> Sigma(W), x^K_J -> x_J (= x_K x^K_J).
RationalVector embed_parabolic(const RationalVector& coords, Subset K, int rank);

/// W(K) = {w in X_KK : w K w^-1 = K}
std::vector<Element> normalizer_complement(const CoxeterSystem& w, Subset K);

/// Subsets K' of S conjugate to K, each with some d in X_{K K'} such that d K' d^-1 = K.
std::vector<std::pair<Subset, Element>> conjugate_subsets(const CoxeterSystem& w, Subset K);

/// d_* : Sigma(W_{K'}) -> Sigma(W_K), x^{K'}_I -> x^K_{d I d^-1}, as a matrix.
RationalMatrix conjugation_matrix(const CoxeterSystem& w, Element d, Subset K_from, Subset K_to);

struct SurjectivityReport {
  bool surjective = false;           // (1) rank of Res_K = 2^|K|
  std::size_t left_ideal_dim = 0;    // (2) dim Sigma(W) x_K
  std::size_t family_dim = 0;        // 2^|K|
  bool left_ideal_is_family = false; // (3) Sigma(W) x_K = Sigma_{P(K)}(W)
  bool pi_injective = false;         // Lambda_K -> Lambda
  bool acts_trivially = false;       // W(K) centralizes W_K
  bool formulations_agree() const;
};

SurjectivityReport res_surjective(const AlgebraPtr& a, Subset K);

/// Lambda_K -> Lambda induced by inclusion, indexed by the shape ids of W_K.
std::vector<int> pi_K(const CoxeterSystem& w, const CoxeterSystem& wk, Subset K);

// -- type B to type D ---------------------------------------------------------

/// Res_n : Sigma(B_n) -> Sigma(D_n).  Throws RankTooSmall for n < 2.
AlgebraMorphism res_BD(int n);
AlgebraMorphism res_BD(const AlgebraPtr& b, const AlgebraPtr& d);

/// The D_n generator s1' = t s1 t and the rest of S_n', as elements of B_n,
/// indexed by D_n generator index.
std::vector<Element> d_generators_in_b(const CoxeterSystem& b);

/// sigma_n: the swap s1 <-> s1' of D_n.
DiagramAutomorphism sigma_n(const CoxeterSystem& d);

/// x_n Res_n(x) = x x_n in QB_n with x_n = 1 + t, checked for every x_I.
bool res_BD_intertwines(const AlgebraMorphism& res);

/// The order on subsets of S_{n-1}: by size, then lexicographically with
/// t < s1 < s2 < ...
bool precedes(Subset I, Subset J);

/// Res from B_n to B_{n-1} (K = S_{n-1}) is triangular for the order above
/// with positive diagonal.
bool is_triangular_for_precedes(const AlgebraMorphism& res);

// -- self-opposed subsets ------------------------------------------------------

/// Every w with w K w^-1 ⊆ S satisfies w K w^-1 = K.
bool is_self_opposed(const CoxeterSystem& w, Subset K);

/// (W(K), S(K)) for a self-opposed K.  Generator i of `quotient` is
/// w_{K,s} = w_{K ∪ {s}} w_K for the i-th element s of S \ K.
struct SelfOpposedContext {
  SystemPtr system;
  Subset K;
  std::vector<int> outside;              // S \ K in increasing order
  std::vector<Element> generators;       // w_{K,s}
  std::vector<Element> group;            // W(K), sorted
  CoxeterMatrix measured;                // orders of the products of generators
  SystemPtr quotient;                    // built from `measured`
  std::vector<Element> embedding;        // quotient element -> element of W
  bool embedding_is_isomorphism = false; // onto W(K), compatible with products

  /// I(K) = {w_{K,s} : s in I \ K}, as a subset of S(K).
  Subset of(Subset I) const;
  /// varpi_K: the subset A ⊇ K of S with A(K) = J.
  Subset varpi(Subset J) const;
};

/// Throws NotSelfOpposed.
SelfOpposedContext build_context(const SystemPtr& w, Subset K);

/// psi_K(x_I) = x_{I(K)} if K ⊆ I, else 0.
AlgebraMorphism psi_K(const AlgebraPtr& a, const SelfOpposedContext& ctx);
AlgebraMorphism psi_K(const AlgebraPtr& a, const SelfOpposedContext& ctx, const AlgebraPtr& codomain);

/// X^{(K)}_{I(K) J(K) L(K)} = X_{IJL} for all K ⊆ L ⊆ J and K ⊆ I.
bool goetz_set_equality(const SelfOpposedContext& ctx);

/// tau_{lambda(varpi(I))} = tau^{(K)}_{lambda(I)} o psi_K for all I ⊆ S(K).
bool varpi_factorization(const AlgebraMorphism& psi, const SelfOpposedContext& ctx);

/// Res_{L(K)} o psi_K = psi_K^L o Res_L, for K ⊆ L.
bool commuting_square_check(const AlgebraPtr& a, const SelfOpposedContext& ctx, Subset L);

std::string to_string(MorphismKind kind);

}  // namespace descent
