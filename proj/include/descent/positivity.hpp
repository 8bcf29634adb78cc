#pragma once

#include <cstddef>
#include <vector>

#include "descent/descent_algebra.hpp"
#include "descent/linalg.hpp"

namespace descent {

/// All x-basis coordinates are >= 0.
bool is_positive(const DescentVector& a);

/// F(a) (downward closure of the x-support under inclusion) or, when
/// `equivariant`, F_eq(a) (closure under the shape order).  Sorted by bits.
std::vector<Subset> saturated_family(const DescentVector& a, bool equivariant);
bool is_saturated(const CoxeterSystem& w, const std::vector<Subset>& family, bool equivariant);
/// Sigma_F = span{x_I : I in F}
Subspace family_span(std::size_t dim, const std::vector<Subset>& family);

/// Matrix of x -> a x (resp. x -> x a) in the x-basis; column J is the image of x_J.
RationalMatrix left_multiplication_matrix(const DescentVector& a);
RationalMatrix right_multiplication_matrix(const DescentVector& a);

/// a Sigma(W) = span{a x_J}
Subspace right_ideal(const DescentVector& a);
/// Sigma(W) a = span{x_J a}
Subspace left_ideal(const DescentVector& a);

/// a is a unit iff no tau_lambda(a) vanishes.
bool is_invertible(const DescentVector& a);

/// Z(a) = Ker(x -> a x - x a)
Subspace centralizer(const DescentVector& a);
/// Image of x -> a x - x a.
Subspace commutator_image(const DescentVector& a);

/// The terms of 2^|S| - |F_eq(a)| + dim Sigma a - dim(im mu_a ∩ Sigma a).
struct CentralizerFormula {
  std::size_t full_dim = 0;
  std::size_t f_eq = 0;
  std::size_t left_ideal_dim = 0;
  std::size_t intersection_dim = 0;
  long value() const {
    return static_cast<long>(full_dim) - static_cast<long>(f_eq) + static_cast<long>(left_ideal_dim) -
           static_cast<long>(intersection_dim);
  }
  /// Upper bound dropping the intersection term.
  long bound() const { return value() + static_cast<long>(intersection_dim); }
};
CentralizerFormula centralizer_formula(const DescentVector& a);

/// |{w : tau_{Lambda(w)}(a) = xi}|; throws NotPositive unless a is positive.
std::size_t eigenspace_dim_on_regular(const DescentVector& a, const Rational& xi);
/// The same number measured as dim Ker(a - xi) on QW under left
/// multiplication (needs the multiplication table).
std::size_t eigenspace_dim_on_regular_direct(const DescentVector& a, const Rational& xi);

/// Trace of left multiplication by a on Sigma_F.
Rational trace_on_family(const DescentVector& a, const std::vector<Subset>& family);

}  // namespace descent
