#include "descent/positivity.hpp"

#include <algorithm>

#include "descent/errors.hpp"

namespace descent {

bool is_positive(const DescentVector& a) {
  for (const auto& c : a.x_coords())
    if (sgn(c) < 0) return false;
  return true;
}

std::vector<Subset> saturated_family(const DescentVector& a, bool equivariant) {
  const CoxeterSystem& W = a.algebra().system();
  const RationalVector x = a.x_coords();
  std::vector<bool> in(x.size(), false);
  for (std::uint32_t J = 0; J < x.size(); ++J) {
    if (sgn(x[J]) == 0) continue;
    if (!equivariant) {
      for_each_subset(Subset{J}, [&](Subset I) { in[I.bits()] = true; });
    } else {
      const int mu = W.shape_of(Subset{J});
      for (std::uint32_t I = 0; I < x.size(); ++I)
        if (W.shape_le(W.shape_of(Subset{I}), mu)) in[I] = true;
    }
  }
  std::vector<Subset> out;
  for (std::uint32_t I = 0; I < x.size(); ++I)
    if (in[I]) out.push_back(Subset{I});
  return out;
}

bool is_saturated(const CoxeterSystem& w, const std::vector<Subset>& family, bool equivariant) {
  std::vector<bool> in(subset_count(w.rank()), false);
  for (Subset I : family) in[I.bits()] = true;
  for (Subset I : family) {
    for (std::uint32_t J = 0; J < in.size(); ++J) {
      const bool below = equivariant ? w.shape_le(w.shape_of(Subset{J}), w.shape_of(I)) : Subset{J}.is_subset_of(I);
      if (below && !in[J]) return false;
    }
  }
  return true;
}

Subspace family_span(std::size_t dim, const std::vector<Subset>& family) {
  Subspace out(dim);
  for (Subset I : family) {
    IntegerVector v(dim);
    v[I.bits()] = 1;
    out.insert(std::move(v));
  }
  return out;
}

namespace {

RationalMatrix multiplication_matrix(const DescentVector& a, bool left) {
  const DescentAlgebra& alg = a.algebra();
  const std::size_t n = alg.dim();
  const RationalVector ax = a.x_coords();
  RationalMatrix m(n, RationalVector(n));
  for (std::uint32_t J = 0; J < n; ++J) {
    const RationalVector xj = alg.x(Subset{J}).coords();
    const RationalVector col = left ? alg.multiply(ax, xj) : alg.multiply(xj, ax);
    for (std::size_t K = 0; K < n; ++K) m[K][J] = col[K];
  }
  return m;
}

Subspace column_space(const RationalMatrix& m) {
  const std::size_t n = m.size();
  Subspace out(n);
  for (std::size_t J = 0; J < n; ++J) {
    RationalVector col(n);
    for (std::size_t K = 0; K < n; ++K) col[K] = m[K][J];
    out.insert(col);
  }
  return out;
}

RationalMatrix commutator_matrix(const DescentVector& a) {
  RationalMatrix m = left_multiplication_matrix(a);
  const RationalMatrix r = right_multiplication_matrix(a);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] -= r[i][j];
  return m;
}

}  // namespace

RationalMatrix left_multiplication_matrix(const DescentVector& a) { return multiplication_matrix(a, true); }
RationalMatrix right_multiplication_matrix(const DescentVector& a) { return multiplication_matrix(a, false); }

Subspace right_ideal(const DescentVector& a) { return column_space(left_multiplication_matrix(a)); }
Subspace left_ideal(const DescentVector& a) { return column_space(right_multiplication_matrix(a)); }

bool is_invertible(const DescentVector& a) {
  for (const auto& v : tau(a).values)
    if (sgn(v) == 0) return false;
  return true;
}

Subspace centralizer(const DescentVector& a) {
  return Subspace::span(a.algebra().dim(), kernel(commutator_matrix(a), a.algebra().dim()));
}

Subspace commutator_image(const DescentVector& a) { return column_space(commutator_matrix(a)); }

CentralizerFormula centralizer_formula(const DescentVector& a) {
  CentralizerFormula f;
  f.full_dim = a.algebra().dim();
  f.f_eq = saturated_family(a, true).size();
  const Subspace left = left_ideal(a);
  f.left_ideal_dim = left.dim();
  f.intersection_dim = commutator_image(a).intersection_dim(left);
  return f;
}

std::size_t eigenspace_dim_on_regular(const DescentVector& a, const Rational& xi) {
  if (!is_positive(a)) throw NotPositive("eigenspace count on the regular module needs a positive element");
  const auto& shapes = a.algebra().system().element_shapes();
  const TauVector t = tau(a);
  return static_cast<std::size_t>(
      std::count_if(shapes.begin(), shapes.end(), [&](int l) { return t[l] == xi; }));
}

std::size_t eigenspace_dim_on_regular_direct(const DescentVector& a, const Rational& xi) {
  const CoxeterSystem& W = a.algebra().system();
  const std::size_t n = W.order();
  const auto& table = W.multiplication_table();
  const RationalVector g = group_algebra_element(a);
  // column v: a * v = sum_u g[u] (u v)
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u)
      if (sgn(g[u]) != 0) m[table[u * n + v]][v] += g[u];
    m[v][v] -= xi;
  }
  return kernel(m, n).size();
}

Rational trace_on_family(const DescentVector& a, const std::vector<Subset>& family) {
  // Sigma_F is spanned by basis vectors, so the trace is the diagonal sum
  const DescentAlgebra& alg = a.algebra();
  const RationalVector ax = a.x_coords();
  Rational out = 0;
  for (Subset I : family) out += alg.multiply(ax, alg.x(I).coords())[I.bits()];
  return out;
}

}  // namespace descent
