#include "descent/automorphisms.hpp"

#include <algorithm>
#include <numeric>

#include "descent/errors.hpp"
#include "descent/positivity.hpp"

namespace descent {

Subset DiagramAutomorphism::apply(Subset I) const {
  Subset out;
  for (int s : I.elements()) out = out.with((*this)(s));
  return out;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism out = *this;
  for (std::size_t s = 0; s < permutation.size(); ++s) out.permutation[static_cast<std::size_t>(permutation[s])] = static_cast<int>(s);
  return out;
}

namespace {

int permutation_order(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  std::iota(q.begin(), q.end(), 0);
  for (int k = 1;; ++k) {
    for (auto& x : q) x = p[static_cast<std::size_t>(x)];
    bool identity = true;
    for (std::size_t s = 0; s < q.size(); ++s) identity = identity && q[s] == static_cast<int>(s);
    if (identity) return k;
  }
}

bool preserves(const CoxeterMatrix& m, const std::vector<int>& p) {
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = 0; t < p.size(); ++t)
      if (m[s][t] != m[static_cast<std::size_t>(p[s])][static_cast<std::size_t>(p[t])]) return false;
  return true;
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const CoxeterSystem& w) {
  const std::vector<int> inner = sigma0(w).permutation;
  std::vector<int> p(static_cast<std::size_t>(w.rank()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<DiagramAutomorphism> out;
  do {
    if (preserves(w.coxeter_matrix(), p)) out.push_back({p, permutation_order(p), p == inner});
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.permutation < b.permutation;
  });
  return out;
}

DiagramAutomorphism sigma0(const CoxeterSystem& w) {
  DiagramAutomorphism out;
  const Element w0 = w.longest_element();
  for (int s = 0; s < w.rank(); ++s) out.permutation.push_back(*w.conjugate_generator(w0, s));
  out.order = permutation_order(out.permutation);
  out.is_inner_by_w0 = true;
  return out;
}

void check_automorphism(const CoxeterSystem& w, const DiagramAutomorphism& sigma) {
  const auto& p = sigma.permutation;
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ids(static_cast<std::size_t>(w.rank()));
  std::iota(ids.begin(), ids.end(), 0);
  if (sorted != ids || !preserves(w.coxeter_matrix(), p))
    throw AutomorphismMismatch("permutation is not a diagram automorphism of " + w.label());
}

RationalVector apply_to_coords(const DiagramAutomorphism& sigma, const RationalVector& x_coords) {
  RationalVector out(x_coords.size());
  for (std::uint32_t I = 0; I < x_coords.size(); ++I) out[sigma.apply(Subset{I}).bits()] = x_coords[I];
  return out;
}

int apply_to_shape(const CoxeterSystem& w, const DiagramAutomorphism& sigma, int shape) {
  const Shape& sh = w.shapes()[static_cast<std::size_t>(shape)];
  const int image = w.shape_of(sigma.apply(sh.canonical));
  for (Subset I : sh.members)
    if (w.shape_of(sigma.apply(I)) != image) throw AutomorphismMismatch("automorphism does not act on shapes");
  return image;
}

FixedSubalgebra::FixedSubalgebra(AlgebraPtr parent, DiagramAutomorphism sigma)
    : parent_(std::move(parent)), sigma_(std::move(sigma)) {
  const CoxeterSystem& W = parent_->system();
  check_automorphism(W, sigma_);
  const std::size_t n = parent_->dim();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  orbit_of_.assign(n, unset);
  for (std::uint32_t I = 0; I < n; ++I) {
    if (orbit_of_[I] != unset) continue;
    std::vector<Subset> orbit;
    Subset J{I};
    do {
      orbit_of_[J.bits()] = static_cast<std::uint32_t>(orbits_.size());
      orbit.push_back(J);
      J = sigma_.apply(J);
    } while (J.bits() != I);
    std::sort(orbit.begin(), orbit.end());
    RationalVector b(n);
    for (Subset K : orbit) b[K.bits()] = 1;
    orbits_.push_back(std::move(orbit));
    basis_.push_back(std::move(b));
  }
  std::vector<bool> seen(W.shapes().size(), false);
  for (std::size_t l = 0; l < seen.size(); ++l) {
    if (seen[l]) continue;
    std::vector<int> orbit;
    int mu = static_cast<int>(l);
    do {
      seen[static_cast<std::size_t>(mu)] = true;
      orbit.push_back(mu);
      mu = apply_to_shape(W, sigma_, mu);
    } while (mu != static_cast<int>(l));
    std::sort(orbit.begin(), orbit.end());
    shape_orbits_.push_back(std::move(orbit));
  }
}

bool FixedSubalgebra::contains(const RationalVector& x) const {
  for (std::uint32_t I = 0; I < x.size(); ++I)
    if (x[I] != x[orbits_[orbit_of_[I]].front().bits()]) return false;
  return true;
}

bool FixedSubalgebra::is_closed() const {
  for (const auto& u : basis_)
    for (const auto& v : basis_)
      if (!contains(parent_->multiply(u, v))) return false;
  return true;
}

Subspace FixedSubalgebra::radical() const { return subalgebra_radical(*parent_, basis_); }

Subspace FixedSubalgebra::fixed_part_of_radical() const {
  Subspace out(parent_->dim());
  for (const auto& r : radical_subspace(*parent_).basis()) {
    RationalVector sum(r.size()), image = r;
    for (int k = 0; k < sigma_.order; ++k) {
      for (std::size_t I = 0; I < sum.size(); ++I) sum[I] += image[I];
      image = apply_to_coords(sigma_, image);
    }
    out.insert(sum);
  }
  return out;
}

LoewyProfile FixedSubalgebra::loewy_profile() const { return descent::loewy_profile(*parent_, dim(), radical()); }

LoewyProfile loewy_profile_fixed(const AlgebraPtr& a, const DiagramAutomorphism& sigma) {
  return FixedSubalgebra(a, sigma).loewy_profile();
}

W0Centrality w0_centrality_criterion(const AlgebraPtr& a) {
  W0Centrality out;
  for (std::uint32_t J = 0; J < a->dim(); ++J)
    if (!is_invertible(a->y(Subset{J}))) out.noninvertible.push_back(Subset{J});
  out.is_central = out.noninvertible.empty();
  return out;
}

}  // namespace descent
