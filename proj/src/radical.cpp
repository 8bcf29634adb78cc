#include "descent/radical.hpp"

#include <string>

#include "descent/errors.hpp"

namespace descent {

Subspace radical_subspace(const DescentAlgebra& a) {
  RationalMatrix m;
  for (const auto& row : a.tau_table()) {
    RationalVector r(row.size());
    for (std::size_t I = 0; I < row.size(); ++I) r[I] = Rational(static_cast<unsigned long>(row[I]));
    m.push_back(std::move(r));
  }
  return Subspace::span(a.dim(), kernel(m, a.dim()));
}

std::vector<DescentVector> radical_basis(const AlgebraPtr& a) {
  std::vector<DescentVector> out;
  for (auto& v : radical_subspace(*a).basis()) out.push_back(a->from_coords(std::move(v)));
  return out;
}

Subspace radical_from_shapes(const DescentAlgebra& a) {
  Subspace out(a.dim());
  for (const auto& sh : a.system().shapes()) {
    for (Subset J : sh.members) {
      if (J == sh.canonical) continue;
      IntegerVector v(a.dim());
      v[J.bits()] = 1;
      v[sh.canonical.bits()] = -1;
      out.insert(std::move(v));
    }
  }
  return out;
}

Subspace subalgebra_radical(const DescentAlgebra& a, const std::vector<RationalVector>& basis) {
  const std::size_t n = basis.size();
  RationalMatrix m(a.num_shapes(), RationalVector(n));
  for (std::size_t k = 0; k < n; ++k) {
    const TauVector t = a.tau(basis[k]);
    for (std::size_t l = 0; l < t.values.size(); ++l) m[l][k] = t.values[l];
  }
  Subspace out(a.dim());
  for (const auto& c : kernel(m, n)) {
    RationalVector v(a.dim());
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(c[k]) != 0)
        for (std::size_t I = 0; I < v.size(); ++I) v[I] += c[k] * basis[k][I];
    out.insert(v);
  }
  return out;
}

std::vector<Subspace> radical_powers(const DescentAlgebra& a, const Subspace& radical) {
  std::vector<Subspace> out;
  if (radical.dim() == 0) return out;
  out.push_back(radical);
  while (true) {
    Subspace next(a.dim());
    const std::size_t bound = out.back().dim();
    for (const auto& u : out.back().rows()) {
      for (const auto& r : radical.rows()) {
        next.insert(a.multiply(u, r));
        if (next.dim() == bound) break;
      }
      if (next.dim() == bound) break;
    }
    // Rad^{k+1} is a proper subspace of Rad^k for a nilpotent ideal
    if (next.dim() == 0) break;
    if (next.dim() == bound) throw Error("radical power did not shrink: the given subspace is not nilpotent");
    out.push_back(std::move(next));
  }
  return out;
}

LoewyProfile loewy_profile(const DescentAlgebra& a, std::size_t dim, const Subspace& radical) {
  LoewyProfile p;
  p.dims.push_back(dim);
  for (const auto& power : radical_powers(a, radical)) p.dims.push_back(power.dim());
  return p;
}

LoewyProfile loewy_profile(const DescentAlgebra& a) { return loewy_profile(a, a.dim(), radical_subspace(a)); }

Polynomial minimal_polynomial(const DescentVector& a) {
  std::vector<RationalVector> powers{a.algebra().unit().x_coords()};
  const RationalVector ax = a.x_coords();
  while (true) {
    RationalVector next = a.algebra().multiply(powers.back(), ax);
    if (auto c = solve_combination(powers, next)) {
      std::vector<Rational> coeffs(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) coeffs[k] = -(*c)[k];
      coeffs.back() = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(std::move(next));
  }
}

namespace {

int type_b_rank(const DescentAlgebra& a) {
  const int n = a.rank();
  if (n < 3 || a.system().coxeter_matrix() != parse_cartan_label("B" + std::to_string(n)).matrix)
    throw WrongType("expected a system of type B_n with n >= 3, got " + a.system().label());
  return n;
}

Subset interval(int i, int j) {
  Subset s;
  for (int k = i; k <= j; ++k) s = s.with(k);
  return s;
}

Rational binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace

bool supported_in_size(const RationalVector& x_coords, int k) {
  for (std::size_t I = 0; I < x_coords.size(); ++I)
    if (sgn(x_coords[I]) != 0 && Subset{static_cast<std::uint32_t>(I)}.size() > k) return false;
  return true;
}

TypeBWitness witness_elements_typeB(const AlgebraPtr& alg) {
  TypeBWitness w{.n = 0, .r = 0, .a = {}, .tau_r = alg->zero(), .product = alg->unit(), .matches_tau = false, .scale = 0};
  const int n = type_b_rank(*alg);
  w.n = n;
  w.r = (n - 1) / 2;
  for (int i = 1; i <= w.r; ++i) {
    w.a.push_back(alg->x(interval(2 * i - 1, n - 2)) - alg->x(interval(2 * i, n - 1)));
    w.product = w.a.back() * w.product;
  }
  for (int j = 0; j <= 2 * w.r - 1; ++j) {
    const Rational c = binomial(2 * w.r - 1, j) * (j % 2 ? -1 : 1);
    w.tau_r = w.tau_r + alg->x(interval(j + 1, n - 2 * w.r + j)) * c;
  }
  const Subset lead = interval(1, n - 2 * w.r);
  w.scale = w.product.xi(lead);
  if (sgn(w.scale) != 0) {
    const RationalVector rest = (w.product - w.tau_r * w.scale).x_coords();
    w.matches_tau = supported_in_size(rest, n - 2 * w.r - 1);
  }
  return w;
}

BTauReport b_tau_report(const AlgebraPtr& alg) {
  const int n = type_b_rank(*alg);
  if (n % 2 == 0) throw WrongType("the question concerns B_n with n odd, got " + alg->system().label());
  const TypeBWitness w = witness_elements_typeB(alg);
  BTauReport rep;
  rep.n = n;
  rep.r = w.r;
  const auto powers = radical_powers(*alg, radical_subspace(*alg));
  if (static_cast<std::size_t>(w.r) <= powers.size()) {
    const Subspace& p = powers[static_cast<std::size_t>(w.r - 1)];
    rep.power_dim = p.dim();
    rep.contains_tau = p.contains(w.tau_r.x_coords());
  }
  return rep;
}

}  // namespace descent
