#include "descent/descent_algebra.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>

#include "descent/errors.hpp"

namespace descent {

// -- structure constants ------------------------------------------------------

StructureConstants StructureConstants::compute(const CoxeterSystem& w) {
  const int r = w.rank();
  const std::size_t n = subset_count(r);
  std::vector<std::uint64_t> dense(n * n * n, 0);
  std::vector<std::uint32_t> pre(static_cast<std::size_t>(r));
  std::vector<std::uint32_t> P(n);
  const std::uint32_t full = w.all().bits();
  for (std::uint32_t i = 0; i < w.order(); ++i) {
    const Element d{i};
    // pre[s] = {t : d t d^{-1} = s}
    std::fill(pre.begin(), pre.end(), 0u);
    for (int t = 0; t < r; ++t)
      if (const auto g = w.conjugate_generator(d, t)) pre[static_cast<std::size_t>(*g)] |= 1u << t;
    const Subset free_left{full & ~w.left_descents(d).bits()};
    const Subset free_right{full & ~w.right_descents(d).bits()};
    for_each_subset(free_left, [&](Subset I) {
      const std::uint32_t b = I.bits();
      if (b == 0) {
        P[0] = 0;
      } else {
        const std::uint32_t low = b & (~b + 1);
        P[b] = P[b & (b - 1)] | pre[static_cast<std::size_t>(std::countr_zero(low))];
      }
      const std::size_t base = static_cast<std::size_t>(b) << r;
      const std::uint32_t p = P[b];
      for_each_subset(free_right, [&](Subset J) {
        ++dense[((base | J.bits()) << r) | (J.bits() & p)];
      });
    });
  }
  StructureConstants out;
  out.rank_ = r;
  out.offsets_.assign(n * n + 1, 0);
  for (std::size_t pair = 0; pair < n * n; ++pair) {
    const std::uint32_t J = static_cast<std::uint32_t>(pair) & static_cast<std::uint32_t>(n - 1);
    for_each_subset(Subset{J}, [&](Subset K) {
      const std::uint64_t c = dense[(pair << r) | K.bits()];
      if (c != 0) out.entries_.push_back({K, c});
    });
    out.offsets_[pair + 1] = static_cast<std::uint32_t>(out.entries_.size());
  }
  return out;
}

StructureConstants StructureConstants::from_triples(int rank, const std::vector<Triple>& triples) {
  const std::size_t n = subset_count(rank);
  std::vector<Triple> sorted = triples;
  std::sort(sorted.begin(), sorted.end());
  StructureConstants out;
  out.rank_ = rank;
  out.offsets_.assign(n * n + 1, 0);
  std::size_t k = 0;
  for (std::size_t pair = 0; pair < n * n; ++pair) {
    while (k < sorted.size()) {
      const auto& [I, J, K, c] = sorted[k];
      if (I >= n || J >= n || K >= n) throw CorruptCache("structure constant index out of range");
      const std::size_t p = (static_cast<std::size_t>(I) << rank) | J;
      if (p != pair) break;
      if ((K & ~J) != 0 || c == 0) throw CorruptCache("malformed structure constant");
      out.entries_.push_back({Subset{K}, c});
      ++k;
    }
    out.offsets_[pair + 1] = static_cast<std::uint32_t>(out.entries_.size());
  }
  if (k != sorted.size()) throw CorruptCache("structure constants out of order");
  return out;
}

std::uint64_t StructureConstants::count(Subset I, Subset J, Subset K) const {
  for (const auto& e : row(I, J))
    if (e.K == K) return e.count;
  return 0;
}

std::vector<StructureConstants::Triple> StructureConstants::triples() const {
  std::vector<Triple> out;
  const std::size_t n = subset_count(rank_);
  for (std::size_t pair = 0; pair + 1 < offsets_.size(); ++pair) {
    const auto I = static_cast<std::uint32_t>(pair >> rank_);
    const auto J = static_cast<std::uint32_t>(pair & (n - 1));
    for (std::uint32_t k = offsets_[pair]; k < offsets_[pair + 1]; ++k)
      out.emplace_back(I, J, entries_[k].K.bits(), entries_[k].count);
  }
  return out;
}

// -- algebra ----------------------------------------------------------------------

TauVector TauVector::operator*(const TauVector& other) const {
  TauVector out{values};
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= other.values[k];
  return out;
}

AlgebraPtr DescentAlgebra::create(SystemPtr system) {
  StructureConstants c = StructureConstants::compute(*system);
  return create(std::move(system), std::move(c));
}

AlgebraPtr DescentAlgebra::create(SystemPtr system, StructureConstants constants) {
  if (constants.rank() != system->rank()) throw SystemMismatch("structure constants have the wrong rank");
  std::shared_ptr<DescentAlgebra> a(new DescentAlgebra());
  a->system_ = std::move(system);
  a->constants_ = std::move(constants);
  const std::size_t n = a->dim();
  for (const auto& sh : a->system_->shapes()) {
    std::vector<std::uint64_t> row(n);
    for (std::uint32_t I = 0; I < n; ++I) row[I] = a->constants_.count(Subset{I}, sh.canonical, sh.canonical);
    a->tau_table_.push_back(std::move(row));
  }
  a->coset_counts_.resize(n);
  for (std::uint32_t I = 0; I < n; ++I) a->coset_counts_[I] = a->constants_.count(Subset{I}, Subset{}, Subset{});
  return a;
}

DescentVector DescentAlgebra::from_coords(RationalVector coords, Basis basis) const {
  if (coords.size() != dim()) throw SystemMismatch("coordinate vector has the wrong length");
  return DescentVector(shared_from_this(), basis, std::move(coords));
}

DescentVector DescentAlgebra::x(Subset I) const {
  RationalVector v(dim());
  v[I.bits()] = 1;
  return from_coords(std::move(v), Basis::X);
}

DescentVector DescentAlgebra::y(Subset J) const {
  RationalVector v(dim());
  v[J.bits()] = 1;
  return from_coords(std::move(v), Basis::Y);
}

DescentVector DescentAlgebra::xprime(Subset I) const {
  RationalVector v(dim());
  v[I.bits()] = 1;
  return from_coords(std::move(v), Basis::XPrime);
}

DescentVector DescentAlgebra::unit() const { return x(system_->all()); }
DescentVector DescentAlgebra::zero() const { return from_coords(RationalVector(dim()), Basis::X); }

namespace {

// Scales v to integers; returns the common denominator.
Integer integerize(const RationalVector& v, IntegerVector& out) {
  Integer den = 1;
  for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  out.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].get_num() * (den / v[k].get_den());
  return den;
}

bool fits_small(const IntegerVector& v) {
  static const Integer bound = Integer(1) << 40;
  for (const auto& c : v)
    if (abs(c) >= bound) return false;
  return true;
}

Integer from_int128(__int128 x) {
  const bool neg = x < 0;
  const auto m = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  Integer z = static_cast<unsigned long>(m >> 64);
  z <<= 64;
  z += static_cast<unsigned long>(m & std::numeric_limits<std::uint64_t>::max());
  return neg ? Integer(-z) : z;
}

}  // namespace

IntegerVector DescentAlgebra::multiply(const IntegerVector& a, const IntegerVector& b) const {
  const std::size_t n = dim();
  IntegerVector out(n);
  if (fits_small(a) && fits_small(b)) {
    // |result| <= 2^80 * 4^rank * |W| < 2^127 up to rank 7
    std::vector<long> av(n), bv(n);
    for (std::size_t k = 0; k < n; ++k) av[k] = a[k].get_si(), bv[k] = b[k].get_si();
    std::vector<__int128> acc(n, 0);
    for (std::uint32_t I = 0; I < n; ++I) {
      if (av[I] == 0) continue;
      for (std::uint32_t J = 0; J < n; ++J) {
        if (bv[J] == 0) continue;
        const __int128 ab = static_cast<__int128>(av[I]) * bv[J];
        for (const auto& e : constants_.row(Subset{I}, Subset{J})) acc[e.K.bits()] += ab * static_cast<__int128>(e.count);
      }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = from_int128(acc[k]);
    return out;
  }
  Integer ab;
  for (std::uint32_t I = 0; I < n; ++I) {
    if (sgn(a[I]) == 0) continue;
    for (std::uint32_t J = 0; J < n; ++J) {
      if (sgn(b[J]) == 0) continue;
      ab = a[I] * b[J];
      for (const auto& e : constants_.row(Subset{I}, Subset{J}))
        mpz_addmul_ui(out[e.K.bits()].get_mpz_t(), ab.get_mpz_t(), static_cast<unsigned long>(e.count));
    }
  }
  return out;
}

RationalVector DescentAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  IntegerVector A, B;
  const Integer den = integerize(a, A) * integerize(b, B);
  const IntegerVector C = multiply(A, B);
  RationalVector out(C.size());
  for (std::size_t k = 0; k < C.size(); ++k) {
    out[k] = Rational(C[k], den);
    out[k].canonicalize();
  }
  return out;
}

TauVector DescentAlgebra::tau(const RationalVector& x_coords) const {
  TauVector out;
  out.values.resize(tau_table_.size());
  for (std::size_t l = 0; l < tau_table_.size(); ++l)
    for (std::size_t I = 0; I < x_coords.size(); ++I)
      if (sgn(x_coords[I]) != 0 && tau_table_[l][I] != 0)
        out.values[l] += x_coords[I] * static_cast<unsigned long>(tau_table_[l][I]);
  return out;
}

// -- change of basis ---------------------------------------------------------------

namespace {

// Sum over subsets (direction > 0) or Moebius inversion (direction < 0).
void subset_transform(RationalVector& v, int rank, int direction) {
  for (int i = 0; i < rank; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (!(m & bit)) continue;
      if (direction > 0) v[m] += v[m ^ bit];
      else v[m] -= v[m ^ bit];
    }
  }
}

// v[K] <- sum_{I >= K} weight^{|I \ K|} v[I]
void superset_transform(RationalVector& v, int rank, const Rational& weight) {
  for (int i = 0; i < rank; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < v.size(); ++m)
      if (!(m & bit)) v[m] += weight * v[m | bit];
  }
}

RationalVector to_x(RationalVector v, int rank, Basis from) {
  switch (from) {
    case Basis::X: break;
    case Basis::Y: subset_transform(v, rank, -1); break;
    case Basis::XPrime: superset_transform(v, rank, Rational(-1, 2)); break;
  }
  return v;
}

RationalVector from_x(RationalVector v, int rank, Basis to) {
  switch (to) {
    case Basis::X: break;
    case Basis::Y: subset_transform(v, rank, 1); break;
    case Basis::XPrime: superset_transform(v, rank, Rational(1, 2)); break;
  }
  return v;
}

}  // namespace

RationalVector convert_coords(const RationalVector& coords, int rank, Basis from, Basis to) {
  if (from == to) return coords;
  return from_x(to_x(coords, rank, from), rank, to);
}

// -- vectors --------------------------------------------------------------------------

DescentVector::DescentVector(AlgebraPtr algebra, Basis basis, RationalVector coords)
    : algebra_(std::move(algebra)), basis_(basis), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim()) throw SystemMismatch("coordinate vector has the wrong length");
}

void DescentVector::require_same(const DescentVector& o) const {
  if (algebra_ != o.algebra_ && algebra_->system_ptr() != o.algebra_->system_ptr())
    throw SystemMismatch("operands belong to different descent algebras (" + algebra_->system().label() +
                         " and " + o.algebra_->system().label() + ")");
}

Rational DescentVector::xi(Subset I) const {
  if (basis_ == Basis::X) return coords_[I.bits()];
  return x_coords()[I.bits()];
}

RationalVector DescentVector::x_coords() const { return to_x(coords_, algebra_->rank(), basis_); }

DescentVector DescentVector::in(Basis target) const {
  return DescentVector(algebra_, target, convert_coords(coords_, algebra_->rank(), basis_, target));
}

DescentVector DescentVector::operator+(const DescentVector& o) const {
  require_same(o);
  RationalVector v = coords_;
  const RationalVector w = convert_coords(o.coords_, algebra_->rank(), o.basis_, basis_);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
  return DescentVector(algebra_, basis_, std::move(v));
}

DescentVector DescentVector::operator-() const {
  RationalVector v = coords_;
  for (auto& c : v) c = -c;
  return DescentVector(algebra_, basis_, std::move(v));
}

DescentVector DescentVector::operator-(const DescentVector& o) const { return *this + (-o); }

DescentVector DescentVector::operator*(const Rational& c) const {
  RationalVector v = coords_;
  for (auto& x : v) x *= c;
  return DescentVector(algebra_, basis_, std::move(v));
}

DescentVector DescentVector::operator*(const DescentVector& o) const {
  require_same(o);
  return DescentVector(algebra_, Basis::X, algebra_->multiply(x_coords(), o.x_coords()));
}

DescentVector DescentVector::pow(unsigned n) const {
  DescentVector out = algebra_->unit();
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

bool DescentVector::operator==(const DescentVector& o) const {
  if (algebra_->system_ptr() != o.algebra_->system_ptr()) return false;
  return x_coords() == o.x_coords();
}

bool DescentVector::is_zero() const { return descent::is_zero(coords_); }

// -- group algebra oracle ----------------------------------------------------------------

RationalVector group_algebra_element(const DescentVector& a) {
  const CoxeterSystem& W = a.algebra().system();
  const RationalVector x = a.x_coords();
  RationalVector out(W.order());
  for (std::uint32_t I = 0; I < x.size(); ++I) {
    if (sgn(x[I]) == 0) continue;
    for (Element w : W.min_coset_reps(Subset{I})) out[w.index] += x[I];
  }
  return out;
}


DescentVector oracle_multiply(const DescentVector& a, const DescentVector& b) {
  if (a.algebra().system_ptr() != b.algebra().system_ptr())
    throw SystemMismatch("operands belong to different descent algebras");
  const CoxeterSystem& W = a.algebra().system();
  const std::size_t n = W.order();
  IntegerVector A, B;
  const Integer da = integerize(group_algebra_element(a), A);
  const Integer db = integerize(group_algebra_element(b), B);

  std::vector<std::uint32_t> support_a, support_b;
  for (std::uint32_t w = 0; w < n; ++w) {
    if (sgn(A[w]) != 0) support_a.push_back(w);
    if (sgn(B[w]) != 0) support_b.push_back(w);
  }
  const std::vector<std::uint32_t>* table =
      n <= CoxeterSystem::kMaxTableOrder ? &W.multiplication_table() : nullptr;
  auto product = [&](std::uint32_t u, std::uint32_t v) {
    return table ? (*table)[static_cast<std::size_t>(u) * n + v] : W.multiply(Element{u}, Element{v}).index;
  };

  IntegerVector C(n);
  bool small = true;
  for (auto w : support_a) small = small && A[w].fits_slong_p() && abs(A[w]) < (Integer(1) << 40);
  for (auto w : support_b) small = small && B[w].fits_slong_p() && abs(B[w]) < (Integer(1) << 40);
  if (small) {
    std::vector<__int128> acc(n, 0);
    std::vector<long> av(n), bv(n);
    for (auto w : support_a) av[w] = A[w].get_si();
    for (auto w : support_b) bv[w] = B[w].get_si();
    for (auto u : support_a)
      for (auto v : support_b) acc[product(u, v)] += static_cast<__int128>(av[u]) * bv[v];
    for (std::size_t w = 0; w < n; ++w) C[w] = from_int128(acc[w]);
  } else {
    for (auto u : support_a)
      for (auto v : support_b) C[product(u, v)] += A[u] * B[v];
  }

  // read back: constant on each Y_J = {w : R(w) = J}
  const std::size_t dim = a.algebra().dim();
  std::vector<std::optional<Integer>> y(dim);
  for (std::uint32_t w = 0; w < n; ++w) {
    const std::uint32_t J = W.ascent_set(Element{w}).bits();
    if (!y[J]) {
      y[J] = C[w];
    } else if (*y[J] != C[w]) {
      throw NotInDescentAlgebra("group-algebra product is not constant on the descent class " +
                                W.format_subset(Subset{J}));
    }
  }
  RationalVector ycoords(dim);
  const Integer den = da * db;
  for (std::size_t J = 0; J < dim; ++J)
    if (y[J]) ycoords[J] = Rational(*y[J], den);
  for (auto& c : ycoords) c.canonicalize();
  return DescentVector(a.algebra_ptr(), Basis::Y, std::move(ycoords)).in(Basis::X);
}

TauVector tau(const DescentVector& a) { return a.algebra().tau(a.x_coords()); }

DescentVector oracle_multiply_pointwise(const DescentVector& a, const DescentVector& b) {
  if (a.algebra().system_ptr() != b.algebra().system_ptr())
    throw SystemMismatch("operands belong to different descent algebras");
  const CoxeterSystem& W = a.algebra().system();
  const std::size_t n = W.order();
  const std::size_t dim = a.algebra().dim();
  const RationalVector A = group_algebra_element(a), B = group_algebra_element(b);
  std::vector<std::uint32_t> support;
  for (std::uint32_t u = 0; u < n; ++u)
    if (sgn(A[u]) != 0) support.push_back(u);
  std::vector<std::optional<std::uint32_t>> rep(dim);
  for (std::uint32_t w = 0; w < n; ++w) {
    auto& r = rep[W.ascent_set(Element{w}).bits()];
    if (!r) r = w;
  }
  RationalVector ycoords(dim);
  std::vector<std::uint32_t> z(n);
  for (std::size_t J = 0; J < dim; ++J) {
    if (!rep[J]) continue;
    // z[u] = u^-1 w, built along u = p s with p shorter than u
    z[0] = *rep[J];
    for (std::uint32_t u = 1; u < n; ++u) {
      const int s = std::countr_zero(W.right_descents(Element{u}).bits());
      z[u] = W.left_multiply(s, Element{z[W.right_multiply(Element{u}, s).index]}).index;
    }
    Rational c;
    for (auto u : support)
      if (sgn(B[z[u]]) != 0) c += A[u] * B[z[u]];
    ycoords[J] = c;
  }
  return DescentVector(a.algebra_ptr(), Basis::Y, std::move(ycoords)).in(Basis::X);
}

}  // namespace descent
