#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <tuple>
#include <vector>

#include "descent/coxeter.hpp"
#include "descent/linalg.hpp"
#include "descent/subset.hpp"

namespace descent {

enum class Basis { X, Y, XPrime };

/// The numbers |X_{IJK}|, stored sparsely per pair (I, J).
class StructureConstants {
 public:
  struct Entry {
    Subset K;
    std::uint64_t count = 0;
  };
  using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>;

  StructureConstants() = default;

  /// One pass over W: every d contributes to the pairs (I, J) with
  /// d in X_{IJ}.
  static StructureConstants compute(const CoxeterSystem& w);
  /// Rebuilds the table from (I, J, K, count) triples.
  static StructureConstants from_triples(int rank, const std::vector<Triple>& triples);

  int rank() const { return rank_; }
  std::span<const Entry> row(Subset I, Subset J) const {
    const std::size_t p = pair_index(I, J);
    return {entries_.data() + offsets_[p], entries_.data() + offsets_[p + 1]};
  }
  std::uint64_t count(Subset I, Subset J, Subset K) const;
  /// Non-zero entries ordered by (I, J, K) bit patterns.
  std::vector<Triple> triples() const;
  bool operator==(const StructureConstants& other) const { return triples() == other.triples(); }

 private:
  std::size_t pair_index(Subset I, Subset J) const { return (static_cast<std::size_t>(I.bits()) << rank_) | J.bits(); }
  int rank_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<Entry> entries_;
};

class DescentVector;
class DescentAlgebra;
using AlgebraPtr = std::shared_ptr<const DescentAlgebra>;

/// lambda -> tau_lambda(x), indexed by shape id.
struct TauVector {
  std::vector<Rational> values;

  const Rational& operator[](int shape) const { return values[static_cast<std::size_t>(shape)]; }
  TauVector operator*(const TauVector& other) const;
  bool operator==(const TauVector& other) const = default;
};

/// Sigma(W) with its x-basis multiplication table.
class DescentAlgebra : public std::enable_shared_from_this<DescentAlgebra> {
 public:
  static AlgebraPtr create(SystemPtr system);
  static AlgebraPtr create(SystemPtr system, StructureConstants constants);

  const CoxeterSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  int rank() const { return system_->rank(); }
  std::size_t dim() const { return subset_count(rank()); }
  const StructureConstants& constants() const { return constants_; }

  DescentVector x(Subset I) const;
  DescentVector y(Subset J) const;
  DescentVector xprime(Subset I) const;
  DescentVector unit() const;
  DescentVector zero() const;
  DescentVector from_coords(RationalVector coords, Basis basis = Basis::X) const;

  /// Products of x-coordinate vectors.
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  IntegerVector multiply(const IntegerVector& a, const IntegerVector& b) const;

  std::size_t num_shapes() const { return system_->shapes().size(); }
  /// tau_table()[lambda][I] = |X_{IJJ}| for J the canonical member of lambda.
  const std::vector<std::vector<std::uint64_t>>& tau_table() const { return tau_table_; }
  TauVector tau(const RationalVector& x_coords) const;
  /// |X_I|
  std::uint64_t coset_count(Subset I) const { return coset_counts_[I.bits()]; }

 private:
  DescentAlgebra() = default;
  SystemPtr system_;
  StructureConstants constants_;
  std::vector<std::vector<std::uint64_t>> tau_table_;
  std::vector<std::uint64_t> coset_counts_;
};

/// An element of Sigma(W) with coordinates in one of the three bases.
class DescentVector {
 public:
  DescentVector(AlgebraPtr algebra, Basis basis, RationalVector coords);

  const DescentAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Basis basis() const { return basis_; }
  const RationalVector& coords() const { return coords_; }
  /// Coordinate on the basis vector indexed by I, in this vector's basis.
  const Rational& coefficient(Subset I) const { return coords_[I.bits()]; }
  /// xi_I: the x-basis coordinate.
  Rational xi(Subset I) const;

  DescentVector in(Basis target) const;
  RationalVector x_coords() const;

  DescentVector operator+(const DescentVector& o) const;
  DescentVector operator-(const DescentVector& o) const;
  DescentVector operator-() const;
  DescentVector operator*(const Rational& c) const;
  /// Product in Sigma(W); the result is in the x-basis.
  DescentVector operator*(const DescentVector& o) const;
  DescentVector pow(unsigned n) const;
  bool operator==(const DescentVector& o) const;
  bool is_zero() const;

 private:
  void require_same(const DescentVector& o) const;
  AlgebraPtr algebra_;
  Basis basis_;
  RationalVector coords_;
};

inline DescentVector operator*(const Rational& c, const DescentVector& v) { return v * c; }

/// Change of basis on raw coordinate vectors (Moebius inversion on the
/// subset lattice).
RationalVector convert_coords(const RationalVector& coords, int rank, Basis from, Basis to);

/// Product computed inside the group algebra QW and read back in the
/// x-basis.  Throws NotInDescentAlgebra if the group-algebra product is not
/// constant on the descent classes Y_J.
DescentVector oracle_multiply(const DescentVector& a, const DescentVector& b);
/// Same product, but the group-algebra coefficient is evaluated only at one
/// element of each Y_J; O(2^|S| |W|) instead of O(|X_I| |X_J|).
DescentVector oracle_multiply_pointwise(const DescentVector& a, const DescentVector& b);

/// The element of QW (coefficients indexed by element) that a represents.
RationalVector group_algebra_element(const DescentVector& a);

TauVector tau(const DescentVector& a);

}  // namespace descent
