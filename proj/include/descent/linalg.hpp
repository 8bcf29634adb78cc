#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace descent {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
/// Row-major dense matrix.
using RationalMatrix = std::vector<RationalVector>;

bool is_zero(const RationalVector& v);
bool is_zero(const IntegerVector& v);

/// Clears denominators and removes the content: the result is the unique
/// primitive integer vector on the same ray with positive leading entry
/// (zero stays zero).
IntegerVector primitive_part(const RationalVector& v);
void make_primitive(IntegerVector& v);
RationalVector to_rational(const IntegerVector& v);

/// A subspace of Q^n kept as an integer echelon basis.
///
/// Rows are primitive integer vectors; row k has its pivot at pivots()[k],
/// pivots strictly increase, and every row vanishes left of its pivot.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<RationalVector>& vectors);
  static Subspace span(std::size_t ambient, const std::vector<IntegerVector>& vectors);

  /// Adds v to the spanning set; returns true iff the dimension grew.
  bool insert(const RationalVector& v);
  bool insert(IntegerVector v);

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<IntegerVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<RationalVector> basis() const;

  Subspace operator+(const Subspace& other) const;
  /// dim(this ∩ other), from dim U + dim V - dim(U + V).
  std::size_t intersection_dim(const Subspace& other) const;

 private:
  // Eliminates every pivot column of v; v is left primitive.
  void reduce(IntegerVector& v) const;

  std::size_t ambient_;
  std::vector<IntegerVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of vectors of a common length.
std::size_t rank(const std::vector<RationalVector>& rows);

/// Basis of the null space {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t cols);

/// Coefficients c with sum_k c[k] * vectors[k] == target, if any exist.
std::optional<RationalVector> solve_combination(const std::vector<RationalVector>& vectors,
                                                const RationalVector& target);

}  // namespace descent
