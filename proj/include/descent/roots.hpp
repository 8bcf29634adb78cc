#pragma once

#include <cstdint>
#include <vector>

#include "descent/linalg.hpp"

namespace descent {

/// m(s,t) for all pairs; m(s,s) = 1.
using CoxeterMatrix = std::vector<std::vector<int>>;

/// Exact element a + b*sqrt(5) of Q(sqrt 5).
class Golden {
 public:
  Golden() = default;
  Golden(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  /// (1 + sqrt 5) / 2
  static Golden phi() { return Golden(Rational(1, 2), Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  Golden operator+(const Golden& o) const { return {a_ + o.a_, b_ + o.b_}; }
  Golden operator-(const Golden& o) const { return {a_ - o.a_, b_ - o.b_}; }
  Golden operator-() const { return {-a_, -b_}; }
  Golden operator*(const Golden& o) const {
    return {a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }
  bool operator==(const Golden& o) const { return a_ == o.a_ && b_ == o.b_; }
  /// Structural (not numeric) order, for use as a map key.
  bool operator<(const Golden& o) const { return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_; }

  /// Sign of the real number a + b*sqrt 5.
  int sign() const;

 private:
  Rational a_, b_;
};

/// The action of the generators on the root set of a finite Coxeter group.
///
/// Roots are numbered 0..root_count-1; `perm[s][r]` is the index of s(r).
/// Every root is either positive or negative.
struct RootAction {
  int rank = 0;
  int root_count = 0;
  std::vector<bool> positive;
  std::vector<int> simple;  // simple[s] = index of alpha_s
  /// root_to_generator[r] = s if r = +-alpha_s, else -1
  std::vector<int> root_to_generator;
  std::vector<std::vector<std::uint8_t>> perm;

  int positive_count() const { return root_count / 2; }
};

/// Validates the matrix and realizes the group acting on its root set.
/// Throws InvalidCoxeterMatrix for malformed input and InfiniteGroup when the
/// matrix is not of finite type.
RootAction build_root_action(const CoxeterMatrix& m);

/// Connected components of the Coxeter graph (edges where m >= 3), each
/// sorted, ordered by smallest member.
std::vector<std::vector<int>> coxeter_components(const CoxeterMatrix& m);

}  // namespace descent
