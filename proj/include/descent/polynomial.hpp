#pragma once

#include <string>
#include <vector>

#include "descent/linalg.hpp"

namespace descent {

/// Univariate polynomial over Q in the indeterminate T; coefficients are
/// stored lowest degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(int degree, Rational c = 1);
  /// T - root
  static Polynomial linear(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational evaluate(const Rational& t) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  bool is_square_free() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  /// Euclidean remainder; divisor must be non-zero.
  Polynomial operator%(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace descent
