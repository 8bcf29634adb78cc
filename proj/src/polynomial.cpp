#include "descent/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace descent {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, 1}); }

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = coeffs_;
  const Rational lead = v.back();
  for (auto& c : v) c /= lead;
  return Polynomial(std::move(v));
}

bool Polynomial::is_square_free() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] -= o.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator%(const Polynomial& o) const {
  std::vector<Rational> r = coeffs_;
  const int dd = o.degree();
  const Rational lead = o.coeffs_.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (sgn(r[static_cast<std::size_t>(k)]) == 0) continue;
    const Rational f = r[static_cast<std::size_t>(k)] / lead;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= f * o.coeffs_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return Polynomial(std::move(r));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str();
      out << "T";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace descent
