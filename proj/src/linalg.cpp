#include "descent/linalg.hpp"

#include <algorithm>

namespace descent {

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool is_zero(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; });
}

void make_primitive(IntegerVector& v) {
  Integer g = 0;
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (lead == v.size()) lead = i;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g == 1) break;
  }
  if (lead == v.size()) return;
  if (sgn(v[lead]) < 0) g = -g;
  if (g == 1) return;
  for (auto& x : v) {
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntegerVector primitive_part(const RationalVector& v) {
  Integer den = 1;
  for (const auto& q : v) {
    if (sgn(q) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (den / v[i].get_den());
  }
  make_primitive(out);
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<IntegerVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

void Subspace::reduce(IntegerVector& v) const {
  Integer a, b, g;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const IntegerVector& row = rows_[k];
    mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), row[p].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
    if (a != 1) {
      for (auto& x : v) {
        if (sgn(x) != 0) x *= a;
      }
    }
    for (std::size_t j = p; j < v.size(); ++j) {
      if (sgn(row[j]) != 0) mpz_submul(v[j].get_mpz_t(), b.get_mpz_t(), row[j].get_mpz_t());
    }
    // keep entries from growing across long elimination chains
    if ((k & 7) == 7) make_primitive(v);
  }
  make_primitive(v);
}

bool Subspace::insert(const RationalVector& v) { return insert(primitive_part(v)); }

bool Subspace::insert(IntegerVector v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& z) { return sgn(z) != 0; });
  if (lead == v.end()) return false;
  const auto p = static_cast<std::size_t>(lead - v.begin());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool Subspace::contains(const RationalVector& v) const {
  IntegerVector w = primitive_part(v);
  reduce(w);
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_) {
    IntegerVector w = row;
    reduce(w);
    if (!is_zero(w)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && dim() == other.dim() && contains(other);
}

std::vector<RationalVector> Subspace::basis() const {
  std::vector<RationalVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(to_rational(r));
  return out;
}

Subspace Subspace::operator+(const Subspace& other) const {
  Subspace sum = *this;
  for (const auto& r : other.rows_) sum.insert(r);
  return sum;
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - (*this + other).dim();
}

std::size_t rank(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return 0;
  return Subspace::span(rows.front().size(), rows).dim();
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix a = m;
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> solve_combination(const std::vector<RationalVector>& vectors,
                                                const RationalVector& target) {
  const std::size_t n = target.size();
  const std::size_t k = vectors.size();
  RationalMatrix a(n, RationalVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = vectors[j][i];
    a[i][k] = target[i];
  }
  const auto pivots = rref(a, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RationalVector c(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = a[r][k];
  return c;
}

}  // namespace descent
