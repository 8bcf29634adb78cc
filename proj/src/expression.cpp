#include "descent/expression.hpp"

#include <algorithm>
#include <cctype>

#include "descent/errors.hpp"

namespace descent {

namespace {

class Parser {
 public:
  Parser(const AlgebraPtr& a, std::string_view text) : a_(a), text_(text) {}

  DescentVector parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    DescentVector v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  DescentVector expr() {
    DescentVector v = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      const DescentVector rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  DescentVector term() {
    DescentVector v = factor();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        v = v * factor();
      } else if (starts_factor()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  DescentVector factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      DescentVector v = expr();
      if (peek() != ')') throw ParseError("unbalanced '(' opened at position " + std::to_string(open), pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return a_->unit() * number();
    if (c == 'x' || c == 'y') return basis_element();
    if (c == '\0') throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    Integer num(digits());
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = Integer(digits());
      if (den == 0) throw ParseError("division by zero", at);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  DescentVector basis_element() {
    Basis basis = Basis::X;
    if (text_[pos_] == 'y') {
      basis = Basis::Y;
      ++pos_;
    } else if (text_.substr(pos_, 2) == "xp") {
      basis = Basis::XPrime;
      pos_ += 2;
    } else if (text_.substr(pos_, 2) == "xS") {
      pos_ += 2;
      return a_->x(a_->system().all());
    } else {
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] != '[') throw ParseError("expected '['", pos_);
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) throw ParseError("missing ']'", pos_);
    Subset I;
    try {
      I = a_->system().parse_subset(text_.substr(pos_, close + 1 - pos_));
    } catch (const InvalidSubset& e) {
      throw ParseError(e.what(), pos_ + 1);
    }
    pos_ = close + 1;
    switch (basis) {
      case Basis::X: return a_->x(I);
      case Basis::Y: return a_->y(I);
      case Basis::XPrime: return a_->xprime(I);
    }
    return a_->zero();
  }

  const AlgebraPtr& a_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DescentVector parse_expression(const AlgebraPtr& a, std::string_view text) { return Parser(a, text).parse(); }

std::string basis_prefix(Basis basis) {
  switch (basis) {
    case Basis::X: return "x";
    case Basis::Y: return "y";
    case Basis::XPrime: return "xp";
  }
  return "";
}

Basis parse_basis(std::string_view name) {
  if (name == "x") return Basis::X;
  if (name == "y") return Basis::Y;
  if (name == "xp") return Basis::XPrime;
  throw ParseError("unknown basis '" + std::string(name) + "'", 0);
}

std::string format_expression(const DescentVector& v, Basis basis) {
  const CoxeterSystem& W = v.algebra().system();
  const RationalVector coords = v.in(basis).coords();
  std::vector<Subset> support;
  for (std::uint32_t I = 0; I < coords.size(); ++I)
    if (sgn(coords[I]) != 0) support.push_back(Subset{I});
  std::sort(support.begin(), support.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.elements() < b.elements();
  });
  if (support.empty()) return "0";
  std::string out;
  for (Subset I : support) {
    Rational c = coords[I.bits()];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += c.get_str() + "*";
    if (basis == Basis::X && I == W.all() && W.rank() > 0)
      out += "xS";
    else
      out += basis_prefix(basis) + W.format_subset(I);
  }
  return out;
}

}  // namespace descent
