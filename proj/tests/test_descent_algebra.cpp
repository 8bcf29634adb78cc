#include <random>

#include "descent/descent_algebra.hpp"
#include "descent/errors.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace descent;
using descent::testing::kSeed;

namespace {

AlgebraPtr algebra(const char* label) { return DescentAlgebra::create(CoxeterSystem::build(label)); }

Subset S(std::uint32_t bits) { return Subset{bits}; }

}  // namespace

TEST_CASE("A2 multiplication examples") {
  const auto a = algebra("A2");
  CHECK(a->x(S(1)) * a->x(S(1)) == a->x(S(1)) + a->x(S(0)));
  CHECK(a->x(S(0)) * a->x(S(0)) == a->x(S(0)) * Rational(6));
  CHECK(a->y(S(0)) == a->x(S(0)) - a->x(S(1)) - a->x(S(2)) + a->x(S(3)));
  CHECK(a->y(S(3)) == a->unit());
}

TEST_CASE("unit and x_empty squared") {
  for (const char* label : {"A1", "A3", "B3", "D4", "H3", "I2(7)", "A1xA2"}) {
    const auto a = algebra(label);
    const auto n = static_cast<long>(a->system().order());
    CHECK(a->x(S(0)) * a->x(S(0)) == a->x(S(0)) * Rational(n));
    std::mt19937_64 rng(kSeed);
    for (int k = 0; k < 5; ++k) {
      const auto v = testing::random_element(a, rng);
      CHECK(a->unit() * v == v);
      CHECK(v * a->unit() == v);
    }
  }
}

TEST_CASE("structure constants against brute-force structure sets") {
  for (const char* label : {"A3", "B3", "H3"}) {
    const auto a = algebra(label);
    const auto& W = a->system();
    for (std::uint32_t I = 0; I < a->dim(); ++I)
      for (std::uint32_t J = 0; J < a->dim(); ++J)
        for_each_subset(S(J), [&](Subset K) {
          CHECK(a->constants().count(S(I), S(J), K) == W.structure_set(S(I), S(J), K).size());
        });
  }
}

TEST_CASE("structure constants survive a triple round trip") {
  const auto a = algebra("B3");
  const auto& c = a->constants();
  CHECK(StructureConstants::from_triples(3, c.triples()) == c);
}

TEST_CASE("basis conversions") {
  std::mt19937_64 rng(kSeed);
  for (const char* label : {"A2", "B4"}) {
    const auto a = algebra(label);
    const int r = a->rank();
    for (int k = 0; k < 10; ++k) {
      const auto v = testing::random_element(a, rng);
      for (Basis b : {Basis::X, Basis::Y, Basis::XPrime}) {
        CHECK(v.in(b).in(Basis::X).coords() == v.coords());
        CHECK(v.in(b) == v);
      }
    }
    // x'_I = (-1/2)^{|I|} sum_J (-1)^{|I & J|} y_J
    for (std::uint32_t I = 0; I < a->dim(); ++I) {
      RationalVector expected(a->dim());
      Rational scale = 1;
      for (int i = 0; i < S(I).size(); ++i) scale *= Rational(-1, 2);
      for (std::uint32_t J = 0; J < a->dim(); ++J) expected[J] = scale * ((S(I) & S(J)).size() % 2 ? -1 : 1);
      CHECK(a->xprime(S(I)).in(Basis::Y).coords() == expected);
    }
    CHECK(convert_coords(a->x(a->system().all()).coords(), r, Basis::X, Basis::Y) == a->y(a->system().all()).coords());
  }
}

TEST_CASE("oracle equivalence on all basis pairs") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(5)", "I2(7)", "A1xA1", "A1xA2"}) {
    CAPTURE(label);
    const auto a = algebra(label);
    for (std::uint32_t I = 0; I < a->dim(); ++I)
      for (std::uint32_t J = 0; J < a->dim(); ++J)
        CHECK(oracle_multiply(a->x(S(I)), a->x(S(J))) == a->x(S(I)) * a->x(S(J)));
  }
}

TEST_CASE("oracle equivalence on random elements") {
  std::mt19937_64 rng(kSeed);
  for (const char* label : {"B4", "D4"}) {
    const auto a = algebra(label);
    for (int k = 0; k < 5; ++k) {
      const auto u = testing::random_element(a, rng), v = testing::random_element(a, rng);
      CHECK(oracle_multiply(u, v) == u * v);
    }
  }
}

TEST_CASE("group algebra expansion") {
  const auto a = algebra("A2");
  const auto g = group_algebra_element(a->x(S(0)));
  for (const auto& c : g) CHECK(c == 1);
  const auto e = group_algebra_element(a->unit());
  CHECK(e[0] == 1);
  for (std::size_t w = 1; w < e.size(); ++w) CHECK(e[w] == 0);
}

TEST_CASE("tau examples") {
  const auto a = algebra("A2");
  const auto& W = a->system();
  const int empty = W.shape_of(S(0)), single = W.shape_of(S(1)), full = W.shape_of(S(3));
  for (std::uint32_t I = 0; I < a->dim(); ++I)
    CHECK(tau(a->x(S(I)))[empty] == Rational(static_cast<long>(W.min_coset_reps(S(I)).size())));
  CHECK(tau(a->unit())[full] == 1);
  CHECK(tau(a->x(S(1)))[single] == 1);
  CHECK(tau(a->x(S(0)))[full] == 0);
}

TEST_CASE("tau does not depend on the representative of the shape") {
  for (const char* label : {"A3", "B3", "D4", "H3"}) {
    const auto a = algebra(label);
    for (const auto& sh : a->system().shapes())
      for (Subset J : sh.members)
        for (std::uint32_t I = 0; I < a->dim(); ++I)
          CHECK(a->constants().count(S(I), J, J) == a->tau_table()[sh.class_id][I]);
  }
}

TEST_CASE("tau is multiplicative") {
  std::mt19937_64 rng(kSeed);
  for (const char* label : {"A3", "B3", "H3", "I2(6)", "A1xA2"}) {
    const auto a = algebra(label);
    for (int k = 0; k < 100; ++k) {
      const auto u = testing::random_element(a, rng), v = testing::random_element(a, rng);
      CHECK(tau(u * v) == tau(u) * tau(v));
    }
  }
}

TEST_CASE("character table symmetry and regular character") {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "G2", "I2(5)", "A1xA2", "A2xA2"}) {
    CAPTURE(label);
    const auto a = algebra(label);
    const auto& W = a->system();
    const auto& shapes = W.element_shapes();
    auto theta = [&](Subset I, Subset J) {
      std::uint64_t total = 0;
      for (Element w : W.min_coset_reps(J)) total += a->tau_table()[static_cast<std::size_t>(shapes[w.index])][I.bits()];
      return total;
    };
    for (std::uint32_t I = 0; I < a->dim(); ++I) {
      for (std::uint32_t J = I; J < a->dim(); ++J) CHECK(theta(S(I), S(J)) == theta(S(J), S(I)));
      std::uint64_t total = 0;
      for (std::size_t w = 0; w < W.order(); ++w) total += a->tau_table()[static_cast<std::size_t>(shapes[w])][I];
      CHECK(total == W.order());
    }
  }
}

TEST_CASE("triangularity of left multiplication") {
  for (const char* label : {"A3", "B3", "H3", "D4"}) {
    const auto a = algebra(label);
    const auto& W = a->system();
    for (std::uint32_t I = 0; I < a->dim(); ++I) {
      const auto x = a->x(S(I));
      const auto t = tau(x);
      for (std::uint32_t J = 0; J < a->dim(); ++J) {
        const auto d = x * a->x(S(J)) - a->x(S(J)) * t[W.shape_of(S(J))];
        for (std::uint32_t K = 0; K < a->dim(); ++K)
          if (d.coefficient(S(K)) != 0) CHECK((S(K).is_subset_of(S(J)) && K != J));
      }
    }
  }
}

TEST_CASE("w0 acts on the y and x' bases") {
  for (const char* label : {"A2", "A3", "B2", "B3", "B4", "D4", "H3", "A1xA2"}) {
    const auto a = algebra(label);
    const auto w0 = a->y(S(0));
    const Subset all = a->system().all();
    for (std::uint32_t I = 0; I < a->dim(); ++I) {
      CHECK(w0 * a->y(S(I)) == a->y(all - S(I)));
      CHECK(w0 * a->xprime(S(I)) == a->xprime(S(I)) * Rational(S(I).size() % 2 ? -1 : 1));
    }
    const auto g = group_algebra_element(w0);
    for (std::size_t w = 0; w < g.size(); ++w) CHECK(g[w] == (w + 1 == g.size() ? 1 : 0));
  }
}

TEST_CASE("mixing algebras throws") {
  const auto a = algebra("A2"), b = algebra("B2");
  CHECK_THROWS_AS(a->x(S(0)) + b->x(S(0)), SystemMismatch);
  CHECK_THROWS_AS(a->x(S(0)) * b->x(S(0)), SystemMismatch);
}

TEST_CASE("powers") {
  const auto a = algebra("A2");
  CHECK(a->x(S(1)).pow(0) == a->unit());
  CHECK(a->x(S(0)).pow(3) == a->x(S(0)) * Rational(36));
}

TEST_CASE("pointwise oracle") {
  for (const char* label : {"A3", "B3", "A1xA2"}) {
    const auto a = algebra(label);
    for (std::uint32_t I = 0; I < a->dim(); ++I)
      for (std::uint32_t J = 0; J < a->dim(); ++J)
        CHECK(oracle_multiply_pointwise(a->x(S(I)), a->x(S(J))) == oracle_multiply(a->x(S(I)), a->x(S(J))));
  }
  std::mt19937_64 rng(kSeed);
  for (const char* label : {"H4", "E6"}) {
    const auto a = algebra(label);
    for (int k = 0; k < 5; ++k) {
      const auto u = a->x(S(static_cast<std::uint32_t>(rng() % a->dim())));
      const auto v = a->x(S(static_cast<std::uint32_t>(rng() % a->dim())));
      CHECK(oracle_multiply_pointwise(u, v) == u * v);
    }
  }
}
