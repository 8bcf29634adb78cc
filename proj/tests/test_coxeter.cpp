#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "descent/coxeter.hpp"
#include "descent/errors.hpp"
#include "doctest.h"

using namespace descent;

namespace {

// Degrees of the basic invariants, per irreducible type.
std::vector<int> degrees_of(const std::string& label) {
  const char f = label[0];
  if (f == 'I') return {2, std::stoi(label.substr(3))};
  const int n = std::stoi(label.substr(1));
  std::vector<int> d;
  switch (f) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      d = {2, 5, 6, 8, 9, 12};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'H':
      d = n == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

// Poincare polynomial prod_i (1 + q + ... + q^{d_i - 1}) as coefficient list.
std::vector<std::uint64_t> poincare_from_degrees(const std::vector<int>& degrees) {
  std::vector<std::uint64_t> p{1};
  for (int d : degrees) {
    std::vector<std::uint64_t> next(p.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += p[i];
    p = std::move(next);
  }
  return p;
}

std::uint64_t parabolic_order(const CoxeterSystem& w, Subset I) {
  std::uint64_t n = 0;
  for (std::uint32_t i = 0; i < w.order(); ++i)
    if (w.support(Element{i}).is_subset_of(I)) ++n;
  return n;
}

// Brute force: the smallest parabolic subgroup u W_I u^{-1} containing w.
Subset minimal_parabolic_type(const CoxeterSystem& W, Element w) {
  Subset best = W.all();
  std::uint64_t best_order = W.order() + 1;
  for (std::uint32_t u = 0; u < W.order(); ++u) {
    const Element c = W.multiply(W.multiply(W.inverse(Element{u}), w), Element{u});
    const Subset I = W.support(c);
    const std::uint64_t ord = parabolic_order(W, I);
    if (ord < best_order) {
      best_order = ord;
      best = I;
    }
  }
  return best;
}

// All reduced words, for tiny groups.
void reduced_words(const CoxeterSystem& W, Element w, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
  if (W.length(w) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int s : W.right_descents(w).elements()) {
    suffix.push_back(s);
    reduced_words(W, W.right_multiply(w, s), suffix, out);
    suffix.pop_back();
  }
}

const std::vector<std::string> kSmallTypes{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "I2(5)", "I2(6)", "G2"};

}  // namespace

TEST_CASE("group orders agree with the degree product") {
  for (const std::string label : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "D4", "D5", "F4", "H3",
                                  "H4", "E6", "I2(5)", "I2(7)", "I2(8)", "G2"}) {
    CAPTURE(label);
    const auto W = CoxeterSystem::build(label);
    std::uint64_t expected = 1;
    for (int d : degrees_of(label)) expected *= static_cast<std::uint64_t>(d);
    CHECK(W->order() == expected);
    CHECK(order_from_degrees(W->coxeter_matrix()) == expected);

    // length generating function equals prod [d_i]_q
    const auto poincare = poincare_from_degrees(degrees_of(label));
    std::vector<std::uint64_t> by_length(poincare.size(), 0);
    for (std::uint32_t i = 0; i < W->order(); ++i) ++by_length.at(static_cast<std::size_t>(W->length(Element{i})));
    CHECK(by_length == poincare);
    CHECK(W->length(W->longest_element()) == W->num_positive_roots());
  }
}

TEST_CASE("small orders") {
  CHECK(CoxeterSystem::build("A2")->order() == 6);
  CHECK(CoxeterSystem::build("B2")->order() == 8);
  CHECK(CoxeterSystem::build("A0")->order() == 1);
  CHECK(CoxeterSystem::build("A1xA2")->order() == 12);
  CHECK(CoxeterSystem::build("D3")->order() == 24);
  CHECK(CoxeterSystem::build("D2")->order() == 4);
}

TEST_CASE("rank cap and invalid input") {
  CHECK_THROWS_AS(CoxeterSystem::build("E8"), RankCapExceeded);
  try {
    CoxeterSystem::build("E8");
  } catch (const RankCapExceeded& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
  CHECK_THROWS_AS(CoxeterSystem::build("A7"), RankCapExceeded);
  CHECK_THROWS_AS(CoxeterSystem::build("E9"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::build("Z3"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::build("H5"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}), InfiniteGroup);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 0}, {0, 1}}), InfiniteGroup);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 7, 2}, {7, 1, 3}, {2, 3, 1}}), InfiniteGroup);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}), InfiniteGroup);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 5, 2}, {5, 1, 4}, {2, 4, 1}}), InfiniteGroup);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 3}, {2, 1}}), InvalidCoxeterMatrix);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{2, 3}, {3, 1}}), InvalidCoxeterMatrix);
  CHECK_THROWS_AS(CoxeterSystem::build(CoxeterMatrix{{1, 1}, {1, 1}}), InvalidCoxeterMatrix);
}

TEST_CASE("explicit matrix matches the label") {
  const auto a = CoxeterSystem::build(CoxeterMatrix{{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
  CHECK(a->order() == 120);
  const auto b = CoxeterSystem::build("H3");
  CHECK(a->num_positive_roots() == b->num_positive_roots());
}

TEST_CASE("element tables are consistent") {
  std::mt19937_64 rng(7);
  for (const auto& label : kSmallTypes) {
    CAPTURE(label);
    const auto W = CoxeterSystem::build(label);
    const std::uint32_t n = static_cast<std::uint32_t>(W->order());
    for (std::uint32_t i = 0; i < n; ++i) {
      const Element w{i};
      for (int s = 0; s < W->rank(); ++s) {
        const int d = W->length(W->right_multiply(w, s)) - W->length(w);
        CHECK((d == 1 || d == -1));
        CHECK(W->right_multiply(W->right_multiply(w, s), s) == w);
        CHECK(W->left_multiply(s, w) == W->multiply(W->generator(s), w));
      }
      const auto word = W->word(w);
      CHECK(static_cast<int>(word.size()) == W->length(w));
      CHECK(W->from_word(word) == w);
      CHECK(W->inverse(W->inverse(w)) == w);
      CHECK(W->multiply(w, W->inverse(w)) == W->identity());
      CHECK(W->length(W->inverse(w)) == W->length(w));
      CHECK(W->left_descents(w) == W->right_descents(W->inverse(w)));
      if (i > 0) CHECK(W->length(Element{i - 1}) <= W->length(w));
    }
    for (int trial = 0; trial < 200; ++trial) {
      const Element a{static_cast<std::uint32_t>(rng() % n)};
      const Element b{static_cast<std::uint32_t>(rng() % n)};
      const Element c{static_cast<std::uint32_t>(rng() % n)};
      CHECK(W->multiply(W->multiply(a, b), c) == W->multiply(a, W->multiply(b, c)));
      CHECK(W->inverse(W->multiply(a, b)) == W->multiply(W->inverse(b), W->inverse(a)));
    }
    const auto& table = W->multiplication_table();
    for (int trial = 0; trial < 200; ++trial) {
      const Element a{static_cast<std::uint32_t>(rng() % n)};
      const Element b{static_cast<std::uint32_t>(rng() % n)};
      CHECK(table[a.index * n + b.index] == W->multiply(a, b).index);
    }
  }
}

TEST_CASE("stored words are lexicographically minimal reduced words") {
  for (const std::string label : {"A3", "B3", "H3"}) {
    const auto W = CoxeterSystem::build(label);
    for (std::uint32_t i = 0; i < W->order(); ++i) {
      std::vector<std::vector<int>> all;
      std::vector<int> suffix;
      reduced_words(*W, Element{i}, suffix, all);
      CHECK(W->word(Element{i}) == *std::min_element(all.begin(), all.end()));
    }
    // inside each length layer, indices follow the lexicographic order of words
    for (std::uint32_t i = 1; i < W->order(); ++i) {
      if (W->length(Element{i - 1}) == W->length(Element{i}))
        CHECK(W->word(Element{i - 1}) < W->word(Element{i}));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  const auto A2 = CoxeterSystem::build("A2");
  CHECK(A2->min_coset_reps(A2->all()) == std::vector<Element>{A2->identity()});
  CHECK(A2->min_coset_reps(Subset{}).size() == 6);
  const auto reps = A2->min_coset_reps(Subset::singleton(0));
  std::vector<Element> expected{A2->identity(), A2->from_word(std::vector<int>{1}),
                                A2->from_word(std::vector<int>{0, 1})};
  CHECK(reps == expected);

  for (const auto& label : kSmallTypes) {
    const auto W = CoxeterSystem::build(label);
    for_each_subset(W->all(), [&](Subset I) {
      const auto x = W->min_coset_reps(I);
      CHECK(x.size() * parabolic_order(*W, I) == W->order());
      CHECK(parabolic_order(*W, I) == parabolic_system(*W, I)->order());
      for (std::size_t k = 1; k < x.size(); ++k) CHECK(W->length(x[k - 1]) <= W->length(x[k]));
      // brute-force definition: l(ws) > l(w) for all s in I
      for (Element w : x)
        for (int s : I.elements()) CHECK(W->length(W->right_multiply(w, s)) > W->length(w));
    });
  }
}

TEST_CASE("structure sets") {
  const auto A2 = CoxeterSystem::build("A2");
  const Subset s1 = Subset::singleton(0);
  CHECK(A2->structure_set(A2->all(), A2->all(), A2->all()) == std::vector<Element>{A2->identity()});
  CHECK(A2->structure_set(s1, s1, s1) == std::vector<Element>{A2->identity()});
  CHECK(A2->structure_set(s1, s1, Subset{}) == std::vector<Element>{A2->generator(1)});
  CHECK(A2->structure_set(s1, Subset{}, s1).empty());

  for (const std::string label : {"A3", "B3", "H3", "D4"}) {
    const auto W = CoxeterSystem::build(label);
    for_each_subset(W->all(), [&](Subset I) {
      for_each_subset(W->all(), [&](Subset J) {
        std::size_t total = 0;
        for_each_subset(J, [&](Subset K) { total += W->structure_set(I, J, K).size(); });
        std::size_t xij = 0;
        for (std::uint32_t d = 0; d < W->order(); ++d) {
          // X_IJ = X_I^{-1} ∩ X_J by definition
          const Element e{d};
          bool ok = true;
          for (int s : I.elements()) ok = ok && W->length(W->right_multiply(W->inverse(e), s)) > W->length(e);
          for (int s : J.elements()) ok = ok && W->length(W->right_multiply(e, s)) > W->length(e);
          if (ok) ++xij;
        }
        CHECK(total == xij);
      });
    });
  }
}

TEST_CASE("shape classes") {
  CHECK(CoxeterSystem::build("A2")->shapes().size() == 3);
  CHECK(CoxeterSystem::build("B2")->shapes().size() == 4);
  CHECK(CoxeterSystem::build("A3")->shapes().size() == 5);
  // type A_n: shapes are partitions of n+1
  const std::vector<std::size_t> partitions{1, 1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 5; ++n)
    CHECK(CoxeterSystem::build("A" + std::to_string(n))->shapes().size() == partitions[n + 1]);

  for (const auto& label : kSmallTypes) {
    CAPTURE(label);
    const auto W = CoxeterSystem::build(label);
    std::set<std::uint32_t> seen;
    for (const auto& sh : W->shapes()) {
      CHECK(sh.canonical == sh.members.front());
      for (Subset I : sh.members) {
        CHECK(seen.insert(I.bits()).second);
        CHECK(I.size() == sh.cardinality_of_member);
        CHECK(W->conjugating_witness(sh.canonical, I).has_value());
        CHECK(W->shape_of(I) == sh.class_id);
      }
    }
    CHECK(seen.size() == subset_count(W->rank()));
    // nothing outside the class is conjugate to the canonical member
    for_each_subset(W->all(), [&](Subset J) {
      const int id = W->shape_of(J);
      for (const auto& sh : W->shapes())
        if (sh.class_id != id) CHECK_FALSE(W->conjugating_witness(sh.canonical, J).has_value());
    });
  }
  const auto B2 = CoxeterSystem::build("B2");
  CHECK_FALSE(B2->conjugating_witness(Subset::singleton(0), Subset::singleton(1)).has_value());
}

TEST_CASE("shape order") {
  const auto W = CoxeterSystem::build("B3");
  for_each_subset(W->all(), [&](Subset I) {
    for_each_subset(W->all(), [&](Subset J) {
      if (I.is_subset_of(J)) CHECK(W->shape_le(W->shape_of(I), W->shape_of(J)));
    });
  });
  CHECK(W->shape_le(W->shape_of(Subset{}), W->shape_of(W->all())));
  CHECK_FALSE(W->shape_le(W->shape_of(W->all()), W->shape_of(Subset{})));
}

TEST_CASE("shape of element") {
  for (const std::string label : {"A1", "A2", "A3", "B2", "B3", "H3", "I2(5)", "A1xA2"}) {
    CAPTURE(label);
    const auto W = CoxeterSystem::build(label);
    const auto& classes = W->conjugacy_classes();
    const auto& shapes = W->element_shapes();
    for (std::uint32_t i = 0; i < W->order(); ++i) {
      const Element w{i};
      CHECK(shapes[i] == W->shape_of(minimal_parabolic_type(*W, w)));
      CHECK(shapes[i] == shapes[classes[i]]);
      CHECK(W->shape_of_element(w) == shapes[i]);
    }
    CHECK(W->shape_of_element(W->identity()) == W->shape_of(Subset{}));
    std::vector<int> coxeter_word(static_cast<std::size_t>(W->rank()));
    for (int s = 0; s < W->rank(); ++s) coxeter_word[s] = s;
    CHECK(W->shape_of_element(W->from_word(coxeter_word)) == W->shape_of(W->all()));
  }
  const auto A3 = CoxeterSystem::build("A3");
  CHECK(A3->shape_of_element(A3->from_word(std::vector<int>{0, 2})) == A3->shape_of(Subset{0b101}));
}

TEST_CASE("conjugacy class counts") {
  const std::map<std::string, std::size_t> expected{{"A3", 5}, {"A4", 7}, {"B3", 10}, {"D4", 13}, {"H3", 10},
                                                    {"F4", 25}, {"I2(5)", 4}, {"I2(6)", 6}};
  for (const auto& [label, count] : expected) {
    const auto W = CoxeterSystem::build(label);
    std::set<std::uint32_t> ids(W->conjugacy_classes().begin(), W->conjugacy_classes().end());
    CHECK(ids.size() == count);
  }
}

TEST_CASE("longest element and centrality") {
  const auto A2 = CoxeterSystem::build("A2");
  CHECK(A2->length(A2->longest_element()) == 3);
  CHECK_FALSE(A2->is_w0_central());
  CHECK(A2->conjugate_generator(A2->longest_element(), 0) == 1);
  const auto B2 = CoxeterSystem::build("B2");
  CHECK(B2->length(B2->longest_element()) == 4);
  CHECK(B2->is_w0_central());
  const auto A1 = CoxeterSystem::build("A1");
  CHECK(A1->longest_element() == A1->generator(0));
  CHECK(A1->is_w0_central());

  for (const auto& label : kSmallTypes) {
    const auto W = CoxeterSystem::build(label);
    const Element w0 = W->longest_element();
    CHECK(W->longest_element(W->all()) == w0);
    for (std::uint32_t i = 0; i < W->order(); ++i) {
      const Element w{i};
      CHECK(W->length(w) <= W->length(w0));
      CHECK(W->ascent_set(W->multiply(w0, w)) == W->all() - W->ascent_set(w));
    }
    for_each_subset(W->all(), [&](Subset I) {
      const Element wI = W->longest_element(I);
      CHECK(W->support(wI).is_subset_of(I));
      CHECK(W->right_descents(wI) == I);
    });
  }
}

TEST_CASE("subset labels") {
  const auto D4 = CoxeterSystem::build("D4");
  CHECK(D4->format_subset(Subset{0b011}) == "[1,1p]");
  CHECK(D4->parse_subset("[1p, 3]") == Subset{0b1010});
  CHECK(D4->parse_subset("[]") == Subset{});
  CHECK_THROWS_AS(D4->parse_subset("[5]"), InvalidSubset);
  const auto B3 = CoxeterSystem::build("B3");
  CHECK(B3->format_subset(B3->all()) == "[1,2,3]");
  CHECK(B3->coxeter_matrix()[0][1] == 4);
  CHECK(D4->coxeter_matrix()[0][2] == 3);
  CHECK(D4->coxeter_matrix()[1][2] == 3);
  CHECK(D4->coxeter_matrix()[0][1] == 2);
}

TEST_CASE("parabolic subsystem") {
  const auto B3 = CoxeterSystem::build("B3");
  const auto P = parabolic_system(*B3, Subset{0b011});
  CHECK(P->order() == 8);
  CHECK(P->rank() == 2);
  const auto E = parabolic_system(*B3, Subset{});
  CHECK(E->order() == 1);
  CHECK(E->shapes().size() == 1);
}
