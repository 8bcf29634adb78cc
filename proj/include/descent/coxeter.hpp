#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descent/roots.hpp"
#include "descent/subset.hpp"

namespace descent {

/// An element of W, identified by its position in the enumeration.
struct Element {
  std::uint32_t index = 0;
  auto operator<=>(const Element&) const = default;
};

/// A conjugacy class of subsets of S (a parabolic class).
struct Shape {
  int class_id = 0;
  std::vector<Subset> members;  // lexicographic order
  Subset canonical;             // lexicographically minimal member
  int cardinality_of_member = 0;
};

struct BuildOptions {
  /// Rank 7 systems (E7, A7, ...) are large; they are only built on request.
  bool allow_rank7 = false;
};

/// Hard ceiling on the rank of a buildable system.  E8 is always refused.
inline constexpr int kRankCap = 7;

/// A parsed Cartan label such as "B4", "I2(5)" or "A1xA2".
struct CartanLabel {
  std::string label;
  CoxeterMatrix matrix;
  std::vector<std::string> node_labels;
};

/// Generator numbering follows Bourbaki, except B_n (node 1 = t, carrying
/// the 4-bond to s_1) and D_n (nodes s_1, s_1' both joined to s_2; s_1' is
/// rendered "1p").  Throws UnsupportedType for unknown labels.
CartanLabel parse_cartan_label(std::string_view label);

/// A finite Coxeter system, fully enumerated.
///
/// Elements are numbered by breadth-first search on length; inside a length
/// layer they are ordered by their lexicographically smallest reduced word,
/// which is also the word `word()` returns.  The object is immutable after
/// construction; lazily computed tables are guarded for concurrent readers.
class CoxeterSystem {
 public:
  static std::shared_ptr<const CoxeterSystem> build(std::string_view label,
                                                    BuildOptions options = {});
  /// Explicit matrix; nodes are labelled 1..n unless labels are given.
  static std::shared_ptr<const CoxeterSystem> build(const CoxeterMatrix& matrix,
                                                    BuildOptions options = {},
                                                    std::string label = {},
                                                    std::vector<std::string> node_labels = {});

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const CoxeterMatrix& coxeter_matrix() const { return matrix_; }
  const RootAction& roots() const { return roots_; }
  int num_positive_roots() const { return roots_.positive_count(); }
  std::size_t order() const { return length_.size(); }
  Subset all() const { return Subset::full(rank_); }

  const std::string& node_label(int s) const { return node_labels_[static_cast<std::size_t>(s)]; }
  /// "[1,3]" style, sorted, 1-based (D-type s_1' prints as 1p).
  std::string format_subset(Subset I) const;
  /// Accepts "[1,3]", "[]", "1,3" and the D-type "1p".
  Subset parse_subset(std::string_view text) const;

  // -- elements --------------------------------------------------------
  Element identity() const { return Element{0}; }
  Element longest_element() const { return Element{static_cast<std::uint32_t>(order() - 1)}; }
  /// Longest element w_I of the standard parabolic subgroup W_I.
  Element longest_element(Subset I) const;
  int length(Element w) const { return length_[w.index]; }
  std::vector<int> word(Element w) const;
  Element from_word(std::span<const int> word) const;
  Element generator(int s) const { return right_multiply(identity(), s); }
  Element right_multiply(Element w, int s) const {
    return Element{rmul_[w.index * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]};
  }
  Element left_multiply(int s, Element w) const {
    return Element{lmul_[w.index * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]};
  }
  Element multiply(Element u, Element v) const;
  Element inverse(Element w) const { return Element{inv_[w.index]}; }
  /// {s : l(ws) < l(w)}
  Subset right_descents(Element w) const { return Subset{right_desc_[w.index]}; }
  /// {s : l(sw) < l(w)}
  Subset left_descents(Element w) const { return Subset{left_desc_[w.index]}; }
  /// R(w) = {s : ws > w}, the complement of the right descents.
  Subset ascent_set(Element w) const { return all() - right_descents(w); }
  /// Support: generators occurring in a (any) reduced word.
  Subset support(Element w) const;

  /// w s w^{-1} when it is a simple reflection.
  std::optional<int> conjugate_generator(Element w, int s) const;
  /// {t in S : w t w^{-1} in I}
  Subset conjugate_preimage(Element w, Subset I) const;
  /// w I w^{-1} when it lies inside S.
  std::optional<Subset> conjugate_subset(Element w, Subset I) const;

  bool is_w0_central() const;

  // -- coset combinatorics -------------------------------------------------
  /// X_I, sorted by (length, index).
  std::vector<Element> min_coset_reps(Subset I) const;
  /// d in X_{IJ} = X_I^{-1} ∩ X_J
  bool in_double_coset_reps(Element d, Subset I, Subset J) const {
    return !left_descents(d).intersects(I) && !right_descents(d).intersects(J);
  }
  /// d^{-1} I d ∩ J, for d in X_{IJ}.
  Subset intersection_type(Element d, Subset I, Subset J) const {
    return conjugate_preimage(d, I) & J;
  }
  /// X_{IJK} = {d in X_{IJ} : d^{-1} I d ∩ J = K}.
  std::vector<Element> structure_set(Subset I, Subset J, Subset K) const;

  // -- parabolic classes ---------------------------------------------------
  const std::vector<Shape>& shapes() const { return shapes_; }
  int shape_of(Subset I) const { return shape_of_subset_[I.bits()]; }
  /// lambda <= mu: some member of lambda is contained in some member of mu.
  bool shape_le(int lambda, int mu) const {
    return shape_le_[static_cast<std::size_t>(lambda) * shapes_.size() + static_cast<std::size_t>(mu)];
  }
  /// Some w with w I w^{-1} = J (brute-force search).
  std::optional<Element> conjugating_witness(Subset I, Subset J) const;

  // -- conjugacy classes of elements ---------------------------------------
  /// Id of the conjugacy class of every element (classes numbered by their
  /// first element).
  const std::vector<std::uint32_t>& conjugacy_classes() const;
  /// A conjugate of minimal length, reached through cyclic shifts and
  /// length-decreasing conjugations by generators.
  Element min_length_conjugate(Element w) const;
  /// Lambda(w): the shape of the minimal parabolic subgroup containing w.
  int shape_of_element(Element w) const;
  /// Lambda(w) for every element, indexed by element.
  const std::vector<int>& element_shapes() const;

  /// |W| x |W| multiplication table, row-major (u * v at u*|W| + v).
  /// Only available for |W| <= kMaxTableOrder.
  static constexpr std::size_t kMaxTableOrder = 4096;
  const std::vector<std::uint32_t>& multiplication_table() const;

 private:
  CoxeterSystem() = default;
  void enumerate();
  void compute_shapes();
  std::uint64_t key_of_inverse(Element w) const { return keys_[inv_[w.index]]; }

  std::string label_;
  int rank_ = 0;
  CoxeterMatrix matrix_;
  std::vector<std::string> node_labels_;
  RootAction roots_;

  // keys_[w] packs w^{-1}(alpha_t) for t = 0..rank-1, one byte each
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> length_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> last_letter_;
  std::vector<std::uint32_t> rmul_, lmul_, inv_;
  std::vector<std::uint8_t> right_desc_, left_desc_;

  std::vector<Shape> shapes_;
  std::vector<int> shape_of_subset_;
  std::vector<bool> shape_le_;

  mutable std::once_flag classes_once_, element_shapes_once_, table_once_;
  mutable std::vector<std::uint32_t> classes_;
  mutable std::vector<int> element_shapes_;
  mutable std::vector<std::uint32_t> table_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// The standard parabolic subgroup W_K as a standalone system whose
/// generator i is the i-th element of K.
SystemPtr parabolic_system(const CoxeterSystem& w, Subset K);

/// The order of the group given by the product formula for its type,
/// computed from the Coxeter matrix (independent of enumeration).
std::uint64_t order_from_degrees(const CoxeterMatrix& m);

}  // namespace descent
