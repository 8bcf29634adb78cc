#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace descent {

/// A subset of the generating set S, stored as a bit set over generator
/// indices (bit i set <=> generator i belongs to the subset).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset empty() { return Subset{}; }
  static constexpr Subset full(int rank) {
    return Subset{rank >= 32 ? ~0u : ((1u << rank) - 1u)};
  }
  static constexpr Subset singleton(int i) { return Subset{1u << i}; }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset{bits_ | o.bits_}; }
  constexpr Subset operator&(Subset o) const { return Subset{bits_ & o.bits_}; }
  constexpr Subset operator-(Subset o) const { return Subset{bits_ & ~o.bits_}; }
  constexpr Subset with(int i) const { return Subset{bits_ | (1u << i)}; }
  constexpr Subset without(int i) const { return Subset{bits_ & ~(1u << i)}; }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Generator indices in increasing order.
  std::vector<int> elements() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Number of subsets of a set of the given rank.
constexpr std::size_t subset_count(int rank) { return std::size_t{1} << rank; }

/// Compresses the bits of `sub` that lie in `frame` into consecutive low
/// bits (bit order preserved).  `sub` must be contained in `frame`.
Subset compress(Subset sub, Subset frame);

/// Inverse of compress: spreads the low bits of `packed` onto the positions
/// of `frame`.
Subset expand(Subset packed, Subset frame);

/// Calls f(sub) for every subset of `set`, in increasing bit order.
template <class F>
void for_each_subset(Subset set, F&& f) {
  std::uint32_t s = set.bits();
  std::uint32_t sub = 0;
  while (true) {
    f(Subset{sub});
    if (sub == s) break;
    sub = (sub - s) & s;
  }
}

}  // namespace descent
