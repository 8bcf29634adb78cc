#include "descent/subset.hpp"

namespace descent {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Subset compress(Subset sub, Subset frame) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t f = frame.bits(); f != 0; f &= f - 1, ++k) {
    if (sub.contains(std::countr_zero(f))) out |= 1u << k;
  }
  return Subset{out};
}

Subset expand(Subset packed, Subset frame) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t f = frame.bits(); f != 0; f &= f - 1, ++k) {
    if (packed.contains(k)) out |= 1u << std::countr_zero(f);
  }
  return Subset{out};
}

}  // namespace descent
