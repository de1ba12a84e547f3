#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wres {

/// Canonical Clifford word c(e_{i1})...c(e_{ik}) with i1 < ... < ik, stored as a
/// bitmask (bit i-1 set for generator i). The empty word is the identity.
class CliffordWord {
 public:
  static constexpr int kMaxGenerators = 32;

  constexpr CliffordWord() = default;
  static constexpr CliffordWord fromMask(std::uint32_t mask) {
    CliffordWord w;
    w.mask_ = mask;
    return w;
  }
  /// Single generator c(e_i), 1 <= i <= 32.
  static constexpr CliffordWord generator(int i) { return fromMask(std::uint32_t{1} << (i - 1)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int length() const { return std::popcount(mask_); }
  std::vector<int> generators() const;
  std::string str() const;

  /// Product of canonical words under c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij:
  /// returns (sign, word) with a * b = sign * word.
  friend std::pair<int, CliffordWord> multiply(CliffordWord a, CliffordWord b) {
    int swaps = 0;
    std::uint32_t shifted = a.mask_ >> 1;
    while (shifted != 0) {
      swaps += std::popcount(shifted & b.mask_);
      shifted >>= 1;
    }
    swaps += std::popcount(a.mask_ & b.mask_);  // each c(e_i)^2 = -1
    return {(swaps & 1) ? -1 : 1, fromMask(a.mask_ ^ b.mask_)};
  }

  friend constexpr auto operator<=>(const CliffordWord&, const CliffordWord&) = default;

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace wres
