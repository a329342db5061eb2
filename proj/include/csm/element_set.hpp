#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace csm {

// Ground sets are {0, ..., size-1}; anything beyond a few dozen elements is
// far outside the scale where bases can be listed explicitly.
inline constexpr int kMaxGroundSize = 24;

// A subset of the ground set stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int size) {
    return ElementSet(size >= 32 ? ~0u : ((1u << size) - 1u));
  }
  static constexpr ElementSet single(int element) { return ElementSet(1u << element); }
  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  static ElementSet of(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const { return (bits_ >> element) & 1u; }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  constexpr ElementSet with(int element) const { return ElementSet(bits_ | (1u << element)); }
  constexpr ElementSet without(int element) const { return ElementSet(bits_ & ~(1u << element)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const ElementSet&) const = default;

  // Elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

// Calls fn(ElementSet) for every subset of `ground`, including the empty set
// and `ground` itself.
template <typename Fn>
void for_each_subset(ElementSet ground, Fn&& fn) {
  const std::uint32_t g = ground.bits();
  std::uint32_t s = 0;
  while (true) {
    fn(ElementSet(s));
    if (s == g) break;
    s = (s - g) & g;
  }
}

}  // namespace csm
