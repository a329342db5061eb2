#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csm/element_set.hpp"

namespace csm {

// A strictly increasing chain S₁ ⊊ … ⊊ S_k of proper nonempty subsets of
// {0, …, m-1}. It names the braid cone cone(e_{S₁}, …, e_{S_k}) in R^m/1.
class BraidChain {
 public:
  BraidChain() = default;
  explicit BraidChain(std::vector<ElementSet> sets) : sets_(std::move(sets)) {}

  const std::vector<ElementSet>& sets() const { return sets_; }
  int length() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  ElementSet operator[](int i) const { return sets_[i]; }

  // Strictly increasing, proper, nonempty within a ground set of `ambient` elements.
  bool is_valid(int ambient) const;

  // Every set of `face` occurs in this chain.
  bool contains_face(const BraidChain& face) const;
  BraidChain without(int index) const;
  // Inserts `s` at its sorted position; caller guarantees the result is a chain.
  BraidChain with(ElementSet s) const;

  std::string to_string() const;

  auto operator<=>(const BraidChain&) const = default;

 private:
  std::vector<ElementSet> sets_;
};

// Image of e_S in Z^m/Z·1 ≅ Z^{m-1}, using coordinates x_i - x_0 for i ≥ 1.
std::vector<std::int64_t> quotient_vector(ElementSet s, int ambient);

// A k-dimensional fan tropical cycle in R^m/1 supported on braid cones,
// stored as a weight function on length-k braid chains ("ambient" is m).
// Zero weights may sit in the map; canonical() removes them and equality
// compares canonical forms.
class TropicalCycle {
 public:
  TropicalCycle(int ambient, int dim);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const std::map<BraidChain, std::int64_t>& weights() const { return weights_; }

  std::int64_t weight(const BraidChain& chain) const;
  // Adds `w` to the weight of `chain`; throws InvalidOperands for a chain of
  // the wrong length or one that is not a braid chain in this ambient space.
  void add_weight(const BraidChain& chain, std::int64_t w);

  TropicalCycle canonical() const;
  bool is_empty() const;
  std::size_t support_size() const;
  std::int64_t weight_sum() const;

  TropicalCycle operator+(const TropicalCycle& o) const;
  TropicalCycle operator-(const TropicalCycle& o) const;
  TropicalCycle operator*(std::int64_t c) const;
  bool operator==(const TropicalCycle& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const TropicalCycle& o) const;

  int ambient_;
  int dim_;
  std::map<BraidChain, std::int64_t> weights_;
};

TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b);
TropicalCycle scale(const TropicalCycle& z, std::int64_t c);
bool equals(const TropicalCycle& a, const TropicalCycle& b);

struct BalanceReport {
  bool balanced = true;
  // First codimension-one cone where the weighted normal sum leaves L_τ.
  std::optional<BraidChain> witness;
  // Every computed lattice normal agreed with the raw generator e_G mod L_τ.
  bool normals_match_generators = true;
  std::size_t faces_checked = 0;
};

BalanceReport check_balanced(const TropicalCycle& z);
inline bool is_balanced(const TropicalCycle& z) { return check_balanced(z).balanced; }

}  // namespace csm
