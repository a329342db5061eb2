#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csm/element_set.hpp"

namespace csm {

// A matroid on the ground set {0, ..., size-1}, stored by its list of bases.
//
// Bases are kept sorted, so two Matroid values with the same ground-set size
// describe the same labeled matroid exactly when their basis lists are equal.
// Minors renumber their ground set; `labels()` remembers, for every element,
// which element of the original matroid it came from.
class Matroid {
 public:
  // Validates the basis axioms; throws NotAMatroid naming a witness.
  static Matroid from_bases(int size, std::vector<ElementSet> bases);

  // U_{rank,size}: every rank-subset is a basis.
  static Matroid uniform(int rank, int size);

  int size() const { return size_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return ElementSet::full(size_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::vector<int>& labels() const { return labels_; }

  int rank(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }
  bool is_basis(ElementSet s) const;

  ElementSet loops() const;
  ElementSet coloops() const;
  bool is_loop(int element) const { return loops().contains(element); }
  bool is_coloop(int element) const { return coloops().contains(element); }
  bool has_loop() const { return !loops().empty(); }

  // Minimal dependent sets, in increasing bitmask order.
  std::vector<ElementSet> circuits() const;

  // Blocks of the relation "some circuit contains both", plus reflexivity.
  // Each block is reported once; blocks are ordered by smallest element.
  std::vector<ElementSet> connected_components() const;
  bool is_connected() const { return connected_components().size() == 1; }

  Matroid deletion(int element) const;
  Matroid contraction(int element) const;
  Matroid restriction(ElementSet flat) const;
  // M|T/S for S ⊆ T, relabeled to T∖S in increasing original order.
  Matroid minor(ElementSet keep, ElementSet contract) const;

  std::string to_string() const;

  // Labeled equality: size and bases only. Display labels are ignored.
  bool operator==(const Matroid& other) const {
    return size_ == other.size_ && bases_ == other.bases_;
  }

 private:
  Matroid(int size, std::vector<ElementSet> bases, std::vector<int> labels);

  int size_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<int> labels_;
};

Matroid direct_sum(const Matroid& first, const Matroid& second);

// Bases of M|T/S expressed as subsets of the *original* ground set (no
// renumbering). Shared by the minor operations and the polytope face code.
std::vector<ElementSet> minor_bases_in_place(const Matroid& m, ElementSet keep,
                                             ElementSet contract);

}  // namespace csm
