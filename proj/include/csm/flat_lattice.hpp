#pragma once

#include <cstdint>
#include <vector>

#include "csm/element_set.hpp"
#include "csm/matroid.hpp"
#include "csm/polynomial.hpp"

namespace csm {

// The lattice of flats of a matroid with its full Möbius function.
//
// Flats are ordered by (rank, bitmask); the Möbius table is filled once at
// construction from the recursive definition, so lookups are O(log |L|).
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);

  const std::vector<ElementSet>& flats() const { return flats_; }
  int rank_of(ElementSet flat) const;
  int matroid_rank() const { return matroid_rank_; }
  ElementSet bottom() const { return flats_.front(); }
  ElementSet top() const { return flats_.back(); }

  std::vector<ElementSet> flats_of_rank(int rank) const;
  bool contains(ElementSet s) const { return index_of(s) >= 0; }

  // μ(F, G); throws InvalidFlat if either argument is not a flat.
  std::int64_t mobius(ElementSet lower, ElementSet upper) const;
  std::int64_t mobius_from_bottom(ElementSet flat) const { return mobius(bottom(), flat); }

 private:
  int index_of(ElementSet s) const;

  std::vector<ElementSet> flats_;
  std::vector<int> ranks_;
  int matroid_rank_ = 0;
  // Row-major |L| x |L| table.
  std::vector<std::int64_t> mobius_;
};

// χ_M(λ); identically zero when M has a loop.
IntPolynomial characteristic_polynomial(const Matroid& m);

// χ_M(λ)/(λ-1) by exact synthetic division. Throws InternalConsistency when
// the division leaves a remainder (only possible for the empty matroid).
IntPolynomial reduced_characteristic_polynomial(const Matroid& m);

// β(M) from the Möbius sum, cross-checked against (-1)^(r-1) χ̄_M(1).
std::int64_t beta(const Matroid& m);

// The two routes, exposed separately for tests.
std::int64_t beta_from_mobius(const Matroid& m);
std::int64_t beta_from_reduced_characteristic(const Matroid& m);

}  // namespace csm
