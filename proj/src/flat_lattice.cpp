#include "csm/flat_lattice.hpp"

#include <algorithm>

#include "csm/errors.hpp"

namespace csm {

FlatLattice::FlatLattice(const Matroid& m) : matroid_rank_(m.rank()) {
  std::vector<std::pair<int, ElementSet>> ranked;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (m.is_flat(s)) ranked.emplace_back(m.rank(s), s);
  });
  std::sort(ranked.begin(), ranked.end());
  for (const auto& [r, s] : ranked) {
    flats_.push_back(s);
    ranks_.push_back(r);
  }

  const std::size_t n = flats_.size();
  mobius_.assign(n * n, 0);
  // Flats are sorted by rank, so every proper subflat of flats_[j] precedes it.
  for (std::size_t i = 0; i < n; ++i) {
    mobius_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!flats_[i].is_proper_subset_of(flats_[j])) continue;
      std::int64_t sum = 0;
      for (std::size_t k = i; k < j; ++k) {
        if (flats_[i].is_subset_of(flats_[k]) && flats_[k].is_proper_subset_of(flats_[j])) {
          sum += mobius_[i * n + k];
        }
      }
      mobius_[i * n + j] = -sum;
    }
  }
}

int FlatLattice::index_of(ElementSet s) const {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

int FlatLattice::rank_of(ElementSet flat) const {
  const int i = index_of(flat);
  if (i < 0) throw InvalidFlat(flat.to_string() + " is not a flat");
  return ranks_[i];
}

std::vector<ElementSet> FlatLattice::flats_of_rank(int rank) const {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (ranks_[i] == rank) out.push_back(flats_[i]);
  }
  return out;
}

std::int64_t FlatLattice::mobius(ElementSet lower, ElementSet upper) const {
  const int i = index_of(lower);
  const int j = index_of(upper);
  if (i < 0) throw InvalidFlat(lower.to_string() + " is not a flat");
  if (j < 0) throw InvalidFlat(upper.to_string() + " is not a flat");
  return mobius_[static_cast<std::size_t>(i) * flats_.size() + j];
}

IntPolynomial characteristic_polynomial(const Matroid& m) {
  if (m.has_loop()) return {};
  const FlatLattice lattice(m);
  std::vector<std::int64_t> c(m.rank() + 1, 0);
  for (ElementSet f : lattice.flats()) {
    c[m.rank() - lattice.rank_of(f)] += lattice.mobius_from_bottom(f);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial reduced_characteristic_polynomial(const Matroid& m) {
  std::int64_t remainder = 0;
  IntPolynomial q = characteristic_polynomial(m).divide_by_x_minus_one(remainder);
  if (remainder != 0) {
    throw InternalConsistency("characteristic polynomial of " + m.to_string() +
                              " is not divisible by (λ-1), remainder " +
                              std::to_string(remainder));
  }
  return q;
}

std::int64_t beta_from_mobius(const Matroid& m) {
  if (m.has_loop()) return 0;
  const FlatLattice lattice(m);
  std::int64_t sum = 0;
  for (ElementSet f : lattice.flats()) sum += lattice.mobius_from_bottom(f) * lattice.rank_of(f);
  return (m.rank() % 2 == 0) ? sum : -sum;
}

std::int64_t beta_from_reduced_characteristic(const Matroid& m) {
  if (m.has_loop()) return 0;
  const std::int64_t value = reduced_characteristic_polynomial(m).evaluate(1);
  return ((m.rank() - 1) % 2 == 0) ? value : -value;
}

std::int64_t beta(const Matroid& m) {
  const std::int64_t via_mobius = beta_from_mobius(m);
  // χ̄ is undefined for the empty matroid (χ = 1); the Möbius sum gives 0.
  if (m.size() == 0) return via_mobius;
  const std::int64_t via_polynomial = beta_from_reduced_characteristic(m);
  if (via_mobius != via_polynomial) {
    throw InternalConsistency("beta disagreement for " + m.to_string() + ": Möbius sum " +
                              std::to_string(via_mobius) + " vs reduced characteristic " +
                              std::to_string(via_polynomial));
  }
  return via_mobius;
}

}  // namespace csm
