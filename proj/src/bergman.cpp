#include "csm/bergman.hpp"

#include <map>
#include <string>

#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"

namespace csm {

namespace {

void check_dimension(const Matroid& m, int k) {
  if (k < 0 || k > m.rank() - 1) {
    throw InvalidDimension("k = " + std::to_string(k) + " outside [0, " + std::to_string(m.rank() - 1) +
                           "] for a rank " + std::to_string(m.rank()) + " matroid");
  }
}

// β of consecutive minors, memoized for one cycle computation.
class MinorBetas {
 public:
  explicit MinorBetas(const Matroid& m) : m_(m) {}

  std::int64_t operator()(ElementSet upper, ElementSet lower) {
    auto key = std::make_pair(upper, lower);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const std::int64_t b = beta(m_.minor(upper, lower));
    cache_.emplace(key, b);
    return b;
  }

 private:
  const Matroid& m_;
  std::map<std::pair<ElementSet, ElementSet>, std::int64_t> cache_;
};

std::int64_t weight_with(const Matroid& m, const FlagOfFlats& flag, MinorBetas& betas) {
  const int d = m.rank() - 1;
  std::int64_t w = ((d - flag.length()) % 2 == 0) ? 1 : -1;
  ElementSet lower;
  for (int i = 0; i <= flag.length() && w != 0; ++i) {
    const ElementSet upper = i < flag.length() ? flag[i] : m.ground();
    w *= betas(upper, lower);
    lower = upper;
  }
  return w;
}

// Proper nonempty flats in the order the lattice lists them.
std::vector<ElementSet> proper_flats(const Matroid& m) {
  const FlatLattice lattice(m);
  std::vector<ElementSet> out;
  for (ElementSet f : lattice.flats()) {
    if (!f.empty() && f != m.ground()) out.push_back(f);
  }
  return out;
}

}  // namespace

void validate_flag(const Matroid& m, const FlagOfFlats& flag) {
  ElementSet previous;
  for (int i = 0; i < flag.length(); ++i) {
    const ElementSet f = flag[i];
    if (!f.is_subset_of(m.ground()) || !m.is_flat(f)) {
      throw InvalidFlat(f.to_string() + " is not a flat of " + m.to_string());
    }
    if (f.empty() || f == m.ground()) throw InvalidFlat("flag entries must be proper and nonempty");
    if (i > 0 && !previous.is_proper_subset_of(f)) {
      throw InvalidFlat("flag " + flag.to_string() + " is not strictly increasing");
    }
    previous = f;
  }
}

std::vector<FlagOfFlats> bergman_skeleton(const Matroid& m, int k) {
  check_dimension(m, k);
  std::vector<FlagOfFlats> out;
  if (m.has_loop()) return out;
  const std::vector<ElementSet> flats = proper_flats(m);
  std::vector<ElementSet> chain;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chain.size()) == k) {
      out.emplace_back(chain);
      return;
    }
    for (std::size_t j = from; j < flats.size(); ++j) {
      if (!chain.empty() && !chain.back().is_proper_subset_of(flats[j])) continue;
      chain.push_back(flats[j]);
      self(self, j + 1);
      chain.pop_back();
    }
  };
  // Flats are sorted by rank, so a proper superset always comes later.
  extend(extend, 0);
  return out;
}

std::int64_t csm_weight(const Matroid& m, const FlagOfFlats& flag) {
  validate_flag(m, flag);
  check_dimension(m, flag.length());
  if (m.has_loop()) return 0;
  MinorBetas betas(m);
  return weight_with(m, flag, betas);
}

TropicalCycle csm_cycle(const Matroid& m, int k) {
  check_dimension(m, k);
  TropicalCycle z(m.size(), k);
  if (m.has_loop()) return z;
  MinorBetas betas(m);
  for (const FlagOfFlats& flag : bergman_skeleton(m, k)) {
    const std::int64_t w = weight_with(m, flag, betas);
    if (w != 0) z.add_weight(flag, w);
  }
  return z;
}

TropicalCycle bergman_cycle(const Matroid& m) {
  const int d = m.rank() - 1;
  check_dimension(m, d);
  TropicalCycle z(m.size(), d);
  if (m.has_loop()) return z;
  for (const FlagOfFlats& flag : bergman_skeleton(m, d)) z.add_weight(flag, 1);
  return z;
}

std::int64_t pairing(const FlagOfFlats& flag, const TropicalCycle& z) {
  if (flag.length() != z.dim()) {
    throw InvalidDimension("flag of length " + std::to_string(flag.length()) + " paired with a " +
                           std::to_string(z.dim()) + "-cycle");
  }
  return z.weight(flag);
}

bool coarse_support_check(const Matroid& m, int k) {
  if (m.has_loop()) return true;
  for (const FlagOfFlats& flag : bergman_skeleton(m, k)) {
    bool expect_nonzero = true;
    ElementSet lower;
    for (int i = 0; i <= flag.length(); ++i) {
      const ElementSet upper = i < flag.length() ? flag[i] : m.ground();
      const Matroid minor = m.minor(upper, lower);
      if (minor.has_loop() || minor.connected_components().size() != 1) expect_nonzero = false;
      lower = upper;
    }
    if ((csm_weight(m, flag) != 0) != expect_nonzero) return false;
  }
  return true;
}

}  // namespace csm
