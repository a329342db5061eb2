#pragma once

#include <cstdint>
#include <vector>

#include "csm/matroid.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

// A flag F₁ ⊊ … ⊊ F_k of proper nonempty flats. It is stored as the braid
// chain it spans, so a flag can be looked up directly in a cycle.
using FlagOfFlats = BraidChain;

// Throws InvalidFlat unless `flag` is a strictly increasing chain of proper
// nonempty flats of `m`.
void validate_flag(const Matroid& m, const FlagOfFlats& flag);

// All length-k flags. Empty for a matroid with a loop; throws
// InvalidDimension unless 0 <= k <= rank - 1.
std::vector<FlagOfFlats> bergman_skeleton(const Matroid& m, int k);

// (-1)^(d-k) · ∏ β(M|F_{i+1}/F_i) with F₀ = ∅ and F_{k+1} the ground set.
// Zero for a matroid with a loop.
std::int64_t csm_weight(const Matroid& m, const FlagOfFlats& flag);

// csm_k(M) on the braid chart. The empty k-cycle when M has a loop.
TropicalCycle csm_cycle(const Matroid& m, int k);

// B(M): every maximal flag with weight 1, built without any β computation.
TropicalCycle bergman_cycle(const Matroid& m);

// Weight of σ_flag in z; 0 off the support.
std::int64_t pairing(const FlagOfFlats& flag, const TropicalCycle& z);

// True when, for every length-k flag, the CSM weight is nonzero exactly when
// every consecutive minor is loopless and connected.
bool coarse_support_check(const Matroid& m, int k);

}  // namespace csm
