#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "csm/matroid.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

// Parameters of the displacement vector v(t) = (1, t, t², …, tⁿ) mod 1 used by
// the fan displacement rule. When some cone pair sees v on a boundary, t is
// squared and the whole intersection recomputed, at most `max_retries` times.
struct DisplacementOptions {
  mpz_class t = default_t();
  int max_retries = 5;

  // 10⁶ + 3, or MATROID_CSM_SEED_T when set to an integer ≥ 2.
  static mpz_class default_t();
};

// Stable intersection of two braid-supported cycles in the same R^m/1. The
// result has dimension a.dim + b.dim - (m-1); when that is negative the
// result is the empty 0-dimensional cycle.
TropicalCycle stable_intersect(const TropicalCycle& a, const TropicalCycle& b,
                               const DisplacementOptions& options = {});

// B(U_{m-1,m}) with unit weights: chains S₁ ⊊ … ⊊ S_{m-2} with |S_i| = i.
TropicalCycle standard_hyperplane(int ambient);

// deg(Z · H^k) for the standard hyperplane H, summed over the points.
std::int64_t degree(const TropicalCycle& z, const DisplacementOptions& options = {});

// Pushforward along R^m/1 → R^{m-1}/1 forgetting coordinate `element`.
// Elements above `element` are renumbered down by one.
TropicalCycle pushforward_forget(const TropicalCycle& z, int element);

// deg(csm_k(M)) by deletion–contraction on the smallest element that is
// neither a loop nor a coloop; base cases are matroids with a loop (0) and
// free matroids (1 in top dimension, else 0).
std::int64_t degree_by_recursion(const Matroid& m, int k);

}  // namespace csm
