#pragma once

#include <cstdint>

#include "csm/intersection.hpp"
#include "csm/matroid.hpp"
#include "csm/polynomial.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

// Σ_k deg(csm_k(M)) t^k with each degree from iterated stable intersection.
IntPolynomial degree_polynomial_by_intersection(const Matroid& m, const DisplacementOptions& options = {});
// The same coefficients from deletion–contraction.
IntPolynomial degree_polynomial_by_recursion(const Matroid& m);

// Both routes above; throws InternalConsistency if they disagree.
IntPolynomial csm_degree_polynomial(const Matroid& m, const DisplacementOptions& options = {});

// χ̄_M(1 + t), or zero when M has a loop.
IntPolynomial shifted_reduced_characteristic(const Matroid& m);

bool check_hvector(const Matroid& m, const DisplacementOptions& options = {});

// (-1)^d β(M); M must be loopless.
std::int64_t euler_char_complement(const Matroid& m);

// Σ_k C(n-k-1, d-k) C(n-d-1, k) t^(k+1) for U_{rank,size}.
IntPolynomial g_polynomial_uniform(int rank, int size);

// (n-2)² - Σ_{rank-2 flats F} (|F|-2)² for a simple rank-3 matroid on n+1
// elements; UnsupportedFamily otherwise.
std::int64_t csm1_self_intersection_rank3(const Matroid& m);
IntPolynomial g_polynomial_rank3(const Matroid& m);

// Uniform matroids use the closed form, simple rank-3 matroids the rank-3
// formula; anything else is UnsupportedFamily.
IntPolynomial g_polynomial(const Matroid& m);

bool is_uniform(const Matroid& m);
// No loops and no parallel pairs.
bool is_simple(const Matroid& m);

// C(n-d-1, k) · B(U_{d-k+1, n+1}).
TropicalCycle n_cycles_uniform(int rank, int size, int k);
// Same, for a matroid that must be uniform.
TropicalCycle n_cycles(const Matroid& m, int k);

// (-1)^k == Σ_i (-1)^(k-i) C(m+k-i, k-i) C(m, i).
bool binomial_identity_holds(int m, int k);

}  // namespace csm
