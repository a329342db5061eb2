#include "csm/intersection.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "csm/errors.hpp"
#include "csm/integer_lattice.hpp"

namespace csm {

namespace {

// Raised internally when v lies on the boundary of some σ − τ cone.
struct NonGenericDisplacement {};

using FaceIndex = std::map<BraidChain, std::vector<std::pair<BraidChain, std::int64_t>>>;

// Calls fn(face) for every sub-chain of `chain` with exactly `m` sets.
template <typename Fn>
void for_each_face(const BraidChain& chain, int m, Fn&& fn) {
  const int k = chain.length();
  for_each_subset(ElementSet::full(k), [&](ElementSet picked) {
    if (picked.size() != m) return;
    std::vector<ElementSet> sets;
    for (int i : picked.elements()) sets.push_back(chain[i]);
    fn(BraidChain(std::move(sets)));
  });
}

bool chain_has(const BraidChain& chain, ElementSet s) {
  for (ElementSet t : chain.sets()) {
    if (t == s) return true;
  }
  return false;
}

TropicalCycle intersect_once(const TropicalCycle& a, const FaceIndex& b_faces, int result_dim,
                             const std::vector<mpz_class>& v) {
  const int ambient = a.ambient();
  const int n = ambient - 1;
  TropicalCycle result(ambient, result_dim);

  for (const auto& [sigma, w_sigma] : a.weights()) {
    if (w_sigma == 0) continue;
    for_each_face(sigma, result_dim, [&](const BraidChain& gamma) {
      auto it = b_faces.find(gamma);
      if (it == b_faces.end()) return;
      for (const auto& [tau, w_tau] : it->second) {
        // Shared sets beyond γ make span σ ∩ span τ too large: not transversal.
        bool extra_overlap = false;
        for (ElementSet s : tau.sets()) {
          if (!chain_has(gamma, s) && chain_has(sigma, s)) extra_overlap = true;
        }
        if (extra_overlap) continue;

        // Columns: σ∖γ, −(τ∖γ), then γ (lineality of σ − τ).
        std::vector<std::vector<std::int64_t>> columns;
        for (ElementSet s : sigma.sets()) {
          if (!chain_has(gamma, s)) columns.push_back(quotient_vector(s, ambient));
        }
        for (ElementSet s : tau.sets()) {
          if (chain_has(gamma, s)) continue;
          auto col = quotient_vector(s, ambient);
          for (auto& x : col) x = -x;
          columns.push_back(std::move(col));
        }
        const int constrained = static_cast<int>(columns.size());
        for (ElementSet s : gamma.sets()) columns.push_back(quotient_vector(s, ambient));
        if (static_cast<int>(columns.size()) != n) continue;

        const IntMatrix system = IntMatrix::from_columns(n, columns);
        const auto solution = solve_square(system, v);
        if (!solution) continue;
        bool inside = true;
        for (int j = 0; j < constrained; ++j) {
          const int s = sgn((*solution)[j]);
          if (s == 0) throw NonGenericDisplacement{};
          if (s < 0) inside = false;
        }
        if (!inside) continue;

        std::vector<std::vector<std::int64_t>> generators;
        for (ElementSet s : sigma.sets()) generators.push_back(quotient_vector(s, ambient));
        for (ElementSet s : tau.sets()) generators.push_back(quotient_vector(s, ambient));
        const LatticeIndex index = saturation_index(IntMatrix::from_columns(n, generators));
        if (index.rank != n) {
          throw InternalConsistency("transversal cone pair spans rank " + std::to_string(index.rank));
        }
        result.add_weight(gamma, w_sigma * w_tau * index.index);
      }
    });
  }
  return result.canonical();
}

}  // namespace

mpz_class DisplacementOptions::default_t() {
  if (const char* env = std::getenv("MATROID_CSM_SEED_T")) {
    mpz_class t;
    if (t.set_str(env, 10) == 0 && t >= 2) return t;
    throw InvalidParameters(std::string("MATROID_CSM_SEED_T must be an integer >= 2, got '") + env + "'");
  }
  return mpz_class(1000003);
}

TropicalCycle stable_intersect(const TropicalCycle& a, const TropicalCycle& b,
                               const DisplacementOptions& options) {
  if (a.ambient() != b.ambient()) throw InvalidOperands("stable intersection needs a common ambient space");
  const int n = a.ambient() - 1;
  const int result_dim = a.dim() + b.dim() - n;
  if (result_dim < 0) return TropicalCycle(a.ambient(), 0);

  FaceIndex b_faces;
  for (const auto& [tau, w] : b.weights()) {
    if (w == 0) continue;
    for_each_face(tau, result_dim, [&](const BraidChain& gamma) { b_faces[gamma].emplace_back(tau, w); });
  }

  mpz_class t = options.t;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    std::vector<mpz_class> v(n);
    mpz_class power = 1;
    for (int i = 0; i < n; ++i) {
      power *= t;
      v[i] = power - 1;
    }
    try {
      return intersect_once(a, b_faces, result_dim, v);
    } catch (const NonGenericDisplacement&) {
      t *= t;
    }
  }
  throw GenericVectorExhausted("no generic displacement vector after " +
                               std::to_string(options.max_retries) + " retries");
}

TropicalCycle standard_hyperplane(int ambient) {
  if (ambient < 2) throw InvalidParameters("standard hyperplane needs at least 2 elements");
  const int dim = ambient - 2;
  TropicalCycle h(ambient, dim);
  // Depth-first over chains with |S_i| = i.
  std::vector<ElementSet> chain;
  auto extend = [&](auto&& self, ElementSet current) -> void {
    if (static_cast<int>(chain.size()) == dim) {
      h.add_weight(BraidChain(chain), 1);
      return;
    }
    for (int e = 0; e < ambient; ++e) {
      if (current.contains(e)) continue;
      chain.push_back(current.with(e));
      self(self, current.with(e));
      chain.pop_back();
    }
  };
  extend(extend, ElementSet());
  return h;
}

std::int64_t degree(const TropicalCycle& z, const DisplacementOptions& options) {
  if (z.dim() == 0) return z.weight_sum();
  const TropicalCycle h = standard_hyperplane(z.ambient());
  TropicalCycle current = z;
  for (int i = 0; i < z.dim(); ++i) current = stable_intersect(current, h, options);
  return current.weight_sum();
}

TropicalCycle pushforward_forget(const TropicalCycle& z, int element) {
  const int ambient = z.ambient();
  if (element < 0 || element >= ambient) throw InvalidParameters("element out of range");
  if (ambient < 2 || z.dim() > ambient - 2) {
    throw InvalidDimension("cannot push a " + std::to_string(z.dim()) + "-cycle into R^" +
                           std::to_string(ambient - 1) + "/1");
  }
  const int image_ambient = ambient - 1;
  const ElementSet image_ground = ElementSet::full(image_ambient);
  auto project = [&](ElementSet s) {
    const std::uint32_t low = s.bits() & ((1u << element) - 1u);
    const std::uint32_t high = (s.bits() >> (element + 1)) << element;
    return ElementSet(low | high);
  };

  TropicalCycle out(image_ambient, z.dim());
  for (const auto& [chain, w] : z.weights()) {
    if (w == 0) continue;
    std::vector<ElementSet> image;
    bool degenerate = false;
    for (ElementSet s : chain.sets()) {
      const ElementSet p = project(s);
      if (p.empty() || p == image_ground || (!image.empty() && image.back() == p)) {
        degenerate = true;
        break;
      }
      image.push_back(p);
    }
    if (degenerate) continue;
    std::vector<std::vector<std::int64_t>> generators;
    for (ElementSet s : image) generators.push_back(quotient_vector(s, image_ambient));
    const LatticeIndex index = saturation_index(IntMatrix::from_columns(image_ambient - 1, generators));
    if (index.rank != z.dim()) continue;
    out.add_weight(BraidChain(std::move(image)), w * index.index);
  }
  return out.canonical();
}

}  // namespace csm
