#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csm/matroid.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

// size - number of connected components.
int polytope_dimension(const Matroid& m);

// A face of a matroid polytope, itself the polytope of `matroid` (same
// ground set, same rank). Vertices are the bases of `matroid`.
struct PolytopeFace {
  Matroid matroid;
  int dim = 0;
};

// The face maximizing any v in the open cone of `chain`: the direct sum of
// the minors M|S_{j+1}/S_j, kept on the original ground set.
Matroid face_in_direction(const Matroid& m, const BraidChain& chain);

// Every face of Q(M), one per distinct vertex set, ordered by (dim, bases).
std::vector<PolytopeFace> all_faces(const Matroid& m);

struct Subdivision {
  Matroid parent;
  std::vector<Matroid> cells;
};

struct SubdivisionReport {
  bool valid = true;
  // "cells", "a", "b" or "c" for the first violated clause, empty when valid.
  std::string clause;
  std::string message;
};

// (a) each cell is a full-dimensional matroid polytope inside Q(parent);
// (b) the cells cover: their vertices exhaust the parent's, and every cell
//     facet off the boundary of Q(parent) is shared with another cell;
// (c) two cells meet in the empty set or a common proper face.
SubdivisionReport validate_subdivision(const Subdivision& sub);

// Faces of cells (deduplicated) not lying in a proper face of Q(parent).
std::vector<PolytopeFace> interior_faces(const Subdivision& sub);

// csm_k(parent) == Σ_{interior F} (-1)^(dim Q - dim F) csm_k(M_F).
bool check_csm_valuation(const Subdivision& sub, int k);

// β(parent) == Σ β(M_F) over interior faces of dimension size - 1.
bool check_beta_valuation(const Subdivision& sub);

}  // namespace csm
