#pragma once

#include <string>
#include <vector>

#include "csm/matroid.hpp"
#include "csm/polytope.hpp"

namespace csm {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// Cycle matroid of the complete graph K_n. Edges are numbered in
// lexicographic order: (0,1), (0,2), …, (n-2,n-1).
Matroid graphic_complete(int vertices);

// Lines {i, i+1, i+3} mod 7.
Matroid fano();
// The Fano plane with the line {6,0,2} relaxed to a basis.
Matroid non_fano();

// Simple rank-3 matroids on exactly `size` elements, one per isomorphism
// class, given by their lines with three or more points.
std::vector<Matroid> simple_rank3_matroids(int size);

// Uniform U_{r,m} with 1 <= r <= m <= max_uniform_size, K4, Fano, non-Fano,
// and simple rank-3 matroids on at most max_rank3_size elements.
std::vector<NamedMatroid> catalog(int max_uniform_size = 7, int max_rank3_size = 6);

// The three two-cell subdivisions of Q(U_{2,4}), named by the pair split
// "ab|cd": the cells make a parallel pair of {c,d} and of {a,b}.
struct NamedSubdivision {
  std::string name;
  Subdivision subdivision;
};
std::vector<NamedSubdivision> octahedron_splits();

}  // namespace csm
