#include "csm/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "csm/bergman.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"

namespace csm {

namespace {

using VertexSet = std::vector<ElementSet>;

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Distinct vertex sets of all faces, found by refining along chains: adding
// S on top of a chain keeps the bases that meet S in r(S) elements.
std::set<VertexSet> face_vertex_sets(const Matroid& m) {
  std::set<VertexSet> seen;
  const ElementSet ground = m.ground();
  auto refine = [&](auto&& self, ElementSet last, const VertexSet& current) -> void {
    seen.insert(current);
    for_each_subset(ground - last, [&](ElementSet extra) {
      const ElementSet s = last | extra;
      if (extra.empty() || s == ground) return;
      const int r = m.rank(s);
      VertexSet next;
      for (ElementSet b : current) {
        if ((b & s).size() == r) next.push_back(b);
      }
      self(self, s, next);
    });
  };
  refine(refine, ElementSet(), m.bases());
  return seen;
}

std::vector<PolytopeFace> faces_from(const Matroid& m, const std::set<VertexSet>& sets) {
  std::vector<PolytopeFace> out;
  for (const VertexSet& vs : sets) {
    Matroid face = Matroid::from_bases(m.size(), vs);
    const int dim = polytope_dimension(face);
    out.push_back({std::move(face), dim});
  }
  std::sort(out.begin(), out.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.matroid.bases() < b.matroid.bases();
  });
  return out;
}

std::string describe(const VertexSet& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vs[i].to_string();
  }
  return s + "]";
}

SubdivisionReport fail(std::string clause, std::string message) {
  return {false, std::move(clause), std::move(message)};
}

// Proper faces of the parent, as vertex sets.
std::vector<VertexSet> boundary_faces(const Matroid& parent) {
  std::vector<VertexSet> out;
  for (const VertexSet& vs : face_vertex_sets(parent)) {
    if (vs != parent.bases()) out.push_back(vs);
  }
  return out;
}

bool on_boundary(const VertexSet& vs, const std::vector<VertexSet>& boundary) {
  return std::any_of(boundary.begin(), boundary.end(), [&](const VertexSet& f) { return is_subset(vs, f); });
}

}  // namespace

int polytope_dimension(const Matroid& m) {
  return m.size() - static_cast<int>(m.connected_components().size());
}

Matroid face_in_direction(const Matroid& m, const BraidChain& chain) {
  if (!chain.is_valid(m.size())) {
    throw InvalidParameters("direction " + chain.to_string() + " is not a chain of proper nonempty subsets");
  }
  // Bases of the direct sum are unions of one basis per block.
  VertexSet bases{ElementSet()};
  ElementSet lower;
  for (int j = 0; j <= chain.length(); ++j) {
    const ElementSet upper = j < chain.length() ? chain[j] : m.ground();
    VertexSet next;
    for (ElementSet block : minor_bases_in_place(m, upper, lower)) {
      for (ElementSet b : bases) next.push_back(b | block);
    }
    bases = std::move(next);
    lower = upper;
  }
  return Matroid::from_bases(m.size(), std::move(bases));
}

std::vector<PolytopeFace> all_faces(const Matroid& m) { return faces_from(m, face_vertex_sets(m)); }

SubdivisionReport validate_subdivision(const Subdivision& sub) {
  const Matroid& parent = sub.parent;
  if (sub.cells.empty()) return fail("cells", "subdivision has no cells");
  const int full_dim = polytope_dimension(parent);

  // (a)
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    const Matroid& cell = sub.cells[i];
    const std::string name = "cell " + std::to_string(i);
    if (cell.size() != parent.size() || cell.rank() != parent.rank()) {
      return fail("a", name + " has a different ground set or rank");
    }
    if (!is_subset(cell.bases(), parent.bases())) {
      for (ElementSet b : cell.bases()) {
        if (!std::binary_search(parent.bases().begin(), parent.bases().end(), b)) {
          return fail("a", name + " has vertex " + b.to_string() + " outside the parent polytope");
        }
      }
    }
    if (polytope_dimension(cell) != full_dim) {
      return fail("a", name + " has dimension " + std::to_string(polytope_dimension(cell)) +
                           ", expected " + std::to_string(full_dim));
    }
  }

  // (b)
  std::set<ElementSet> covered;
  for (const Matroid& cell : sub.cells) covered.insert(cell.bases().begin(), cell.bases().end());
  for (ElementSet b : parent.bases()) {
    if (!covered.count(b)) return fail("b", "parent vertex " + b.to_string() + " lies in no cell");
  }
  std::vector<std::set<VertexSet>> cell_faces;
  for (const Matroid& cell : sub.cells) cell_faces.push_back(face_vertex_sets(cell));
  const std::vector<VertexSet> boundary = boundary_faces(parent);
  std::map<VertexSet, int> facet_use;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    for (const VertexSet& vs : cell_faces[i]) {
      if (polytope_dimension(Matroid::from_bases(parent.size(), vs)) == full_dim - 1) ++facet_use[vs];
    }
  }
  for (const auto& [facet, uses] : facet_use) {
    if (uses == 1 && !on_boundary(facet, boundary)) {
      return fail("b", "interior facet " + describe(facet) + " belongs to a single cell");
    }
  }

  // (c)
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.cells.size(); ++j) {
      const VertexSet common = intersect(sub.cells[i].bases(), sub.cells[j].bases());
      if (common.empty()) continue;
      const bool proper_i = common != sub.cells[i].bases() && cell_faces[i].count(common);
      const bool proper_j = common != sub.cells[j].bases() && cell_faces[j].count(common);
      if (!proper_i || !proper_j) {
        return fail("c", "cells " + std::to_string(i) + " and " + std::to_string(j) + " meet in " +
                             describe(common) + ", not a proper face of both");
      }
    }
  }
  return {};
}

std::vector<PolytopeFace> interior_faces(const Subdivision& sub) {
  std::set<VertexSet> all;
  for (const Matroid& cell : sub.cells) {
    const auto faces = face_vertex_sets(cell);
    all.insert(faces.begin(), faces.end());
  }
  const std::vector<VertexSet> boundary = boundary_faces(sub.parent);
  std::set<VertexSet> interior;
  for (const VertexSet& vs : all) {
    if (!on_boundary(vs, boundary)) interior.insert(vs);
  }
  return faces_from(sub.parent, interior);
}

bool check_csm_valuation(const Subdivision& sub, int k) {
  const int full_dim = polytope_dimension(sub.parent);
  const TropicalCycle lhs = csm_cycle(sub.parent, k);
  TropicalCycle rhs(sub.parent.size(), k);
  for (const PolytopeFace& face : interior_faces(sub)) {
    const std::int64_t sign = (full_dim - face.dim) % 2 == 0 ? 1 : -1;
    rhs = rhs + csm_cycle(face.matroid, k) * sign;
  }
  return lhs == rhs;
}

bool check_beta_valuation(const Subdivision& sub) {
  std::int64_t sum = 0;
  for (const PolytopeFace& face : interior_faces(sub)) {
    if (face.dim == sub.parent.size() - 1) sum += beta(face.matroid);
  }
  return beta(sub.parent) == sum;
}

}  // namespace csm
