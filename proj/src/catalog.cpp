#include "csm/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "csm/errors.hpp"

namespace csm {

namespace {

std::vector<ElementSet> bases_avoiding_lines(int size, const std::vector<ElementSet>& lines) {
  std::vector<ElementSet> bases;
  for_each_subset(ElementSet::full(size), [&](ElementSet s) {
    if (s.size() != 3) return;
    for (ElementSet line : lines) {
      if (s.is_subset_of(line)) return;
    }
    bases.push_back(s);
  });
  return bases;
}

ElementSet permute(ElementSet s, const std::vector<int>& perm) {
  ElementSet out;
  for (int e : s.elements()) out = out.with(perm[e]);
  return out;
}

// Lexicographically smallest sorted basis list over all relabelings.
std::vector<ElementSet> canonical_bases(const Matroid& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElementSet> best;
  do {
    std::vector<ElementSet> image;
    for (ElementSet b : m.bases()) image.push_back(permute(b, perm));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Matroid graphic_complete(int vertices) {
  if (vertices < 1) throw InvalidParameters("K_n needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  }
  const int m = static_cast<int>(edges.size());
  if (m > kMaxGroundSize) throw InvalidParameters("K_n has too many edges");
  std::vector<ElementSet> bases;
  for_each_subset(ElementSet::full(m), [&](ElementSet s) {
    if (s.size() != vertices - 1) return;
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : s.elements()) {
      const int a = find(edges[e].first);
      const int b = find(edges[e].second);
      if (a == b) return;
      parent[a] = b;
    }
    bases.push_back(s);
  });
  return Matroid::from_bases(m, std::move(bases));
}

Matroid fano() {
  std::vector<ElementSet> lines;
  for (int i = 0; i < 7; ++i) lines.push_back(ElementSet::of({i, (i + 1) % 7, (i + 3) % 7}));
  return Matroid::from_bases(7, bases_avoiding_lines(7, lines));
}

Matroid non_fano() {
  std::vector<ElementSet> lines;
  for (int i = 0; i < 6; ++i) lines.push_back(ElementSet::of({i, (i + 1) % 7, (i + 3) % 7}));
  return Matroid::from_bases(7, bases_avoiding_lines(7, lines));
}

std::vector<Matroid> simple_rank3_matroids(int size) {
  if (size < 3) return {};
  if (size > 8) throw InvalidParameters("simple rank-3 enumeration is limited to 8 elements");
  const ElementSet ground = ElementSet::full(size);
  std::vector<ElementSet> candidates;
  for_each_subset(ground, [&](ElementSet s) {
    if (s.size() >= 3 && s != ground) candidates.push_back(s);
  });

  // Families of lines meeting pairwise in at most one point.
  std::set<std::vector<ElementSet>> seen;
  std::vector<Matroid> out;
  std::vector<ElementSet> chosen;
  auto search = [&](auto&& self, std::size_t from) -> void {
    Matroid m = Matroid::from_bases(size, bases_avoiding_lines(size, chosen));
    std::vector<ElementSet> key = canonical_bases(m);
    if (seen.insert(key).second) out.push_back(Matroid::from_bases(size, std::move(key)));
    for (std::size_t j = from; j < candidates.size(); ++j) {
      const bool compatible = std::all_of(chosen.begin(), chosen.end(),
                                          [&](ElementSet line) { return (line & candidates[j]).size() <= 1; });
      if (!compatible) continue;
      chosen.push_back(candidates[j]);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

std::vector<NamedMatroid> catalog(int max_uniform_size, int max_rank3_size) {
  std::vector<NamedMatroid> out;
  for (int m = 1; m <= max_uniform_size; ++m) {
    for (int r = 1; r <= m; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(m), Matroid::uniform(r, m)});
    }
  }
  out.push_back({"K4", graphic_complete(4)});
  out.push_back({"fano", fano()});
  out.push_back({"nonfano", non_fano()});
  for (int size = 3; size <= max_rank3_size; ++size) {
    int index = 0;
    for (Matroid& m : simple_rank3_matroids(size)) {
      out.push_back({"rank3-" + std::to_string(size) + "-" + std::to_string(index++), std::move(m)});
    }
  }
  return out;
}

std::vector<NamedSubdivision> octahedron_splits() {
  const Matroid parent = Matroid::uniform(2, 4);
  auto all_pairs_except = [&](ElementSet pair) {
    std::vector<ElementSet> bases;
    for (ElementSet b : parent.bases()) {
      if (b != pair) bases.push_back(b);
    }
    return Matroid::from_bases(4, std::move(bases));
  };
  std::vector<NamedSubdivision> out;
  for (int partner : {1, 2, 3}) {
    const ElementSet first = ElementSet::of({0, partner});
    const ElementSet second = ElementSet::full(4) - first;
    const std::vector<int> a = first.elements();
    const std::vector<int> b = second.elements();
    const std::string name = std::to_string(a[0]) + std::to_string(a[1]) + "|" + std::to_string(b[0]) +
                             std::to_string(b[1]);
    out.push_back({name, Subdivision{parent, {all_pairs_except(second), all_pairs_except(first)}}});
  }
  return out;
}

}  // namespace csm
