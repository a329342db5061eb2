#include "csm/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "csm/errors.hpp"

namespace csm {

namespace {

void normalize(std::vector<ElementSet>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

std::vector<int> identity_labels(int size) {
  std::vector<int> labels(size);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

// Renumbers the elements of `kept` to 0, 1, ... in increasing order.
ElementSet compress(ElementSet s, ElementSet kept) {
  std::uint32_t out = 0;
  int next = 0;
  for (int e : kept.elements()) {
    if (s.contains(e)) out |= 1u << next;
    ++next;
  }
  return ElementSet(out);
}

}  // namespace

Matroid::Matroid(int size, std::vector<ElementSet> bases, std::vector<int> labels)
    : size_(size), bases_(std::move(bases)), labels_(std::move(labels)) {
  rank_ = bases_.empty() ? 0 : bases_.front().size();
}

Matroid Matroid::from_bases(int size, std::vector<ElementSet> bases) {
  if (size < 0 || size > kMaxGroundSize) {
    throw InvalidParameters("ground set size " + std::to_string(size) + " out of range [0, " +
                            std::to_string(kMaxGroundSize) + "]");
  }
  if (bases.empty()) throw NotAMatroid("basis collection is empty");
  const ElementSet ground = ElementSet::full(size);
  for (ElementSet b : bases) {
    if (!b.is_subset_of(ground)) {
      throw NotAMatroid("basis " + b.to_string() + " is not contained in the ground set");
    }
  }
  normalize(bases);
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != r) {
      throw NotAMatroid("unequal cardinalities: " + bases.front().to_string() + " and " +
                        b.to_string());
    }
  }
  for (ElementSet a : bases) {
    for (ElementSet b : bases) {
      if (a == b) continue;
      for (int x : (a - b).elements()) {
        bool found = false;
        for (int y : (b - a).elements()) {
          if (std::binary_search(bases.begin(), bases.end(), a.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw NotAMatroid("basis exchange fails for " + a.to_string() + " and " +
                            b.to_string() + " at element " + std::to_string(x));
        }
      }
    }
  }
  return Matroid(size, std::move(bases), identity_labels(size));
}

Matroid Matroid::uniform(int rank, int size) {
  if (size < 0 || size > kMaxGroundSize || rank < 0 || rank > size) {
    throw InvalidParameters("uniform matroid needs 0 <= rank <= size <= " +
                            std::to_string(kMaxGroundSize) + ", got rank " + std::to_string(rank) +
                            " size " + std::to_string(size));
  }
  std::vector<ElementSet> bases;
  for_each_subset(ElementSet::full(size), [&](ElementSet s) {
    if (s.size() == rank) bases.push_back(s);
  });
  normalize(bases);
  return Matroid(size, std::move(bases), identity_labels(size));
}

int Matroid::rank(ElementSet s) const {
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (b & s).size());
  return best;
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

ElementSet Matroid::closure(ElementSet s) const {
  const int r = rank(s);
  ElementSet out = s;
  for (int e = 0; e < size_; ++e) {
    if (!s.contains(e) && rank(s.with(e)) == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::loops() const {
  ElementSet used;
  for (ElementSet b : bases_) used = used | b;
  return ground() - used;
}

ElementSet Matroid::coloops() const {
  ElementSet common = ground();
  for (ElementSet b : bases_) common = common & b;
  return common;
}

std::vector<ElementSet> Matroid::circuits() const {
  std::vector<ElementSet> out;
  for_each_subset(ground(), [&](ElementSet s) {
    if (s.empty() || rank(s) == s.size()) return;
    for (int e : s.elements()) {
      if (rank(s.without(e)) != s.size() - 1) return;
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> Matroid::connected_components() const {
  std::vector<int> parent(size_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits()) {
    const auto elems = c.elements();
    for (std::size_t i = 1; i < elems.size(); ++i) parent[find(elems[i])] = find(elems[0]);
  }
  std::vector<ElementSet> blocks;
  std::vector<int> block_of_root(size_, -1);
  for (int e = 0; e < size_; ++e) {
    const int root = find(e);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[root]] = blocks[block_of_root[root]].with(e);
  }
  return blocks;
}

std::vector<ElementSet> minor_bases_in_place(const Matroid& m, ElementSet keep,
                                             ElementSet contract) {
  const int rank_keep = m.rank(keep);
  const int rank_contract = m.rank(contract);
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    if ((b & keep).size() == rank_keep && (b & contract).size() == rank_contract) {
      out.push_back((b & keep) - contract);
    }
  }
  normalize(out);
  return out;
}

Matroid Matroid::minor(ElementSet keep, ElementSet contract) const {
  if (!keep.is_subset_of(ground()) || !contract.is_subset_of(keep)) {
    throw InvalidParameters("minor needs S ⊆ T ⊆ ground set, got T=" + keep.to_string() +
                            " S=" + contract.to_string());
  }
  const ElementSet remaining = keep - contract;
  std::vector<ElementSet> bases;
  for (ElementSet b : minor_bases_in_place(*this, keep, contract)) {
    bases.push_back(compress(b, remaining));
  }
  normalize(bases);
  std::vector<int> labels;
  for (int e : remaining.elements()) labels.push_back(labels_[e]);
  return Matroid(remaining.size(), std::move(bases), std::move(labels));
}

Matroid Matroid::deletion(int element) const {
  if (element < 0 || element >= size_) throw InvalidParameters("element out of range");
  return minor(ground().without(element), ElementSet());
}

Matroid Matroid::contraction(int element) const {
  if (element < 0 || element >= size_) throw InvalidParameters("element out of range");
  return minor(ground(), ElementSet::single(element));
}

Matroid Matroid::restriction(ElementSet flat) const { return minor(flat, ElementSet()); }

std::string Matroid::to_string() const {
  std::string s = "Matroid(size=" + std::to_string(size_) + ", rank=" + std::to_string(rank_) +
                  ", bases=[";
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) s += ",";
    s += bases_[i].to_string();
  }
  return s + "])";
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  const int shift = first.size();
  if (shift + second.size() > kMaxGroundSize) throw InvalidParameters("direct sum too large");
  std::vector<ElementSet> bases;
  for (ElementSet a : first.bases()) {
    for (ElementSet b : second.bases()) bases.push_back(a | ElementSet(b.bits() << shift));
  }
  return Matroid::from_bases(shift + second.size(), std::move(bases));
}

}  // namespace csm
