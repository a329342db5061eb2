#include "csm/tropical_cycle.hpp"

#include <algorithm>

#include "csm/errors.hpp"
#include "csm/integer_lattice.hpp"

namespace csm {

bool BraidChain::is_valid(int ambient) const {
  const ElementSet ground = ElementSet::full(ambient);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const ElementSet s = sets_[i];
    if (s.empty() || !s.is_proper_subset_of(ground)) return false;
    if (i > 0 && !sets_[i - 1].is_proper_subset_of(s)) return false;
  }
  return true;
}

bool BraidChain::contains_face(const BraidChain& face) const {
  return std::all_of(face.sets_.begin(), face.sets_.end(), [&](ElementSet s) {
    return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
  });
}

BraidChain BraidChain::without(int index) const {
  std::vector<ElementSet> out = sets_;
  out.erase(out.begin() + index);
  return BraidChain(std::move(out));
}

BraidChain BraidChain::with(ElementSet s) const {
  std::vector<ElementSet> out = sets_;
  auto pos = std::find_if(out.begin(), out.end(), [&](ElementSet t) { return t.size() > s.size(); });
  out.insert(pos, s);
  return BraidChain(std::move(out));
}

std::string BraidChain::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) s += " ⊂ ";
    s += sets_[i].to_string();
  }
  return s + ")";
}

std::vector<std::int64_t> quotient_vector(ElementSet s, int ambient) {
  std::vector<std::int64_t> v(ambient > 0 ? ambient - 1 : 0);
  const std::int64_t base = s.contains(0) ? 1 : 0;
  for (int i = 1; i < ambient; ++i) v[i - 1] = (s.contains(i) ? 1 : 0) - base;
  return v;
}

TropicalCycle::TropicalCycle(int ambient, int dim) : ambient_(ambient), dim_(dim) {
  if (ambient < 0 || ambient > kMaxGroundSize) throw InvalidOperands("ambient size out of range");
  if (dim < 0 || (ambient > 0 && dim > ambient - 1)) {
    throw InvalidDimension("cycle dimension " + std::to_string(dim) + " impossible in R^" +
                           std::to_string(ambient) + "/1");
  }
}

std::int64_t TropicalCycle::weight(const BraidChain& chain) const {
  auto it = weights_.find(chain);
  return it == weights_.end() ? 0 : it->second;
}

void TropicalCycle::add_weight(const BraidChain& chain, std::int64_t w) {
  if (chain.length() != dim_) {
    throw InvalidOperands("chain " + chain.to_string() + " has length " +
                          std::to_string(chain.length()) + ", cycle has dimension " +
                          std::to_string(dim_));
  }
  if (!chain.is_valid(ambient_)) {
    throw InvalidOperands("chain " + chain.to_string() + " is not a braid chain on " +
                          std::to_string(ambient_) + " elements");
  }
  weights_[chain] += w;
}

TropicalCycle TropicalCycle::canonical() const {
  TropicalCycle out(ambient_, dim_);
  for (const auto& [chain, w] : weights_) {
    if (w != 0) out.weights_.emplace(chain, w);
  }
  return out;
}

bool TropicalCycle::is_empty() const { return support_size() == 0; }

std::size_t TropicalCycle::support_size() const {
  return static_cast<std::size_t>(std::count_if(weights_.begin(), weights_.end(),
                                                [](const auto& kv) { return kv.second != 0; }));
}

std::int64_t TropicalCycle::weight_sum() const {
  std::int64_t sum = 0;
  for (const auto& [chain, w] : weights_) sum += w;
  return sum;
}

void TropicalCycle::check_compatible(const TropicalCycle& o) const {
  if (ambient_ != o.ambient_ || dim_ != o.dim_) {
    throw InvalidOperands("cycle mismatch: ambient " + std::to_string(ambient_) + "/" +
                          std::to_string(o.ambient_) + ", dimension " + std::to_string(dim_) +
                          "/" + std::to_string(o.dim_));
  }
}

TropicalCycle TropicalCycle::operator+(const TropicalCycle& o) const {
  check_compatible(o);
  TropicalCycle out = *this;
  for (const auto& [chain, w] : o.weights_) out.weights_[chain] += w;
  return out.canonical();
}

TropicalCycle TropicalCycle::operator-(const TropicalCycle& o) const { return *this + o * -1; }

TropicalCycle TropicalCycle::operator*(std::int64_t c) const {
  TropicalCycle out(ambient_, dim_);
  for (const auto& [chain, w] : weights_) out.weights_.emplace(chain, w * c);
  return out.canonical();
}

bool TropicalCycle::operator==(const TropicalCycle& o) const {
  return ambient_ == o.ambient_ && dim_ == o.dim_ && canonical().weights_ == o.canonical().weights_;
}

std::string TropicalCycle::to_string() const {
  std::string s = "TropicalCycle(ambient=" + std::to_string(ambient_) + ", dim=" + std::to_string(dim_) + ") {";
  bool first = true;
  for (const auto& [chain, w] : weights_) {
    if (w == 0) continue;
    s += first ? " " : ", ";
    s += chain.to_string() + ": " + std::to_string(w);
    first = false;
  }
  return s + " }";
}

TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b) { return a + b; }
TropicalCycle scale(const TropicalCycle& z, std::int64_t c) { return z * c; }
bool equals(const TropicalCycle& a, const TropicalCycle& b) { return a == b; }

BalanceReport check_balanced(const TropicalCycle& z) {
  BalanceReport report;
  if (z.dim() == 0) return report;
  const int n = z.ambient() - 1;

  // Group the support by codimension-one faces.
  std::map<BraidChain, std::vector<std::pair<ElementSet, std::int64_t>>> star;
  for (const auto& [chain, w] : z.weights()) {
    if (w == 0) continue;
    for (int j = 0; j < chain.length(); ++j) star[chain.without(j)].emplace_back(chain[j], w);
  }

  for (const auto& [face, cofacets] : star) {
    ++report.faces_checked;
    std::vector<std::vector<std::int64_t>> face_columns;
    for (ElementSet s : face.sets()) face_columns.push_back(quotient_vector(s, z.ambient()));
    const IntMatrix face_generators = IntMatrix::from_columns(n, face_columns);

    std::vector<std::int64_t> sum(n, 0);
    for (const auto& [extra, w] : cofacets) {
      const auto g = quotient_vector(extra, z.ambient());
      const LatticeNormal normal = lattice_normal(face_generators, g);
      if (normal.multiplicity != 1 || !in_rational_span(face_generators, [&] {
            std::vector<std::int64_t> diff(n);
            for (int i = 0; i < n; ++i) diff[i] = g[i] - normal.vector[i];
            return diff;
          }())) {
        report.normals_match_generators = false;
      }
      for (int i = 0; i < n; ++i) sum[i] += w * normal.vector[i];
    }
    if (!in_rational_span(face_generators, sum)) {
      report.balanced = false;
      if (!report.witness) report.witness = face;
    }
  }
  return report;
}

}  // namespace csm
