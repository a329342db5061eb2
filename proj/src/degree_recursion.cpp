#include <string>

#include "csm/errors.hpp"
#include "csm/intersection.hpp"

namespace csm {

std::int64_t degree_by_recursion(const Matroid& m, int k) {
  if (k < 0) throw InvalidDimension("negative cycle dimension " + std::to_string(k));
  if (m.has_loop()) return 0;
  const int d = m.rank() - 1;
  if (k > d) return 0;

  const ElementSet coloops = m.coloops();
  for (int i = 0; i < m.size(); ++i) {
    if (coloops.contains(i)) continue;
    // Loopless here, so i is neither a loop nor a coloop.
    return degree_by_recursion(m.deletion(i), k) - degree_by_recursion(m.contraction(i), k);
  }
  // Free matroid: only the top cycle (the whole space) survives.
  return k == d ? 1 : 0;
}

}  // namespace csm
