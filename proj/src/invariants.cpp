#include "csm/invariants.hpp"

#include <string>

#include "csm/bergman.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"

namespace csm {

namespace {

std::int64_t sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_simple_rank3(const Matroid& m) {
  if (m.rank() != 3) {
    throw UnsupportedFamily("rank-3 formulas need a rank 3 matroid, got rank " + std::to_string(m.rank()));
  }
  if (!is_simple(m)) throw UnsupportedFamily("rank-3 formulas need a simple matroid (no loops or parallel pairs)");
}

}  // namespace

IntPolynomial degree_polynomial_by_intersection(const Matroid& m, const DisplacementOptions& options) {
  if (m.has_loop() || m.rank() == 0) return {};
  std::vector<std::int64_t> coefficients;
  for (int k = 0; k < m.rank(); ++k) coefficients.push_back(degree(csm_cycle(m, k), options));
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial degree_polynomial_by_recursion(const Matroid& m) {
  if (m.has_loop() || m.rank() == 0) return {};
  std::vector<std::int64_t> coefficients;
  for (int k = 0; k < m.rank(); ++k) coefficients.push_back(degree_by_recursion(m, k));
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial csm_degree_polynomial(const Matroid& m, const DisplacementOptions& options) {
  const IntPolynomial by_intersection = degree_polynomial_by_intersection(m, options);
  const IntPolynomial by_recursion = degree_polynomial_by_recursion(m);
  if (by_intersection != by_recursion) {
    throw InternalConsistency("degree polynomial mismatch: intersection gives " + by_intersection.to_string() +
                              ", recursion gives " + by_recursion.to_string());
  }
  return by_intersection;
}

IntPolynomial shifted_reduced_characteristic(const Matroid& m) {
  if (m.has_loop() || m.rank() == 0) return {};
  return reduced_characteristic_polynomial(m).shifted(1);
}

bool check_hvector(const Matroid& m, const DisplacementOptions& options) {
  return csm_degree_polynomial(m, options) == shifted_reduced_characteristic(m);
}

std::int64_t euler_char_complement(const Matroid& m) {
  if (m.has_loop()) throw InvalidParameters("Euler characteristic needs a loopless matroid");
  if (m.rank() == 0) throw InvalidParameters("Euler characteristic needs rank at least 1");
  return sign(m.rank() - 1) * beta(m);
}

IntPolynomial g_polynomial_uniform(int rank, int size) {
  if (rank < 1 || size <= rank) {
    throw InvalidParameters("g-polynomial closed form needs 1 <= rank < size, got U_{" + std::to_string(rank) +
                            "," + std::to_string(size) + "}");
  }
  const int d = rank - 1;
  const int n = size - 1;
  IntPolynomial g;
  for (int k = 0; k <= d; ++k) {
    g = g + IntPolynomial::monomial(binomial(n - k - 1, d - k) * binomial(n - d - 1, k), k + 1);
  }
  return g;
}

std::int64_t csm1_self_intersection_rank3(const Matroid& m) {
  require_simple_rank3(m);
  const std::int64_t n = m.size() - 1;
  std::int64_t value = (n - 2) * (n - 2);
  for (ElementSet line : FlatLattice(m).flats_of_rank(2)) {
    const std::int64_t excess = line.size() - 2;
    value -= excess * excess;
  }
  return value;
}

IntPolynomial g_polynomial_rank3(const Matroid& m) {
  require_simple_rank3(m);
  const std::int64_t b = beta(m);
  const std::int64_t deg1 = degree_by_recursion(m, 1);
  const std::int64_t self = csm1_self_intersection_rank3(m);
  return IntPolynomial({0, b, deg1 + self, 1 + deg1 + self - b});
}

IntPolynomial g_polynomial(const Matroid& m) {
  if (is_uniform(m) && m.rank() >= 1 && m.size() > m.rank()) return g_polynomial_uniform(m.rank(), m.size());
  if (m.rank() == 3 && is_simple(m)) return g_polynomial_rank3(m);
  throw UnsupportedFamily("g-polynomial is only evaluated for uniform and simple rank-3 matroids");
}

bool is_uniform(const Matroid& m) {
  return static_cast<std::int64_t>(m.bases().size()) == binomial(m.size(), m.rank());
}

bool is_simple(const Matroid& m) {
  if (m.has_loop()) return false;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      if (m.rank(ElementSet::of({i, j})) < 2) return false;
    }
  }
  return true;
}

TropicalCycle n_cycles_uniform(int rank, int size, int k) {
  const int d = rank - 1;
  const int n = size - 1;
  if (rank < 1 || size < rank) throw InvalidParameters("n-cycles need 1 <= rank <= size");
  if (k < 0 || k > d) throw InvalidDimension("n-cycle index k = " + std::to_string(k) + " outside [0, " +
                                             std::to_string(d) + "]");
  // n_d is B(M) itself, also for free matroids where C(-1, 0) would vanish.
  const std::int64_t multiplicity = k == 0 ? 1 : binomial(n - d - 1, k);
  return bergman_cycle(Matroid::uniform(d - k + 1, n + 1)) * multiplicity;
}

TropicalCycle n_cycles(const Matroid& m, int k) {
  if (!is_uniform(m)) throw UnsupportedFamily("n-cycles are only available in closed form for uniform matroids");
  return n_cycles_uniform(m.rank(), m.size(), k);
}

bool binomial_identity_holds(int m, int k) {
  std::int64_t sum = 0;
  for (int i = 0; i <= k; ++i) sum += sign(k - i) * binomial(m + k - i, k - i) * binomial(m, i);
  return sum == sign(k);
}

}  // namespace csm
