#include <doctest.h>

#include "csm/catalog.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"
#include "oracles.hpp"

using csm::ElementSet;
using csm::FlatLattice;
using csm::IntPolynomial;
using csm::Matroid;

TEST_CASE("flats of U_{3,4}") {
  const FlatLattice lattice(Matroid::uniform(3, 4));
  CHECK(lattice.flats().size() == 1 + 4 + 6 + 1);
  CHECK(lattice.flats_of_rank(1).size() == 4);
  CHECK(lattice.flats_of_rank(2).size() == 6);
  CHECK(lattice.bottom() == ElementSet());
  CHECK(lattice.top() == ElementSet::full(4));
  for (ElementSet f : lattice.flats()) {
    if (f != lattice.top()) CHECK(lattice.mobius_from_bottom(f) == (f.size() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("bottom flat of a matroid with a loop") {
  const Matroid m = csm::direct_sum(Matroid::uniform(0, 1), Matroid::uniform(2, 3));
  const FlatLattice lattice(m);
  CHECK_FALSE(lattice.contains(ElementSet()));
  CHECK(lattice.bottom() == ElementSet::of({0}));
}

TEST_CASE("mobius values") {
  const FlatLattice lattice(Matroid::uniform(2, 3));
  const ElementSet a = ElementSet::of({0});
  CHECK(lattice.mobius(a, a) == 1);
  CHECK(lattice.mobius(lattice.top(), a) == 0);
  CHECK(lattice.mobius(ElementSet(), lattice.top()) == 2);
  CHECK_THROWS_AS(lattice.mobius(ElementSet::of({0, 1}), lattice.top()), csm::InvalidFlat);
  CHECK_THROWS_AS(lattice.rank_of(ElementSet::of({0, 1})), csm::InvalidFlat);
}

TEST_CASE("lattice invariants on the catalog") {
  for (const auto& [name, m] : csm::catalog(6, 6)) {
    CAPTURE(name);
    const FlatLattice lattice(m);
    std::int64_t sum = 0;
    for (ElementSet f : lattice.flats()) sum += lattice.mobius_from_bottom(f);
    if (m.rank() >= 1) CHECK(sum == 0);
    CHECK(lattice.contains(m.ground()));
    // Graded: every flat covering F has rank r(F) + 1.
    for (ElementSet f : lattice.flats()) {
      for (ElementSet g : lattice.flats()) {
        if (!f.is_proper_subset_of(g)) continue;
        bool covers = true;
        for (ElementSet h : lattice.flats()) {
          if (f.is_proper_subset_of(h) && h.is_proper_subset_of(g)) covers = false;
        }
        if (covers) CHECK(lattice.rank_of(g) == lattice.rank_of(f) + 1);
      }
    }
  }
}

TEST_CASE("characteristic polynomials") {
  // χ̄ of U_{d+1,n+1} is Σ (-1)^i C(n,i) λ^(d-i).
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d < n; ++d) {
      std::vector<std::int64_t> c(d + 1, 0);
      for (int i = 0; i <= d; ++i) c[d - i] = (i % 2 == 0 ? 1 : -1) * csm::binomial(n, i);
      CHECK(csm::reduced_characteristic_polynomial(Matroid::uniform(d + 1, n + 1)) == IntPolynomial(c));
    }
  }
  CHECK(csm::reduced_characteristic_polynomial(Matroid::uniform(3, 4)) == IntPolynomial({3, -3, 1}));
  CHECK(csm::reduced_characteristic_polynomial(Matroid::uniform(1, 1)) == IntPolynomial({1}));
  CHECK(csm::characteristic_polynomial(Matroid::uniform(3, 4)) == IntPolynomial({-3, 6, -4, 1}));

  const Matroid looped = csm::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(0, 1));
  CHECK(csm::characteristic_polynomial(looped).is_zero());
  CHECK(csm::reduced_characteristic_polynomial(looped).is_zero());
}

TEST_CASE("characteristic polynomial matches the subset expansion") {
  for (const auto& [name, m] : csm::catalog(7, 6)) {
    CAPTURE(name);
    const IntPolynomial chi = csm::characteristic_polynomial(m);
    CHECK(chi == oracle::whitney_characteristic(m));
    if (!m.has_loop()) {
      std::int64_t remainder = -1;
      chi.divide_by_x_minus_one(remainder);
      CHECK(remainder == 0);
    }
  }
}

TEST_CASE("beta invariant") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d < n; ++d) CHECK(csm::beta(Matroid::uniform(d + 1, n + 1)) == csm::binomial(n - 1, d));
  }
  CHECK(csm::beta(Matroid::uniform(2, 4)) == 2);
  CHECK(csm::beta(csm::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2))) == 0);
  CHECK(csm::beta(Matroid::uniform(1, 1)) == 1);
  CHECK(csm::beta(Matroid::uniform(0, 1)) == 0);
  CHECK(csm::beta(Matroid::uniform(0, 0)) == 0);

  // Seven lines of three points: χ = λ³ - 7λ² + 14λ - 8, so β = 3.
  CHECK(csm::characteristic_polynomial(csm::fano()) == IntPolynomial({-8, 14, -7, 1}));
  CHECK(csm::beta(csm::fano()) == 3);
  CHECK(oracle::beta_by_derivative(csm::fano()) == 3);
}

TEST_CASE("beta properties on the catalog") {
  for (const auto& [name, m] : csm::catalog(7, 6)) {
    CAPTURE(name);
    const std::int64_t b = csm::beta(m);
    CHECK(b >= 0);
    CHECK(b == csm::beta_from_mobius(m));
    CHECK(b == csm::beta_from_reduced_characteristic(m));
    CHECK(b == oracle::beta_by_derivative(m));
    const bool single_loop = m.size() == 1 && m.rank() == 0;
    CHECK((b == 0) == (!m.is_connected() || single_loop));
  }
}

TEST_CASE("reduced characteristic polynomial satisfies deletion-contraction") {
  for (const auto& [name, m] : csm::catalog(6, 6)) {
    if (m.has_loop()) continue;
    const csm::ElementSet coloops = m.coloops();
    for (int i = 0; i < m.size(); ++i) {
      if (coloops.contains(i)) continue;
      CAPTURE(name);
      CAPTURE(i);
      CHECK(csm::reduced_characteristic_polynomial(m) ==
            csm::reduced_characteristic_polynomial(m.deletion(i)) -
                csm::reduced_characteristic_polynomial(m.contraction(i)));
    }
  }
}
