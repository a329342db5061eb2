#include <doctest.h>

#include <cstdlib>

#include "csm/bergman.hpp"
#include "csm/catalog.hpp"
#include "csm/errors.hpp"
#include "csm/flat_lattice.hpp"
#include "csm/intersection.hpp"
#include "csm/tropical_cycle.hpp"
#include "oracles.hpp"

using csm::BraidChain;
using csm::ElementSet;
using csm::Matroid;
using csm::TropicalCycle;

namespace {

BraidChain chain(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> out;
  for (auto s : sets) out.push_back(ElementSet::of(s));
  return BraidChain(out);
}

TropicalCycle rays(int ambient, std::vector<std::int64_t> weights) {
  TropicalCycle z(ambient, 1);
  for (int i = 0; i < ambient; ++i) z.add_weight(chain({{i}}), weights[i]);
  return z;
}

}  // namespace

TEST_CASE("braid chains") {
  CHECK(chain({{0}, {0, 1}}).is_valid(3));
  CHECK_FALSE(chain({{0, 1}, {0}}).is_valid(3));
  CHECK_FALSE(chain({{0}, {0, 1, 2}}).is_valid(3));
  CHECK_FALSE(chain({{}}).is_valid(3));
  CHECK_FALSE(chain({{0}, {1, 2}}).is_valid(4));
  CHECK(chain({{0}, {0, 1}}).contains_face(chain({{0, 1}})));
  CHECK_FALSE(chain({{0}, {0, 1}}).contains_face(chain({{1}})));
  CHECK(chain({{0, 1}}).with(ElementSet::of({0})) == chain({{0}, {0, 1}}));
  CHECK(csm::quotient_vector(ElementSet::of({0, 2}), 4) == std::vector<std::int64_t>{-1, 0, -1});
}

TEST_CASE("cycle arithmetic") {
  const TropicalCycle z = rays(4, {1, 2, 3, 4});
  CHECK((z + z * -1).is_empty());
  CHECK(z - z == TropicalCycle(4, 1));

  TropicalCycle a(4, 1), b(4, 1);
  a.add_weight(chain({{0}}), 1);
  a.add_weight(chain({{1}}), 2);
  b.add_weight(chain({{1}}), 2);
  b.add_weight(chain({{0}}), 1);
  b.add_weight(chain({{2}}), 0);
  CHECK(a == b);
  CHECK(csm::equals(a, b));
  CHECK(b.canonical().weights().size() == 2);
  CHECK(csm::add(a, b) == csm::scale(a, 2));

  CHECK_THROWS_AS(a + TropicalCycle(3, 1), csm::InvalidOperands);
  CHECK_THROWS_AS(a + TropicalCycle(4, 2), csm::InvalidOperands);
  CHECK_THROWS_AS(a.add_weight(chain({{0}, {0, 1}}), 1), csm::InvalidOperands);
  CHECK_THROWS_AS(a.add_weight(chain({{0, 1, 2, 3}}), 1), csm::InvalidOperands);
  CHECK_THROWS_AS(TropicalCycle(4, 4), csm::InvalidDimension);
}

TEST_CASE("balancing") {
  CHECK(csm::is_balanced(rays(4, {1, 1, 1, 1})));
  CHECK(csm::is_balanced(rays(4, {-1, -1, -1, -1})));
  const csm::BalanceReport bad = csm::check_balanced(rays(4, {1, 1, 1, 2}));
  CHECK_FALSE(bad.balanced);
  REQUIRE(bad.witness);
  CHECK(bad.witness->empty());

  // A single cone of the plane is never balanced.
  TropicalCycle one(4, 2);
  one.add_weight(chain({{0}, {0, 1}}), 1);
  CHECK_FALSE(csm::is_balanced(one));

  CHECK(csm::is_balanced(TropicalCycle(4, 0)));
}

TEST_CASE("standard hyperplane") {
  const TropicalCycle h3 = csm::standard_hyperplane(3);
  CHECK(h3 == rays(3, {1, 1, 1}));
  const TropicalCycle h4 = csm::standard_hyperplane(4);
  CHECK(h4.dim() == 2);
  CHECK(h4.support_size() == 12);
  CHECK(csm::is_balanced(h4));
  CHECK(h4 == csm::bergman_cycle(Matroid::uniform(3, 4)));
  CHECK_THROWS_AS(csm::standard_hyperplane(1), csm::InvalidParameters);
}

TEST_CASE("stable intersections") {
  const TropicalCycle line = csm::bergman_cycle(Matroid::uniform(2, 3));
  const TropicalCycle point = csm::stable_intersect(line, line);
  CHECK(point.dim() == 0);
  CHECK(point.weight(BraidChain()) == 1);
  CHECK(point.support_size() == 1);

  const TropicalCycle plane = csm::bergman_cycle(Matroid::uniform(3, 4));
  CHECK(csm::stable_intersect(plane, plane) == csm::bergman_cycle(Matroid::uniform(2, 4)));

  CHECK(csm::stable_intersect(plane, TropicalCycle(4, 2)).is_empty());
  const TropicalCycle too_small = csm::stable_intersect(line, TropicalCycle(3, 0));
  CHECK(too_small.is_empty());
  CHECK(too_small.dim() == 0);
  CHECK_THROWS_AS(csm::stable_intersect(line, plane), csm::InvalidOperands);
}

TEST_CASE("generic uniform linear spaces intersect to uniform linear spaces") {
  // B(U_{a,m}) · B(U_{b,m}) = B(U_{a+b-m,m}) whenever a + b - m >= 1.
  for (int m = 3; m <= 6; ++m) {
    for (int a = 2; a <= m; ++a) {
      for (int b = a; b <= m; ++b) {
        if (a + b - m < 1) continue;
        CAPTURE(m);
        CAPTURE(a);
        CAPTURE(b);
        const TropicalCycle za = csm::bergman_cycle(Matroid::uniform(a, m));
        const TropicalCycle zb = csm::bergman_cycle(Matroid::uniform(b, m));
        const TropicalCycle product = csm::stable_intersect(za, zb);
        CHECK(product == oracle::graded_chains(m, a + b - m - 1, 1));
        CHECK(product == csm::stable_intersect(zb, za));
      }
    }
  }
}

TEST_CASE("stable intersection is symmetric and bilinear on CSM cycles") {
  const Matroid k4 = csm::graphic_complete(4);
  const TropicalCycle h = csm::standard_hyperplane(6);
  for (int k = 0; k < 3; ++k) {
    const TropicalCycle z = csm::csm_cycle(k4, k);
    CHECK(csm::stable_intersect(z, h) == csm::stable_intersect(h, z));
  }
  const TropicalCycle a = csm::csm_cycle(k4, 2);
  const TropicalCycle b = csm::bergman_cycle(Matroid::uniform(3, 6));
  CHECK(csm::stable_intersect(a + b * 2, h) == csm::stable_intersect(a, h) + csm::stable_intersect(b, h) * 2);
}

TEST_CASE("degrees") {
  CHECK(csm::degree(csm::csm_cycle(Matroid::uniform(3, 4), 1)) == -1);
  CHECK(csm::degree(csm::bergman_cycle(csm::fano())) == 1);
  CHECK(csm::degree(csm::bergman_cycle(csm::graphic_complete(4))) == 1);
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d < n; ++d) {
      for (int k = 0; k <= d; ++k) {
        const std::int64_t expected = ((d - k) % 2 == 0 ? 1 : -1) * csm::binomial(n - k - 1, d - k);
        CHECK(csm::degree(csm::csm_cycle(Matroid::uniform(d + 1, n + 1), k)) == expected);
      }
    }
  }
  const TropicalCycle z1 = csm::csm_cycle(csm::fano(), 1);
  const TropicalCycle z2 = csm::bergman_cycle(Matroid::uniform(2, 7));
  CHECK(csm::degree(z1 + z2) == csm::degree(z1) + csm::degree(z2));
  CHECK(csm::degree(csm::csm_cycle(csm::fano(), 0)) == csm::beta(csm::fano()));
}

TEST_CASE("degree by recursion") {
  CHECK(csm::degree_by_recursion(Matroid::uniform(3, 4), 1) == -1);
  CHECK(csm::degree_by_recursion(Matroid::uniform(2, 4), 0) == -2);
  CHECK(csm::degree_by_recursion(Matroid::uniform(3, 3), 2) == 1);
  CHECK(csm::degree_by_recursion(Matroid::uniform(3, 3), 1) == 0);
  CHECK(csm::degree_by_recursion(Matroid::uniform(3, 4), 5) == 0);
  CHECK(csm::degree_by_recursion(csm::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(0, 1)), 0) == 0);
  CHECK_THROWS_AS(csm::degree_by_recursion(Matroid::uniform(3, 4), -1), csm::InvalidDimension);
}

TEST_CASE("displacement parameter") {
  const TropicalCycle plane = csm::bergman_cycle(Matroid::uniform(3, 4));
  csm::DisplacementOptions other;
  other.t = 17;
  CHECK(csm::stable_intersect(plane, plane, other) == csm::stable_intersect(plane, plane));
  CHECK(csm::DisplacementOptions::default_t() == 1000003);

  setenv("MATROID_CSM_SEED_T", "101", 1);
  CHECK(csm::DisplacementOptions::default_t() == 101);
  CHECK(csm::degree(csm::csm_cycle(Matroid::uniform(3, 5), 1)) == -2);
  setenv("MATROID_CSM_SEED_T", "1", 1);
  CHECK_THROWS_AS(csm::DisplacementOptions::default_t(), csm::InvalidParameters);
  setenv("MATROID_CSM_SEED_T", "abc", 1);
  CHECK_THROWS_AS(csm::DisplacementOptions::default_t(), csm::InvalidParameters);
  unsetenv("MATROID_CSM_SEED_T");
}

TEST_CASE("a degenerate displacement is retried and eventually reported") {
  // With t = 1 the displacement vector is zero, so every transversal pair
  // sees it on a boundary; squaring never moves t.
  const TropicalCycle line = csm::bergman_cycle(Matroid::uniform(2, 3));
  csm::DisplacementOptions stuck;
  stuck.t = 1;
  CHECK_THROWS_AS(csm::stable_intersect(line, line, stuck), csm::GenericVectorExhausted);
  stuck.max_retries = 0;
  CHECK_THROWS_AS(csm::stable_intersect(line, line, stuck), csm::GenericVectorExhausted);
}

TEST_CASE("pushforward forgetting a coordinate") {
  const TropicalCycle z = csm::csm_cycle(Matroid::uniform(3, 4), 1);
  CHECK(csm::pushforward_forget(z, 3) == rays(3, {-1, -1, -1}));
  CHECK(csm::pushforward_forget(TropicalCycle(4, 1), 2).is_empty());

  // Forgetting element 0 renumbers the rest.
  TropicalCycle c(4, 2);
  c.add_weight(chain({{0, 2}, {0, 2, 3}}), 5);
  TropicalCycle expected(3, 2);
  expected.add_weight(chain({{1}, {1, 2}}), 5);
  CHECK(csm::pushforward_forget(c, 0) == expected);

  CHECK_THROWS_AS(csm::pushforward_forget(z, 4), csm::InvalidParameters);
  CHECK_THROWS_AS(csm::pushforward_forget(csm::bergman_cycle(Matroid::uniform(3, 3)), 0), csm::InvalidDimension);
}
