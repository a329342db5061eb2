#include <doctest.h>

#include "csm/catalog.hpp"
#include "csm/errors.hpp"
#include "csm/matroid.hpp"
#include "oracles.hpp"

using csm::ElementSet;
using csm::Matroid;

namespace {

std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out;
  for (int m = 0; m <= 5; ++m)
    for (int r = 0; r <= m; ++r) out.push_back(Matroid::uniform(r, m));
  out.push_back(csm::graphic_complete(4));
  out.push_back(csm::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)));
  out.push_back(csm::direct_sum(Matroid::uniform(0, 1), Matroid::uniform(2, 4)));
  for (const Matroid& m : csm::simple_rank3_matroids(6)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("uniform matroids") {
  CHECK(Matroid::uniform(2, 4).bases().size() == 6);
  const Matroid free3 = Matroid::uniform(3, 3);
  REQUIRE(free3.bases().size() == 1);
  CHECK(free3.bases()[0] == ElementSet::of({0, 1, 2}));

  const Matroid zero = Matroid::uniform(0, 2);
  CHECK(zero.rank() == 0);
  CHECK(zero.bases() == std::vector<ElementSet>{ElementSet()});
  CHECK(zero.loops() == ElementSet::of({0, 1}));

  CHECK_THROWS_AS(Matroid::uniform(3, 2), csm::InvalidParameters);
  CHECK_THROWS_AS(Matroid::uniform(-1, 2), csm::InvalidParameters);
}

TEST_CASE("from_bases validates the axioms") {
  CHECK(Matroid::from_bases(3, {ElementSet::of({0, 1}), ElementSet::of({0, 2}), ElementSet::of({1, 2})}) ==
        Matroid::uniform(2, 3));
  CHECK(Matroid::from_bases(2, {ElementSet::of({1}), ElementSet::of({0})}) == Matroid::uniform(1, 2));
  CHECK_THROWS_AS(Matroid::from_bases(3, {ElementSet::of({0, 1}), ElementSet::of({2})}), csm::NotAMatroid);
  CHECK_THROWS_AS(Matroid::from_bases(3, {}), csm::NotAMatroid);
  // {0,1},{2,3} violates exchange: removing 0 from {0,1} cannot be repaired.
  CHECK_THROWS_AS(Matroid::from_bases(4, {ElementSet::of({0, 1}), ElementSet::of({2, 3})}), csm::NotAMatroid);
  CHECK_THROWS_AS(Matroid::from_bases(2, {ElementSet::of({0, 3})}), csm::NotAMatroid);

  try {
    Matroid::from_bases(4, {ElementSet::of({0, 1}), ElementSet::of({2, 3})});
  } catch (const csm::NotAMatroid& e) {
    const std::string what = e.what();
    CHECK(what.find("{0,1}") != std::string::npos);
    CHECK(what.find("{2,3}") != std::string::npos);
  }
}

TEST_CASE("rank and closure") {
  const Matroid u24 = Matroid::uniform(2, 4);
  const Matroid u34 = Matroid::uniform(3, 4);
  CHECK(u24.rank(ElementSet::of({0, 1, 2})) == 2);
  CHECK(u24.rank(ElementSet()) == 0);
  CHECK(u34.rank(ElementSet::of({0})) == 1);

  CHECK(u24.closure(ElementSet::of({0})) == ElementSet::of({0}));
  CHECK(u24.closure(ElementSet::of({0, 1})) == u24.ground());
  CHECK(u34.is_flat(ElementSet::of({0, 1})));
  CHECK_FALSE(u24.is_flat(ElementSet::of({0, 1})));
}

TEST_CASE("rank is submodular and closure is a closure operator") {
  for (const Matroid& m : small_matroids()) {
    CAPTURE(m.to_string());
    csm::for_each_subset(m.ground(), [&](ElementSet a) {
      const ElementSet cl = m.closure(a);
      CHECK(a.is_subset_of(cl));
      CHECK(m.closure(cl) == cl);
      CHECK(m.is_flat(cl));
      CHECK(m.rank(a) == oracle::rank_of(m, a));
      csm::for_each_subset(m.ground(), [&](ElementSet b) {
        CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
      });
    });
  }
}

TEST_CASE("deletion, contraction and minors") {
  const Matroid u34 = Matroid::uniform(3, 4);
  CHECK(u34.deletion(3) == Matroid::uniform(3, 3));
  CHECK(u34.contraction(3) == Matroid::uniform(2, 3));

  // Contracting a loop keeps the rank, deleting a coloop drops it.
  const Matroid with_loop = csm::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(0, 1));
  CHECK(with_loop.contraction(3).rank() == 2);
  const Matroid with_coloop = csm::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 1));
  CHECK(with_coloop.deletion(2).rank() == 1);

  const Matroid k4 = csm::graphic_complete(4);
  const Matroid minor = k4.minor(ElementSet::of({0, 1, 3, 5}), ElementSet::of({0}));
  CHECK(minor.size() == 3);
  CHECK(minor.labels() == std::vector<int>{1, 3, 5});

  CHECK_THROWS_AS(k4.minor(ElementSet::of({0, 1}), ElementSet::of({2})), csm::InvalidParameters);
  CHECK_THROWS_AS(k4.deletion(6), csm::InvalidParameters);
}

TEST_CASE("minor properties") {
  for (const Matroid& m : small_matroids()) {
    CAPTURE(m.to_string());
    // Deletion and contraction of distinct elements commute.
    for (int i = 0; i < m.size(); ++i) {
      for (int j = i + 1; j < m.size(); ++j) {
        // After removing i, element j has index j-1.
        CHECK(m.deletion(i).contraction(j - 1) == m.contraction(j).deletion(i));
        CHECK(m.deletion(i).deletion(j - 1) == m.deletion(j).deletion(i));
        CHECK(m.contraction(i).contraction(j - 1) == m.contraction(j).contraction(i));
      }
    }
    if (m.size() > 4) continue;
    csm::for_each_subset(m.ground(), [&](ElementSet t) {
      csm::for_each_subset(t, [&](ElementSet s) {
        const Matroid minor = m.minor(t, s);
        CHECK(minor.rank() == m.rank(t) - m.rank(s));
        const std::vector<int> kept = (t - s).elements();
        for (int idx = 0; idx < minor.size(); ++idx) {
          const int i = kept[idx];
          CHECK(minor.is_loop(idx) == m.closure(s).contains(i));
          CHECK(minor.is_coloop(idx) == !m.closure(t.without(i)).contains(i));
        }
      });
    });
  }
}

TEST_CASE("a flat minus one element makes that element a coloop") {
  const Matroid k4 = csm::graphic_complete(4);
  csm::for_each_subset(k4.ground(), [&](ElementSet t) {
    for (int i : t.elements()) {
      if (!k4.is_flat(t.without(i))) continue;
      const Matroid minor = k4.minor(t, ElementSet());
      const auto kept = t.elements();
      const int idx = static_cast<int>(std::find(kept.begin(), kept.end(), i) - kept.begin());
      CHECK(minor.is_coloop(idx));
    }
  });
}

TEST_CASE("direct sums and components") {
  const Matroid sum = csm::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
  CHECK(sum.size() == 4);
  CHECK(sum.rank() == 2);
  CHECK(sum.bases().size() == 4);
  CHECK(sum.connected_components().size() == 2);

  const Matroid k4 = csm::graphic_complete(4);
  CHECK(csm::direct_sum(k4, Matroid::uniform(0, 0)) == k4);

  CHECK(Matroid::uniform(3, 3).coloops() == ElementSet::of({0, 1, 2}));
  CHECK(Matroid::uniform(0, 1).loops() == ElementSet::of({0}));
  CHECK(Matroid::uniform(3, 3).connected_components().size() == 3);
}

TEST_CASE("connectivity agrees with the separator characterization") {
  for (const Matroid& m : small_matroids()) {
    if (m.size() == 0) continue;
    CAPTURE(m.to_string());
    CHECK(m.is_connected() == oracle::connected_by_separators(m));
  }
}
