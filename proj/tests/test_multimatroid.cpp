#include <gtest/gtest.h>

#include <unordered_set>

#include "test_support.hpp"

using namespace mmlab;

namespace {

Multimatroid zg(const Graph& g) { return z_graph(g).z; }

// number of classes in which s holds two or more elements
int skew_pairs_in(const Carrier& c, ElementSet s) {
  int n = 0;
  for (int v = 0; v < c.order(); ++v) n += (s & c.class_set(v)).size() >= 2 ? 1 : 0;
  return n;
}

}  // namespace

TEST(Carrier, Indexing) {
  const Carrier c({2, 3, 1});
  EXPECT_EQ(c.size(), 6);
  EXPECT_EQ(c.element(1, 2), 4);
  EXPECT_EQ(c.class_of(4), 1);
  EXPECT_EQ(c.slot_of(4), 2);
  EXPECT_FALSE(c.nondegenerate());
  EXPECT_FALSE(c.uniform_k().has_value());
  EXPECT_EQ(c.transversal_count(), 6U);
  std::size_t n = 0;
  c.for_each_transversal([&](ElementSet t) {
    EXPECT_TRUE(c.is_transversal(t));
    ++n;
  });
  EXPECT_EQ(n, 6U);
  std::size_t subs = 0;
  c.for_each_subtransversal([&](ElementSet s) {
    EXPECT_TRUE(c.is_subtransversal(s));
    ++subs;
  });
  EXPECT_EQ(subs, 3U * 4U * 2U);
}

TEST(Carrier, SubtransversalSumMatchesDefinition) {
  const Carrier c = Carrier::uniform(3, 3);
  std::vector<ElementSet> subs;
  c.for_each_subtransversal([&](ElementSet s) { subs.push_back(s); });
  for (auto x : subs)
    for (auto y : subs) {
      const ElementSet d = x ^ y;
      ElementSet expect = d;
      for (int v = 0; v < 3; ++v)
        if ((d & c.class_set(v)).size() == 2) expect ^= c.class_set(v);
      EXPECT_EQ(sum_subtransversals(c, x, y), expect);
      EXPECT_TRUE(c.is_subtransversal(expect));
    }
}

TEST(Fixtures, ValidateAndTightness) {
  for (const auto& f : fixtures()) {
    const auto z = f.build();
    EXPECT_TRUE(is_multimatroid(z).holds) << f.name;
  }
  EXPECT_FALSE(is_tight(fixture_s1()).holds);
  EXPECT_FALSE(is_tight(fixture_s2()).holds);
  EXPECT_FALSE(is_tight(fixture_s3()).holds);
  EXPECT_TRUE(is_tight(fixture_s4()).holds);
  EXPECT_TRUE(is_tight(fixture_s5()).holds);
  EXPECT_TRUE(is_tight(fixture_h33()).holds);
}

TEST(Fixtures, S5IsZU24) {
  EXPECT_TRUE(isomorphic(fixture_s5(), fixture_zu24()).has_value());
  EXPECT_FALSE(isomorphic(fixture_s1(), fixture_s3()).has_value());
  EXPECT_TRUE(isomorphic(fixture_s1(), fixture_s1()).has_value());
}

TEST(Multimatroid, CircuitAndShelteredRealizationsAgree) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = zg(g);
    const auto back = Multimatroid::from_circuits(z.carrier(), circuits(z));
    EXPECT_TRUE(same_structure(z, back));
  }
}

TEST(Multimatroid, ZGRankMatchesExplicitMatrix) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = zg(g);
    z.carrier().for_each_subtransversal([&](ElementSet s) { EXPECT_EQ(z.nullity(s), mmtest::zg_nullity_oracle(g, s)); });
  }
}

TEST(Multimatroid, ZGIsTightForEveryLooplessGraph) {
  for (const auto& g : mmtest::graph_corpus(4)) EXPECT_TRUE(is_tight(zg(g)).holds) << g.to_text();
}

TEST(Multimatroid, TightnessSurvivesMinors) {
  std::vector<Multimatroid> tight = {fixture_s4(), fixture_s5(), fixture_h33(), zg(mmtest::all_graphs(3)[5])};
  for (const auto& z : tight)
    z.carrier().for_each_subtransversal([&](ElementSet x) {
      if (x.size() > 2) return;
      EXPECT_TRUE(is_tight(minor(z, x), false).holds);
    });
}

TEST(Multimatroid, MinorRankFormula) {
  const auto z = fixture_h33();
  const ElementSet x = ElementSet::of({z.carrier().element(0, 1)});
  const auto m = minor(z, x);
  ASSERT_EQ(m.order(), 2);
  m.carrier().for_each_subtransversal([&](ElementSet s) {
    const ElementSet lifted = detail::relabel_into(m, s, z);
    EXPECT_EQ(m.rank(s), z.rank(lifted | x) - z.rank(x));
  });
}

TEST(FreeSum, ZMHasTheBasisCountOfM) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid m = Matroid::represented(mmtest::random_standard_form(Field::GF2, 2, 4, rng));
    const auto z = z_matroid(m);
    EXPECT_EQ(bases(z).size(), bases(m).size());
    EXPECT_TRUE(is_tight(z).holds);
  }
  EXPECT_EQ(bases(fixture_zu24()).size(), 6U);
}

TEST(FreeSum, TwoCopiesOfU12AreOrthogonal) {
  // U(1,2) is its own dual, so this pair is Z_{U(1,2)} and does form a multimatroid
  const Matroid u = Matroid::uniform(1, 2);
  EXPECT_TRUE(orthogonal(u, u));
  EXPECT_TRUE(is_multimatroid(free_sum({u, u})).holds);
}

TEST(FreeSum, NonOrthogonalPairIsNotAMultimatroid) {
  const Matroid u = Matroid::uniform(1, 3);
  EXPECT_FALSE(orthogonal(u, u));
  EXPECT_FALSE(is_multimatroid(free_sum({u, u})).holds);
}

TEST(FreeSum, DeletionThroughTheFirstTransversal) {
  // Z_M | u for u in the M* slot is Z_{M \ u}
  const Matroid m = Matroid::represented(FieldMatrix::parse_gfmat("field 2\n2 4\n1 0 1 1\n0 1 0 1\n"));
  const auto z = z_matroid(m);
  for (int v = 0; v < m.size(); ++v) {
    const auto lhs = minor(z, ElementSet::of({z.carrier().element(v, 0)}));
    const auto rhs = z_matroid(minor(m, {}, ElementSet::of({v})));
    ASSERT_EQ(lhs.order(), rhs.order());
    lhs.carrier().for_each_transversal([&](ElementSet t) {
      ElementSet mapped;
      t.for_each([&](int e) {
        const ElementLabel l = lhs.label(e);
        mapped.insert(rhs.carrier().element(l.cls - (l.cls > v ? 1 : 0), l.slot));
      });
      EXPECT_EQ(lhs.nullity(t), rhs.nullity(mapped));
    });
  }
}

TEST(BinaryTight3, CircuitUnionsHaveEvenSkewPairs) {
  for (const auto& g : mmtest::graph_corpus(4)) {
    const auto z = zg(g);
    const auto cs = circuits(z);
    for (auto a : cs)
      for (auto b : cs) EXPECT_EQ(skew_pairs_in(z.carrier(), a | b) % 2, 0);
  }
}

TEST(BinaryTight3, CycleSpaceClosedUnderSum) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = zg(g);
    const auto cs = cycle_space_mm(z);
    const std::unordered_set<ElementSet> in(cs.begin(), cs.end());
    for (auto a : cs)
      for (auto b : cs) EXPECT_TRUE(in.count(sum_subtransversals(z.carrier(), a, b)));
  }
}

TEST(BinaryTight3, CycleSpaceOfZGMinusBlockThreeCountsEulerianSets) {
  for (const auto& g : mmtest::graph_corpus(4)) {
    const auto b = z_graph(g);
    const auto rest = delete_elements(b.z, b.block_transversal(3));
    std::size_t eul = 0;
    for_each_subset(g.vertices(), [&](ElementSet x) { eul += mmtest::is_eulerian_set(g, x) ? 1 : 0; });
    EXPECT_EQ(cycle_space_mm(rest).size(), eul);
  }
}

TEST(Multimatroid, BoundsAreHardErrors) {
  const Carrier c = Carrier::uniform(limits().max_order + 1, 2);
  const auto z = Multimatroid::from_circuits(c, {});
  try {
    (void)circuits(z);
    FAIL() << "no bound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}
