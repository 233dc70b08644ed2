#include <gtest/gtest.h>

#include <unordered_set>

#include "test_support.hpp"

using namespace mmlab;

namespace {

// Z - T tight, straight from the definition via the library's validator
bool orienting_oracle(const Multimatroid& z, ElementSet t) { return is_tight(delete_elements(z, t), false).holds; }

std::vector<ElementSet> ort_oracle(const Multimatroid& z) {
  std::vector<ElementSet> out;
  z.carrier().for_each_transversal([&](ElementSet t) {
    if (orienting_oracle(z, t)) out.push_back(t);
  });
  sort_canonical(out);
  return out;
}

}  // namespace

TEST(Ort, K2HasThreeOrientingTransversals) {
  Graph k2(2);
  k2.add_edge(0, 1);
  const auto b = z_graph(k2);
  EXPECT_EQ(ort(b.z).size(), 3U);
  EXPECT_EQ(q1(b.z).evaluate(BigInt(2)), 12);
}

TEST(Ort, ThreeMethodsAgreeOnSmallGraphs) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    const auto brute = ort(b.z);
    EXPECT_EQ(brute, ort_oracle(b.z));
    EXPECT_EQ(brute, ort_via_eulerian(g));
    EXPECT_EQ(brute, ort_fast(b.z, b.block_transversal(3)));
  }
}

TEST(Ort, ThreadedMatchesSerial) {
  const auto b = z_graph(mmtest::all_graphs(4)[37]);
  EXPECT_EQ(ort(b.z, 3), ort(b.z, 1));
}

TEST(Ort, H33HasNone) { EXPECT_TRUE(ort(fixture_h33()).empty()); }

TEST(Ort, IsOrientingMatchesMembership) {
  for (const auto& z : {fixture_h33(), fixture_zu24_3(), z_graph(mmtest::all_graphs(3)[3]).z}) {
    const auto os = ort(z);
    const std::unordered_set<ElementSet> in(os.begin(), os.end());
    z.carrier().for_each_transversal([&](ElementSet t) { EXPECT_EQ(is_orienting(z, t), in.count(t) > 0); });
  }
}

TEST(Ort, RejectsNonTightAndDegenerate) {
  const auto s1 = fixture_s1();
  try {
    (void)is_orienting(s1, ElementSet::of({0, 2, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTight);
  }
  try {
    (void)ort(Multimatroid::from_circuits(Carrier({1, 2}), {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degenerate);
  }
  try {
    (void)ort_fast(fixture_h33(), ElementSet::of({0, 3, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBinaryTight3);
  }
}

TEST(Ort, FastRejectsNonOrientingStart) {
  Graph k2(2);
  k2.add_edge(0, 1);
  const auto b = z_graph(k2);
  const auto os = ort(b.z);
  const std::unordered_set<ElementSet> in(os.begin(), os.end());
  b.z.carrier().for_each_transversal([&](ElementSet t) {
    if (in.count(t)) {
      EXPECT_EQ(ort_fast(b.z, t), os);
    } else {
      EXPECT_THROW(ort_fast(b.z, t), Error);
    }
  });
}

TEST(Ort, ETSizeIsPowerOfTwoOfNullity) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    b.z.carrier().for_each_transversal([&](ElementSet t) {
      const auto et = e_t(b.z, t);
      EXPECT_EQ(et.size(), std::size_t{1} << b.z.nullity(t));
      for (auto y : et) EXPECT_FALSE(y.intersects(t));
    });
  }
}

// T orienting iff every order-one minor avoiding T has a circuit disjoint from T
TEST(Ort, OrderOneMinorCharacterization) {
  for (const auto& z : {fixture_h33(), fixture_zu24_3(), z_graph(mmtest::all_graphs(3)[7]).z}) {
    const auto os = ort(z);
    const std::unordered_set<ElementSet> in(os.begin(), os.end());
    const Carrier& c = z.carrier();
    z.carrier().for_each_transversal([&](ElementSet t) {
      bool every = true;
      // order-one minors avoiding T: Z|X with X a near-transversal missing T,
      // i.e. X picks one element outside T in every class but one
      for (int skip = 0; skip < c.order(); ++skip) {
        std::vector<std::vector<int>> choice;
        for (int v = 0; v < c.order(); ++v) {
          if (v == skip) continue;
          std::vector<int> opts;
          for (int s = 0; s < c.class_size(v); ++s)
            if (!t.contains(c.element(v, s))) opts.push_back(c.element(v, s));
          choice.push_back(opts);
        }
        std::vector<std::size_t> idx(choice.size(), 0);
        while (true) {
          ElementSet x;
          for (std::size_t i = 0; i < choice.size(); ++i) x.insert(choice[i][idx[i]]);
          const auto m = minor(z, x);
          const ElementSet tm = detail::relabel_into(z, t & c.class_set(skip), m);
          bool found = false;
          for (auto circ : circuits(m)) found = found || !circ.intersects(tm);
          every = every && found;
          std::size_t i = 0;
          while (i < idx.size() && ++idx[i] == choice[i].size()) idx[i++] = 0;
          if (i == idx.size()) break;
        }
      }
      EXPECT_EQ(every, in.count(t) > 0);
    });
  }
}

// when both single-pair swaps at a class lower the nullity, E_T splits disjointly
TEST(Ort, NullityDropSplitsET) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = z_graph(g).z;
    const Carrier& c = z.carrier();
    c.for_each_transversal([&](ElementSet t) {
      for (int v = 0; v < c.order(); ++v) {
        const int here = (t & c.class_set(v)).lowest();
        std::vector<ElementSet> swaps;
        for (int s = 0; s < 3; ++s)
          if (c.element(v, s) != here) swaps.push_back(t.without(here).with(c.element(v, s)));
        if (z.nullity(swaps[0]) >= z.nullity(t) || z.nullity(swaps[1]) >= z.nullity(t)) continue;
        auto et = e_t(z, t);
        auto a = e_t(z, swaps[0]), b = e_t(z, swaps[1]);
        std::vector<ElementSet> un(a);
        un.insert(un.end(), b.begin(), b.end());
        sort_canonical(un);
        EXPECT_EQ(un, et);
        for (auto x : a) EXPECT_EQ(std::count(b.begin(), b.end(), x), 0);
      }
    });
  }
}

// a singular class (one element a loop everywhere) multiplies |Ort| by |class| - 1
TEST(Ort, SingularClassMultipliesCount) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = z_graph(g).z;
    const Carrier c = Carrier::uniform(z.order() + 1, 3);
    std::vector<ElementSet> cs;
    for (auto circ : circuits(z)) {
      ElementSet s;
      circ.for_each([&](int e) { s.insert(c.element(z.carrier().class_of(e), z.carrier().slot_of(e))); });
      cs.push_back(s);
    }
    cs.push_back(ElementSet::of({c.element(z.order(), 0)}));
    const auto big = Multimatroid::from_circuits(c, cs);
    ASSERT_TRUE(is_tight(big).holds);
    EXPECT_EQ(ort(big).size(), 2 * ort(z).size());
  }
}

// binary 3-matroid: tight iff every basis avoids some orienting transversal
TEST(Ort, BinaryTightIffEveryBasisAvoidsAnOrientingSet) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto z = z_graph(g).z;
    const auto os = ort(z);
    for (auto b : bases(z)) {
      bool any = false;
      for (auto y : os) any = any || !y.intersects(b);
      EXPECT_TRUE(any);
    }
  }
  // one class of three equal nonzero columns: no element raises the nullity of
  // the empty set, so not tight, and no transversal leaves a tight remainder
  const Carrier c = Carrier::uniform(1, 3);
  FieldMatrix m(Field::GF2, 1, 3);
  for (int j = 0; j < 3; ++j) m.set_code(0, j, 1);
  const auto z = Multimatroid::sheltered(c, m);
  ASSERT_TRUE(is_multimatroid(z).holds);
  ASSERT_FALSE(is_tight(z).holds);
  bool all = true;
  std::vector<ElementSet> tight_minus;
  c.for_each_transversal([&](ElementSet t) {
    if (orienting_oracle(z, t)) tight_minus.push_back(t);
  });
  for (auto b : bases(z)) {
    bool any = false;
    for (auto y : tight_minus) any = any || !y.intersects(b);
    all = all && any;
  }
  EXPECT_FALSE(all);
}

TEST(Evals, SuitePassesOnSmallGraphs) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    const auto rep = eval_suite(b.z, b.block_transversal(3), 17);
    EXPECT_TRUE(rep.all_pass()) << g.to_text();
    bool saw_odd = false;
    for (const auto& r : rep.records) {
      EXPECT_TRUE(r.pass) << r.name << " " << to_string(r.lhs) << " vs " << to_string(r.rhs);
      if (r.odd_factor) {
        saw_odd = true;
        EXPECT_TRUE(mmtest::is_odd(*r.odd_factor));
      }
    }
    EXPECT_TRUE(saw_odd);
  }
}

TEST(Evals, Q1AtTwoHasNullityTwoAdicValuationOnK2) {
  Graph k2(2);
  k2.add_edge(0, 1);
  const auto b = z_graph(k2);
  const ElementSet t = b.block_transversal(3);
  const BigInt v = q1(delete_elements(b.z, t)).evaluate(BigInt(2));
  BigInt odd;
  EXPECT_EQ(mmtest::two_adic(v, &odd), b.z.nullity(t));
  EXPECT_TRUE(mmtest::is_odd(odd));
}

TEST(Evals, RejectsNonBinary) {
  try {
    (void)eval_suite(fixture_h33(), ElementSet::of({0, 3, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBinaryTight3);
  }
}
