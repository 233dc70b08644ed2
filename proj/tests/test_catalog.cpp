#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mmlab;

namespace {

Multimatroid golden(const std::string& name) { return load_multimatroid(std::string(MMLAB_GOLDEN_DIR) + "/" + name + ".mm.json"); }

}  // namespace

TEST(Catalog, FixturesMatchHandWrittenGoldens) {
  for (const auto& f : fixtures()) {
    const auto g = golden(f.name);
    EXPECT_TRUE(same_structure(f.build(), g)) << f.name;
  }
}

TEST(Catalog, UnknownFixture) {
  try {
    (void)fixture("S9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Catalog, H33MinusAnyTransversalIsS1OrS3) {
  const auto h = fixture_h33();
  const auto s1 = fixture_s1(), s3 = fixture_s3();
  h.carrier().for_each_transversal([&](ElementSet t) {
    const auto rest = delete_elements(h, t);
    EXPECT_TRUE(isomorphic(rest, s1) || isomorphic(rest, s3));
  });
}

TEST(Catalog, H33CircuitsAreTransversals) {
  for (auto c : circuits(fixture_h33())) EXPECT_EQ(c.size(), 3);
}

TEST(Minors, FindsThemselvesAndRespectsOrder) {
  EXPECT_TRUE(has_minor(fixture_s4(), fixture_s4()).has_value());
  EXPECT_FALSE(has_minor(fixture_s1(), fixture_s4()).has_value());
  const auto w = has_minor(fixture_zu24_3(), fixture_h33());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->x.size(), 1);
  EXPECT_TRUE(isomorphic(minor(fixture_zu24_3(), w->x), fixture_h33()).has_value());
}

TEST(StronglyBinary, IsotropicTwoMatroidsAre) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = mmtest::random_symmetric_gf2(3, rng);
    const Carrier c = Carrier::uniform(3, 2);
    FieldMatrix d(Field::GF2, 3, 6);
    for (int v = 0; v < 3; ++v)
      for (int r = 0; r < 3; ++r) {
        d.set_code(r, c.element(v, 0), r == v ? 1 : 0);
        d.set_code(r, c.element(v, 1), a.code(r, v));
      }
    const auto z = Multimatroid::sheltered(c, d);
    const auto w = is_strongly_binary(z);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_symmetric(w->a));
  }
}

TEST(StronglyBinary, ExcludedFixturesAreNot) {
  for (const char* n : {"S1", "S2", "S3", "S4", "S5"}) EXPECT_FALSE(is_strongly_binary(fixture(n)).has_value()) << n;
}

TEST(StronglyBinary, FiveStatementsAgreeOnSmallInstances) {
  std::vector<Multimatroid> zs = {fixture_s4(), fixture_s5()};
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    zs.push_back(delete_elements(b.z, b.block_transversal(3)));
  }
  for (const auto& z : zs) {
    const bool sb = is_strongly_binary(z).has_value();
    const bool shelter = binary_sheltering(z).has_value();
    const auto prof = skew_pair_profile(z);
    const bool no_minor = z.order() < 4 || (!has_minor(z, fixture_s4()) && !has_minor(z, fixture_s5()));
    EXPECT_EQ(sb, shelter);
    EXPECT_EQ(sb, prof.all_even);
    EXPECT_EQ(sb, prof.no_three);
    EXPECT_EQ(sb, no_minor);
  }
}

TEST(BinarySheltering, FoundMatrixReproducesTheRankFunction) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    const auto z = delete_elements(b.z, b.block_transversal(3));
    const auto m = binary_sheltering(z);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(same_structure(z, Multimatroid::sheltered(z.carrier(), *m)));
  }
}

TEST(Classify, BinaryAndNonBinary) {
  EXPECT_FALSE(classify_binary_tight3(fixture_h33()).binary);
  EXPECT_FALSE(classify_binary_tight3(fixture_zu24_3()).binary);
  for (const auto& g : mmtest::graph_corpus(3)) EXPECT_TRUE(classify_binary_tight3(z_graph(g).z).binary);
  try {
    (void)classify_binary_tight3(fixture_s4());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTriple);
  }
}

TEST(Extension, ExcludedFixturesHaveNone) {
  EXPECT_FALSE(tight_extension_search(fixture_s2()).has_value());
  EXPECT_FALSE(tight_extension_search(fixture_s4()).has_value());
}

TEST(Extension, RecoversTheIsotropicBuild) {
  for (const auto& g : mmtest::graph_corpus(3)) {
    const auto b = z_graph(g);
    const auto ext = tight_extension_search(delete_elements(b.z, b.block_transversal(3)));
    ASSERT_TRUE(ext.has_value());
    EXPECT_TRUE(same_structure(*ext, b.z));
  }
}

TEST(Extension, ZU24ExtendsToZU24_3) {
  // U(2,4) is quaternary, not binary: its extension is the GF(4) build
  const auto ext = tight_extension_search(fixture_zu24());
  ASSERT_TRUE(ext.has_value());
  EXPECT_TRUE(same_structure(*ext, z_quaternary(u24_matroid()).z));
}

TEST(Bases, ClassExtensionCountsAreZeroKMinusOneOrK) {
  std::vector<Multimatroid> zs = {fixture_h33(), fixture_zu24_3()};
  for (const auto& g : mmtest::graph_corpus(3)) zs.push_back(z_graph(g).z);
  for (const auto& z : zs)
    for (auto [count, n] : class_extension_basis_counts(z)) {
      EXPECT_TRUE(count == 0 || count == 2 || count == 3) << count;
      EXPECT_GT(n, 0U);
    }
  EXPECT_EQ(class_extension_basis_counts(fixture_h33()), (std::map<int, std::size_t>{{2, 27}}));
}

TEST(Bases, ParityOverClassUnionsExhaustive) {
  for (const auto& z : {fixture_h33(), z_graph(mmtest::all_graphs(3)[5]).z}) {
    const Carrier& c = z.carrier();
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << c.order()); ++ys) {
      const ElementSet y = c.classes_union(ys);
      for_each_subset(c.ground(), [&](ElementSet x) {
        const auto p = basis_parity(z, x, y);
        // independent recount
        std::size_t b1 = 0, b2 = 0;
        for (auto b : bases(z)) {
          b1 += b.subset_of(x) ? 1 : 0;
          b2 += b.subset_of(x ^ y) ? 1 : 0;
        }
        EXPECT_EQ(p.b1, b1);
        EXPECT_EQ(p.b2, b2);
        EXPECT_EQ(b1 % 2, b2 % 2);
      });
    }
  }
}

TEST(Bases, ParityRejectsNonClassUnion) {
  try {
    (void)basis_parity(fixture_h33(), ElementSet(), ElementSet::of({0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClassUnion);
  }
}

TEST(Bases, ExchangeHolds) {
  EXPECT_TRUE(basis_exchange_holds(fixture_h33()));
  EXPECT_TRUE(basis_exchange_holds(fixture_s5()));
  EXPECT_TRUE(basis_exchange_holds(fixture_s1()));
  for (const auto& g : mmtest::graph_corpus(3)) EXPECT_TRUE(basis_exchange_holds(z_graph(g).z));
  EXPECT_EQ(bases(fixture_h33()).size(), 18U);
}
