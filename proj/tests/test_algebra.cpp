#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace mmlab;
using mmtest::brute_rank;

namespace {

const std::vector<FieldScalar> kGF4 = {{Field::GF4, 0}, {Field::GF4, 1}, {Field::GF4, 2}, {Field::GF4, 3}};

}  // namespace

TEST(Gf4, FieldAxiomsExhaustive) {
  const FieldScalar zero = FieldScalar::zero(Field::GF4), one = FieldScalar::one(Field::GF4);
  for (auto x : kGF4) {
    EXPECT_EQ(x + zero, x);
    EXPECT_EQ(x * one, x);
    EXPECT_EQ(x + x, zero);  // characteristic 2
    if (!x.is_zero()) {
      bool has_inverse = false;
      for (auto y : kGF4) has_inverse = has_inverse || x * y == one;
      EXPECT_TRUE(has_inverse);
    }
    for (auto y : kGF4) {
      EXPECT_EQ(x * y, y * x);
      for (auto z : kGF4) {
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(Gf4, NamedElementsSatisfyMinimalPolynomial) {
  const auto a = FieldScalar::parse(Field::GF4, "a"), b = FieldScalar::parse(Field::GF4, "b");
  const auto one = FieldScalar::one(Field::GF4);
  EXPECT_EQ(a * a, b);
  EXPECT_EQ(a * a + a + one, FieldScalar::zero(Field::GF4));
  EXPECT_EQ(a + one, b);
}

TEST(Gf4, ConjugationIsAnInvolutiveAutomorphism) {
  for (auto x : kGF4) {
    EXPECT_EQ(inv_automorphism(inv_automorphism(x)), x);
    EXPECT_EQ(inv_automorphism(x), x * x);  // Frobenius
    for (auto y : kGF4) {
      EXPECT_EQ(inv_automorphism(x + y), inv_automorphism(x) + inv_automorphism(y));
      EXPECT_EQ(inv_automorphism(x * y), inv_automorphism(x) * inv_automorphism(y));
    }
  }
  EXPECT_EQ(inv_automorphism(FieldScalar::one(Field::GF2)), FieldScalar::one(Field::GF2));
}

TEST(Gf4, FieldArithDispatchAndMismatch) {
  const auto a = FieldScalar::parse(Field::GF4, "a");
  EXPECT_EQ(field_arith(FieldOp::Mul, a, a), FieldScalar::parse(Field::GF4, "b"));
  EXPECT_EQ(field_arith(FieldOp::InvAutomorphism, a), FieldScalar::parse(Field::GF4, "b"));
  try {
    (void)(a + FieldScalar::one(Field::GF2));
    FAIL() << "mixed fields accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW(FieldScalar::parse(Field::GF2, "a"), Error);
}

TEST(FieldMatrix, RankMatchesSpanCountingOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  for (Field f : {Field::GF2, Field::GF4}) {
    std::uniform_int_distribution<int> sym(0, field_order(f) - 1);
    for (int trial = 0; trial < 60; ++trial) {
      FieldMatrix m(f, dim(rng), dim(rng));
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set_code(r, c, static_cast<std::uint8_t>(sym(rng)));
      EXPECT_EQ(m.rank(), brute_rank(m, ElementSet::prefix(m.cols())));
      EXPECT_EQ(m.rank(), m.transpose().rank());
      EXPECT_EQ(m.nullity(), m.cols() - m.rank());
    }
  }
}

TEST(FieldMatrix, NullSpaceIsAKernelBasis) {
  std::mt19937_64 rng(11);
  for (Field f : {Field::GF2, Field::GF4}) {
    std::uniform_int_distribution<int> sym(0, field_order(f) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      FieldMatrix m(f, 3, 5);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) m.set_code(r, c, static_cast<std::uint8_t>(sym(rng)));
      const auto ns = m.null_space();
      ASSERT_EQ(static_cast<int>(ns.size()), m.nullity());
      FieldMatrix basis(f, 5, static_cast<int>(ns.size()));
      for (std::size_t j = 0; j < ns.size(); ++j)
        for (int i = 0; i < 5; ++i) basis.set(i, static_cast<int>(j), ns[j][static_cast<std::size_t>(i)]);
      EXPECT_TRUE((m * basis).is_zero());
      EXPECT_EQ(basis.rank(), static_cast<int>(ns.size()));
    }
  }
}

TEST(FieldMatrix, PackedRankAgreesWithDenseRank) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> sym(0, 3);
  FieldMatrix m(Field::GF4, 4, 7);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 7; ++c) m.set_code(r, c, static_cast<std::uint8_t>(sym(rng)));
  std::vector<PackedColumn> cols;
  for (int c = 0; c < 7; ++c) cols.push_back(m.packed_column(c));
  for (std::uint64_t s = 0; s < 128; ++s)
    EXPECT_EQ(packed_rank(cols, s), m.select_columns(ElementSet(s).indices()).rank());
}

TEST(FieldMatrix, TransposeConjugateAndBlocks) {
  const auto m = mmtest::gf(Field::GF4, {"1 a 0", "b 1 a"});
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.conjugate().conjugate(), m);
  EXPECT_EQ(inv_transpose(m).code(1, 0), 3);  // conj(a) = b
  const auto h = FieldMatrix::hconcat({m, m});
  EXPECT_EQ(h.cols(), 6);
  EXPECT_EQ(h.code(1, 4), m.code(1, 1));
  EXPECT_TRUE((m + m).is_zero());
  EXPECT_TRUE(mmtest::gf(Field::GF4, {"1 0", "0 1"}).entries_binary());
  EXPECT_FALSE(m.entries_binary());
}

TEST(FieldMatrix, GfmatParseErrors) {
  EXPECT_THROW(FieldMatrix::parse_gfmat("field 3\n1 1\n1\n"), Error);
  EXPECT_THROW(FieldMatrix::parse_gfmat("field 2\n2 2\n1 0\n"), Error);
  EXPECT_THROW(FieldMatrix::parse_gfmat("field 2\n1 2\n1 a\n"), Error);
  const auto ok = FieldMatrix::parse_gfmat("field 4\n1 2\n1 a\n");
  EXPECT_EQ(ok.code(0, 1), 2);
}
