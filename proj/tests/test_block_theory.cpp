#include <gtest/gtest.h>

#include <set>

#include "workbench/block_theory.hpp"
#include "workbench/builtin_groups.hpp"
#include "workbench/errors.hpp"

using namespace wb;

namespace {

std::vector<long long> block_degrees(const CharacterTable& T, const BlockData& B) {
  std::vector<long long> d;
  for (int c : B.chars) d.push_back(T.degree(c));
  return d;
}

// Product in the group algebra over GF(2^F) of two class functions, as
// element-indexed coefficient vectors.
std::vector<GF2m> convolve(const PermGroup& G, const std::vector<GF2m>& a, const std::vector<GF2m>& b) {
  const int n = static_cast<int>(G.order());
  const int F = a[0].degree();
  std::vector<GF2m> out(n, GF2m::zero(F));
  for (int x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < n; ++y)
      if (!b[y].is_zero()) out[G.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

std::vector<GF2m> on_elements(const PermGroup& G, const IdempotentSupport& s) {
  std::vector<GF2m> v(G.order());
  for (int x = 0; x < static_cast<int>(G.order()); ++x) v[x] = s[G.class_of(x)];
  return v;
}

}  // namespace

TEST(Blocks, Psl27) {
  auto T = CharacterTable::compute(builtin_group("psl27"));
  auto blocks = block_partition(T);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(block_degrees(T, blocks[0]), (std::vector<long long>{1, 3, 3, 6, 7}));
  EXPECT_EQ(block_degrees(T, blocks[1]), (std::vector<long long>{8}));
  EXPECT_TRUE(blocks[0].is_principal);
  EXPECT_EQ(blocks[0].defect, 3);
  EXPECT_EQ(blocks[1].defect, 0);
  ASSERT_TRUE(blocks[0].defect_group);
  EXPECT_TRUE(is_dihedral_2group(*blocks[0].defect_group));
  ASSERT_TRUE(blocks[0].couple);
  EXPECT_EQ(blocks[0].couple->E.order(), 8u);
  EXPECT_EQ(blocks[0].couple->etype, ExtType::principal);
  ASSERT_TRUE(blocks[1].couple);
  EXPECT_EQ(blocks[1].couple->D.order(), 1u);
  EXPECT_EQ(blocks[1].couple->E.order(), 2u);
  EXPECT_EQ(block_label(T, blocks[0]), "B0[1,3,3,6,7]");
  EXPECT_EQ(block_heights(T, blocks[0]), (std::vector<int>{0, 0, 0, 1, 0}));
}

TEST(Blocks, S5AndA7) {
  auto S = CharacterTable::compute(builtin_group("s5"));
  auto sb = block_partition(S);
  ASSERT_EQ(sb.size(), 2u);
  EXPECT_EQ(block_degrees(S, sb[0]), (std::vector<long long>{1, 1, 5, 5, 6}));
  EXPECT_EQ(block_degrees(S, sb[1]), (std::vector<long long>{4, 4}));
  EXPECT_EQ(sb[0].defect_group->order(), 8u);

  auto A = CharacterTable::compute(builtin_group("a7"));
  auto ab = block_partition(A);
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_EQ(block_degrees(A, ab[0]), (std::vector<long long>{1, 14, 15, 21, 35}));
  EXPECT_EQ(block_degrees(A, ab[1]), (std::vector<long long>{6, 10, 10, 14}));
  EXPECT_EQ(ab[1].defect, 2);
  EXPECT_EQ(ab[1].couple->E.order(), 8u);
  EXPECT_FALSE(ab[1].couple->etype.has_value());
}

TEST(Blocks, OddOrderGroupsHaveDefectZeroBlocksOnly) {
  auto T = CharacterTable::compute(builtin_group("c3"));
  auto blocks = block_partition(T);
  EXPECT_EQ(blocks.size(), 3u);
  int real = 0;
  for (auto& B : blocks) {
    EXPECT_EQ(B.defect, 0);
    real += B.is_real;
  }
  EXPECT_EQ(real, 1);
  EXPECT_THROW(real_defect_classes(T, blocks[1]), NotRealBlock);
}

TEST(Blocks, TwoGroupsHaveOneBlock) {
  for (auto name : {"d8", "d16", "sd16"}) {
    auto T = CharacterTable::compute(builtin_group(name));
    EXPECT_EQ(block_partition(T).size(), 1u) << name;
  }
}

TEST(Blocks, PartitionAndDefectZeroCount) {
  for (auto& name : standard_builtins()) {
    auto T = CharacterTable::compute(builtin_group(name));
    auto blocks = block_partition(T);
    std::set<int> all;
    std::size_t total = 0;
    int defect_zero = 0;
    for (auto& B : blocks) {
      all.insert(B.chars.begin(), B.chars.end());
      total += B.chars.size();
      if (B.defect == 0) {
        ++defect_zero;
        EXPECT_EQ(B.chars.size(), 1u);
      }
    }
    EXPECT_EQ(total, all.size()) << name;
    EXPECT_EQ(static_cast<int>(total), T.num_chars()) << name;
    const int n = nu(static_cast<long long>(T.group().order()));
    int full = 0;
    for (int c = 0; c < T.num_chars(); ++c) full += nu(T.degree(c)) == n;
    EXPECT_EQ(defect_zero, full) << name;
    EXPECT_TRUE(blocks[0].is_principal);
    EXPECT_EQ(blocks[0].defect, n);
  }
}

TEST(Idempotents, OrthogonalAndSumToOne) {
  for (auto name : {"s4", "psl27", "s5", "c3", "c2xs3"}) {
    auto T = CharacterTable::compute(builtin_group(name));
    const PermGroup& G = T.group();
    auto blocks = block_partition(T);
    const int F = table_field_degree(T);
    std::vector<GF2m> sum(G.order(), GF2m::zero(F));
    std::vector<std::vector<GF2m>> es;
    for (auto& B : blocks) {
      es.push_back(on_elements(G, block_idempotent_mod2(T, B)));
      for (size_t x = 0; x < G.order(); ++x) sum[x] += es.back()[x];
    }
    EXPECT_TRUE(sum[0].is_one()) << name;
    for (size_t x = 1; x < G.order(); ++x) EXPECT_TRUE(sum[x].is_zero()) << name;
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = 0; j < es.size(); ++j) {
        auto p = convolve(G, es[i], es[j]);
        EXPECT_TRUE(p == (i == j ? es[i] : std::vector<GF2m>(G.order(), GF2m::zero(F)))) << name << i << j;
      }
  }
}

TEST(Couples, ConjugacyExhaustive) {
  for (auto name : {"psl27", "s5", "a7", "s4"}) {
    auto T = CharacterTable::compute(builtin_group(name));
    for (auto& B : block_partition(T))
      if (B.is_real) EXPECT_TRUE(couple_conjugacy_check(T, B)) << name << B.index;
  }
}

TEST(Couples, DIsSylowInCentralizerAndIndexAtMostTwo) {
  for (auto name : {"psl27", "s5", "pgl27", "a7"}) {
    auto T = CharacterTable::compute(builtin_group(name));
    const PermGroup& G = T.group();
    for (auto& B : block_partition(T)) {
      if (!B.couple) continue;
      const DefectCouple& c = *B.couple;
      EXPECT_TRUE(c.D.is_subgroup_of(c.E));
      EXPECT_LE(c.E.order(), 2 * c.D.order());
      PermGroup C = G.centralizer(G.element(c.element));
      EXPECT_EQ(nu(static_cast<long long>(C.order())), nu(static_cast<long long>(c.D.order())));
      EXPECT_EQ(c.D.order(), std::size_t{1} << B.defect);
      for (int l : B.real_defect_classes) EXPECT_TRUE(G.classes()[l].is_real && G.classes()[l].is_2regular);
    }
  }
}

TEST(Couples, PrincipalBlockOfPgl27) {
  auto T = CharacterTable::compute(builtin_group("pgl27"));
  auto B = block_partition(T)[0];
  ASSERT_TRUE(B.couple);
  EXPECT_EQ(B.couple->etype, ExtType::principal);
  EXPECT_EQ(B.couple->D.order(), 16u);
}
