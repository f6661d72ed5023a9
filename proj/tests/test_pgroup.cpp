#include <gtest/gtest.h>

#include <set>

#include "workbench/builtin_groups.hpp"
#include "workbench/errors.hpp"
#include "workbench/pgroup.hpp"

using namespace wb;

namespace {

// Regular permutation representation of <a, b | a^m, b^2, b a b^-1 = a^r>,
// elements a^i b^j coded i + m*j.
PermGroup metacyclic(int m, int r, int b2_power) {
  auto code = [m](int i, int j) { return ((i % m + m) % m) + m * j; };
  std::vector<std::uint16_t> A(2 * m), B(2 * m);
  // right multiplication: (a^i b^j) a = a^{i + r^j} b^j ; (a^i b^j) b = a^{i + j*b2} b^{1-j}
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      int rj = j ? r : 1;
      A[code(i, j)] = static_cast<std::uint16_t>(code(i + rj, j));
      B[code(i, j)] = static_cast<std::uint16_t>(j ? code(i + b2_power, 0) : code(i, 1));
    }
  return PermGroup::generate({Perm(A), Perm(B)});
}

}  // namespace

TEST(Dihedral, FrameNamesAndOrders) {
  for (int d = 3; d <= 6; ++d) {
    DihedralFrame f = build_dihedral(d);
    EXPECT_EQ(f.group.order(), std::size_t{1} << d);
    EXPECT_TRUE(is_dihedral_2group(f.group));
    EXPECT_EQ(f.center().order(), 2u);
    for (int i = 1; i <= d - 1; ++i) EXPECT_EQ(f.S(i).order(), std::size_t{1} << i);
    for (int i = 2; i <= d - 1; ++i) {
      EXPECT_EQ(f.X(i).order(), std::size_t{1} << i);
      EXPECT_EQ(f.Y(i).order(), std::size_t{1} << i);
    }
    EXPECT_EQ(dihedral_subgroup_name(d, {0}), "1");
    std::vector<int> all;
    for (int c = 0; c < (1 << d); ++c) all.push_back(c);
    EXPECT_EQ(dihedral_subgroup_name(d, all), "D");
  }
  EXPECT_THROW(build_dihedral(2), BadDegree);
}

TEST(Dihedral, Recognition) {
  EXPECT_TRUE(is_dihedral_2group(builtin_group("d8")));
  EXPECT_TRUE(is_dihedral_2group(builtin_group("d16")));
  EXPECT_FALSE(is_dihedral_2group(builtin_group("sd16")));
  EXPECT_FALSE(is_dihedral_2group(builtin_group("c2xs3")));
  EXPECT_FALSE(is_dihedral_2group(metacyclic(8, 1, 0)));  // C8 x C2
}

TEST(Extensions, CensusCounts) {
  EXPECT_EQ(census_degree2_extensions(build_dihedral(3)).size(), 4u);
  for (int d = 4; d <= 6; ++d) EXPECT_EQ(census_degree2_extensions(build_dihedral(d)).size(), 5u) << d;
}

TEST(Extensions, TypeCMatchesDihedralAndTypeDSemidihedral) {
  for (int d = 3; d <= 5; ++d) {
    const int m = 1 << d;  // order of <s> in the extension
    Fingerprint dih = fingerprint(metacyclic(m, m - 1, 0), metacyclic(m, m - 1, 0));
    Fingerprint sd = fingerprint(metacyclic(m, m / 2 - 1, 0), metacyclic(m, m / 2 - 1, 0));
    DihedralFrame f = build_dihedral(d);
    Fingerprint c = fingerprint(build_extension(f, ExtType::c).E, build_extension(f, ExtType::c).E);
    Fingerprint dd = fingerprint(build_extension(f, ExtType::d).E, build_extension(f, ExtType::d).E);
    EXPECT_EQ(c, dih) << d;
    EXPECT_EQ(dd, sd) << d;
  }
}

TEST(Extensions, ClassifyRoundTrip) {
  for (int d = 3; d <= 5; ++d) {
    DihedralFrame f = build_dihedral(d);
    for (ExtType t : kExtTypes) {
      if (t == ExtType::e && d == 3) {
        EXPECT_THROW(build_extension(f, t), TypeUnavailable);
        continue;
      }
      ExtensionFrame ext = build_extension(f, t);
      EXPECT_EQ(ext.E.order(), std::size_t{2} << d);
      EXPECT_EQ(classify_extension(ext.D, ext.E), t) << d << ext_type_name(t);
    }
    EXPECT_EQ(classify_extension(f.group, f.group), ExtType::principal);
  }
  EXPECT_THROW(classify_extension(builtin_group("sd16"), builtin_group("sd16")), NotDihedral);
}

TEST(Extensions, InvolutionOutsideDExceptSemidihedral) {
  for (int d = 3; d <= 6; ++d) {
    DihedralFrame f = build_dihedral(d);
    for (ExtType t : kExtTypes) {
      if (t == ExtType::e && d == 3) continue;
      ExtensionFrame ext = build_extension(f, t);
      bool inv = false;
      for (auto& x : ext.E.elements())
        if (!ext.D.contains(x) && (x * x).is_identity()) inv = true;
      EXPECT_EQ(inv, t != ExtType::d) << d << ext_type_name(t);
    }
  }
}

TEST(EClasses, PartitionEOutsideD) {
  for (int d = 3; d <= 6; ++d)
    for (ExtType t : kExtTypes) {
      if (t == ExtType::e && d == 3) continue;
      ExtensionFrame ext = build_extension(build_dihedral(d), t);
      std::size_t total = 0;
      for (auto& r : eclass_table(ext)) total += r.class_size;
      EXPECT_EQ(total, ext.D.order()) << d << ext_type_name(t);
    }
}

TEST(EClasses, TypeEAtD4) {
  auto rows = eclass_table(build_extension(build_dihedral(4), ExtType::e));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].pattern, "e");
  EXPECT_TRUE(rows[0].order2);
  EXPECT_EQ(rows[0].centralizer, "X_3");
  EXPECT_EQ(rows[1].pattern, "s_2e");
  EXPECT_FALSE(rows[1].order2);
  EXPECT_EQ(rows[1].centralizer, "Y_3");
  EXPECT_EQ(rows[2].centralizer, "S_2");
  EXPECT_EQ(rows[3].centralizer, "X_2");
  EXPECT_EQ(rows[4].centralizer, "Y_2");
}

TEST(Reality, StronglyRealImpliesReal) {
  for (int d = 3; d <= 6; ++d)
    for (ExtType t : kExtTypes) {
      if (t == ExtType::e && d == 3) continue;
      ExtensionFrame ext = build_extension(build_dihedral(d), t);
      auto pat = reality_pattern(ext);
      // 1, D, and S_i, X_i, Y_i for i < d, with S_{d-1} = S
      EXPECT_EQ(pat.size(), static_cast<std::size_t>(2 + 3 * (d - 1)));
      for (auto& e : pat)
        if (e.strongly_real) EXPECT_TRUE(e.real) << e.name;
    }
}

TEST(Columns, CountsByFusion) {
  for (int d = 3; d <= 6; ++d) {
    const int k = (1 << (d - 2)) + 3;
    for (FusionCase f : {FusionCase::aa, FusionCase::ab, FusionCase::ba, FusionCase::bb}) {
      EXPECT_EQ(count_columns(d, f), k);
      EXPECT_EQ(count_real_columns(d, ExtType::a, f), k);
    }
    if (d >= 4) EXPECT_EQ(count_real_columns(d, ExtType::e, FusionCase::bb), k - (1 << (d - 3)));
    EXPECT_THROW(count_real_columns(3, ExtType::e, FusionCase::bb), TypeUnavailable);
  }
  EXPECT_EQ(fusion_l(FusionCase::aa), 3);
  EXPECT_EQ(fusion_l(FusionCase::ab), 2);
  EXPECT_EQ(fusion_l(FusionCase::bb), 1);
}

TEST(Names, ParseRoundTrip) {
  for (ExtType t : {ExtType::a, ExtType::b, ExtType::c, ExtType::d, ExtType::e, ExtType::principal})
    EXPECT_EQ(parse_ext_type(ext_type_name(t)), t);
  EXPECT_THROW(parse_ext_type("f"), UsageError);
}
