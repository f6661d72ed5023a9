#include <gtest/gtest.h>

#include <map>

#include "workbench/errors.hpp"
#include "workbench/fs_solver.hpp"
#include "workbench/golden.hpp"

using namespace wb;

namespace {

SignAssignment make(const std::string& h0, std::vector<int> fam) {
  SignAssignment a;
  for (int i = 0; i < 4; ++i) a.eps_height0[i] = h0[i] == '+' ? 1 : h0[i] == '-' ? -1 : 0;
  a.eps_family = std::move(fam);
  return a;
}

std::vector<int> last_differs(int d, int last) {
  std::vector<int> v(d - 2, 1);
  v.back() = last;
  return v;
}

}  // namespace

TEST(SignedSum, ExhaustiveAgainstEnumeration) {
  for (int k = 1; k <= 12; ++k) {
    std::map<long long, std::vector<int>> seen;
    int collisions = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> e(k);
      long long m = 0;
      for (int j = 0; j < k; ++j) {
        e[j] = (mask >> j) & 1 ? 1 : -1;
        m += e[j] * (1ll << j);
      }
      if (!seen.emplace(m, e).second) ++collisions;
    }
    EXPECT_EQ(collisions, 0);
    for (long long m = -(1ll << k) + 1; m < (1ll << k); m += 2) {
      ASSERT_TRUE(seen.count(m));
      EXPECT_EQ(signed_sum_decompose(m, k), seen[m]) << m << " " << k;
    }
    EXPECT_THROW(signed_sum_decompose(2, k), NoSolution);
    EXPECT_THROW(signed_sum_decompose(1ll << k, k), NoSolution);
  }
}

TEST(Profiles, DegreesAndShapes) {
  for (int d = 3; d <= 6; ++d)
    for (MoritaType t : kMoritaTypes) {
      MoritaProfile p = build_profile(t, d);
      EXPECT_EQ(static_cast<int>(p.M.size()), 4);
      EXPECT_EQ(static_cast<int>(p.Mh.size()), p.l);
      EXPECT_EQ(p.families(), d - 2);
    }
  EXPECT_EQ(build_profile(MoritaType::i, 4).l, 1);
  EXPECT_EQ(build_profile(MoritaType::ii, 4).l, 2);
  EXPECT_EQ(build_profile(MoritaType::vi, 4).l, 3);
  EXPECT_THROW(build_profile(MoritaType::i, 2), BadDegree);
}

TEST(Solver, NilpotentTypeB) {
  for (int d = 3; d <= 8; ++d) {
    SolveResult r = solve(MoritaType::i, ExtType::b, d);
    ASSERT_EQ(r.status, SolveStatus::unique) << d;
    EXPECT_EQ(r.solutions[0], make("++++", last_differs(d, -1)));
    EXPECT_EQ(r.multiplicities[0], std::vector<long long>{2});
  }
}

TEST(Solver, PslThreeModFourAtD3) {
  SolveResult r = solve(MoritaType::vi, ExtType::a, 3);
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solutions[0], make("++00", {1}));
  EXPECT_EQ(r.solutions[0].str(), "++00 +");
  EXPECT_EQ(r.multiplicities[0], (std::vector<long long>{2, 2, 2}));
}

TEST(Solver, TypeCAndDExcludeTwoSimples) {
  for (int d = 3; d <= 8; ++d)
    for (ExtType e : {ExtType::c, ExtType::d})
      for (MoritaType t : {MoritaType::ii, MoritaType::iii})
        EXPECT_EQ(solve(t, e, d).status, SolveStatus::infeasible) << d;
}

TEST(Solver, TypeDKillsTheInvolutionModule) {
  for (int d = 3; d <= 7; ++d)
    for (MoritaType t : {MoritaType::i, MoritaType::v}) {
      SolveResult r = solve(t, ExtType::d, d);
      ASSERT_EQ(r.status, SolveStatus::unique);
      for (auto m : r.multiplicities[0]) EXPECT_EQ(m, 0);
    }
}

TEST(Solver, TiebreakCorner) {
  for (MoritaType t : {MoritaType::iii, MoritaType::iv, MoritaType::vi}) {
    SolverOptions off;
    off.tiebreak = false;
    SolveResult loose = solve(t, ExtType::a, 3, off);
    EXPECT_EQ(loose.status, SolveStatus::ambiguous) << morita_name(t);
    EXPECT_EQ(loose.solutions.size(), 2u);
    EXPECT_EQ(solve(t, ExtType::a, 3).status, SolveStatus::unique);
    // the flag only touches |D| = 8
    EXPECT_EQ(solve(t, ExtType::a, 4, off).status, SolveStatus::unique);
  }
}

TEST(Solver, PrincipalSolvesAsTypeA) {
  for (MoritaType t : kMoritaTypes)
    for (int d = 3; d <= 5; ++d) {
      auto a = solve(t, ExtType::a, d), p = solve(t, ExtType::principal, d);
      EXPECT_EQ(a.status, p.status);
      EXPECT_EQ(a.solutions, p.solutions);
    }
}

TEST(Solver, RealCharacterCounts) {
  for (int d = 3; d <= 8; ++d) {
    const int k = (1 << (d - 2)) + 3;
    EXPECT_EQ(count_real_characters(solve(MoritaType::i, ExtType::a, d).solutions.at(0)), k);
    EXPECT_EQ(count_real_characters(solve(MoritaType::i, ExtType::c, d).solutions.at(0)), k - 2);
    if (d >= 4)
      EXPECT_EQ(count_real_characters(solve(MoritaType::i, ExtType::e, d).solutions.at(0)), k - (1 << (d - 3)));
  }
}

TEST(Solver, RealCharactersEqualRealColumns) {
  for (int d = 3; d <= 7; ++d)
    for (MoritaType t : kMoritaTypes)
      for (ExtType e : kExtTypes) {
        if (e == ExtType::e && d == 3) continue;
        SolveResult r = solve(t, e, d);
        MoritaProfile p = build_profile(t, d);
        for (auto& a : r.solutions) EXPECT_EQ(count_real_characters(a), count_real_columns_for(a, p, e)) << r.cell();
      }
}

TEST(Solver, MultiplicitiesNonnegative) {
  for (int d = 3; d <= 8; ++d)
    for (MoritaType t : kMoritaTypes)
      for (ExtType e : kExtTypes) {
        if (e == ExtType::e && d == 3) continue;
        SolveResult r = solve(t, e, d);
        for (auto& m : r.multiplicities)
          for (auto x : m) EXPECT_GE(x, 0) << r.cell();
      }
}

TEST(Solver, NonrealFamiliesAreGaloisPairs) {
  for (int d = 3; d <= 8; ++d)
    for (MoritaType t : kMoritaTypes)
      for (ExtType e : kExtTypes) {
        if (e == ExtType::e && d == 3) continue;
        for (auto& a : solve(t, e, d).solutions) EXPECT_NE(a.eps_family[0], 0) << morita_name(t);
      }
}

TEST(Golden, TableMatchesSolver) {
  Table2 table = load_table2();
  EXPECT_EQ(table.rows.size(), 17u);
  for (auto& row : table.rows)
    for (int d = 3; d <= 6; ++d) {
      if (row.etype == ExtType::e && d == 3) continue;
      SolveResult r = solve(row.block_type, row.etype, d);
      ASSERT_EQ(r.status, SolveStatus::unique) << row.key() << " d=" << d;
      EXPECT_EQ(r.solutions[0], row.expected(d)) << row.key() << " d=" << d;
    }
  for (auto& c : table.infeasible)
    for (int d = 4; d <= 6; ++d) EXPECT_EQ(solve(c.block_type, c.etype, d).status, SolveStatus::infeasible);
}

TEST(Golden, VerifyReport) {
  Table2Report rep = verify_table2(load_table2(), 3, 6, {}, 2);
  EXPECT_TRUE(rep.all_ok());
  EXPECT_EQ(rep.rows_ok, rep.rows_total);
  EXPECT_EQ(rep.rows_total, 17);
  EXPECT_EQ(rep.ambiguous, 0);
  Table2Report serial = verify_table2(load_table2(), 3, 6, {}, 1);
  ASSERT_EQ(serial.cells.size(), rep.cells.size());
  for (size_t i = 0; i < rep.cells.size(); ++i) EXPECT_EQ(serial.cells[i].result.solutions, rep.cells[i].result.solutions);
}

TEST(Golden, MissingFileIsAParseError) {
  EXPECT_THROW(load_table2("/nonexistent/table2.json"), ParseError);
}
