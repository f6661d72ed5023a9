#pragma once

#include <array>
#include <string>
#include <vector>

#include "workbench/pgroup.hpp"

namespace wb {

// The six generalized decomposition matrix shapes of a dihedral 2-block.
enum class MoritaType { i, ii, iii, iv, v, vi };
constexpr MoritaType kMoritaTypes[] = {MoritaType::i,  MoritaType::ii, MoritaType::iii,
                                       MoritaType::iv, MoritaType::v,  MoritaType::vi};
const char* morita_name(MoritaType t);
MoritaType parse_morita(const std::string& s);  // throws UsageError

enum class Slot { none, eps, eps_prime, eps_j };

// A matrix entry coef * slot; slot none means a plain integer.
struct Entry {
  int coef = 0;
  Slot slot = Slot::none;
  int value(int eps, int eps_prime, int eps_j) const;
  std::string str() const;
};

// Rows chi_1..chi_4 (height 0) and one representative row per height-1
// family F_j (all rows of a family agree on the columns used here).
// Subsection columns: s_1, t, st, s_j (2 <= j <= d-2), s = s_{d-1}; an empty
// column vector means the column is fused away. Entries the matrices leave
// unspecified are never stored, so they cannot enter a constraint.
struct MoritaProfile {
  MoritaType type = MoritaType::i;
  int d = 3;
  int l = 1;
  std::vector<std::vector<int>> M;  // 4 x l
  std::vector<int> Mh;              // decomposition row of every height-1 character
  std::vector<Entry> s1, t, st, sj, s;
  // s_1-entry of the height-1 characters in F_j.
  Entry height1_s1(int j) const;
  int families() const { return d - 2; }
  std::string row_str(int r) const;  // r in 0..3 for chi_{r+1}, 4 + j for F_j
};

MoritaProfile build_profile(MoritaType type, int d);  // throws BadDegree for d < 3

struct SignAssignment {
  std::array<int, 4> eps_height0{};  // each 0 or +1
  std::vector<int> eps_family;       // eps^(0..d-3), each -1, 0 or +1
  auto operator<=>(const SignAssignment&) const = default;
  std::string height0_str() const;  // e.g. "++00"
  std::string family_str() const;   // e.g. "+-"
  std::string str() const { return height0_str() + " " + family_str(); }
};

struct LinearConstraint {
  enum class Rel { eq, ge };
  std::string tag;
  std::vector<long long> coeff;  // over (eps_1..eps_4, eps^(0)..eps^(d-3))
  Rel rel = Rel::eq;
  long long rhs = 0;
  bool holds(const SignAssignment& a) const;
  std::string str() const;
};

struct SolverOptions {
  // For |D| = 8, E of type (a) and Morita types (iii), (iv), (vi), force
  // eps^(0) = +1. The linear system alone leaves two candidates there.
  bool tiebreak = true;
};

// The slot values eps, eps', eps_j are enumerated by the solver; for fixed
// slots the remaining conditions are linear in the assignment.
struct ConstraintSet {
  std::vector<LinearConstraint> linear;
  std::vector<std::string> structural;  // documented conditions checked outside the linear part
};

ConstraintSet local_constraints(ExtType etype, const MoritaProfile& p, int eps, int eps_prime, int eps_j,
                                const SolverOptions& opt = {});

enum class SolveStatus { unique, infeasible, ambiguous };
const char* status_name(SolveStatus s);

struct SolveResult {
  MoritaType type = MoritaType::i;
  ExtType etype = ExtType::a;
  int d = 3;
  std::vector<SignAssignment> solutions;  // canonical, sorted, distinct
  std::size_t raw_solutions = 0;          // before canonicalization and slot projection
  SolveStatus status = SolveStatus::infeasible;
  std::vector<std::vector<long long>> multiplicities;  // per solution
  std::string cell() const;
};

// etype principal is solved as type (a). Requires 3 <= d <= 12.
SolveResult solve(MoritaType type, ExtType etype, int d, const SolverOptions& opt = {});

// [k Omega B : M_k] = sum_chi eps(chi) d_{chi, M_k}; throws NegativeMultiplicity.
std::vector<long long> predicted_multiplicities(const SignAssignment& a, const MoritaProfile& p);

// The unique signs e_0..e_{k-1} with sum e_j 2^j = m; throws NoSolution
// unless m is odd and |m| < 2^k.
std::vector<int> signed_sum_decompose(long long m, int k);

// Number of real irreducible characters carried by a solution.
int count_real_characters(const SignAssignment& a);
// The same number read off the columns: fusion from l, nonreal Brauer
// characters from the column permutation induced by the conjugate pair.
int count_real_columns_for(const SignAssignment& a, const MoritaProfile& p, ExtType etype);
FusionCase fusion_for(const MoritaProfile& p);

}  // namespace wb
