#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "workbench/block_theory.hpp"
#include "workbench/gf2_matrix.hpp"
#include "workbench/perm_group.hpp"

namespace wb {

constexpr std::size_t kMaxOmega = 2048;
constexpr int kMaxMeatAxeDim = 512;
constexpr int kMaxSplitDim = 256;

// A right module over GF(2): gens[k] is the action of the k-th generator
// of the group it was built from.
struct GF2Module {
  int dim = 0;
  std::vector<Mat2> gens;
  std::vector<int> labels;  // group element index per basis vector, when known
};

// Submodule of an ambient module: basis rows live in the ambient space.
struct Submodule {
  GF2Module module;
  Mat2 basis;
};

// Permutation module on {g : g^2 = 1} under conjugation. Throws CapExceeded.
GF2Module involution_perm_module(const PermGroup& G, std::size_t cap = kMaxOmega);
// Permutation module on the conjugacy class of x, i.e. on the cosets of C(x).
GF2Module class_perm_module(const PermGroup& G, int x);
// Sums the permutation matrices of the elements with a nonzero coefficient.
Mat2 group_algebra_matrix(const PermGroup& G, const GF2Module& M, const IdempotentSupport& coeff);

// Image of e_B. Throws FieldTooSmall if a coefficient lies outside GF(2),
// NotIdempotent if the matrix is not idempotent.
Submodule block_cut(const PermGroup& G, const GF2Module& M, const IdempotentSupport& supp);

// Action on an invariant subspace given by independent rows; throws
// std::logic_error when the subspace is not invariant.
GF2Module restrict_module(const GF2Module& M, const Mat2& basis);
GF2Module quotient_module(const GF2Module& M, const Mat2& basis);
// Module generated by the rows of seeds.
Mat2 spin(const GF2Module& M, const Mat2& seeds);

// GF(2)-basis of Hom_G(M, N), each a dim(M) x dim(N) matrix.
std::vector<Mat2> hom_space(const GF2Module& M, const GF2Module& N);

struct FactorClass {
  int dim = 0;           // over GF(2)
  int multiplicity = 0;
  int end_degree = 1;    // dim End(S); S splits into end_degree absolutely irreducible parts
  GF2Module module;
};
// Composition factors up to isomorphism. seed drives the random algebra
// elements. Throws CapExceeded above kMaxMeatAxeDim.
std::vector<FactorClass> meataxe_factors(const GF2Module& M, std::uint64_t seed = 0);
bool is_irreducible(const GF2Module& M, std::uint64_t seed = 0);
// (dim, multiplicity) of absolutely irreducible factors, sorted.
std::vector<std::pair<int, int>> absolute_factors(const std::vector<FactorClass>& f);

struct SummandClass {
  int dim = 0;
  int multiplicity = 0;
  bool certified = false;  // End(M) checked exhaustively to be local
  GF2Module module;
  std::vector<Mat2> bases;  // one ambient basis per copy
};
// Indecomposable direct summands up to isomorphism (Fitting decomposition
// of random endomorphisms). Throws CapExceeded above kMaxSplitDim.
std::vector<SummandClass> summand_split(const GF2Module& M, std::uint64_t seed = 0);
int summand_count(const std::vector<SummandClass>& s);

// The form inherited from the permutation basis is nondegenerate on the cut
// and invariant, which makes it an isomorphism with the dual module.
bool self_dual_check(const Submodule& cut);

// Components of the permutation module on the cosets of C(t) all lie in the
// principal block. Throws NotInO2 unless t is an involution of O_2(G).
bool o2_principal_check(const CharacterTable& T, int t);

struct ValuationRow {
  int involution_class = 0;
  int dim = 0;
  int nu_dim = 0;
  int bound_index = 0;   // nu[G:D]
  int bound_vertex = 0;  // nu|G| - max nu|C_D(t')| over t' in the class with E = D<t'>
  bool admissible_t = true;  // some t' exists; otherwise the cut must vanish
  bool ok = false;
};
struct ValuationReport {
  std::vector<ValuationRow> rows;
  bool ok = true;
};
// Splits the cut of each involution class module separately. B must be a
// real block with a couple.
ValuationReport dimension_valuation_check(const CharacterTable& T, const BlockData& B, std::uint64_t seed = 0);

}  // namespace wb
