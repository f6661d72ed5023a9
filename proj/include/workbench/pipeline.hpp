#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "workbench/block_theory.hpp"
#include "workbench/char_table.hpp"
#include "workbench/fs_solver.hpp"
#include "workbench/golden.hpp"
#include "workbench/mod2_rep.hpp"

namespace wb {

// A Morita type consistent with the ordinary degrees of a dihedral block:
// positive simple dimensions x with M x = height-0 degrees (rows in the
// order of `rows`) and Mh x = every height-1 degree. This is a hypothesis
// read off degrees, not a module-theoretic determination.
struct MoritaHypothesis {
  MoritaType type = MoritaType::i;
  std::vector<long long> simple_dims;
  std::vector<std::array<int, 4>> row_assignments;  // table rows playing chi_1..chi_4
};
std::vector<MoritaHypothesis> morita_candidates(const CharacterTable& T, const BlockData& B);

// Characters permuted by the Galois automorphism zeta -> zeta^r (r a unit
// modulo the exponent).
std::vector<int> galois_permutation(const CharacterTable& T, long long r);
// Orbits of B's characters under the automorphisms fixing odd-order roots of unity.
std::vector<std::vector<int>> two_galois_orbits(const CharacterTable& T, const BlockData& B);

struct ModuleReport {
  bool computed = false;
  std::string skipped;
  int cut_dim = 0;
  bool self_dual = false;
  std::vector<FactorClass> factors;
  std::vector<std::pair<int, int>> absolute;  // (dim, multiplicity)
  std::vector<std::pair<int, int>> predicted; // from the matched Table 2 solution
  bool multiplicities_match = false;
  std::vector<SummandClass> summands;
  bool summands_computed = false;
  std::optional<ValuationReport> valuation;
};

struct BlockReport {
  BlockData block;
  std::string label;
  std::vector<int> fs;       // per character of the block
  std::vector<int> heights;
  bool dihedral = false;
  std::string defect_fingerprint;
  std::optional<bool> couple_unique;
  std::vector<MoritaHypothesis> candidates;
  std::optional<MoritaType> morita;
  std::optional<ExtType> table_etype;  // principal reads as (a)
  std::string table_key;               // "vi/a" when a row applies
  std::string expected_signs, observed_signs;
  std::optional<bool> table_match;
  ModuleReport modules;
  std::vector<std::string> notes;
  std::vector<std::string> mismatches;
};

struct PipelineOptions {
  std::uint64_t seed = 0;
  bool modules = true;
  int max_split_dim = 128;  // summand splitting above this is skipped
};

struct PipelineReport {
  std::string group;
  std::size_t order = 0;
  int num_classes = 0;
  std::vector<long long> degrees;
  std::vector<int> fs;
  std::size_t omega = 0;
  long long fs_count = 0;  // sum eps(chi) chi(1)
  std::vector<BlockReport> blocks;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

PipelineReport run_pipeline(const std::string& name, const PermGroup& G, const Table2& table,
                            const PipelineOptions& opt = {});

}  // namespace wb
