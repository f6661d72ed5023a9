#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "workbench/char_table.hpp"
#include "workbench/exact_arith.hpp"
#include "workbench/perm_group.hpp"
#include "workbench/pgroup.hpp"

namespace wb {

struct DefectCouple {
  PermGroup D, E;
  int element = 0;  // the chosen c, an element index of G
  int cls = 0;      // its class
  std::optional<ExtType> etype;  // principal when E = D; unset when D is not dihedral
  std::string note;
};

struct BlockData {
  int index = 0;
  std::vector<int> chars;    // rows of the table, ascending
  std::vector<GF2m> omega;   // central character mod 2, per class
  int defect = 0;            // nu|G| - min nu(chi(1))
  int defect_class = -1;     // a 2-regular class C with e_B(C) != 0 and omega(C+) != 0
  std::optional<PermGroup> defect_group;  // Sylow 2-subgroup of C_G(c), c in defect_class
  bool is_real = false;
  bool is_principal = false;
  std::vector<int> real_defect_classes;  // empty unless real
  std::optional<DefectCouple> couple;    // real blocks only
};

// Coefficients of e_B on each class, in the residue field of the table.
using IdempotentSupport = std::vector<GF2m>;

// Residue field degree shared by every value reduced from this table.
int table_field_degree(const CharacterTable& T);

// Blocks ordered by their least character; the principal block is first.
// Defect groups, real defect classes and couples are filled in.
std::vector<BlockData> block_partition(const CharacterTable& T);

IdempotentSupport block_idempotent_mod2(const CharacterTable& T, const BlockData& B);

// Throws NotRealBlock unless B is closed under complex conjugation.
std::vector<int> real_defect_classes(const CharacterTable& T, const BlockData& B);

// c is the least element of the first real defect class; E a Sylow
// 2-subgroup of C*(c), D = E n C(c). Throws NotRealBlock.
DefectCouple defect_couple(const CharacterTable& T, const BlockData& B);
// Couple computed from a given element c.
DefectCouple couple_from_element(const PermGroup& G, int c);

// Couples from every element of every real defect class are simultaneously
// G-conjugate to the first. Exhaustive conjugator search.
bool couple_conjugacy_check(const CharacterTable& T, const BlockData& B);

// Heights ν(chi(1)) - (ν|G| - defect), per character of B.
std::vector<int> block_heights(const CharacterTable& T, const BlockData& B);

// Label like "B0" or "B2[1,1,5,5,6]".
std::string block_label(const CharacterTable& T, const BlockData& B);

}  // namespace wb
