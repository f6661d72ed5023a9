#pragma once

#include <compare>
#include <string>
#include <vector>

#include "workbench/perm_group.hpp"

namespace wb {

enum class ExtType { a, b, c, d, e, principal };
const char* ext_type_name(ExtType t);
ExtType parse_ext_type(const std::string& s);  // throws UsageError
constexpr ExtType kExtTypes[] = {ExtType::a, ExtType::b, ExtType::c, ExtType::d, ExtType::e};

// D_{2^d} = <s, t | s^n, t^2, (st)^2>, n = 2^{d-1}. Elements are coded as
// i + n*j for s^i t^j. Every realization below is right-regular on codes, so
// a permutation's image of point 0 is its own code.
struct DihedralFrame {
  int d = 3;
  int n = 4;
  PermGroup group;
  Perm s, t;

  Perm element(long long i, int j) const;  // s^i t^j
  Perm s_named(int i) const;               // s_i = s^{2^{d-1-i}}
  PermGroup S(int i) const;                // <s_i>, order 2^i; S(d-1) = <s>
  PermGroup X(int i) const;                // <s_{i-1}, t>, order 2^i
  PermGroup Y(int i) const;                // <s_{i-1}, st>, order 2^i
  PermGroup center() const { return S(1); }
};

DihedralFrame build_dihedral(int d);  // throws BadDegree for d < 3

// E = <D, e> with e^-1 y e = alpha(y) and e^2 = z.
struct ExtensionFrame {
  DihedralFrame frame;
  ExtType type = ExtType::principal;
  PermGroup E, D;  // D <= E, both in the right-regular action of E
  Perm s, t, e;    // e is the identity for the principal case

  Perm element(long long i, int j, int k) const;  // s^i t^j e^k
  int d() const { return frame.d; }
  int n() const { return frame.n; }
};

ExtensionFrame build_extension(const DihedralFrame& frame, ExtType type);

// Names a subgroup of D up to D-conjugacy: "1", "D", "S", "S_i", "X_i", "Y_i".
// The subgroup is given by its elements' codes.
std::string dihedral_subgroup_name(int d, const std::vector<int>& codes);
std::string dihedral_subgroup_name(const ExtensionFrame& ext, const PermGroup& Q);

struct Fingerprint {
  std::size_t order = 0;
  std::size_t involutions = 0;  // elements of order exactly 2
  int exponent = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  bool central_involution_outside = false;  // order-2 x in E\D centralizing D
  auto operator<=>(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const PermGroup& E, const PermGroup& D);

struct IsoClass {
  Fingerprint fp;
  ExtType type = ExtType::a;
  std::size_t realizations = 0;  // (alpha, z) pairs giving this class
};

// All E = <D, e> with [E:D] = 2, up to the fingerprint; d <= 7.
std::vector<IsoClass> census_degree2_extensions(const DihedralFrame& frame);

// Throws NotDihedral, BadIndex, Unclassifiable.
ExtType classify_extension(const PermGroup& D, const PermGroup& E);
bool is_dihedral_2group(const PermGroup& D);

struct EClassRow {
  std::string pattern;  // e, s_1e, s^ie, te, ste, s^ite, s_2e, ss_2te
  int param = -1;       // i for the indexed patterns
  std::string rep;      // concrete word, e.g. "s^3te"
  bool order2 = false;
  std::string centralizer;  // C_D(rep), named up to D-conjugacy
  std::size_t class_size = 0;
};

// The E-classes of E\D, one row per named representative; throws
// std::logic_error if the named representatives do not partition E\D.
std::vector<EClassRow> eclass_table(const ExtensionFrame& ext);

bool real_condition(const ExtensionFrame& ext, const PermGroup& Q);
bool strongly_real_condition(const ExtensionFrame& ext, const PermGroup& Q);

struct RealityEntry {
  std::string name;
  std::size_t order = 0;
  bool real = false;
  bool strongly_real = false;
  std::size_t conjugates = 0;  // number of subgroups in the D-class
};

// Every subgroup of D up to D-conjugacy, ordered by (order, name). Throws
// std::logic_error if a predicate is not constant on a D-class.
std::vector<RealityEntry> reality_pattern(const ExtensionFrame& ext);

enum class FusionCase { aa, ab, ba, bb };
const char* fusion_name(FusionCase f);
FusionCase parse_fusion(const std::string& s);
int fusion_l(FusionCase f);  // number of Brauer characters: 3, 2, 2, 1

// Columns (1,theta), (s_i,theta), (t,.), (st,.) that survive the fusion.
int count_columns(int d, FusionCase fusion);
// Of those, the real ones; nonreal_brauer counts nonreal theta among the
// (1,theta) columns, which the 2-group data cannot see.
int count_real_columns(int d, ExtType type, FusionCase fusion, int nonreal_brauer = 0);

}  // namespace wb
