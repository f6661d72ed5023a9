#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wb {

constexpr std::size_t kDefaultOrderCap = 10080;

// Reads WORKBENCH_CAP_ORDER, falling back to kDefaultOrderCap.
std::size_t configured_order_cap();

// A permutation of {0..degree-1}; composition is left-to-right:
// (a * b)[i] = b[a[i]], so points are acted on from the right.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);
  static Perm identity(int degree);
  // 0-based cycles, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // 1-based disjoint-cycle text such as "(1 2 3)(4,5)"; "()" is the identity.
  static Perm parse(const std::string& text, int degree = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }
  bool is_identity() const;
  Perm inverse() const;
  int order() const;
  Perm pow(long long k) const;
  Perm extended(int degree) const;  // fixes the new points
  std::string cycles_str() const;   // 1-based

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

struct ConjClass {
  int representative = 0;  // element index; the least index in the class
  std::vector<int> members;
  int element_order = 1;
  bool is_real = false;
  bool is_2regular = false;
  std::size_t size() const { return members.size(); }
};

// A finite permutation group with its full element list materialised at
// construction. Elements are indexed by their position in the sorted list,
// so index 0 is the identity. Immutable once built.
class PermGroup {
 public:
  PermGroup() = default;
  static PermGroup generate(const std::vector<Perm>& gens, int degree = -1,
                            std::size_t cap = configured_order_cap());
  // The elements must form a group; a small generating set is extracted.
  static PermGroup from_elements(const std::vector<Perm>& elems, int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(int i) const { return elems_[i]; }
  int index_of(const Perm& p) const;  // -1 when absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int require_index(const Perm& p) const;  // throws NotMember

  int mul(int i, int j) const;
  int inv(int i) const { return inv_[i]; }
  int conj(int x, int g) const;  // g^-1 x g
  int power(int x, long long k) const;
  int element_order(int i) const { return order_[i]; }
  int exponent() const;

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }

  PermGroup subgroup(const std::vector<Perm>& gens) const;
  PermGroup subgroup_from_indices(const std::vector<int>& idx) const;
  PermGroup centralizer(const Perm& g) const;
  PermGroup extended_centralizer(const Perm& g) const;
  PermGroup centralizer_of_subgroup(const PermGroup& H) const;
  PermGroup normalizer(const PermGroup& H) const;
  PermGroup center() const { return centralizer_of_subgroup(*this); }
  PermGroup derived_subgroup() const;
  PermGroup sylow2() const;
  PermGroup intersection(const PermGroup& H) const;
  // Largest normal 2-subgroup.
  PermGroup o2() const;
  std::vector<int> involutions() const;  // includes the identity
  bool is_subgroup_of(const PermGroup& H) const;
  bool same_elements(const PermGroup& H) const;
  bool is_normal_in(const PermGroup& H) const;

 private:
  void build_from_sorted();
  std::vector<int> conjugation_orbit(int x) const;

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<std::vector<int>> rmul_;     // rmul_[k][x] = x * gen_k
  std::vector<std::vector<int>> lmulinv_;  // lmulinv_[k][x] = gen_k^-1 * x
  std::vector<int> inv_;
  std::vector<int> order_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
};

// Read generators from text: one permutation per line, disjoint cycles,
// 1-based points; blank lines and '#' comments ignored.
std::vector<Perm> parse_generators(const std::string& text);
PermGroup group_from_file(const std::string& path);

}  // namespace wb
