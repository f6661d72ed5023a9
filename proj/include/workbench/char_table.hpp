#pragma once

#include <memory>
#include <vector>

#include "workbench/exact_arith.hpp"
#include "workbench/perm_group.hpp"

namespace wb {

constexpr int kMaxClasses = 60;

// Ordinary character table. Classes follow PermGroup::classes(); characters
// are sorted by degree, the trivial character first, then by values.
class CharacterTable {
 public:
  // Throws CapExceeded above kMaxClasses classes.
  static CharacterTable compute(const PermGroup& G);

  const PermGroup& group() const { return *group_; }
  std::shared_ptr<const PermGroup> group_ptr() const { return group_; }
  int num_classes() const { return static_cast<int>(sizes_.size()); }
  int num_chars() const { return static_cast<int>(chars_.size()); }
  const std::vector<std::vector<Cyclotomic>>& chars() const { return chars_; }
  const Cyclotomic& value(int chi, int cls) const { return chars_[chi][cls]; }
  long long degree(int chi) const { return degrees_[chi]; }
  const std::vector<long long>& degrees() const { return degrees_; }
  std::size_t class_size(int cls) const { return sizes_[cls]; }
  std::size_t centralizer_order(int cls) const { return group_->order() / sizes_[cls]; }
  const std::vector<int>& powermap2() const { return pow2_; }
  const std::vector<int>& inverse_map() const { return inv_; }
  std::vector<int> power_map(long long k) const;  // class -> class of k-th powers
  long long exponent() const { return exponent_; }
  long long prime() const { return prime_; }  // the modulus used for the eigenvectors

  // (1/|G|) sum_g chi(g^2); throws NonIndicatorValue unless it is -1, 0 or 1.
  int fs_indicator(int chi) const;
  std::vector<int> fs_vector() const;
  bool is_real(int chi) const;
  // Fixed by every Galois automorphism that fixes the 2-power roots of unity.
  bool is_2rational(int chi) const;
  int conjugate(int chi) const;  // index of the complex conjugate character

 private:
  std::shared_ptr<const PermGroup> group_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<Cyclotomic>> chars_;
  std::vector<long long> degrees_;
  std::vector<int> pow2_, inv_;
  long long exponent_ = 1;
  long long prime_ = 0;
};

// Least prime p = 1 mod e with p > bound.
long long dixon_prime(long long e, double bound);

}  // namespace wb
