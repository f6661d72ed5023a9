#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wb {

// Bit vector over GF(2); bit j lives in word j / 64.
using BitVec = std::vector<std::uint64_t>;

inline int words_for(int n) { return (n + 63) / 64; }
inline bool bit(const BitVec& v, int j) { return (v[j >> 6] >> (j & 63)) & 1; }
inline void set_bit(BitVec& v, int j) { v[j >> 6] |= std::uint64_t(1) << (j & 63); }
inline void flip_bit(BitVec& v, int j) { v[j >> 6] ^= std::uint64_t(1) << (j & 63); }
void xor_into(BitVec& a, const BitVec& b);
bool is_zero(const BitVec& v);
int first_bit(const BitVec& v);  // -1 when zero
int popcount(const BitVec& v);

// Dense row-major matrix over GF(2). Vectors are rows and matrices act on
// the right, matching the right action of groups on modules.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(int rows, int cols);
  static Mat2 identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return bit(data_[r], c); }
  void set(int r, int c, bool v);
  const BitVec& row(int r) const { return data_[r]; }
  BitVec& row(int r) { return data_[r]; }
  void append_row(const BitVec& v);

  Mat2 transpose() const;
  Mat2 inverse() const;  // throws std::domain_error when singular
  int rank() const;
  bool is_zero() const;
  bool is_identity() const;

  Mat2& operator+=(const Mat2& o);
  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_; }

  // Plain text: "rows cols" then one line of hex per row; hex digit k holds
  // columns 4k..4k+3 with column 4k in its most significant bit.
  void write(std::ostream& os) const;
  static Mat2 read(std::istream& is);  // throws ParseError

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BitVec> data_;
};

BitVec vec_times(const BitVec& v, const Mat2& A);
Mat2 mat_pow(Mat2 A, unsigned long long e);

// Reduced echelon basis of a growing subspace of GF(2)^n. Every stored row
// remembers which inserted vectors it combines, so membership tests also
// return coordinates relative to the insertion order.
class Span {
 public:
  explicit Span(int n = 0) : n_(n) {}
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // Inserts v unless it is already in the span; returns whether it was new.
  bool add(const BitVec& v);
  bool contains(const BitVec& v) const;
  // Coordinates of v over the inserted vectors; false if v is not in the span.
  bool coords(const BitVec& v, BitVec& out) const;
  // v with every pivot column cleared.
  BitVec reduce(const BitVec& v) const;
  const std::vector<BitVec>& inserted() const { return basis_; }
  const std::vector<int>& pivots() const { return piv_; }

 private:
  int n_;
  std::vector<BitVec> basis_;  // inserted vectors, in order
  std::vector<BitVec> ech_;    // echelon rows
  std::vector<BitVec> comb_;   // ech_[i] = sum over set bits b of comb_[i] of basis_[b]
  std::vector<int> piv_;       // pivot column of ech_[i]
};

// Rows spanning {v : v A = 0}.
Mat2 left_nullspace(const Mat2& A);
// Rows forming a basis of the row space of A.
Mat2 row_space(const Mat2& A);

}  // namespace wb
