#include "workbench/gf2_matrix.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "workbench/errors.hpp"

namespace wb {

void xor_into(BitVec& a, const BitVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

bool is_zero(const BitVec& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}

int first_bit(const BitVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i * 64 + std::countr_zero(v[i]));
  return -1;
}

int popcount(const BitVec& v) {
  int n = 0;
  for (auto w : v) n += std::popcount(w);
  return n;
}

Mat2::Mat2(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVec(words_for(cols), 0)) {}

Mat2 Mat2::identity(int n) {
  Mat2 m(n, n);
  for (int i = 0; i < n; ++i) set_bit(m.data_[i], i);
  return m;
}

void Mat2::set(int r, int c, bool v) {
  if (bit(data_[r], c) != v) flip_bit(data_[r], c);
}

void Mat2::append_row(const BitVec& v) {
  data_.push_back(v);
  data_.back().resize(words_for(cols_), 0);
  ++rows_;
}

Mat2 Mat2::transpose() const {
  Mat2 t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) set_bit(t.data_[c], r);
  return t;
}

Mat2 Mat2::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const int n = rows_;
  Mat2 a = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && !a.get(p, c)) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a.data_[p], a.data_[c]);
    std::swap(inv.data_[p], inv.data_[c]);
    for (int r = 0; r < n; ++r)
      if (r != c && a.get(r, c)) {
        xor_into(a.data_[r], a.data_[c]);
        xor_into(inv.data_[r], inv.data_[c]);
      }
  }
  return inv;
}

int Mat2::rank() const {
  Span s(cols_);
  for (auto& r : data_) s.add(r);
  return s.dim();
}

bool Mat2::is_zero() const {
  for (auto& r : data_)
    if (!wb::is_zero(r)) return false;
  return true;
}

bool Mat2::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

Mat2& Mat2::operator+=(const Mat2& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in +");
  for (int r = 0; r < rows_; ++r) xor_into(data_[r], o.data_[r]);
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch in *");
  Mat2 c(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) c.data_[r] = vec_times(a.data_[r], b);
  return c;
}

BitVec vec_times(const BitVec& v, const Mat2& A) {
  BitVec out(words_for(A.cols()), 0);
  for (size_t w = 0; w < v.size(); ++w) {
    std::uint64_t x = v[w];
    while (x) {
      int j = static_cast<int>(w * 64 + std::countr_zero(x));
      x &= x - 1;
      xor_into(out, A.row(j));
    }
  }
  return out;
}

Mat2 mat_pow(Mat2 A, unsigned long long e) {
  Mat2 r = Mat2::identity(A.rows());
  while (e) {
    if (e & 1) r = r * A;
    A = A * A;
    e >>= 1;
  }
  return r;
}

void Mat2::write(std::ostream& os) const {
  static const char* hex = "0123456789abcdef";
  os << rows_ << ' ' << cols_ << '\n';
  for (int r = 0; r < rows_; ++r) {
    std::string line;
    for (int k = 0; 4 * k < cols_; ++k) {
      int d = 0;
      for (int b = 0; b < 4; ++b)
        if (4 * k + b < cols_ && get(r, 4 * k + b)) d |= 8 >> b;
      line += hex[d];
    }
    os << line << '\n';
  }
}

Mat2 Mat2::read(std::istream& is) {
  int r = -1, c = -1;
  if (!(is >> r >> c) || r < 0 || c < 0) throw ParseError("bad matrix header");
  Mat2 m(r, c);
  for (int i = 0; i < r; ++i) {
    std::string line;
    if (!(is >> line) || static_cast<int>(line.size()) != (c + 3) / 4) throw ParseError("bad matrix row " + std::to_string(i));
    for (int k = 0; k < static_cast<int>(line.size()); ++k) {
      int d = std::stoi(std::string(1, line[k]), nullptr, 16);
      for (int b = 0; b < 4; ++b)
        if (d & (8 >> b)) {
          if (4 * k + b >= c) throw ParseError("bits beyond the last column");
          m.set(i, 4 * k + b, true);
        }
    }
  }
  return m;
}

bool Span::add(const BitVec& v0) {
  BitVec v = v0;
  BitVec comb(words_for(n_), 0);
  for (size_t i = 0; i < ech_.size(); ++i)
    if (bit(v, piv_[i])) {
      xor_into(v, ech_[i]);
      xor_into(comb, comb_[i]);
    }
  int p = first_bit(v);
  if (p < 0) return false;
  set_bit(comb, dim());
  // keep the echelon reduced: clear the new pivot from older rows
  for (size_t i = 0; i < ech_.size(); ++i)
    if (bit(ech_[i], p)) {
      xor_into(ech_[i], v);
      xor_into(comb_[i], comb);
    }
  basis_.push_back(v0);
  ech_.push_back(std::move(v));
  comb_.push_back(std::move(comb));
  piv_.push_back(p);
  return true;
}

BitVec Span::reduce(const BitVec& v0) const {
  BitVec v = v0;
  for (size_t i = 0; i < ech_.size(); ++i)
    if (bit(v, piv_[i])) xor_into(v, ech_[i]);
  return v;
}

bool Span::contains(const BitVec& v) const { return is_zero(reduce(v)); }

bool Span::coords(const BitVec& v0, BitVec& out) const {
  BitVec v = v0;
  out.assign(words_for(n_), 0);
  for (size_t i = 0; i < ech_.size(); ++i)
    if (bit(v, piv_[i])) {
      xor_into(v, ech_[i]);
      xor_into(out, comb_[i]);
    }
  return is_zero(v);
}

Mat2 left_nullspace(const Mat2& A) {
  // Gaussian elimination on the rows of A, tracking combinations.
  const int m = A.rows();
  std::vector<BitVec> rows(m), comb(m, BitVec(words_for(m), 0));
  for (int i = 0; i < m; ++i) {
    rows[i] = A.row(i);
    set_bit(comb[i], i);
  }
  int r = 0;
  for (int c = 0; c < A.cols() && r < m; ++c) {
    int p = r;
    while (p < m && !bit(rows[p], c)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(comb[p], comb[r]);
    for (int i = r + 1; i < m; ++i)
      if (bit(rows[i], c)) {
        xor_into(rows[i], rows[r]);
        xor_into(comb[i], comb[r]);
      }
    ++r;
  }
  Mat2 out(0, m);
  for (int i = r; i < m; ++i) out.append_row(comb[i]);
  return out;
}

Mat2 row_space(const Mat2& A) {
  Span s(A.cols());
  Mat2 out(0, A.cols());
  for (int i = 0; i < A.rows(); ++i)
    if (s.add(A.row(i))) out.append_row(A.row(i));
  return out;
}

}  // namespace wb
