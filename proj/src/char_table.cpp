#include "workbench/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "workbench/errors.hpp"

namespace wb {
namespace {

using i64 = long long;
using Vec = std::vector<i64>;

i64 mod(i64 a, i64 p) { return ((a % p) + p) % p; }

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e) {
    if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % p);
    b = static_cast<i64>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> fac;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (i64 g = 2; g < p; ++g)
    if (std::all_of(fac.begin(), fac.end(), [&](i64 q) { return powmod(g, (p - 1) / q, p) != 1; })) return g;
  return 1;
}

// Rows of `rows` reduced to reduced row-echelon form; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, i64 p) {
  std::vector<int> piv;
  size_t r = 0;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    i64 iv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * iv % p;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      i64 f = rows[o][c];
      for (size_t k = c; k < ncols; ++k) rows[o][k] = mod(rows[o][k] - f * rows[r][k], p);
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return piv;
}

// Null space of the square matrix A (row-major), as a list of vectors.
std::vector<Vec> kernel(std::vector<Vec> A, i64 p) {
  const size_t n = A.size();
  auto piv = rref(A, p);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec> out;
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = mod(-A[r][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial det(xI - A), constant term first, via reduction
// to upper Hessenberg form.
Vec charpoly(std::vector<Vec> H, i64 p) {
  const int n = static_cast<int>(H.size());
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (H[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][m]);
    }
    i64 iv = invmod(H[m][m - 1], p);
    for (int i = m + 1; i < n; ++i) {
      i64 u = H[i][m - 1] * iv % p;
      if (!u) continue;
      for (int j = 0; j < n; ++j) H[i][j] = mod(H[i][j] - u * H[m][j], p);
      for (int j = 0; j < n; ++j) H[j][m] = (H[j][m] + u * H[j][i]) % p;
    }
  }
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // P_k = (x - h_kk) P_{k-1} - sum_i h_ik (prod_{m=i+1..k} h_{m,m-1}) P_{i-1}
    Vec q(k + 1, 0);
    for (int t = 0; t < k; ++t) {
      q[t + 1] = (q[t + 1] + P[k - 1][t]) % p;
      q[t] = mod(q[t] - H[k - 1][k - 1] * P[k - 1][t], p);
    }
    i64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = prod * H[i][i - 1] % p;
      i64 c = H[i - 1][k - 1] * prod % p;
      if (!c) continue;
      for (size_t t = 0; t < P[i - 1].size(); ++t) q[t] = mod(q[t] - c * P[i - 1][t], p);
    }
    P[k] = std::move(q);
  }
  return P[n];
}

struct Subspace {
  std::vector<Vec> basis;  // rows; basis[c][piv[c']] = delta
  std::vector<int> piv;
};

}  // namespace

long long dixon_prime(long long e, double bound) {
  long long p = e + 1;
  while (p <= bound || !is_prime(p)) p += e;
  return p;
}

CharacterTable CharacterTable::compute(const PermGroup& G) {
  CharacterTable T;
  T.group_ = std::make_shared<PermGroup>(G);
  const PermGroup& g = *T.group_;
  const auto& cls = g.classes();
  const int r = static_cast<int>(cls.size());
  if (r > kMaxClasses) throw CapExceeded("more than " + std::to_string(kMaxClasses) + " classes");
  const i64 order = static_cast<i64>(g.order());
  for (auto& c : cls) T.sizes_.push_back(c.size());
  T.exponent_ = g.exponent();
  T.inv_.resize(r);
  for (int l = 0; l < r; ++l) T.inv_[l] = g.class_of(g.inv(cls[l].representative));
  T.pow2_ = T.power_map(2);

  const i64 p = dixon_prime(T.exponent_, 4.0 * std::sqrt(static_cast<double>(order)));
  T.prime_ = p;

  // a[j][k][l] = #{(x, y) : x in C_j, y in C_k, xy = z_l}
  std::vector<std::vector<Vec>> a(r, std::vector<Vec>(r, Vec(r, 0)));
  for (int l = 0; l < r; ++l) {
    int z = cls[l].representative;
    for (int x = 0; x < static_cast<int>(order); ++x) {
      int y = g.mul(g.inv(x), z);
      ++a[g.class_of(x)][g.class_of(y)][l];
    }
  }

  // Common eigenvectors of the class matrices (M_j)[k][l] = a[j][k][l].
  std::vector<Subspace> work(1);
  for (int c = 0; c < r; ++c) {
    Vec v(r, 0);
    v[c] = 1;
    work[0].basis.push_back(v);
    work[0].piv.push_back(c);
  }
  for (int j = 1; j < r; ++j) {
    std::vector<Subspace> next;
    for (auto& W : work) {
      const int m = static_cast<int>(W.basis.size());
      if (m == 1) {
        next.push_back(std::move(W));
        continue;
      }
      std::vector<Vec> R(m, Vec(m, 0));
      for (int c = 0; c < m; ++c) {
        Vec w(r, 0);
        for (int k = 0; k < r; ++k) {
          i64 s = 0;
          for (int l = 0; l < r; ++l) s += a[j][k][l] % p * W.basis[c][l] % p;
          w[k] = s % p;
        }
        for (int c2 = 0; c2 < m; ++c2) R[c2][c] = w[W.piv[c2]];
      }
      Vec cp = charpoly(R, p);
      std::vector<i64> roots;
      for (i64 lam = 0; lam < p; ++lam) {
        i64 v = 0;
        for (int t = m; t >= 0; --t) v = (v * lam + cp[t]) % p;
        if (v == 0) roots.push_back(lam);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(W));
        continue;
      }
      int total = 0;
      for (i64 lam : roots) {
        auto A = R;
        for (int i = 0; i < m; ++i) A[i][i] = mod(A[i][i] - lam, p);
        auto K = kernel(A, p);
        Subspace S;
        for (auto& kv : K) {
          Vec u(r, 0);
          for (int c = 0; c < m; ++c)
            if (kv[c])
              for (int k = 0; k < r; ++k) u[k] = (u[k] + kv[c] * W.basis[c][k]) % p;
          S.basis.push_back(std::move(u));
        }
        S.piv = rref(S.basis, p);
        total += static_cast<int>(S.basis.size());
        next.push_back(std::move(S));
      }
      if (total != m) throw std::logic_error("class matrix is not diagonalizable mod p");
    }
    work = std::move(next);
  }
  if (static_cast<int>(work.size()) != r) throw std::logic_error("class sums failed to separate the characters");

  const i64 gen = primitive_root(p);
  const i64 ze = powmod(gen, (p - 1) / T.exponent_, p);
  // classes of g^i for the representative g of each class
  std::vector<std::vector<int>> powcls(r);
  for (int l = 0; l < r; ++l) {
    int x = 0;
    for (int i = 0; i < cls[l].element_order; ++i) {
      powcls[l].push_back(g.class_of(x));
      x = g.mul(x, cls[l].representative);
    }
  }
  struct Row {
    long long deg;
    std::vector<Cyclotomic> vals;
  };
  std::vector<Row> rows;
  const i64 isq = static_cast<i64>(std::sqrt(static_cast<double>(order))) + 1;
  for (auto& W : work) {
    const Vec& w = W.basis[0];
    if (w[0] != 1) throw std::logic_error("eigenvector not normalized at the identity class");
    i64 s = 0;
    for (int l = 0; l < r; ++l)
      s = (s + w[l] * w[T.inv_[l]] % p * invmod(static_cast<i64>(T.sizes_[l]) % p, p)) % p;
    i64 d2 = order % p * invmod(s, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d <= isq; ++d)
      if (d * d % p == d2 && order % d == 0) {
        deg = d;
        break;
      }
    if (!deg) throw std::logic_error("no integral degree for an eigenvector");
    Vec chi(r);
    for (int l = 0; l < r; ++l) chi[l] = deg % p * w[l] % p * invmod(static_cast<i64>(T.sizes_[l]) % p, p) % p;
    Row row{deg, {}};
    for (int l = 0; l < r; ++l) {
      const int o = cls[l].element_order;
      const i64 zo = powmod(ze, T.exponent_ / o, p);
      const i64 oinv = invmod(o, p);
      std::vector<std::pair<long long, Rational>> terms;
      for (int k = 0; k < o; ++k) {
        i64 m = 0;
        const i64 step = powmod(zo, mod(-k, o), p);
        i64 zp = 1;
        for (int i = 0; i < o; ++i) {
          m = (m + chi[powcls[l][i]] * zp) % p;
          zp = zp * step % p;
        }
        m = m * oinv % p;
        if (m > deg) throw std::logic_error("eigenvalue multiplicity exceeds the degree");
        if (m) terms.emplace_back(k, Rational(static_cast<long>(m)));
      }
      row.vals.push_back(Cyclotomic::from_terms(o, terms));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.deg != y.deg) return x.deg < y.deg;
    for (size_t l = 0; l < x.vals.size(); ++l) {
      // larger values first, so the trivial character leads its degree
      int c = Cyclotomic::compare(x.vals[l], y.vals[l]);
      if (c) return c > 0;
    }
    return false;
  });
  long long sumsq = 0;
  for (auto& row : rows) {
    T.degrees_.push_back(row.deg);
    T.chars_.push_back(std::move(row.vals));
    sumsq += T.degrees_.back() * T.degrees_.back();
  }
  if (sumsq != order) throw std::logic_error("squared degrees do not sum to |G|");
  return T;
}

std::vector<int> CharacterTable::power_map(long long k) const {
  std::vector<int> m;
  for (auto& c : group_->classes()) m.push_back(group_->class_of(group_->power(c.representative, k)));
  return m;
}

int CharacterTable::fs_indicator(int chi) const {
  Cyclotomic s;
  for (int l = 0; l < num_classes(); ++l)
    s += chars_[chi][pow2_[l]] * Rational(static_cast<long>(sizes_[l]));
  s /= Rational(static_cast<long>(group_->order()));
  if (!s.is_rational()) throw NonIndicatorValue("indicator is irrational: " + s.str());
  Rational q = s.rational_value();
  if (q == 1) return 1;
  if (q == 0) return 0;
  if (q == -1) return -1;
  throw NonIndicatorValue("indicator value " + q.get_str());
}

std::vector<int> CharacterTable::fs_vector() const {
  std::vector<int> v;
  for (int c = 0; c < num_chars(); ++c) v.push_back(fs_indicator(c));
  return v;
}

bool CharacterTable::is_real(int chi) const {
  for (int l = 0; l < num_classes(); ++l)
    if (chars_[chi][inv_[l]] != chars_[chi][l]) return false;
  return true;
}

bool CharacterTable::is_2rational(int chi) const {
  const long long e = exponent_;
  const long long two = 1LL << nu(e);
  for (long long u = 1; u < e; u += two) {
    if (u == 1 || std::gcd(u, e) != 1) continue;
    auto pm = power_map(u);
    for (int l = 0; l < num_classes(); ++l)
      if (chars_[chi][pm[l]] != chars_[chi][l]) return false;
  }
  return true;
}

int CharacterTable::conjugate(int chi) const {
  for (int c = 0; c < num_chars(); ++c) {
    bool match = true;
    for (int l = 0; l < num_classes() && match; ++l) match = chars_[c][l] == chars_[chi][inv_[l]];
    if (match) return c;
  }
  throw std::logic_error("complex conjugate character not found");
}

}  // namespace wb
