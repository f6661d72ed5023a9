#include "workbench/mod2_rep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <random>

#include "workbench/errors.hpp"

namespace wb {
namespace {

// ---- polynomials over GF(2), bit i = coefficient of x^i ----

int pdeg(const BitVec& p) {
  for (int w = static_cast<int>(p.size()) - 1; w >= 0; --w)
    if (p[w]) return w * 64 + 63 - std::countl_zero(p[w]);
  return -1;
}

BitVec pmul(const BitVec& a, const BitVec& b) {
  const int da = pdeg(a), db = pdeg(b);
  if (da < 0 || db < 0) return BitVec(1, 0);
  BitVec r(words_for(da + db + 1), 0);
  for (int i = 0; i <= da; ++i)
    if (bit(a, i))
      for (int j = 0; j <= db; ++j)
        if (bit(b, j)) flip_bit(r, i + j);
  return r;
}

bool divides(std::uint32_t q, const BitVec& p0) {
  const int dq = 31 - std::countl_zero(q);
  BitVec p = p0;
  for (int i = pdeg(p); i >= dq; --i)
    if (bit(p, i))
      for (int k = 0; k <= dq; ++k)
        if ((q >> k) & 1) flip_bit(p, i - dq + k);
  return is_zero(p);
}

// Irreducible polynomials of degree 1..12, by increasing degree.
const std::vector<std::uint32_t>& small_irreducibles() {
  static const std::vector<std::uint32_t> list = [] {
    std::vector<std::uint32_t> out;
    for (int d = 1; d <= 12; ++d)
      for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
        bool irr = true;
        for (std::uint32_t r : out) {
          int dr = 31 - std::countl_zero(r);
          if (2 * dr > d) break;
          BitVec qv(1, q);
          if (divides(r, qv)) {
            irr = false;
            break;
          }
        }
        if (irr) out.push_back(q);
      }
    return out;
  }();
  return list;
}

// Characteristic polynomial as the product of relative minimal polynomials
// of Krylov chains.
BitVec charpoly(const Mat2& A) {
  const int n = A.rows();
  std::vector<BitVec> rows, comb;
  std::vector<int> piv;
  BitVec total(1, 1);
  auto reduce = [&](BitVec& v, BitVec& c) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (bit(v, piv[i])) {
        xor_into(v, rows[i]);
        xor_into(c, comb[i]);
      }
  };
  for (int j = 0; j < n && static_cast<int>(rows.size()) < n; ++j) {
    BitVec w(words_for(n), 0);
    set_bit(w, j);
    {
      BitVec c(words_for(n + 1), 0), t = w;
      reduce(t, c);
      if (is_zero(t)) continue;
    }
    for (auto& c : comb) std::fill(c.begin(), c.end(), 0);  // older chains count as zero
    for (int m = 0;; ++m) {
      BitVec c(words_for(n + 1), 0), t = w;
      reduce(t, c);
      if (is_zero(t)) {
        set_bit(c, m);
        total = pmul(total, c);
        break;
      }
      set_bit(c, m);
      rows.push_back(t);
      comb.push_back(c);
      piv.push_back(first_bit(t));
      w = vec_times(w, A);
    }
  }
  return total;
}

Mat2 poly_eval(std::uint32_t q, const Mat2& A) {
  const int n = A.rows();
  Mat2 R(n, n);
  for (int i = 31 - std::countl_zero(q); i >= 0; --i) {
    R = R * A;
    if ((q >> i) & 1) R += Mat2::identity(n);
  }
  return R;
}

Mat2 spin_with(const std::vector<Mat2>& gens, int n, const Mat2& seeds) {
  Span S(n);
  Mat2 out(0, n);
  std::vector<BitVec> queue;
  for (int i = 0; i < seeds.rows(); ++i)
    if (S.add(seeds.row(i))) queue.push_back(seeds.row(i));
  for (size_t q = 0; q < queue.size(); ++q)
    for (auto& A : gens) {
      BitVec w = vec_times(queue[q], A);
      if (S.add(w)) queue.push_back(std::move(w));
    }
  for (auto& v : queue) out.append_row(v);
  return out;
}

Mat2 single_row(const BitVec& v, int n) {
  Mat2 m(0, n);
  m.append_row(v);
  return m;
}

// A proper nonzero submodule, or nothing when M is irreducible (Norton's
// criterion with the Holt-Rees choice of a factor whose nullity equals its
// degree).
std::optional<Mat2> find_submodule(const GF2Module& M, std::mt19937_64& rng) {
  const int n = M.dim;
  if (n <= 1) return std::nullopt;
  if (M.gens.empty()) {
    Mat2 s(1, n);
    s.set(0, 0, true);
    return s;
  }
  std::vector<Mat2> words = M.gens;
  std::vector<Mat2> gT;
  for (auto& A : M.gens) gT.push_back(A.transpose());
  for (int attempt = 0; attempt < 400; ++attempt) {
    if (words.size() < 48) {
      std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
      words.push_back(words[pick(rng)] * words[pick(rng)]);
    }
    Mat2 a(n, n);
    for (auto& w : words)
      if (rng() & 1) a += w;
    if (a.is_zero()) continue;
    BitVec cp = charpoly(a);
    for (std::uint32_t q : small_irreducibles()) {
      const int dq = 31 - std::countl_zero(q);
      if (dq > n) break;
      if (!divides(q, cp)) continue;
      Mat2 N = poly_eval(q, a);
      Mat2 null = left_nullspace(N);
      if (null.rows() == 0) continue;
      Mat2 S = spin_with(M.gens, n, single_row(null.row(0), n));
      if (S.rows() < n) return S;
      if (null.rows() != dq) continue;
      Mat2 nullT = left_nullspace(N.transpose());
      Mat2 W = spin_with(gT, n, single_row(nullT.row(0), n));
      if (W.rows() < n) return left_nullspace(W.transpose());
      return std::nullopt;
    }
  }
  throw std::logic_error("MeatAxe found no decisive algebra element");
}

void collect_factors(const GF2Module& M, std::mt19937_64& rng, std::vector<GF2Module>& out) {
  if (M.dim == 0) return;
  auto S = find_submodule(M, rng);
  if (!S) {
    out.push_back(M);
    return;
  }
  collect_factors(restrict_module(M, *S), rng, out);
  collect_factors(quotient_module(M, *S), rng, out);
}

std::vector<Mat2> element_matrices(const PermGroup& G, const GF2Module& M) {
  const int n = static_cast<int>(G.order());
  std::vector<int> gi;
  for (auto& g : G.generators()) gi.push_back(G.require_index(g));
  if (gi.size() != M.gens.size()) throw std::logic_error("module and group generators differ in number");
  std::vector<std::optional<Mat2>> rho(n);
  rho[0] = Mat2::identity(M.dim);
  std::vector<int> queue{0};
  for (size_t q = 0; q < queue.size(); ++q)
    for (size_t k = 0; k < gi.size(); ++k) {
      int y = G.mul(queue[q], gi[k]);
      if (!rho[y]) {
        rho[y] = *rho[queue[q]] * M.gens[k];
        queue.push_back(y);
      }
    }
  std::vector<Mat2> out;
  for (auto& r : rho) out.push_back(std::move(*r));
  return out;
}

GF2Module conjugation_module(const PermGroup& G, std::vector<int> pts) {
  std::sort(pts.begin(), pts.end());
  std::map<int, int> pos;
  for (size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
  GF2Module M;
  M.dim = static_cast<int>(pts.size());
  M.labels = pts;
  for (auto& g : G.generators()) {
    int gi = G.require_index(g);
    Mat2 A(M.dim, M.dim);
    for (int i = 0; i < M.dim; ++i) A.set(i, pos.at(G.conj(pts[i], gi)), true);
    M.gens.push_back(std::move(A));
  }
  return M;
}

bool is_local_algebra(const std::vector<Mat2>& basis, int n) {
  const int e = static_cast<int>(basis.size());
  for (std::uint32_t mask = 1; mask < (1u << e); ++mask) {
    Mat2 x(n, n);
    for (int i = 0; i < e; ++i)
      if ((mask >> i) & 1) x += basis[i];
    if (x.rank() == n) continue;
    if (!mat_pow(x, n).is_zero()) return false;
  }
  return true;
}

void split_rec(const GF2Module& M, const Mat2& amb, std::mt19937_64& rng, std::vector<std::pair<GF2Module, Mat2>>& out,
               std::vector<bool>& cert) {
  const int n = M.dim;
  auto End = hom_space(M, M);
  const int e = static_cast<int>(End.size());
  if (e > 1) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
      Mat2 x(n, n);
      for (auto& b : End)
        if (coin(rng)) x += b;
      Mat2 y = mat_pow(x, n);
      int r = y.rank();
      if (r == 0 || r == n) continue;
      Mat2 im = row_space(y), ker = left_nullspace(y);
      split_rec(restrict_module(M, im), im * amb, rng, out, cert);
      split_rec(restrict_module(M, ker), ker * amb, rng, out, cert);
      return;
    }
  }
  out.emplace_back(M, amb);
  cert.push_back(e == 1 || (e <= 10 && is_local_algebra(End, n)));
}

// Indecomposables M1, M2 are isomorphic iff some composite M1 -> M2 -> M1
// of basis homomorphisms is invertible (End(M1) is local).
bool indecomposables_isomorphic(const GF2Module& A, const GF2Module& B) {
  if (A.dim != B.dim) return false;
  auto f = hom_space(A, B);
  if (f.empty()) return false;
  auto g = hom_space(B, A);
  for (auto& x : f)
    for (auto& y : g)
      if ((x * y).rank() == A.dim) return true;
  return false;
}

int nu_ll(long long x) { return nu(x); }

}  // namespace

GF2Module involution_perm_module(const PermGroup& G, std::size_t cap) {
  auto inv = G.involutions();
  if (inv.size() > cap) throw CapExceeded(std::to_string(inv.size()) + " involutions exceed the cap of " + std::to_string(cap));
  return conjugation_module(G, inv);
}

GF2Module class_perm_module(const PermGroup& G, int x) { return conjugation_module(G, G.classes()[G.class_of(x)].members); }

Mat2 group_algebra_matrix(const PermGroup& G, const GF2Module& M, const IdempotentSupport& coeff) {
  for (auto& c : coeff)
    if (!c.in_prime_field()) throw FieldTooSmall("idempotent coefficient " + c.str() + " lies outside GF(2)");
  auto rho = element_matrices(G, M);
  Mat2 E(M.dim, M.dim);
  for (int l = 0; l < static_cast<int>(coeff.size()); ++l)
    if (coeff[l].is_one())
      for (int g : G.classes()[l].members) E += rho[g];
  return E;
}

Submodule block_cut(const PermGroup& G, const GF2Module& M, const IdempotentSupport& supp) {
  Mat2 E = group_algebra_matrix(G, M, supp);
  if (!(E * E == E)) throw NotIdempotent("block idempotent does not square to itself on the module");
  for (auto& A : M.gens)
    if (!(A * E == E * A)) throw NotIdempotent("block idempotent is not central on the module");
  Submodule s;
  s.basis = row_space(E);
  s.module = restrict_module(M, s.basis);
  return s;
}

GF2Module restrict_module(const GF2Module& M, const Mat2& basis) {
  Span S(M.dim);
  for (int i = 0; i < basis.rows(); ++i)
    if (!S.add(basis.row(i))) throw std::logic_error("submodule basis is dependent");
  GF2Module R;
  R.dim = basis.rows();
  for (auto& A : M.gens) {
    Mat2 B(R.dim, R.dim);
    BitVec c;
    for (int i = 0; i < R.dim; ++i) {
      if (!S.coords(vec_times(basis.row(i), A), c)) throw std::logic_error("subspace is not invariant");
      for (int j = 0; j < R.dim; ++j)
        if (bit(c, j)) B.set(i, j, true);
    }
    R.gens.push_back(std::move(B));
  }
  return R;
}

GF2Module quotient_module(const GF2Module& M, const Mat2& basis) {
  Span S(M.dim);
  for (int i = 0; i < basis.rows(); ++i) S.add(basis.row(i));
  std::vector<char> is_piv(M.dim, 0);
  for (int p : S.pivots()) is_piv[p] = 1;
  std::vector<int> comp;
  for (int j = 0; j < M.dim; ++j)
    if (!is_piv[j]) comp.push_back(j);
  GF2Module Q;
  Q.dim = static_cast<int>(comp.size());
  for (auto& A : M.gens) {
    Mat2 B(Q.dim, Q.dim);
    for (int i = 0; i < Q.dim; ++i) {
      BitVec r = S.reduce(A.row(comp[i]));
      for (int j = 0; j < Q.dim; ++j)
        if (bit(r, comp[j])) B.set(i, j, true);
    }
    Q.gens.push_back(std::move(B));
  }
  return Q;
}

Mat2 spin(const GF2Module& M, const Mat2& seeds) { return spin_with(M.gens, M.dim, seeds); }

std::vector<Mat2> hom_space(const GF2Module& M, const GF2Module& N) {
  const int n = M.dim, m = N.dim, k = static_cast<int>(M.gens.size());
  if (n == 0 || m == 0) return {};
  // Spinning basis b_t of M: seeds plus images b_parent * gen.
  struct Node {
    int parent = -1, gen = -1, seed = -1;
  };
  Span S(n);
  std::vector<BitVec> b;
  std::vector<Node> nodes;
  int seeds = 0;
  for (int j = 0; j < n; ++j) {
    BitVec e(words_for(n), 0);
    set_bit(e, j);
    if (!S.add(e)) continue;
    size_t start = b.size();
    b.push_back(e);
    nodes.push_back({-1, -1, seeds++});
    for (size_t q = start; q < b.size(); ++q)
      for (int g = 0; g < k; ++g) {
        BitVec w = vec_times(b[q], M.gens[g]);
        if (S.add(w)) {
          b.push_back(std::move(w));
          nodes.push_back({static_cast<int>(q), g, -1});
        }
      }
  }
  // Conditions phi(b_t A_g) = phi(b_t) B_g for the non-tree edges.
  struct Check {
    int t, g;
    BitVec c;
  };
  std::vector<Check> checks;
  std::vector<std::vector<char>> tree(n, std::vector<char>(k, 0));
  for (int t = 0; t < n; ++t)
    if (nodes[t].parent >= 0) tree[nodes[t].parent][nodes[t].gen] = 1;
  for (int t = 0; t < n; ++t)
    for (int g = 0; g < k; ++g) {
      if (tree[t][g]) continue;
      Check ch{t, g, {}};
      S.coords(vec_times(b[t], M.gens[g]), ch.c);
      checks.push_back(std::move(ch));
    }
  const int U = seeds * m;
  const int L = static_cast<int>(checks.size()) * m;
  std::vector<std::vector<BitVec>> imgs(U);
  Mat2 defect(U, std::max(L, 1));
  for (int u = 0; u < U; ++u) {
    const int s = u / m, j = u % m;
    auto& im = imgs[u];
    im.assign(n, BitVec(words_for(m), 0));
    for (int t = 0; t < n; ++t) {
      if (nodes[t].seed >= 0) {
        if (nodes[t].seed == s) set_bit(im[t], j);
      } else {
        im[t] = vec_times(im[nodes[t].parent], N.gens[nodes[t].gen]);
      }
    }
    for (size_t ci = 0; ci < checks.size(); ++ci) {
      const auto& ch = checks[ci];
      BitVec d = vec_times(im[ch.t], N.gens[ch.g]);
      for (int q = 0; q < n; ++q)
        if (bit(ch.c, q)) xor_into(d, im[q]);
      for (int x = 0; x < m; ++x)
        if (bit(d, x)) defect.set(u, static_cast<int>(ci) * m + x, true);
    }
  }
  Mat2 ker = left_nullspace(defect);
  Mat2 Bmat(0, n);
  for (auto& v : b) Bmat.append_row(v);
  Mat2 Binv = Bmat.inverse();
  std::vector<Mat2> out;
  for (int r = 0; r < ker.rows(); ++r) {
    Mat2 Phi(n, m);
    for (int u = 0; u < U; ++u)
      if (bit(ker.row(r), u))
        for (int t = 0; t < n; ++t) xor_into(Phi.row(t), imgs[u][t]);
    out.push_back(Binv * Phi);
  }
  return out;
}

std::vector<FactorClass> meataxe_factors(const GF2Module& M, std::uint64_t seed) {
  if (M.dim > kMaxMeatAxeDim) throw CapExceeded("module dimension " + std::to_string(M.dim) + " exceeds the MeatAxe cap");
  std::mt19937_64 rng(seed);
  std::vector<GF2Module> irr;
  collect_factors(M, rng, irr);
  std::vector<FactorClass> classes;
  for (auto& S : irr) {
    bool placed = false;
    for (auto& c : classes)
      if (c.dim == S.dim && !hom_space(S, c.module).empty()) {
        ++c.multiplicity;
        placed = true;
        break;
      }
    if (!placed) classes.push_back({S.dim, 1, static_cast<int>(hom_space(S, S).size()), S});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const FactorClass& a, const FactorClass& b) { return a.dim < b.dim; });
  return classes;
}

bool is_irreducible(const GF2Module& M, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return M.dim > 0 && !find_submodule(M, rng);
}

std::vector<std::pair<int, int>> absolute_factors(const std::vector<FactorClass>& f) {
  std::vector<std::pair<int, int>> out;
  for (auto& c : f)
    for (int i = 0; i < c.end_degree; ++i) out.emplace_back(c.dim / c.end_degree, c.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SummandClass> summand_split(const GF2Module& M, std::uint64_t seed) {
  if (M.dim > kMaxSplitDim) throw CapExceeded("module dimension " + std::to_string(M.dim) + " exceeds the splitting cap");
  std::vector<SummandClass> classes;
  if (M.dim == 0) return classes;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<GF2Module, Mat2>> parts;
  std::vector<bool> cert;
  split_rec(M, Mat2::identity(M.dim), rng, parts, cert);
  for (size_t i = 0; i < parts.size(); ++i) {
    auto& [P, basis] = parts[i];
    bool placed = false;
    for (auto& c : classes)
      if (indecomposables_isomorphic(P, c.module)) {
        ++c.multiplicity;
        c.bases.push_back(basis);
        c.certified = c.certified && cert[i];
        placed = true;
        break;
      }
    if (!placed) classes.push_back({P.dim, 1, static_cast<bool>(cert[i]), P, {basis}});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const SummandClass& a, const SummandClass& b) { return a.dim < b.dim; });
  return classes;
}

int summand_count(const std::vector<SummandClass>& s) {
  int n = 0;
  for (auto& c : s) n += c.multiplicity;
  return n;
}

bool self_dual_check(const Submodule& cut) {
  const Mat2& S = cut.basis;
  if (S.rows() == 0) return true;
  Mat2 gram = S * S.transpose();
  if (gram.rank() != S.rows()) return false;
  for (auto& A : cut.module.gens)
    if (!(A * gram * A.transpose() == gram)) return false;
  return true;
}

bool o2_principal_check(const CharacterTable& T, int t) {
  const PermGroup& G = T.group();
  if (G.element_order(t) > 2) throw NotInO2("element is not an involution");
  if (!G.o2().contains(G.element(t))) throw NotInO2("involution does not lie in O_2(G)");
  GF2Module M = class_perm_module(G, t);
  auto blocks = block_partition(T);
  for (auto& B : blocks) {
    auto e = block_idempotent_mod2(T, B);
    if (B.is_principal) {
      if (!group_algebra_matrix(G, M, e).is_identity()) return false;
      continue;
    }
    if (std::all_of(e.begin(), e.end(), [](const GF2m& x) { return x.in_prime_field(); }) &&
        !group_algebra_matrix(G, M, e).is_zero())
      return false;
  }
  return true;
}

ValuationReport dimension_valuation_check(const CharacterTable& T, const BlockData& B, std::uint64_t seed) {
  if (!B.couple) throw NotRealBlock("valuation check needs a real block with a couple");
  const PermGroup& G = T.group();
  const PermGroup& D = B.couple->D;
  const PermGroup& E = B.couple->E;
  const int nuG = nu_ll(static_cast<long long>(G.order()));
  const int nuD = nu_ll(static_cast<long long>(D.order()));
  auto supp = block_idempotent_mod2(T, B);
  ValuationReport rep;
  for (int l = 0; l < T.num_classes(); ++l) {
    const auto& C = G.classes()[l];
    if (C.element_order > 2) continue;
    int best = -1;
    for (int x : C.members) {
      const Perm& tp = G.element(x);
      if (!E.contains(tp)) continue;
      bool generates = E.order() == D.order() ? D.contains(tp) : !D.contains(tp);
      if (!generates) continue;
      long long cd = 0;
      for (auto& y : D.elements()) cd += (y * tp == tp * y);
      best = std::max(best, nu_ll(cd));
    }
    Submodule cut = block_cut(G, class_perm_module(G, C.representative), supp);
    auto parts = summand_split(cut.module, seed);
    for (auto& p : parts)
      for (int i = 0; i < p.multiplicity; ++i) {
        ValuationRow row;
        row.involution_class = l;
        row.dim = p.dim;
        row.nu_dim = nu_ll(p.dim);
        row.bound_index = nuG - nuD;
        row.admissible_t = best >= 0;
        row.bound_vertex = best >= 0 ? nuG - best : nuG + 1;
        row.ok = row.admissible_t && row.nu_dim >= row.bound_index && row.nu_dim >= row.bound_vertex;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(row);
      }
  }
  return rep;
}

}  // namespace wb
