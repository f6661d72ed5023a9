#include "workbench/pgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "workbench/errors.hpp"

namespace wb {
namespace {

// Arithmetic on dihedral codes x = i + n*j (s^i t^j).
struct Dih {
  int n;
  int mul(int x, int y) const {
    int i = x % n, j = x / n, k = y % n, l = y / n;
    int r = j ? i - k : i + k;
    r = ((r % n) + n) % n;
    return r + n * ((j + l) & 1);
  }
  int inv(int x) const { return x >= n ? x : (n - x) % n; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
};

// alpha(s^i t^j) = s^{a i + c j} t^j; a odd.
std::vector<int> aut_map(int n, int a, int c) {
  std::vector<int> m(2 * n);
  for (int x = 0; x < 2 * n; ++x) {
    int i = x % n, j = x / n;
    m[x] = static_cast<int>(((static_cast<long long>(a) * i + c * j) % n + n) % n) + n * j;
  }
  return m;
}

struct ExtData {
  int n;
  std::vector<int> alpha;
  int z;
};

ExtData standard_data(int d, ExtType type) {
  int n = 1 << (d - 1);
  switch (type) {
    case ExtType::a: return {n, aut_map(n, 1, 0), 0};
    case ExtType::b: return {n, aut_map(n, 1, 0), n / 2};
    case ExtType::c: return {n, aut_map(n, n - 1, n - 1), 0};
    case ExtType::d: return {n, aut_map(n, n - 1, n - 1), n / 2};
    case ExtType::e: return {n, aut_map(n, 1 + n / 2, 0), 0};
    default: throw std::logic_error("no extension data for the principal case");
  }
}

// Cayley table of E on codes x + 2n*k (x e^k), using e y = alpha^-1(y) e.
std::vector<int> cayley(const ExtData& X) {
  const int n = X.n, M = 2 * n, N = 2 * M;
  Dih D{n};
  std::vector<int> beta(M);
  for (int y = 0; y < M; ++y) beta[X.alpha[y]] = y;
  std::vector<int> tab(static_cast<size_t>(N) * N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B) {
      int x = A % M, k = A / M, y = B % M, l = B / M;
      int r = D.mul(x, k ? beta[y] : y);
      if (k && l) r = D.mul(r, X.z);
      tab[static_cast<size_t>(A) * N + B] = r + M * ((k + l) & 1);
    }
  return tab;
}

Fingerprint cayley_fingerprint(const std::vector<int>& tab, int N, int dsize) {
  auto mul = [&](int a, int b) { return tab[static_cast<size_t>(a) * N + b]; };
  Fingerprint fp;
  fp.order = N;
  std::vector<int> inv(N);
  long long expo = 1;
  for (int a = 0; a < N; ++a) {
    int x = a, o = 1;
    while (x != 0) x = mul(x, a), ++o;
    if (o == 2) ++fp.involutions;
    expo = std::lcm(expo, static_cast<long long>(o));
    for (int b = 0; b < N; ++b)
      if (mul(a, b) == 0) inv[a] = b;
  }
  fp.exponent = static_cast<int>(expo);
  for (int a = 0; a < N; ++a) {
    bool central = true;
    for (int b = 0; b < N && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) ++fp.center;
  }
  std::vector<char> comm(N, 0);
  std::vector<int> cs;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int c = mul(mul(inv[a], inv[b]), mul(a, b));
      if (!comm[c]) comm[c] = 1, cs.push_back(c);
    }
  std::vector<char> in(N, 0);
  std::vector<int> H{0};
  in[0] = 1;
  for (size_t q = 0; q < H.size(); ++q)
    for (int c : cs) {
      int y = mul(H[q], c);
      if (!in[y]) in[y] = 1, H.push_back(y);
    }
  fp.derived = H.size();
  // D is generated by codes 1 (s) and n (t)
  int n = dsize / 2;
  for (int a = dsize; a < N && !fp.central_involution_outside; ++a)
    if (a != 0 && mul(a, a) == 0 && mul(a, 1) == mul(1, a) && mul(a, n) == mul(n, a))
      fp.central_involution_outside = true;
  return fp;
}

Fingerprint reference_fingerprint(int d, ExtType type) {
  ExtData X = standard_data(d, type);
  return cayley_fingerprint(cayley(X), 4 * X.n, 2 * X.n);
}

std::string word(int i, int j, int k, int n) {
  i = ((i % n) + n) % n;
  std::string w;
  if (i == 1) w += "s";
  else if (i > 1) w += "s^" + std::to_string(i);
  if (j) w += "t";
  if (k) w += "e";
  return w.empty() ? "1" : w;
}

int code_of(const Perm& p) { return p[0]; }

}  // namespace

const char* ext_type_name(ExtType t) {
  switch (t) {
    case ExtType::a: return "a";
    case ExtType::b: return "b";
    case ExtType::c: return "c";
    case ExtType::d: return "d";
    case ExtType::e: return "e";
    case ExtType::principal: return "principal";
  }
  return "?";
}

ExtType parse_ext_type(const std::string& s) {
  for (ExtType t : {ExtType::a, ExtType::b, ExtType::c, ExtType::d, ExtType::e, ExtType::principal})
    if (s == ext_type_name(t)) return t;
  throw UsageError("unknown extension type \"" + s + "\"");
}

Perm DihedralFrame::element(long long i, int j) const {
  Perm p = s.pow(i);
  return j ? p * t : p;
}

Perm DihedralFrame::s_named(int i) const {
  if (i < 0 || i > d - 1) throw BadIndex("s_i needs 0 <= i <= d-1");
  return s.pow(1LL << (d - 1 - i));
}

PermGroup DihedralFrame::S(int i) const { return group.subgroup({s_named(i)}); }
PermGroup DihedralFrame::X(int i) const { return group.subgroup({s_named(i - 1), t}); }
PermGroup DihedralFrame::Y(int i) const { return group.subgroup({s_named(i - 1), s * t}); }

DihedralFrame build_dihedral(int d) {
  if (d < 3) throw BadDegree("dihedral frames need d >= 3");
  if (d > 12) throw BadDegree("dihedral frames are limited to d <= 12");
  DihedralFrame F;
  F.d = d;
  F.n = 1 << (d - 1);
  Dih D{F.n};
  auto regular = [&](int g) {
    std::vector<std::uint16_t> img(2 * F.n);
    for (int h = 0; h < 2 * F.n; ++h) img[h] = static_cast<std::uint16_t>(D.mul(h, g));
    return Perm(std::move(img));
  };
  F.s = regular(1);
  F.t = regular(F.n);
  F.group = PermGroup::generate({F.s, F.t}, 2 * F.n);
  return F;
}

Perm ExtensionFrame::element(long long i, int j, int k) const {
  Perm p = s.pow(i);
  if (j) p = p * t;
  if (k) p = p * e;
  return p;
}

ExtensionFrame build_extension(const DihedralFrame& frame, ExtType type) {
  if (type == ExtType::e && frame.d < 4) throw TypeUnavailable("type (e) needs d >= 4");
  ExtensionFrame X;
  X.frame = frame;
  X.type = type;
  const int n = frame.n;
  if (type == ExtType::principal) {
    X.E = frame.group;
    X.D = frame.group;
    X.s = frame.s;
    X.t = frame.t;
    X.e = Perm::identity(2 * n);
    return X;
  }
  ExtData data = standard_data(frame.d, type);
  auto tab = cayley(data);
  const int N = 4 * n;
  auto regular = [&](int g) {
    std::vector<std::uint16_t> img(N);
    for (int h = 0; h < N; ++h) img[h] = static_cast<std::uint16_t>(tab[static_cast<size_t>(h) * N + g]);
    return Perm(std::move(img));
  };
  X.s = regular(1);
  X.t = regular(n);
  X.e = regular(2 * n);
  X.E = PermGroup::generate({X.s, X.t, X.e}, N);
  X.D = X.E.subgroup({X.s, X.t});
  if (X.E.order() != static_cast<size_t>(N) || X.D.order() != static_cast<size_t>(2 * n))
    throw std::logic_error("extension realized with the wrong order");
  return X;
}

std::string dihedral_subgroup_name(int d, const std::vector<int>& codes) {
  const int n = 1 << (d - 1);
  const size_t sz = codes.size();
  if (sz == 1) return "1";
  if (sz == static_cast<size_t>(2 * n)) return "D";
  int k = 0;
  while ((size_t{1} << k) < sz) ++k;
  auto refl = std::find_if(codes.begin(), codes.end(), [&](int c) { return c >= n; });
  if (refl == codes.end()) return k == d - 1 ? "S" : "S_" + std::to_string(k);
  return std::string((*refl - n) % 2 == 0 ? "X_" : "Y_") + std::to_string(k);
}

std::string dihedral_subgroup_name(const ExtensionFrame& ext, const PermGroup& Q) {
  std::vector<int> codes;
  for (auto& p : Q.elements()) {
    int c = code_of(p.extended(ext.E.degree()));
    if (c >= 2 * ext.n()) throw std::invalid_argument("subgroup is not inside D");
    codes.push_back(c);
  }
  return dihedral_subgroup_name(ext.d(), codes);
}

std::string Fingerprint::str() const {
  return "(" + std::to_string(order) + "," + std::to_string(involutions) + "," + std::to_string(exponent) + "," +
         std::to_string(center) + "," + std::to_string(derived) + "," + (central_involution_outside ? "1" : "0") + ")";
}

Fingerprint fingerprint(const PermGroup& E, const PermGroup& D) {
  Fingerprint fp;
  fp.order = E.order();
  for (size_t x = 0; x < E.order(); ++x)
    if (E.element_order(static_cast<int>(x)) == 2) ++fp.involutions;
  fp.exponent = E.exponent();
  fp.center = E.center().order();
  fp.derived = E.derived_subgroup().order();
  for (size_t x = 0; x < E.order() && !fp.central_involution_outside; ++x) {
    const Perm& p = E.element(static_cast<int>(x));
    if (E.element_order(static_cast<int>(x)) != 2 || D.contains(p)) continue;
    bool ok = true;
    for (auto& g : D.generators()) ok = ok && (p * g == g * p);
    fp.central_involution_outside = ok;
  }
  return fp;
}

std::vector<IsoClass> census_degree2_extensions(const DihedralFrame& frame) {
  const int d = frame.d, n = frame.n, M = 2 * n;
  if (d > 7) throw BadDegree("the census is limited to d <= 7");
  Dih D{n};
  std::vector<std::pair<Fingerprint, ExtType>> refs;
  for (ExtType t : kExtTypes) {
    if (t == ExtType::e && d < 4) continue;
    refs.emplace_back(reference_fingerprint(d, t), t);
  }
  std::map<Fingerprint, size_t> seen;
  for (int a = 1; a < n; a += 2)
    for (int c = 0; c < n; ++c) {
      auto alpha = aut_map(n, a, c);
      auto sq = [&](int y) { return alpha[alpha[y]]; };
      for (int z = 0; z < M; ++z) {
        if (alpha[z] != z) continue;
        if (sq(1) != D.conj(1, z) || sq(n) != D.conj(n, z)) continue;
        ExtData X{n, alpha, z};
        ++seen[cayley_fingerprint(cayley(X), 2 * M, M)];
      }
    }
  std::vector<IsoClass> out;
  for (auto& [fp, count] : seen) {
    IsoClass ic;
    ic.fp = fp;
    ic.realizations = count;
    auto it = std::find_if(refs.begin(), refs.end(), [&](auto& r) { return r.first == fp; });
    if (it == refs.end()) throw Unclassifiable("census class " + fp.str() + " matches no named type");
    ic.type = it->second;
    out.push_back(ic);
  }
  std::sort(out.begin(), out.end(), [](const IsoClass& x, const IsoClass& y) { return x.type < y.type; });
  return out;
}

bool is_dihedral_2group(const PermGroup& D) {
  const size_t N = D.order();
  if (N < 8 || (N & (N - 1))) return false;
  int s = -1;
  for (size_t x = 0; x < N && s < 0; ++x)
    if (static_cast<size_t>(D.element_order(static_cast<int>(x))) == N / 2) s = static_cast<int>(x);
  if (s < 0) return false;
  PermGroup S = D.subgroup({D.element(s)});
  const Perm& sp = D.element(s);
  Perm sinv = sp.inverse();
  for (size_t x = 0; x < N; ++x) {
    const Perm& p = D.element(static_cast<int>(x));
    if (S.contains(p) || D.element_order(static_cast<int>(x)) != 2) continue;
    if (p * sp * p == sinv) return true;
  }
  return false;
}

ExtType classify_extension(const PermGroup& D, const PermGroup& E) {
  if (!is_dihedral_2group(D)) throw NotDihedral("D is not a dihedral 2-group of order >= 8");
  if (!D.is_subgroup_of(E) || E.order() % D.order() != 0) throw BadIndex("D is not a subgroup of E");
  size_t idx = E.order() / D.order();
  if (idx == 1) return ExtType::principal;
  if (idx != 2) throw BadIndex("[E:D] must be 1 or 2");
  int d = 0;
  while ((size_t{1} << d) < D.order()) ++d;
  Fingerprint fp = fingerprint(E, D);
  for (ExtType t : kExtTypes) {
    if (t == ExtType::e && d < 4) continue;
    if (reference_fingerprint(d, t) == fp) return t;
  }
  throw Unclassifiable("fingerprint " + fp.str() + " matches no extension type");
}

std::vector<EClassRow> eclass_table(const ExtensionFrame& ext) {
  std::vector<EClassRow> rows;
  if (ext.type == ExtType::principal) return rows;
  const int n = ext.n();
  struct Named {
    std::string pattern;
    int param, i, j;
  };
  std::vector<Named> named;
  switch (ext.type) {
    case ExtType::a:
    case ExtType::b:
      named.push_back({"e", -1, 0, 0});
      named.push_back({"s_1e", -1, n / 2, 0});
      for (int i = 1; i <= n / 2 - 1; ++i) named.push_back({"s^ie", i, i, 0});
      named.push_back({"te", -1, 0, 1});
      named.push_back({"ste", -1, 1, 1});
      break;
    case ExtType::c:
    case ExtType::d:
      for (int i = 0; i <= n / 2 - 1; ++i) named.push_back({"s^ite", i, i, 1});
      named.push_back({"e", -1, 0, 0});
      break;
    case ExtType::e:
      named.push_back({"e", -1, 0, 0});
      named.push_back({"s_2e", -1, n / 4, 0});
      for (int i = 1; i <= n / 4 - 1; ++i) named.push_back({"s^ie", i, i, 0});
      named.push_back({"te", -1, 0, 1});
      named.push_back({"ss_2te", -1, 1 + n / 4, 1});
      break;
    default: break;
  }
  std::set<int> outside;
  for (size_t c = 0; c < ext.E.classes().size(); ++c)
    if (!ext.D.contains(ext.E.element(ext.E.classes()[c].representative))) outside.insert(static_cast<int>(c));
  std::set<int> hit;
  for (auto& nm : named) {
    Perm x = ext.element(nm.i, nm.j, 1);
    int xi = ext.E.require_index(x);
    int cls = ext.E.class_of(xi);
    if (!outside.count(cls) || !hit.insert(cls).second)
      throw std::logic_error("named representative " + nm.pattern + " does not pick a new class of E\\D");
    std::vector<int> codes;
    for (auto& y : ext.D.elements())
      if (x * y == y * x) codes.push_back(code_of(y));
    EClassRow r;
    r.pattern = nm.pattern;
    r.param = nm.param;
    r.rep = word(nm.i, nm.j, 1, n);
    r.order2 = ext.E.element_order(xi) == 2;
    r.centralizer = dihedral_subgroup_name(ext.d(), codes);
    r.class_size = ext.E.classes()[cls].size();
    rows.push_back(std::move(r));
  }
  if (hit.size() != outside.size()) throw std::logic_error("named representatives miss a class of E\\D");
  return rows;
}

namespace {

// Elements of C_E(Q) outside D, tested by the predicate.
template <class Pred>
bool exists_outside_centralizer(const ExtensionFrame& ext, const PermGroup& Q, Pred pred) {
  std::vector<Perm> gens;
  for (auto& g : Q.generators()) gens.push_back(g.extended(ext.E.degree()));
  for (size_t x = 0; x < ext.E.order(); ++x) {
    const Perm& p = ext.E.element(static_cast<int>(x));
    if (ext.D.contains(p)) continue;
    bool centralizes = true;
    for (auto& g : gens)
      if (p * g != g * p) {
        centralizes = false;
        break;
      }
    if (centralizes && pred(static_cast<int>(x))) return true;
  }
  return false;
}

}  // namespace

bool real_condition(const ExtensionFrame& ext, const PermGroup& Q) {
  if (ext.type == ExtType::principal) return true;
  return exists_outside_centralizer(ext, Q, [](int) { return true; });
}

bool strongly_real_condition(const ExtensionFrame& ext, const PermGroup& Q) {
  if (ext.type == ExtType::principal) return true;
  return exists_outside_centralizer(ext, Q, [&](int x) { return ext.E.element_order(x) == 2; });
}

std::vector<RealityEntry> reality_pattern(const ExtensionFrame& ext) {
  const int d = ext.d(), n = ext.n();
  if (2 * n > 128) throw BadDegree("subgroup enumeration is limited to |D| <= 128");
  Dih D{n};
  std::set<std::vector<int>> all;
  for (int k = 0; k <= d - 1; ++k) {
    int m = n >> k;
    std::vector<int> R;
    for (int r = 0; r < (1 << k); ++r) R.push_back(m * r);
    std::sort(R.begin(), R.end());
    all.insert(R);
    for (int i = 0; i < m; ++i) {
      std::vector<int> Q = R;
      for (int r = 0; r < (1 << k); ++r) Q.push_back(n + (i + m * r) % n);
      std::sort(Q.begin(), Q.end());
      all.insert(Q);
    }
  }
  std::vector<RealityEntry> out;
  std::set<std::vector<int>> done;
  for (auto& Q0 : all) {
    if (done.count(Q0)) continue;
    std::vector<std::vector<int>> orbit{Q0};
    done.insert(Q0);
    for (size_t q = 0; q < orbit.size(); ++q)
      for (int g : {1, n}) {
        std::vector<int> c;
        for (int x : orbit[q]) c.push_back(D.conj(x, g));
        std::sort(c.begin(), c.end());
        if (done.insert(c).second) orbit.push_back(c);
      }
    RealityEntry ent;
    ent.name = dihedral_subgroup_name(d, Q0);
    ent.order = Q0.size();
    ent.conjugates = orbit.size();
    for (size_t q = 0; q < orbit.size(); ++q) {
      if (dihedral_subgroup_name(d, orbit[q]) != ent.name)
        throw std::logic_error("subgroup names are not constant on a D-class");
      std::vector<Perm> el;
      for (int c : orbit[q]) el.push_back(ext.element(c % n, c / n, 0));
      PermGroup Q = PermGroup::from_elements(el, ext.E.degree());
      bool r = real_condition(ext, Q), sr = strongly_real_condition(ext, Q);
      if (q == 0) {
        ent.real = r;
        ent.strongly_real = sr;
      } else if (r != ent.real || sr != ent.strongly_real) {
        throw std::logic_error("reality is not constant on the D-class of " + ent.name);
      }
    }
    out.push_back(ent);
  }
  std::sort(out.begin(), out.end(), [](const RealityEntry& x, const RealityEntry& y) {
    return x.order != y.order ? x.order < y.order : x.name < y.name;
  });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].name == out[i - 1].name) throw std::logic_error("two D-classes share the name " + out[i].name);
  return out;
}

const char* fusion_name(FusionCase f) {
  switch (f) {
    case FusionCase::aa: return "aa";
    case FusionCase::ab: return "ab";
    case FusionCase::ba: return "ba";
    case FusionCase::bb: return "bb";
  }
  return "?";
}

FusionCase parse_fusion(const std::string& s) {
  for (FusionCase f : {FusionCase::aa, FusionCase::ab, FusionCase::ba, FusionCase::bb})
    if (s == fusion_name(f)) return f;
  throw UsageError("unknown fusion case \"" + s + "\"");
}

int fusion_l(FusionCase f) {
  switch (f) {
    case FusionCase::aa: return 3;
    case FusionCase::bb: return 1;
    default: return 2;
  }
}

namespace {
// (t,.) survives unless case (i) fuses <t> into S_1; likewise (st,.) for (ii).
bool t_column(FusionCase f) { return f == FusionCase::ba || f == FusionCase::bb; }
bool st_column(FusionCase f) { return f == FusionCase::ab || f == FusionCase::bb; }
}  // namespace

int count_columns(int d, FusionCase fusion) {
  if (d < 3) throw BadDegree("d >= 3 required");
  int cols = fusion_l(fusion);
  cols += 1;                       // (s_1, .)
  cols += (1 << (d - 2)) - 1;      // (s_i, .), 2^{i-2} columns for i = 2..d-1
  cols += t_column(fusion) + st_column(fusion);
  return cols;
}

int count_real_columns(int d, ExtType type, FusionCase fusion, int nonreal_brauer) {
  if (d < 3) throw BadDegree("d >= 3 required");
  if (type == ExtType::e && d < 4) throw TypeUnavailable("type (e) needs d >= 4");
  int l = fusion_l(fusion);
  if (nonreal_brauer < 0 || nonreal_brauer > l) throw std::invalid_argument("bad nonreal Brauer count");
  int real = l - nonreal_brauer;
  real += 1;
  for (int i = 2; i <= d - 1; ++i)
    if (!(type == ExtType::e && i == d - 1)) real += 1 << (i - 2);
  bool reflections_real = type == ExtType::a || type == ExtType::b || type == ExtType::e || type == ExtType::principal;
  if (reflections_real) real += t_column(fusion) + st_column(fusion);
  return real;
}

}  // namespace wb
