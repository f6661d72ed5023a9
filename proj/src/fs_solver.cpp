#include "workbench/fs_solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "workbench/errors.hpp"

namespace wb {

const char* morita_name(MoritaType t) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<int>(t)];
}

MoritaType parse_morita(const std::string& s) {
  for (MoritaType t : kMoritaTypes)
    if (s == morita_name(t)) return t;
  throw UsageError("unknown Morita type \"" + s + "\"");
}

int Entry::value(int eps, int eps_prime, int eps_j) const {
  switch (slot) {
    case Slot::none: return coef;
    case Slot::eps: return coef * eps;
    case Slot::eps_prime: return coef * eps_prime;
    case Slot::eps_j: return coef * eps_j;
  }
  return 0;
}

std::string Entry::str() const {
  const char* name = slot == Slot::eps ? "e" : slot == Slot::eps_prime ? "e'" : slot == Slot::eps_j ? "e_j" : "";
  if (slot == Slot::none) return std::to_string(coef);
  if (coef == 1) return name;
  if (coef == -1) return std::string("-") + name;
  return std::to_string(coef) + name;
}

Entry MoritaProfile::height1_s1(int j) const {
  // the last family carries the opposite sign
  return {j < d - 3 ? 2 : -2, Slot::eps};
}

std::string MoritaProfile::row_str(int r) const {
  std::string out = "(";
  auto add_col = [&](const std::vector<Entry>& col, int row) {
    if (col.empty()) return;
    out += ", " + (row < 4 ? col[row].str() : std::string("*"));
  };
  if (r < 4) {
    for (int c = 0; c < l; ++c) out += (c ? "," : "") + std::to_string(M[r][c]);
    out += " | " + s1[r].str();
    for (auto* col : {&t, &st, &sj, &s}) add_col(*col, r);
  } else {
    for (int c = 0; c < l; ++c) out += (c ? "," : "") + std::to_string(Mh[c]);
    out += " | " + height1_s1(r - 4).str();
    for (auto* col : {&t, &st}) {
      if (!col->empty()) out += ", 0";
    }
  }
  return out + ")";
}

MoritaProfile build_profile(MoritaType type, int d) {
  if (d < 3) throw BadDegree("Morita profiles need d >= 3");
  MoritaProfile p;
  p.type = type;
  p.d = d;
  auto col = [](std::initializer_list<int> signs, Slot slot) {
    std::vector<Entry> v;
    for (int x : signs) v.push_back({x, slot});
    return v;
  };
  const Slot E = Slot::eps, J = Slot::eps_j, N = Slot::none;
  switch (type) {
    case MoritaType::i:
      p.M = {{1}, {1}, {1}, {1}};
      p.Mh = {2};
      p.s1 = col({1, 1, 1, 1}, E);
      p.t = col({1, -1, 1, -1}, N);
      p.st = col({1, -1, -1, 1}, Slot::eps_prime);
      p.sj = col({1, 1, 1, 1}, J);
      p.s = col({1, 1, -1, -1}, N);
      break;
    case MoritaType::ii:
      p.M = {{1, 0}, {1, 1}, {1, 0}, {1, 1}};
      p.Mh = {2, 1};
      p.s1 = col({1, 1, 1, 1}, E);
      p.t = col({1, -1, -1, 1}, N);
      p.sj = col({1, 1, 1, 1}, J);
      p.s = col({1, 1, -1, -1}, N);
      break;
    case MoritaType::iii:
      p.M = {{1, 0}, {1, 1}, {1, 0}, {1, 1}};
      p.Mh = {0, 1};
      p.s1 = col({-1, 1, -1, 1}, E);
      p.t = col({1, -1, -1, 1}, N);
      p.sj = col({-1, 1, -1, 1}, J);
      p.s = col({-1, 1, 1, -1}, N);
      break;
    case MoritaType::iv:
      p.M = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}};
      p.Mh = {0, 1, 0};
      p.s1 = col({-1, 1, 1, -1}, E);
      p.sj = col({-1, 1, 1, -1}, J);
      p.s = col({-1, 1, -1, 1}, N);
      break;
    case MoritaType::v:
      p.M = {{1, 0, 0}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}};
      p.Mh = {2, 1, 1};
      p.s1 = col({1, 1, 1, 1}, E);
      p.sj = col({1, 1, 1, 1}, J);
      p.s = col({1, 1, -1, -1}, N);
      break;
    case MoritaType::vi:
      p.M = {{1, 0, 0}, {1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
      p.Mh = {0, 1, 1};
      p.s1 = col({-1, 1, 1, 1}, E);
      p.sj = col({-1, 1, 1, 1}, J);
      p.s = col({-1, 1, -1, -1}, N);
      break;
  }
  p.l = static_cast<int>(p.Mh.size());
  if (d < 4) p.sj.clear();  // s_j columns exist for 2 <= j <= d-2 only
  return p;
}

std::string SignAssignment::height0_str() const {
  std::string s;
  for (int x : eps_height0) s += x > 0 ? '+' : x < 0 ? '-' : '0';
  return s;
}

std::string SignAssignment::family_str() const {
  std::string s;
  for (int x : eps_family) s += x > 0 ? '+' : x < 0 ? '-' : '0';
  return s;
}

bool LinearConstraint::holds(const SignAssignment& a) const {
  long long v = 0;
  for (int i = 0; i < 4; ++i) v += coeff[i] * a.eps_height0[i];
  for (size_t j = 0; j < a.eps_family.size(); ++j) v += coeff[4 + j] * a.eps_family[j];
  return rel == Rel::eq ? v == rhs : v >= rhs;
}

std::string LinearConstraint::str() const {
  std::string out;
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (!coeff[k]) continue;
    std::string var = k < 4 ? "e" + std::to_string(k + 1) : "f" + std::to_string(k - 4);
    out += (out.empty() ? (coeff[k] < 0 ? "-" : "") : (coeff[k] < 0 ? " - " : " + "));
    long long c = std::llabs(coeff[k]);
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
  }
  if (out.empty()) out = "0";
  return tag + ": " + out + (rel == Rel::eq ? " = " : " >= ") + std::to_string(rhs);
}

namespace {

// Target of sum eps(chi) d^{(s_1)}_chi for each extension type.
bool s1_target(ExtType etype, int d, long long& target) {
  switch (etype) {
    case ExtType::a:
    case ExtType::principal: target = 2; return true;
    case ExtType::b: target = (1LL << (d - 1)) + 2; return true;
    case ExtType::c: target = 0; return true;
    case ExtType::e: target = (1LL << (d - 2)) + 2; return true;
    default: return false;
  }
}

bool reflections_real(ExtType etype) { return etype != ExtType::c && etype != ExtType::d; }

// Column permutations sigma with M[pi r][sigma c] = M[r][c] and Mh preserved.
std::vector<std::vector<int>> column_matches(const MoritaProfile& p, const std::array<int, 4>& pi) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(p.l);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int c = 0; c < p.l && ok; ++c) {
      if (p.Mh[sigma[c]] != p.Mh[c]) ok = false;
      for (int r = 0; r < 4 && ok; ++r)
        if (p.M[pi[r]][sigma[c]] != p.M[r][c]) ok = false;
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Row permutations preserving the profile up to column permutation, with
// every subsection column sent to plus or minus itself.
std::vector<std::array<int, 4>> profile_automorphisms(const MoritaProfile& p) {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> pi{0, 1, 2, 3};
  do {
    if (column_matches(p, pi).empty()) continue;
    bool ok = true;
    for (auto* col : {&p.s1, &p.t, &p.st, &p.sj, &p.s}) {
      if (col->empty()) continue;
      bool same = true, neg = true;
      for (int r = 0; r < 4; ++r) {
        const Entry& a = (*col)[pi[r]];
        const Entry& b = (*col)[r];
        same = same && a.slot == b.slot && a.coef == b.coef;
        neg = neg && a.slot == b.slot && a.coef == -b.coef;
      }
      if (!same && !neg) ok = false;
    }
    if (ok) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

// The two nonreal height-0 characters must be complex conjugates: the
// conjugation pairing pi fixes every real column and permutes the
// decomposition columns.
bool admissible_pairing(const MoritaProfile& p, const std::array<int, 4>& h0, ExtType etype, int eps, int epsp,
                        int epsj) {
  std::vector<int> zeros;
  for (int i = 0; i < 4; ++i)
    if (h0[i] == 0) zeros.push_back(i);
  if (zeros.empty()) return true;
  if (zeros.size() != 2) return false;
  std::array<int, 4> pi{0, 1, 2, 3};
  std::swap(pi[zeros[0]], pi[zeros[1]]);
  auto v = [&](const Entry& x) { return x.value(eps, epsp, epsj); };
  auto fixed = [&](const std::vector<Entry>& col) {
    for (int r = 0; r < 4; ++r)
      if (v(col[pi[r]]) != v(col[r])) return false;
    return true;
  };
  if (!fixed(p.s1)) return false;
  if (etype != ExtType::e && !fixed(p.s)) return false;
  if (column_matches(p, pi).empty()) return false;
  bool treal = reflections_real(etype);
  if (!p.t.empty()) {
    if (treal || p.st.empty()) {
      if (!fixed(p.t)) return false;
    } else {
      for (int r = 0; r < 4; ++r)
        if (v(p.t[pi[r]]) != v(p.st[r])) return false;
    }
  }
  if (!p.st.empty() && treal && !fixed(p.st)) return false;
  return true;
}

}  // namespace

ConstraintSet local_constraints(ExtType etype, const MoritaProfile& p, int eps, int epsp, int epsj,
                                const SolverOptions& opt) {
  const int d = p.d, nf = p.families();
  const size_t nv = 4 + nf;
  auto v = [&](const Entry& x) { return x.value(eps, epsp, epsj); };
  ConstraintSet cs;
  cs.structural = {
      "height-0 real characters have indicator +1; nonreal ones come in one conjugate pair",
      "families F_0..F_{d-4} are real; F_{d-3} is nonreal exactly for type (e)",
      "types (c) and (d) exclude l(B) = 2",
      "the conjugate pair fixes every real column and permutes the decomposition columns",
      "for d >= 4 with every family real, some family has indicator +1",
  };
  long long target;
  if (s1_target(etype, d, target)) {
    LinearConstraint c{"s1-sum", std::vector<long long>(nv, 0), LinearConstraint::Rel::eq, target};
    for (int i = 0; i < 4; ++i) c.coeff[i] = v(p.s1[i]);
    for (int j = 0; j < nf; ++j) c.coeff[4 + j] = (1LL << j) * v(p.height1_s1(j));
    cs.linear.push_back(c);
  }
  for (int k = 0; k < p.l; ++k) {
    LinearConstraint c{etype == ExtType::d ? "zero-sum" : "multiplicity", std::vector<long long>(nv, 0),
                       etype == ExtType::d ? LinearConstraint::Rel::eq : LinearConstraint::Rel::ge, 0};
    c.tag += "-M" + std::to_string(k + 1);
    for (int i = 0; i < 4; ++i) c.coeff[i] = p.M[i][k];
    for (int j = 0; j < nf; ++j) c.coeff[4 + j] = (1LL << j) * p.Mh[k];
    cs.linear.push_back(c);
  }
  // t and st are never squares, so their columns sum to zero.
  for (auto [name, col] : {std::pair{"t", &p.t}, std::pair{"st", &p.st}}) {
    if (col->empty()) continue;
    LinearConstraint c{std::string("two-element-sum-") + name, std::vector<long long>(nv, 0),
                       LinearConstraint::Rel::eq, 0};
    for (int i = 0; i < 4; ++i) c.coeff[i] = v((*col)[i]);
    cs.linear.push_back(c);
  }
  if ((etype == ExtType::a || etype == ExtType::principal) && d >= 4) {
    // s^2 = (se)^2: the s_j column sums to 2. Only F_0 contributes among the
    // families; its entry follows from orthogonality with the s_1 column.
    long long dot = 0;
    for (int i = 0; i < 4; ++i) dot += static_cast<long long>(v(p.s1[i])) * v(p.sj[i]);
    LinearConstraint c{"s-squared", std::vector<long long>(nv, 0), LinearConstraint::Rel::eq, 2};
    for (int i = 0; i < 4; ++i) c.coeff[i] = v(p.sj[i]);
    // four entries of +-1, so dot is even and the F_0 entry is integral
    c.coeff[4] = -dot / (2 * eps);
    cs.linear.push_back(c);
  }
  bool corner = opt.tiebreak && d == 3 && (etype == ExtType::a || etype == ExtType::principal) &&
                (p.type == MoritaType::iii || p.type == MoritaType::iv || p.type == MoritaType::vi);
  if (corner) {
    LinearConstraint c{"tiebreak", std::vector<long long>(nv, 0), LinearConstraint::Rel::eq, 1};
    c.coeff[4] = 1;
    cs.linear.push_back(c);
  }
  return cs;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::ambiguous: return "ambiguous";
  }
  return "?";
}

std::string SolveResult::cell() const {
  return std::string(morita_name(type)) + "/" + ext_type_name(etype) + "/d=" + std::to_string(d);
}

SolveResult solve(MoritaType type, ExtType etype, int d, const SolverOptions& opt) {
  if (d < 3 || d > 12) throw BadDegree("the solver handles 3 <= d <= 12");
  SolveResult res;
  res.type = type;
  res.etype = etype;
  res.d = d;
  MoritaProfile p = build_profile(type, d);
  const int nf = p.families();
  const bool is_e = etype == ExtType::e;
  if (is_e && d < 4) throw TypeUnavailable("type (e) needs d >= 4");
  if ((etype == ExtType::c || etype == ExtType::d) && p.l == 2) {
    res.status = SolveStatus::infeasible;
    return res;
  }
  std::vector<int> eps_vals{1, -1};
  std::vector<int> epsp_vals = p.st.empty() ? std::vector<int>{1} : std::vector<int>{1, -1};
  std::vector<int> epsj_vals = p.sj.empty() ? std::vector<int>{1} : std::vector<int>{1, -1};
  std::set<SignAssignment> raw;
  for (int eps : eps_vals)
    for (int epsp : epsp_vals)
      for (int epsj : epsj_vals) {
        ConstraintSet cs = local_constraints(etype, p, eps, epsp, epsj, opt);
        for (int mask = 0; mask < 16; ++mask) {
          SignAssignment a;
          for (int i = 0; i < 4; ++i) a.eps_height0[i] = (mask >> i) & 1;
          if (!admissible_pairing(p, a.eps_height0, etype, eps, epsp, epsj)) continue;
          // families: the first nf-1 take +-1, the last one is 0 exactly for (e)
          a.eps_family.assign(nf, 1);
          const int free_bits = nf - 1 + (is_e ? 0 : 1);
          for (long long fm = 0; fm < (1LL << free_bits); ++fm) {
            for (int j = 0; j < free_bits; ++j) a.eps_family[j] = ((fm >> j) & 1) ? -1 : 1;
            if (is_e) a.eps_family[nf - 1] = 0;
            bool ok = std::all_of(cs.linear.begin(), cs.linear.end(),
                                  [&](const LinearConstraint& c) { return c.holds(a); });
            if (!ok) continue;
            if (d >= 4 && !is_e && std::none_of(a.eps_family.begin(), a.eps_family.end(), [](int f) { return f == 1; }))
              continue;
            ++res.raw_solutions;
            raw.insert(a);
          }
        }
      }
  auto autos = profile_automorphisms(p);
  std::set<SignAssignment> canon;
  for (auto a : raw) {
    std::array<int, 4> best = a.eps_height0;
    for (auto& pi : autos) {
      std::array<int, 4> h{};
      for (int r = 0; r < 4; ++r) h[r] = a.eps_height0[pi[r]];
      best = std::max(best, h);
    }
    a.eps_height0 = best;
    canon.insert(a);
  }
  res.solutions.assign(canon.rbegin(), canon.rend());
  for (auto& a : res.solutions) res.multiplicities.push_back(predicted_multiplicities(a, p));
  res.status = res.solutions.empty() ? SolveStatus::infeasible
               : res.solutions.size() == 1 ? SolveStatus::unique
                                           : SolveStatus::ambiguous;
  return res;
}

std::vector<long long> predicted_multiplicities(const SignAssignment& a, const MoritaProfile& p) {
  std::vector<long long> m(p.l, 0);
  for (int k = 0; k < p.l; ++k) {
    for (int i = 0; i < 4; ++i) m[k] += static_cast<long long>(a.eps_height0[i]) * p.M[i][k];
    for (size_t j = 0; j < a.eps_family.size(); ++j) m[k] += (1LL << j) * a.eps_family[j] * p.Mh[k];
    if (m[k] < 0) throw NegativeMultiplicity("multiplicity of M" + std::to_string(k + 1) + " is negative");
  }
  return m;
}

std::vector<int> signed_sum_decompose(long long m, int k) {
  if (k < 1 || k > 62) throw NoSolution("k out of range");
  long long lim = 1LL << k;
  if ((m % 2 == 0) || m >= lim || m <= -lim) throw NoSolution("m must be odd with |m| < 2^k");
  // sum (2b_j - 1) 2^j = 2u - (2^k - 1) with u = sum b_j 2^j
  long long u = (m + lim - 1) / 2;
  std::vector<int> e(k);
  for (int j = 0; j < k; ++j) e[j] = ((u >> j) & 1) ? 1 : -1;
  return e;
}

int count_real_characters(const SignAssignment& a) {
  int n = 0;
  for (int x : a.eps_height0) n += x != 0;
  for (size_t j = 0; j < a.eps_family.size(); ++j)
    if (a.eps_family[j] != 0) n += 1 << j;
  return n;
}

FusionCase fusion_for(const MoritaProfile& p) {
  // l = 2 profiles keep the t column and fuse st into s_1
  return p.l == 3 ? FusionCase::aa : p.l == 2 ? FusionCase::ba : FusionCase::bb;
}

int count_real_columns_for(const SignAssignment& a, const MoritaProfile& p, ExtType etype) {
  std::vector<int> zeros;
  for (int i = 0; i < 4; ++i)
    if (a.eps_height0[i] == 0) zeros.push_back(i);
  int nonreal_brauer = 0;
  if (zeros.size() == 2) {
    std::array<int, 4> pi{0, 1, 2, 3};
    std::swap(pi[zeros[0]], pi[zeros[1]]);
    auto sigmas = column_matches(p, pi);
    if (sigmas.empty()) throw std::logic_error("conjugate pair does not permute the decomposition columns");
    int best = p.l + 1;
    for (auto& sg : sigmas) {
      int moved = 0;
      for (int c = 0; c < p.l; ++c) moved += sg[c] != c;
      best = std::min(best, moved);
    }
    nonreal_brauer = best;
  }
  return count_real_columns(p.d, etype, fusion_for(p), nonreal_brauer);
}

}  // namespace wb
