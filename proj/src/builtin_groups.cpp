#include "workbench/builtin_groups.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>

#include "workbench/errors.hpp"

namespace wb {
namespace {

// GF(q) for q = p^k <= 11, elements encoded as base-p digit strings of
// polynomial coefficients modulo a fixed irreducible of degree k.
struct SmallField {
  int p = 2, k = 1, q = 2;
  std::vector<int> modpoly;  // monic, low degree first, size k+1
  std::vector<std::vector<int>> add, mul;

  explicit SmallField(int q_) : q(q_) {
    for (p = 2; q % p; ++p) {
    }
    int r = q;
    k = 0;
    while (r % p == 0) r /= p, ++k;
    if (r != 1 || q > 11) throw UsageError("q must be a prime power <= 11");
    if (k == 1) modpoly = {0, 1};
    else if (q == 4) modpoly = {1, 1, 1};
    else if (q == 8) modpoly = {1, 1, 0, 1};
    else if (q == 9) modpoly = {1, 0, 1};
    auto digits = [&](int x) {
      std::vector<int> v(k);
      for (int i = 0; i < k; ++i) v[i] = x % p, x /= p;
      return v;
    };
    auto encode = [&](const std::vector<int>& v) {
      int x = 0;
      for (int i = k - 1; i >= 0; --i) x = x * p + v[i];
      return x;
    };
    add.assign(q, std::vector<int>(q));
    mul.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto va = digits(a), vb = digits(b);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = (va[i] + vb[i]) % p;
        add[a][b] = encode(s);
        std::vector<int> prod(2 * k, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
        if (k == 1) {
          mul[a][b] = prod[0];
          continue;
        }
        for (int deg = 2 * k - 1; deg >= k; --deg) {
          int c = prod[deg];
          if (!c) continue;
          for (int i = 0; i <= k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modpoly[i]) % p + p) % p;
        }
        prod.resize(k);
        mul[a][b] = encode(prod);
      }
  }
  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add[a][b] == 0) return b;
    return -1;
  }
  int inv(int a) const {
    for (int b = 1; b < q; ++b)
      if (mul[a][b] == 1) return b;
    return -1;
  }
  int primitive() const {
    for (int g = 1; g < q; ++g) {
      int x = g, o = 1;
      while (x != 1) x = mul[x][g], ++o;
      if (o == q - 1) return g;
    }
    return 1;
  }
};

// PSL(2,q) (or PGL(2,q)) acting on the projective line; point q is infinity.
PermGroup projective_group(int q, bool full) {
  SmallField F(q);
  const int inf = q;
  auto to_perm = [&](auto f) {
    std::vector<std::uint16_t> img(q + 1);
    for (int x = 0; x <= q; ++x) img[x] = static_cast<std::uint16_t>(f(x));
    return Perm(std::move(img));
  };
  int lam = F.primitive();
  int lam2 = F.mul[lam][lam];
  std::vector<Perm> gens;
  gens.push_back(to_perm([&](int x) { return x == inf ? inf : F.add[x][1]; }));
  gens.push_back(to_perm([&](int x) { return x == inf ? inf : F.mul[lam2][x]; }));
  gens.push_back(to_perm([&](int x) {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return F.neg(F.inv(x));
  }));
  if (full) gens.push_back(to_perm([&](int x) { return x == inf ? inf : F.mul[lam][x]; }));
  return PermGroup::generate(gens, q + 1);
}

std::vector<Perm> dihedral_gens(int m) {
  // symmetries of an m-gon, order 2m
  std::vector<std::uint16_t> r(m), f(m);
  for (int i = 0; i < m; ++i) {
    r[i] = static_cast<std::uint16_t>((i + 1) % m);
    f[i] = static_cast<std::uint16_t>((m - i) % m);
  }
  return {Perm(r), Perm(f)};
}

std::vector<Perm> affine_mod8(int mult) {
  std::vector<std::uint16_t> a(8), b(8);
  for (int x = 0; x < 8; ++x) {
    a[x] = static_cast<std::uint16_t>((x + 1) % 8);
    b[x] = static_cast<std::uint16_t>((mult * x) % 8);
  }
  return {Perm(a), Perm(b)};
}

bool parse_int_suffix(const std::string& s, size_t from, int& out) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  out = std::stoi(s.substr(from));
  return true;
}

// Parses "psl2q(9)", "psl2q:9" or "psl2q9".
bool parse_q(const std::string& s, const std::string& prefix, int& q) {
  if (s.rfind(prefix, 0) != 0) return false;
  std::string rest = s.substr(prefix.size());
  if (!rest.empty() && (rest.front() == '(' || rest.front() == ':')) rest.erase(0, 1);
  if (!rest.empty() && rest.back() == ')') rest.pop_back();
  return parse_int_suffix(rest, 0, q);
}

PermGroup single_builtin(const std::string& s) {
  int n = 0;
  if (s == "d8") return PermGroup::generate({Perm::parse("(1,2,3,4)"), Perm::parse("(1,3)", 4)}, 4);
  if (s == "d16") return PermGroup::generate(affine_mod8(7), 8);
  if (s == "sd16") return PermGroup::generate(affine_mod8(3), 8);
  if (s == "psl27") return projective_group(7, false);
  if (s == "pgl27") return projective_group(7, true);
  if (parse_q(s, "psl2q", n)) return projective_group(n, false);
  if (parse_q(s, "pgl2q", n)) return projective_group(n, true);
  if (s[0] == 'd' && parse_int_suffix(s, 1, n)) {
    if (n < 6 || n % 2) throw UsageError("dihedral order must be even and >= 6");
    return PermGroup::generate(dihedral_gens(n / 2), n / 2);
  }
  if (s[0] == 'c' && parse_int_suffix(s, 1, n)) {
    if (n < 1 || n > 10080) throw UsageError("bad cyclic order");
    std::vector<std::uint16_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
    return PermGroup::generate({Perm(img)}, n);
  }
  if (s[0] == 's' && parse_int_suffix(s, 1, n)) {
    if (n < 1 || n > 8) throw UsageError("symmetric degree must be 1..8");
    if (n == 1) return PermGroup::generate({}, 1);
    std::vector<std::uint16_t> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = static_cast<std::uint16_t>((i + 1) % n);
    return PermGroup::generate({Perm(cyc), Perm::from_cycles(n, {{0, 1}})}, n);
  }
  if (s[0] == 'a' && parse_int_suffix(s, 1, n)) {
    if (n < 1 || n > 8) throw UsageError("alternating degree must be 1..8");
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
    return PermGroup::generate(gens, n);
  }
  throw UsageError("unknown builtin group \"" + s + "\"");
}

}  // namespace

PermGroup builtin_group(const std::string& name_in) {
  std::string name = name_in;
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  std::vector<Perm> gens;
  int offset = 0;
  for (auto& p : parts) {
    if (p.empty()) throw UsageError("bad group name \"" + name_in + "\"");
    PermGroup G = single_builtin(p);
    if (parts.size() == 1) return G;
    for (auto& g : G.generators()) {
      // shifted onto points offset..offset+deg-1; the total degree is fixed below
      std::vector<std::uint16_t> img(offset + G.degree());
      for (int i = 0; i < offset; ++i) img[i] = static_cast<std::uint16_t>(i);
      for (int i = 0; i < G.degree(); ++i) img[offset + i] = static_cast<std::uint16_t>(offset + g[i]);
      gens.push_back(Perm(std::move(img)));
    }
    offset += G.degree();
  }
  for (auto& g : gens) g = g.extended(offset);
  return PermGroup::generate(gens, offset);
}

bool is_builtin_name(const std::string& name) {
  try {
    builtin_group(name);
    return true;
  } catch (const UsageError&) {
    return false;
  }
}

const std::vector<std::string>& standard_builtins() {
  static const std::vector<std::string> names = {"c2", "c3", "c7", "s3", "d8", "d16", "sd16", "s4",
                                                 "c2xs3", "a5", "s5", "psl27", "pgl27", "a7"};
  return names;
}

PermGroup load_group(const std::string& source) {
  if (std::filesystem::exists(source)) return group_from_file(source);
  return builtin_group(source);
}

}  // namespace wb
