#include "workbench/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "workbench/errors.hpp"
#include "workbench/exact_arith.hpp"

namespace wb {

std::size_t configured_order_cap() {
  if (const char* env = std::getenv("WORKBENCH_CAP_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderCap;
}

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw ParseError("images do not form a permutation");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree) throw ParseError("cycle point out of range");
      if (used[a]) throw ParseError("cycles are not disjoint");
      used[a] = 1;
      img[a] = static_cast<std::uint16_t>(b);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  int maxpt = 0;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(') throw ParseError("expected '(' in \"" + text + "\"");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in \"" + text + "\"");
    std::string body = text.substr(i + 1, close - i - 1);
    for (auto& c : body)
      if (c == ',') c = ' ';
    std::istringstream is(body);
    std::vector<int> cyc;
    std::string tok;
    while (is >> tok) {
      char* end = nullptr;
      long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0' || v < 1 || v > 65535) throw ParseError("bad point \"" + tok + "\"");
      cyc.push_back(static_cast<int>(v) - 1);
      maxpt = std::max(maxpt, static_cast<int>(v));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  return from_cycles(std::max({degree, maxpt, 1}), cycles);
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

int Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long o = 1;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    o = lcm_ll(o, len);
  }
  return static_cast<int>(o);
}

Perm Perm::pow(long long k) const {
  int o = order();
  k %= o;
  if (k < 0) k += o;
  Perm r = identity(degree()), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Perm Perm::extended(int degree) const {
  if (degree <= this->degree()) return *this;
  Perm r = *this;
  for (int i = this->degree(); i < degree; ++i) r.img_.push_back(static_cast<std::uint16_t>(i));
  return r;
}

std::string Perm::cycles_str() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    bool first = true;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    int n = std::max(a.degree(), b.degree());
    return a.extended(n) * b.extended(n);
  }
  Perm r;
  r.img_.resize(a.img_.size());
  for (size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

PermGroup PermGroup::generate(const std::vector<Perm>& gens_in, int degree, std::size_t cap) {
  int n = std::max(degree, 1);
  for (auto& g : gens_in) n = std::max(n, g.degree());
  PermGroup G;
  G.degree_ = n;
  for (auto& g : gens_in) {
    Perm e = g.extended(n);
    if (!e.is_identity() && std::find(G.gens_.begin(), G.gens_.end(), e) == G.gens_.end())
      G.gens_.push_back(std::move(e));
  }
  std::vector<Perm> elems{Perm::identity(n)};
  std::unordered_map<Perm, int, PermHash> seen{{elems[0], 0}};
  for (size_t q = 0; q < elems.size(); ++q) {
    for (auto& g : G.gens_) {
      Perm y = elems[q] * g;
      if (seen.count(y)) continue;
      if (elems.size() >= cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      seen.emplace(y, static_cast<int>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  G.elems_ = std::move(elems);
  G.build_from_sorted();
  return G;
}

PermGroup PermGroup::from_elements(const std::vector<Perm>& elems, int degree) {
  PermGroup G;
  G.degree_ = std::max(degree, 1);
  for (auto& e : elems) G.elems_.push_back(e.extended(G.degree_));
  std::sort(G.elems_.begin(), G.elems_.end());
  G.elems_.erase(std::unique(G.elems_.begin(), G.elems_.end()), G.elems_.end());
  if (G.elems_.empty() || !G.elems_[0].is_identity()) throw std::invalid_argument("element set lacks identity");
  std::unordered_map<Perm, int, PermHash> idx;
  for (size_t i = 0; i < G.elems_.size(); ++i) idx.emplace(G.elems_[i], static_cast<int>(i));
  std::vector<char> in(G.elems_.size(), 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (size_t i = 1; i < G.elems_.size() && covered < G.elems_.size(); ++i) {
    if (in[i]) continue;
    G.gens_.push_back(G.elems_[i]);
    std::fill(in.begin(), in.end(), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      for (auto& g : G.gens_) {
        auto it = idx.find(G.elems_[queue[q]] * g);
        if (it == idx.end()) throw std::invalid_argument("element set is not closed under products");
        if (!in[it->second]) {
          in[it->second] = 1;
          queue.push_back(it->second);
        }
      }
    }
    covered = queue.size();
  }
  if (covered != G.elems_.size()) throw std::invalid_argument("element set is not a group");
  G.build_from_sorted();
  return G;
}

void PermGroup::build_from_sorted() {
  std::sort(elems_.begin(), elems_.end());
  index_.clear();
  index_.reserve(elems_.size() * 2);
  for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
  const int N = static_cast<int>(elems_.size());
  rmul_.assign(gens_.size(), std::vector<int>(N));
  lmulinv_.assign(gens_.size(), std::vector<int>(N));
  for (size_t k = 0; k < gens_.size(); ++k) {
    Perm ginv = gens_[k].inverse();
    for (int x = 0; x < N; ++x) {
      rmul_[k][x] = index_.at(elems_[x] * gens_[k]);
      lmulinv_[k][x] = index_.at(ginv * elems_[x]);
    }
  }
  inv_.resize(N);
  order_.resize(N);
  for (int x = 0; x < N; ++x) {
    inv_[x] = index_.at(elems_[x].inverse());
    order_[x] = elems_[x].order();
  }
  classes_.clear();
  class_of_.assign(N, -1);
  std::vector<char> seen(N, 0);
  for (int x = 0; x < N; ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.members = conjugation_orbit(x);
    for (int m : c.members) seen[m] = 1;
    c.representative = c.members.front();
    c.element_order = order_[x];
    c.is_2regular = (c.element_order % 2) == 1;
    c.is_real = std::binary_search(c.members.begin(), c.members.end(), inv_[x]);
    classes_.push_back(std::move(c));
  }
  std::stable_sort(classes_.begin(), classes_.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  for (size_t c = 0; c < classes_.size(); ++c)
    for (int m : classes_[c].members) class_of_[m] = static_cast<int>(c);
}

std::vector<int> PermGroup::conjugation_orbit(int x) const {
  std::vector<int> orbit{x};
  std::vector<int> sorted{x};
  for (size_t q = 0; q < orbit.size(); ++q) {
    for (size_t k = 0; k < gens_.size(); ++k) {
      int y = lmulinv_[k][rmul_[k][orbit[q]]];
      auto it = std::lower_bound(sorted.begin(), sorted.end(), y);
      if (it != sorted.end() && *it == y) continue;
      sorted.insert(it, y);
      orbit.push_back(y);
    }
  }
  return sorted;
}

int PermGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) {
    if (p.degree() > degree_) {
      for (int i = degree_; i < p.degree(); ++i)
        if (p[i] != i) return -1;
      std::vector<std::uint16_t> img(p.images().begin(), p.images().begin() + degree_);
      auto it = index_.find(Perm(std::move(img)));
      return it == index_.end() ? -1 : it->second;
    }
    auto it = index_.find(p.extended(degree_));
    return it == index_.end() ? -1 : it->second;
  }
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::require_index(const Perm& p) const {
  int i = index_of(p);
  if (i < 0) throw NotMember("permutation " + p.cycles_str() + " is not in the group");
  return i;
}

int PermGroup::mul(int i, int j) const { return index_.at(elems_[i] * elems_[j]); }

int PermGroup::conj(int x, int g) const { return index_.at(elems_[inv_[g]] * elems_[x] * elems_[g]); }

int PermGroup::power(int x, long long k) const { return index_.at(elems_[x].pow(k)); }

int PermGroup::exponent() const {
  long long e = 1;
  for (auto& c : classes_) e = lcm_ll(e, c.element_order);
  return static_cast<int>(e);
}

PermGroup PermGroup::subgroup(const std::vector<Perm>& gens) const {
  for (auto& g : gens) require_index(g);
  return generate(gens, degree_);
}

PermGroup PermGroup::subgroup_from_indices(const std::vector<int>& idx) const {
  std::vector<Perm> el;
  el.reserve(idx.size());
  for (int i : idx) el.push_back(elems_[i]);
  return from_elements(el, degree_);
}

PermGroup PermGroup::centralizer(const Perm& g0) const {
  Perm g = elems_[require_index(g0)];
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x)
    if (elems_[x] * g == g * elems_[x]) idx.push_back(static_cast<int>(x));
  return subgroup_from_indices(idx);
}

PermGroup PermGroup::extended_centralizer(const Perm& g0) const {
  int gi = require_index(g0);
  const Perm& g = elems_[gi];
  const Perm& ginv = elems_[inv_[gi]];
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x) {
    Perm c = elems_[inv_[x]] * g * elems_[x];
    if (c == g || c == ginv) idx.push_back(static_cast<int>(x));
  }
  return subgroup_from_indices(idx);
}

PermGroup PermGroup::centralizer_of_subgroup(const PermGroup& H) const {
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x) {
    bool ok = true;
    for (auto& h : H.generators()) {
      Perm he = h.extended(degree_);
      if (elems_[x] * he != he * elems_[x]) {
        ok = false;
        break;
      }
    }
    if (ok) idx.push_back(static_cast<int>(x));
  }
  return subgroup_from_indices(idx);
}

PermGroup PermGroup::normalizer(const PermGroup& H) const {
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x) {
    bool ok = true;
    for (auto& h : H.generators()) {
      if (!H.contains(elems_[inv_[x]] * h.extended(degree_) * elems_[x])) {
        ok = false;
        break;
      }
    }
    if (ok) idx.push_back(static_cast<int>(x));
  }
  return subgroup_from_indices(idx);
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> gens;
  for (auto& a : gens_)
    for (auto& b : gens_) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) gens.push_back(c);
    }
  PermGroup H = generate(gens, degree_);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> add;
    for (auto& h : H.generators())
      for (auto& g : gens_) {
        Perm c = g.inverse() * h * g;
        if (!H.contains(c)) add.push_back(c);
      }
    if (!add.empty()) {
      grew = true;
      auto all = H.generators();
      all.insert(all.end(), add.begin(), add.end());
      H = generate(all, degree_);
    }
  }
  return H;
}

PermGroup PermGroup::sylow2() const {
  std::size_t target = std::size_t{1} << nu(static_cast<long long>(order()));
  if (target == 1) return generate({}, degree_);
  int best = 0;
  for (size_t x = 0; x < elems_.size(); ++x) {
    int o = order_[x];
    if ((o & (o - 1)) == 0 && o > order_[best]) best = static_cast<int>(x);
  }
  PermGroup P = generate({elems_[best]}, degree_);
  while (P.order() < target) {
    PermGroup N = normalizer(P);
    int pick = -1;
    for (auto& y : N.elements()) {
      if (P.contains(y)) continue;
      if (P.contains(y * y)) {
        pick = index_of(y);
        break;
      }
    }
    if (pick < 0) throw std::logic_error("sylow2: normalizer ascent stalled");
    auto gens = P.generators();
    gens.push_back(elems_[pick]);
    P = generate(gens, degree_);
  }
  return P;
}

PermGroup PermGroup::intersection(const PermGroup& H) const {
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x)
    if (H.contains(elems_[x])) idx.push_back(static_cast<int>(x));
  return subgroup_from_indices(idx);
}

PermGroup PermGroup::o2() const {
  PermGroup P = sylow2();
  std::vector<int> idx;
  for (size_t x = 0; x < elems_.size(); ++x) {
    if (!P.contains(elems_[x])) continue;
    const auto& cls = classes_[class_of_[x]].members;
    if (std::all_of(cls.begin(), cls.end(), [&](int m) { return P.contains(elems_[m]); }))
      idx.push_back(static_cast<int>(x));
  }
  return subgroup_from_indices(idx);
}

std::vector<int> PermGroup::involutions() const {
  std::vector<int> r;
  for (size_t x = 0; x < elems_.size(); ++x)
    if (order_[x] <= 2) r.push_back(static_cast<int>(x));
  return r;
}

bool PermGroup::is_subgroup_of(const PermGroup& H) const {
  for (auto& g : gens_)
    if (!H.contains(g)) return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup& H) const {
  return order() == H.order() && is_subgroup_of(H);
}

bool PermGroup::is_normal_in(const PermGroup& H) const {
  if (!is_subgroup_of(H)) return false;
  for (auto& g : H.generators())
    for (auto& h : gens_)
      if (!contains(g.inverse() * h * g)) return false;
  return true;
}

std::vector<Perm> parse_generators(const std::string& text) {
  std::vector<Perm> gens;
  std::istringstream is(text);
  std::string line;
  int n = 1;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(Perm::parse(line));
    n = std::max(n, gens.back().degree());
  }
  for (auto& g : gens) g = g.extended(n);
  return gens;
}

PermGroup group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto gens = parse_generators(ss.str());
  int n = 1;
  for (auto& g : gens) n = std::max(n, g.degree());
  return PermGroup::generate(gens, n);
}

}  // namespace wb
