#include "workbench/block_theory.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "workbench/errors.hpp"

namespace wb {
namespace {

std::vector<int> indices_in(const PermGroup& G, const PermGroup& H) {
  std::vector<int> v;
  for (auto& h : H.elements()) v.push_back(G.require_index(h.extended(G.degree())));
  std::sort(v.begin(), v.end());
  return v;
}

int two_part_exponent(std::size_t n) { return nu(static_cast<long long>(n)); }

bool block_is_real(const CharacterTable& T, const BlockData& B) {
  std::set<int> s(B.chars.begin(), B.chars.end());
  for (int c : B.chars)
    if (!s.count(T.conjugate(c))) return false;
  return true;
}

}  // namespace

int table_field_degree(const CharacterTable& T) { return residue_degree(static_cast<int>(T.exponent())); }

IdempotentSupport block_idempotent_mod2(const CharacterTable& T, const BlockData& B) {
  const int f = table_field_degree(T);
  const auto& inv = T.inverse_map();
  IdempotentSupport out;
  for (int l = 0; l < T.num_classes(); ++l) {
    Cyclotomic s;
    for (int c : B.chars) s += T.value(c, inv[l]) * Rational(static_cast<long>(T.degree(c)));
    s /= Rational(static_cast<long>(T.group().order()));
    out.push_back(reduce_mod2(s).embed(f));
  }
  return out;
}

std::vector<int> block_heights(const CharacterTable& T, const BlockData& B) {
  const int base = two_part_exponent(T.group().order()) - B.defect;
  std::vector<int> h;
  for (int c : B.chars) h.push_back(nu(T.degree(c)) - base);
  return h;
}

std::string block_label(const CharacterTable& T, const BlockData& B) {
  std::string s = "B" + std::to_string(B.index) + "[";
  for (size_t i = 0; i < B.chars.size(); ++i) s += (i ? "," : "") + std::to_string(T.degree(B.chars[i]));
  return s + "]";
}

std::vector<int> real_defect_classes(const CharacterTable& T, const BlockData& B) {
  if (!block_is_real(T, B)) throw NotRealBlock("block " + block_label(T, B) + " is not real");
  auto e = block_idempotent_mod2(T, B);
  const auto& cls = T.group().classes();
  std::vector<int> out;
  for (int l = 0; l < T.num_classes(); ++l)
    if (cls[l].is_real && cls[l].is_2regular && !e[l].is_zero() && !B.omega[l].is_zero()) out.push_back(l);
  return out;
}

DefectCouple couple_from_element(const PermGroup& G, int c) {
  const Perm& g = G.element(c);
  PermGroup Cs = G.extended_centralizer(g);
  PermGroup C = G.centralizer(g);
  DefectCouple k;
  k.element = c;
  k.cls = G.class_of(c);
  k.E = Cs.sylow2();
  k.D = k.E.intersection(C);
  // D is Sylow in C(c) because [C*(c) : C(c)] <= 2
  if (two_part_exponent(k.D.order()) != two_part_exponent(C.order()))
    throw std::logic_error("E n C(c) is not a Sylow 2-subgroup of C(c)");
  if (k.E.order() == k.D.order()) {
    k.etype = ExtType::principal;
  } else {
    try {
      k.etype = classify_extension(k.D, k.E);
    } catch (const NotDihedral& e) {
      k.note = e.what();
    }
  }
  return k;
}

DefectCouple defect_couple(const CharacterTable& T, const BlockData& B) {
  auto rdc = real_defect_classes(T, B);
  if (rdc.empty()) throw std::logic_error("real block without a real defect class");
  const PermGroup& G = T.group();
  DefectCouple k = couple_from_element(G, G.classes()[rdc[0]].representative);
  if (two_part_exponent(k.D.order()) != B.defect)
    throw std::logic_error("couple defect group has the wrong order for " + block_label(T, B));
  return k;
}

bool couple_conjugacy_check(const CharacterTable& T, const BlockData& B) {
  const PermGroup& G = T.group();
  const int n = static_cast<int>(G.order());
  std::vector<std::pair<std::vector<int>, std::vector<int>>> couples;
  for (int l : real_defect_classes(T, B))
    for (int c : G.classes()[l].members) {
      auto k = couple_from_element(G, c);
      couples.emplace_back(indices_in(G, k.D), indices_in(G, k.E));
    }
  if (couples.empty()) return false;
  const auto& [D0, E0] = couples[0];
  std::vector<char> inD(n), inE(n);
  for (size_t i = 1; i < couples.size(); ++i) {
    const auto& [Dk, Ek] = couples[i];
    if (Dk.size() != D0.size() || Ek.size() != E0.size()) return false;
    std::fill(inD.begin(), inD.end(), 0);
    std::fill(inE.begin(), inE.end(), 0);
    for (int x : Dk) inD[x] = 1;
    for (int x : Ek) inE[x] = 1;
    bool found = false;
    for (int g = 0; g < n && !found; ++g) {
      bool ok = true;
      for (int x : E0)
        if (!inE[G.conj(x, g)]) {
          ok = false;
          break;
        }
      for (size_t j = 0; ok && j < D0.size(); ++j) ok = inD[G.conj(D0[j], g)];
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<BlockData> block_partition(const CharacterTable& T) {
  const PermGroup& G = T.group();
  const int f = table_field_degree(T);
  const int r = T.num_classes();
  const int nuG = two_part_exponent(G.order());
  std::vector<std::vector<GF2m>> om(T.num_chars());
  for (int c = 0; c < T.num_chars(); ++c)
    for (int l = 0; l < r; ++l) {
      Cyclotomic w = T.value(c, l) * Rational(static_cast<long>(T.class_size(l)));
      w /= Rational(static_cast<long>(T.degree(c)));
      om[c].push_back(reduce_mod2(w).embed(f));
    }
  std::vector<BlockData> blocks;
  std::vector<int> assigned(T.num_chars(), -1);
  for (int c = 0; c < T.num_chars(); ++c) {
    if (assigned[c] >= 0) continue;
    BlockData B;
    B.index = static_cast<int>(blocks.size());
    B.omega = om[c];
    for (int c2 = c; c2 < T.num_chars(); ++c2)
      if (assigned[c2] < 0 && om[c2] == om[c]) {
        assigned[c2] = B.index;
        B.chars.push_back(c2);
      }
    int mn = 1 << 30;
    for (int x : B.chars) mn = std::min(mn, nu(T.degree(x)));
    B.defect = nuG - mn;
    B.is_principal = c == 0;
    blocks.push_back(std::move(B));
  }
  for (auto& B : blocks) {
    auto e = block_idempotent_mod2(T, B);
    for (int l = 0; l < r && B.defect_class < 0; ++l)
      if (G.classes()[l].is_2regular && !e[l].is_zero() && !B.omega[l].is_zero()) B.defect_class = l;
    if (B.defect_class < 0) throw std::logic_error("block without a defect class");
    B.defect_group = G.centralizer(G.element(G.classes()[B.defect_class].representative)).sylow2();
    if (two_part_exponent(B.defect_group->order()) != B.defect)
      throw std::logic_error("defect group order disagrees with the character degrees");
    B.is_real = block_is_real(T, B);
    if (B.is_real) {
      B.real_defect_classes = real_defect_classes(T, B);
      B.couple = defect_couple(T, B);
    }
  }
  return blocks;
}

}  // namespace wb
