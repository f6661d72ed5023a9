#include "workbench/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "workbench/errors.hpp"

namespace wb {
namespace {

// Unique solution of A x = b over Q, or nothing when inconsistent or
// underdetermined.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const size_t m = A.size(), n = A.empty() ? 0 : A[0].size();
  std::vector<int> piv;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (size_t k = c; k < n; ++k) A[i][k] -= f * A[r][k];
      b[i] -= f * b[r];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  if (r < n) return std::nullopt;
  for (size_t i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (size_t i = 0; i < r; ++i) x[piv[i]] = b[i] / A[i][piv[i]];
  return x;
}

}  // namespace

std::vector<int> galois_permutation(const CharacterTable& T, long long r) {
  auto pm = T.power_map(r);
  std::vector<int> out(T.num_chars(), -1);
  for (int c = 0; c < T.num_chars(); ++c)
    for (int c2 = 0; c2 < T.num_chars(); ++c2) {
      bool eq = true;
      for (int l = 0; l < T.num_classes() && eq; ++l) eq = T.value(c2, l) == T.value(c, pm[l]);
      if (eq) {
        out[c] = c2;
        break;
      }
    }
  return out;
}

std::vector<std::vector<int>> two_galois_orbits(const CharacterTable& T, const BlockData& B) {
  const long long e = T.exponent();
  const long long odd = e >> nu(e);
  std::vector<std::vector<int>> perms;
  for (long long r = 1 + odd; r < e; r += odd)
    if (std::gcd(r, e) == 1) perms.push_back(galois_permutation(T, r));
  std::vector<std::vector<int>> orbits;
  std::set<int> seen;
  for (int c : B.chars) {
    if (seen.count(c)) continue;
    std::set<int> orb{c};
    for (auto& p : perms) orb.insert(p[c]);
    seen.insert(orb.begin(), orb.end());
    orbits.emplace_back(orb.begin(), orb.end());
  }
  return orbits;
}

std::vector<MoritaHypothesis> morita_candidates(const CharacterTable& T, const BlockData& B) {
  std::vector<MoritaHypothesis> out;
  auto h = block_heights(T, B);
  std::vector<int> h0, h1;
  for (size_t i = 0; i < B.chars.size(); ++i) (h[i] == 0 ? h0 : h1).push_back(B.chars[i]);
  if (h0.size() != 4 || B.defect < 3) return out;
  for (MoritaType t : kMoritaTypes) {
    MoritaProfile p = build_profile(t, B.defect);
    MoritaHypothesis hyp;
    hyp.type = t;
    std::array<int, 4> rows{};
    std::vector<int> perm = h0;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::vector<Rational>> A;
      std::vector<Rational> b;
      for (int i = 0; i < 4; ++i) {
        std::vector<Rational> row;
        for (int k = 0; k < p.l; ++k) row.emplace_back(p.M[i][k]);
        A.push_back(row);
        b.emplace_back(static_cast<long>(T.degree(perm[i])));
      }
      auto x = solve_exact(A, b);
      if (!x) continue;
      std::vector<long long> dims;
      bool ok = true;
      for (auto& q : *x) {
        if (q.get_den() != 1 || q <= 0) ok = false;
        else dims.push_back(q.get_num().get_si());
      }
      if (!ok) continue;
      for (int c : h1) {
        long long s = 0;
        for (int k = 0; k < p.l; ++k) s += p.Mh[k] * dims[k];
        if (s != T.degree(c)) ok = false;
      }
      if (!ok) continue;
      if (hyp.row_assignments.empty()) hyp.simple_dims = dims;
      else if (hyp.simple_dims != dims) continue;  // keep one dimension vector per type
      std::copy(perm.begin(), perm.end(), rows.begin());
      hyp.row_assignments.push_back(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!hyp.row_assignments.empty()) out.push_back(std::move(hyp));
  }
  return out;
}

PipelineReport run_pipeline(const std::string& name, const PermGroup& G, const Table2& table, const PipelineOptions& opt) {
  PipelineReport rep;
  rep.group = name;
  rep.order = G.order();
  CharacterTable T = CharacterTable::compute(G);
  const PermGroup& H = T.group();
  rep.num_classes = T.num_classes();
  rep.degrees = T.degrees();
  rep.fs = T.fs_vector();
  rep.omega = H.involutions().size();
  for (int c = 0; c < T.num_chars(); ++c) rep.fs_count += rep.fs[c] * T.degree(c);
  if (rep.fs_count != static_cast<long long>(rep.omega))
    rep.mismatches.push_back("sum eps(chi) chi(1) = " + std::to_string(rep.fs_count) + " but |Omega| = " + std::to_string(rep.omega));

  std::optional<GF2Module> omega_module;
  if (opt.modules) omega_module = involution_perm_module(H);
  int cut_total = 0;
  bool all_cut = true;

  for (auto& B : block_partition(T)) {
    BlockReport br;
    br.block = B;
    br.label = block_label(T, B);
    for (int c : B.chars) br.fs.push_back(rep.fs[c]);
    br.heights = block_heights(T, B);
    const int d = B.defect;
    if (d >= 3 && B.defect_group) {
      br.dihedral = is_dihedral_2group(*B.defect_group);
      br.defect_fingerprint = fingerprint(*B.defect_group, *B.defect_group).str();
    }
    if (B.is_real) br.couple_unique = couple_conjugacy_check(T, B);
    if (br.couple_unique && !*br.couple_unique) br.mismatches.push_back("defect couples are not all conjugate");

    std::optional<SolveResult> solved;
    const MoritaHypothesis* hyp = nullptr;
    if (br.dihedral) {
      const size_t want = (std::size_t{1} << (d - 2)) + 3;
      if (B.chars.size() != want)
        br.mismatches.push_back("k(B) = " + std::to_string(B.chars.size()) + ", expected " + std::to_string(want));
      br.candidates = morita_candidates(T, B);
      std::optional<ExtType> et = B.couple ? B.couple->etype : std::nullopt;
      if (!B.is_real) br.notes.push_back("dihedral block is not real; no couple");
      if (et) {
        std::erase_if(br.candidates, [&](const MoritaHypothesis& h) {
          return solve(h.type, *et, d).status == SolveStatus::infeasible;
        });
      }
      if (br.candidates.size() == 1) {
        hyp = &br.candidates[0];
        br.morita = hyp->type;
      } else if (br.candidates.empty()) {
        br.mismatches.push_back("no Morita type fits the degrees of " + br.label);
      } else {
        br.notes.push_back("several Morita types fit the degrees; no table row asserted");
      }
      if (hyp && et) {
        br.table_etype = *et == ExtType::principal ? ExtType::a : *et;
        solved = solve(hyp->type, *et, d);
        const Table2Row* row = table.find(hyp->type, *br.table_etype);
        if (!row) {
          br.mismatches.push_back(std::string("block realizes the excluded cell ") + morita_name(hyp->type) + "/" +
                                  ext_type_name(*br.table_etype));
        } else {
          br.table_key = row->key();
          SignAssignment want = row->expected(d);
          br.expected_signs = want.str();
          // height-1 families by 2-Galois orbit size
          std::vector<int> fam(d - 2, 2);  // 2 marks "unset"
          bool fam_ok = true;
          for (auto& orb : two_galois_orbits(T, B)) {
            if (nu(T.degree(orb[0])) - (nu(static_cast<long long>(H.order())) - d) != 1) continue;
            int j = nu(static_cast<long long>(orb.size()));
            if ((1u << j) != orb.size() || j >= d - 2 || fam[j] != 2) {
              fam_ok = false;
              continue;
            }
            fam[j] = rep.fs[orb[0]];
            for (int c : orb)
              if (rep.fs[c] != fam[j]) fam_ok = false;
          }
          if (std::count(fam.begin(), fam.end(), 2)) fam_ok = false;
          if (!fam_ok) br.mismatches.push_back("height-1 characters do not form one 2-Galois orbit per family");
          bool matched = false;
          for (auto& rows : hyp->row_assignments) {
            SignAssignment obs;
            for (int i = 0; i < 4; ++i) obs.eps_height0[i] = rep.fs[rows[i]];
            obs.eps_family = fam;
            if (br.observed_signs.empty() || obs == want) br.observed_signs = obs.str();
            if (fam_ok && obs == want) {
              matched = true;
              break;
            }
          }
          br.table_match = matched;
          if (!matched) br.mismatches.push_back("indicators " + br.observed_signs + " differ from row " + br.table_key + " (" + br.expected_signs + ")");
          if (solved->status != SolveStatus::unique || !(solved->solutions[0] == want))
            br.mismatches.push_back("solver does not return the table row for " + br.table_key);
        }
      }
    } else if (B.is_real && d >= 1) {
      br.notes.push_back("defect group is not dihedral; excluded from table matching");
    }

    if (omega_module) {
      ModuleReport& mr = br.modules;
      try {
        Submodule cut = block_cut(H, *omega_module, block_idempotent_mod2(T, B));
        mr.computed = true;
        mr.cut_dim = cut.module.dim;
        cut_total += mr.cut_dim;
        mr.self_dual = self_dual_check(cut);
        if (B.is_real && !mr.self_dual) br.mismatches.push_back("cut of a real block is not self-dual");
        mr.factors = meataxe_factors(cut.module, opt.seed);
        mr.absolute = absolute_factors(mr.factors);
        long long fs_dim = 0;
        for (size_t i = 0; i < B.chars.size(); ++i) fs_dim += br.fs[i] * T.degree(B.chars[i]);
        if (fs_dim != mr.cut_dim)
          br.mismatches.push_back("cut dimension " + std::to_string(mr.cut_dim) + " differs from sum eps(chi) chi(1) = " + std::to_string(fs_dim));
        if (solved && solved->status == SolveStatus::unique && hyp) {
          for (int k = 0; k < static_cast<int>(hyp->simple_dims.size()); ++k)
            if (solved->multiplicities[0][k] > 0)
              mr.predicted.emplace_back(static_cast<int>(hyp->simple_dims[k]), static_cast<int>(solved->multiplicities[0][k]));
          std::sort(mr.predicted.begin(), mr.predicted.end());
          mr.multiplicities_match = mr.predicted == mr.absolute;
          if (!mr.multiplicities_match) br.mismatches.push_back("composition multiplicities differ from the prediction");
        }
        if (mr.cut_dim <= opt.max_split_dim) {
          mr.summands = summand_split(cut.module, opt.seed);
          mr.summands_computed = true;
        } else {
          br.notes.push_back("summand splitting skipped above dimension " + std::to_string(opt.max_split_dim));
        }
        if (B.couple && mr.cut_dim <= opt.max_split_dim) {
          mr.valuation = dimension_valuation_check(T, B, opt.seed);
          if (!mr.valuation->ok) br.mismatches.push_back("summand dimension below the vertex bound");
        }
      } catch (const FieldTooSmall& e) {
        all_cut = false;
        mr.skipped = e.what();
      }
    }
    for (auto& m : br.mismatches) rep.mismatches.push_back(br.label + ": " + m);
    rep.blocks.push_back(std::move(br));
  }
  if (omega_module && all_cut && cut_total != omega_module->dim)
    rep.mismatches.push_back("block cuts do not add up to |Omega|");
  return rep;
}

}  // namespace wb
