// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage, input or cap errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "workbench/block_theory.hpp"
#include "workbench/builtin_groups.hpp"
#include "workbench/char_table.hpp"
#include "workbench/errors.hpp"
#include "workbench/fs_solver.hpp"
#include "workbench/golden.hpp"
#include "workbench/mod2_rep.hpp"
#include "workbench/pgroup.hpp"
#include "workbench/pipeline.hpp"

using nlohmann::json;
using namespace wb;

namespace {

struct Config {
  bool json_out = false;
  bool census = false;
  std::uint64_t seed = 0;
  std::string group;
  std::string table_path;
  int d = 3;
  std::string type, etype, block = "principal";
  bool no_tiebreak = false;
  bool reality = false;
  int dmin = 3, dmax = 6, jobs = 1;
  std::string d_range;
  int max_split_dim = 128;
  std::string export_dir;
  std::vector<std::string> files;
};

std::string signs(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += x > 0 ? '+' : x < 0 ? '-' : '0';
  return s;
}

json cyclotomic_json(const Cyclotomic& c) {
  json terms = json::array();
  for (auto& [e, q] : c.terms()) terms.push_back({e, q.get_num().get_si(), q.get_den().get_si()});
  return {{"conductor", c.conductor()}, {"terms", terms}};
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.json_out) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

Table2 table_for(const Config& cfg) { return cfg.table_path.empty() ? load_table2() : load_table2(cfg.table_path); }

// ---- group ----
int cmd_group(const Config& cfg) {
  PermGroup G = load_group(cfg.group);
  json j;
  j["group"] = cfg.group;
  j["order"] = G.order();
  j["degree"] = G.degree();
  j["exponent"] = G.exponent();
  json gens = json::array();
  for (auto& g : G.generators()) gens.push_back(g.cycles_str());
  j["generators"] = gens;
  json cls = json::array();
  for (size_t l = 0; l < G.classes().size(); ++l) {
    auto& c = G.classes()[l];
    cls.push_back({{"index", l},
                   {"order", c.element_order},
                   {"size", c.size()},
                   {"real", c.is_real},
                   {"two_regular", c.is_2regular},
                   {"representative", G.element(c.representative).cycles_str()}});
  }
  j["classes"] = cls;
  PermGroup P = G.sylow2();
  j["involutions"] = G.involutions().size();
  j["sylow2_order"] = P.order();
  j["sylow2_dihedral"] = P.order() >= 8 && is_dihedral_2group(P);
  j["o2_order"] = G.o2().order();
  j["center_order"] = G.center().order();
  std::ostringstream t;
  t << cfg.group << ": order " << G.order() << ", degree " << G.degree() << ", exponent " << G.exponent() << "\n";
  t << "classes " << G.classes().size() << ", |Omega| " << G.involutions().size() << ", |P| " << P.order()
    << (j["sylow2_dihedral"].get<bool>() ? " (dihedral)" : "") << ", |O_2| " << G.o2().order() << ", |Z| "
    << G.center().order() << "\n";
  for (auto& c : cls)
    t << "  " << std::setw(3) << c["index"].get<int>() << "  order " << std::setw(3) << c["order"].get<int>() << "  size "
      << std::setw(5) << c["size"].get<int>() << (c["real"].get<bool>() ? "  real" : "      ") << "  "
      << c["representative"].get<std::string>() << "\n";
  emit(cfg, j, t.str());
  return 0;
}

// ---- extensions ----
int cmd_extensions(const Config& cfg) {
  DihedralFrame f = build_dihedral(cfg.d);
  auto census = census_degree2_extensions(f);
  json arr = json::array();
  std::ostringstream t;
  t << "degree-2 extensions of D_" << (1 << cfg.d) << ": " << census.size() << " classes\n";
  for (auto& c : census) {
    if (!cfg.census) {
      arr.push_back(ext_type_name(c.type));
      t << "  (" << ext_type_name(c.type) << ")  |E| " << c.fp.order << "\n";
      continue;
    }
    arr.push_back({{"type", ext_type_name(c.type)},
                   {"order", c.fp.order},
                   {"involutions", c.fp.involutions},
                   {"exponent", c.fp.exponent},
                   {"center", c.fp.center},
                   {"derived", c.fp.derived},
                   {"central_involution_outside", c.fp.central_involution_outside},
                   {"realizations", c.realizations}});
    t << "  (" << ext_type_name(c.type) << ")  " << c.fp.str() << "  realizations " << c.realizations << "\n";
  }
  emit(cfg, {{"d", cfg.d}, {cfg.census ? "classes" : "types", arr}}, t.str());
  return 0;
}

// ---- table1 ----
int cmd_table1(const Config& cfg) {
  ExtensionFrame ext = build_extension(build_dihedral(cfg.d), parse_ext_type(cfg.type));
  json rows = json::array();
  std::ostringstream t;
  t << "E-classes in E\\D, d = " << cfg.d << ", type (" << cfg.type << ")\n";
  for (auto& r : eclass_table(ext)) {
    rows.push_back({{"pattern", r.pattern},
                    {"param", r.param},
                    {"rep", r.rep},
                    {"order2", r.order2},
                    {"centralizer", r.centralizer},
                    {"class_size", r.class_size}});
    t << "  " << std::left << std::setw(8) << r.rep << std::right << (r.order2 ? "  involution    " : "  no involution ")
      << " C_D = " << std::left << std::setw(5) << r.centralizer << std::right << "  class size " << r.class_size << "\n";
  }
  json j{{"d", cfg.d}, {"type", cfg.type}, {"rows", rows}};
  if (cfg.reality) {
    json rp = json::array();
    t << "subgroups of D up to conjugacy:\n";
    for (auto& e : reality_pattern(ext)) {
      rp.push_back({{"name", e.name}, {"order", e.order}, {"real", e.real}, {"strongly_real", e.strongly_real}, {"conjugates", e.conjugates}});
      t << "  " << std::left << std::setw(5) << e.name << std::right << "  order " << std::setw(3) << e.order
        << (e.real ? "  real" : "      ") << (e.strongly_real ? "  strongly real" : "") << "\n";
    }
    j["reality"] = rp;
  }
  emit(cfg, j, t.str());
  return 0;
}

// ---- chartab ----
int cmd_chartab(const Config& cfg) {
  CharacterTable T = CharacterTable::compute(load_group(cfg.group));
  const PermGroup& G = T.group();
  json cls = json::array();
  for (int l = 0; l < T.num_classes(); ++l) {
    auto& c = G.classes()[l];
    cls.push_back({{"index", l},
                   {"order", c.element_order},
                   {"size", c.size()},
                   {"centralizer", T.centralizer_order(l)},
                   {"square_class", T.powermap2()[l]},
                   {"inverse_class", T.inverse_map()[l]}});
  }
  json chars = json::array();
  std::ostringstream t;
  t << cfg.group << ": " << T.num_chars() << " characters, prime " << T.prime() << "\n";
  for (int c = 0; c < T.num_chars(); ++c) {
    json vals = json::array();
    t << "  chi" << std::left << std::setw(3) << c << std::right << " [" << std::setw(2) << T.fs_indicator(c) << "]";
    for (int l = 0; l < T.num_classes(); ++l) {
      vals.push_back(cyclotomic_json(T.value(c, l)));
      t << "  " << T.value(c, l).str();
    }
    t << "\n";
    chars.push_back({{"degree", T.degree(c)},
                     {"fs", T.fs_indicator(c)},
                     {"real", T.is_real(c)},
                     {"two_rational", T.is_2rational(c)},
                     {"values", vals}});
  }
  json j{{"group", cfg.group}, {"order", G.order()}, {"prime", T.prime()}, {"classes", cls}, {"characters", chars}};
  std::vector<long long> degs = T.degrees();
  j["degrees"] = degs;
  j["fs"] = T.fs_vector();
  t << "degrees";
  for (auto x : degs) t << ' ' << x;
  t << "\nFS " << signs(T.fs_vector()) << "\n";
  emit(cfg, j, t.str());
  return 0;
}

// ---- blocks ----
json block_json(const CharacterTable& T, const BlockData& B) {
  const PermGroup& G = T.group();
  json chars = json::array();
  for (int c : B.chars) chars.push_back({{"index", c}, {"degree", T.degree(c)}, {"fs", T.fs_indicator(c)}});
  json j{{"index", B.index},
         {"label", block_label(T, B)},
         {"characters", chars},
         {"defect", B.defect},
         {"real", B.is_real},
         {"principal", B.is_principal}};
  if (B.defect_group) {
    j["defect_group_order"] = B.defect_group->order();
    j["defect_group_fingerprint"] = fingerprint(*B.defect_group, *B.defect_group).str();
    j["dihedral"] = B.defect >= 3 && is_dihedral_2group(*B.defect_group);
  }
  json rdc = json::array();
  for (int l : B.real_defect_classes)
    rdc.push_back({{"class", l}, {"representative", G.element(G.classes()[l].representative).cycles_str()}});
  j["real_defect_classes"] = rdc;
  if (B.couple) {
    j["couple"] = {{"c", G.element(B.couple->element).cycles_str()},
                   {"D_order", B.couple->D.order()},
                   {"E_order", B.couple->E.order()},
                   {"etype", B.couple->etype ? ext_type_name(*B.couple->etype) : "none"}};
  }
  return j;
}

int cmd_blocks(const Config& cfg) {
  CharacterTable T = CharacterTable::compute(load_group(cfg.group));
  json arr = json::array();
  std::ostringstream t;
  for (auto& B : block_partition(T)) {
    json j = block_json(T, B);
    arr.push_back(j);
    t << j["label"].get<std::string>() << "  defect " << B.defect << (B.is_real ? "  real" : "  not real");
    if (B.defect_group) t << "  |D| " << B.defect_group->order();
    if (B.couple) t << "  |E| " << B.couple->E.order() << "  etype " << j["couple"]["etype"].get<std::string>();
    t << "\n";
  }
  emit(cfg, {{"group", cfg.group}, {"blocks", arr}}, t.str());
  return 0;
}

// ---- solve ----
json solve_json(const SolveResult& r) {
  json sols = json::array();
  for (auto& a : r.solutions) sols.push_back({{"eps_height0", a.height0_str()}, {"eps_family", a.family_str()}});
  return {{"cell", r.cell()},
          {"type", morita_name(r.type)},
          {"etype", ext_type_name(r.etype)},
          {"d", r.d},
          {"status", status_name(r.status)},
          {"solutions", sols},
          {"multiplicities", r.multiplicities}};
}

int cmd_solve(const Config& cfg) {
  SolverOptions opt;
  opt.tiebreak = !cfg.no_tiebreak;
  SolveResult r = solve(parse_morita(cfg.type), parse_ext_type(cfg.etype), cfg.d, opt);
  std::ostringstream t;
  t << r.cell() << ": " << status_name(r.status) << "\n";
  for (size_t i = 0; i < r.solutions.size(); ++i) {
    t << "  " << r.solutions[i].str() << "  multiplicities";
    for (auto m : r.multiplicities[i]) t << ' ' << m;
    t << "\n";
  }
  emit(cfg, solve_json(r), t.str());
  return 0;
}

// ---- verify-table2 ----
int cmd_verify(Config cfg) {
  if (!cfg.d_range.empty()) {
    auto dots = cfg.d_range.find("..");
    try {
      if (dots == std::string::npos) throw std::invalid_argument("no ..");
      cfg.dmin = std::stoi(cfg.d_range.substr(0, dots));
      cfg.dmax = std::stoi(cfg.d_range.substr(dots + 2));
    } catch (const std::exception&) {
      throw UsageError("--d-range takes lo..hi");
    }
    if (cfg.dmin < 3 || cfg.dmax > 12 || cfg.dmin > cfg.dmax) throw UsageError("--d-range must lie in 3..12");
  }
  SolverOptions opt;
  opt.tiebreak = !cfg.no_tiebreak;
  Table2Report rep = verify_table2(table_for(cfg), cfg.dmin, cfg.dmax, opt, cfg.jobs);
  json cells = json::array();
  std::ostringstream t;
  for (auto& c : rep.cells) {
    std::string got = c.result.solutions.empty() ? "-" : c.result.solutions[0].str();
    cells.push_back({{"cell", c.result.cell()},
                     {"expected", c.expected},
                     {"status", status_name(c.result.status)},
                     {"solution", got},
                     {"real_characters", c.real_characters},
                     {"real_columns", c.real_columns},
                     {"ok", c.ok},
                     {"note", c.note}});
    t << (c.ok ? "OK   " : "FAIL ") << std::left << std::setw(14) << c.result.cell() << std::setw(12)
      << status_name(c.result.status) << std::setw(12) << got << std::right << c.note << "\n";
  }
  t << "rows " << rep.rows_ok << "/" << rep.rows_total << " OK, excluded cells " << rep.excluded_ok << "/"
    << rep.excluded_total << " OK, ambiguous " << rep.ambiguous << "\n";
  json j{{"rows_ok", rep.rows_ok},
         {"rows_total", rep.rows_total},
         {"excluded_ok", rep.excluded_ok},
         {"excluded_total", rep.excluded_total},
         {"ambiguous", rep.ambiguous},
         {"ok", rep.all_ok()},
         {"cells", cells}};
  emit(cfg, j, t.str());
  return rep.all_ok() ? 0 : 1;
}

// ---- pipeline / invmod ----
json module_json(const ModuleReport& m) {
  json j{{"computed", m.computed}};
  if (!m.computed) {
    j["skipped"] = m.skipped;
    return j;
  }
  json f = json::array();
  for (auto& c : m.factors) f.push_back({{"dim", c.dim}, {"multiplicity", c.multiplicity}, {"end_degree", c.end_degree}});
  json a = json::array();
  for (auto& [d, k] : m.absolute) a.push_back({d, k});
  json p = json::array();
  for (auto& [d, k] : m.predicted) p.push_back({d, k});
  j["dim"] = m.cut_dim;
  j["factors"] = f;
  j["absolute_factors"] = a;
  j["predicted_factors"] = p;
  j["checks"] = {{"self_dual", m.self_dual}, {"multiplicities_match", m.multiplicities_match}};
  if (m.summands_computed) {
    json s = json::array();
    for (auto& c : m.summands) s.push_back({{"dim", c.dim}, {"multiplicity", c.multiplicity}, {"certified", c.certified}});
    j["summands"] = s;
    j["summand_count"] = summand_count(m.summands);
  }
  if (m.valuation) {
    json rows = json::array();
    for (auto& r : m.valuation->rows)
      rows.push_back({{"involution_class", r.involution_class},
                      {"dim", r.dim},
                      {"nu_dim", r.nu_dim},
                      {"bound_index", r.bound_index},
                      {"bound_vertex", r.bound_vertex},
                      {"ok", r.ok}});
    j["checks"]["valuation"] = m.valuation->ok;
    j["valuation"] = rows;
  }
  return j;
}

json block_report_json(const BlockReport& b) {
  json j{{"label", b.label},
         {"defect", b.block.defect},
         {"real", b.block.is_real},
         {"principal", b.block.is_principal},
         {"fs", signs(b.fs)},
         {"heights", b.heights},
         {"dihedral", b.dihedral},
         {"modules", module_json(b.modules)},
         {"notes", b.notes},
         {"mismatches", b.mismatches}};
  if (b.couple_unique) j["couple_unique"] = *b.couple_unique;
  if (b.block.couple && b.block.couple->etype) j["etype"] = ext_type_name(*b.block.couple->etype);
  if (b.morita) j["morita_hypothesis"] = morita_name(*b.morita);
  if (!b.table_key.empty()) {
    j["table_row"] = b.table_key;
    j["expected_signs"] = b.expected_signs;
    j["observed_signs"] = b.observed_signs;
    j["table_match"] = b.table_match.value_or(false);
  }
  return j;
}

std::string module_text(const ModuleReport& m) {
  std::ostringstream t;
  if (!m.computed) return "    module cut skipped: " + m.skipped + "\n";
  t << "    kOmegaB dim " << m.cut_dim << ", factors";
  for (auto& [d, k] : m.absolute) t << ' ' << d << '^' << k;
  if (!m.predicted.empty()) {
    t << ", predicted";
    for (auto& [d, k] : m.predicted) t << ' ' << d << '^' << k;
    t << (m.multiplicities_match ? " (match)" : " (MISMATCH)");
  }
  t << (m.self_dual ? ", self-dual" : ", not self-dual") << "\n";
  if (m.summands_computed) {
    t << "    summands " << summand_count(m.summands) << ":";
    for (auto& c : m.summands) t << ' ' << c.dim << (c.multiplicity > 1 ? "x" + std::to_string(c.multiplicity) : "");
    t << "\n";
  }
  if (m.valuation) t << "    vertex valuation bounds " << (m.valuation->ok ? "hold" : "FAIL") << "\n";
  return t.str();
}

PipelineReport pipeline_for(const Config& cfg) {
  PipelineOptions opt;
  opt.seed = cfg.seed;
  opt.max_split_dim = cfg.max_split_dim;
  return run_pipeline(cfg.group, load_group(cfg.group), table_for(cfg), opt);
}

int cmd_pipeline(const Config& cfg) {
  PipelineReport r = pipeline_for(cfg);
  json blocks = json::array();
  std::ostringstream t;
  t << r.group << ": order " << r.order << ", " << r.num_classes << " classes, |Omega| " << r.omega
    << ", sum eps(chi)chi(1) " << r.fs_count << "\n";
  t << "degrees";
  for (auto x : r.degrees) t << ' ' << x;
  t << "\nFS " << signs(r.fs) << "\n";
  for (auto& b : r.blocks) {
    blocks.push_back(block_report_json(b));
    t << b.label << "  defect " << b.block.defect << "  FS " << signs(b.fs);
    if (b.block.couple && b.block.couple->etype) t << "  etype " << ext_type_name(*b.block.couple->etype);
    if (b.morita) t << "  Morita hypothesis (" << morita_name(*b.morita) << ")";
    t << "\n";
    if (!b.table_key.empty())
      t << "    table row " << b.table_key << ": expected " << b.expected_signs << ", observed " << b.observed_signs
        << (b.table_match.value_or(false) ? "  OK" : "  MISMATCH") << "\n";
    t << module_text(b.modules);
    for (auto& n : b.notes) t << "    note: " << n << "\n";
  }
  for (auto& m : r.mismatches) t << "MISMATCH " << m << "\n";
  t << (r.ok() ? "pipeline OK\n" : "pipeline found mismatches\n");
  json j{{"group", r.group},
         {"order", r.order},
         {"classes", r.num_classes},
         {"degrees", r.degrees},
         {"fs", signs(r.fs)},
         {"omega", r.omega},
         {"fs_count", r.fs_count},
         {"blocks", blocks},
         {"mismatches", r.mismatches},
         {"ok", r.ok()}};
  emit(cfg, j, t.str());
  return r.ok() ? 0 : 1;
}

int cmd_invmod(const Config& cfg) {
  PipelineReport r = pipeline_for(cfg);
  const BlockReport* b = nullptr;
  if (cfg.block == "principal") {
    b = &r.blocks.at(0);
  } else {
    int k = -1;
    try {
      k = std::stoi(cfg.block);
    } catch (const std::exception&) {
      throw UsageError("--block takes 'principal' or a block index");
    }
    if (k < 0 || k >= static_cast<int>(r.blocks.size())) throw UsageError("block index out of range");
    b = &r.blocks[k];
  }
  if (!cfg.export_dir.empty()) {
    PermGroup G = load_group(cfg.group);
    CharacterTable T = CharacterTable::compute(G);
    GF2Module M = involution_perm_module(T.group());
    Submodule cut = block_cut(T.group(), M, block_idempotent_mod2(T, b->block));
    std::filesystem::create_directories(cfg.export_dir);
    for (size_t k = 0; k < M.gens.size(); ++k) {
      std::ofstream(cfg.export_dir + "/omega_gen" + std::to_string(k + 1) + ".txt") << [&] {
        std::ostringstream o;
        M.gens[k].write(o);
        return o.str();
      }();
      std::ofstream(cfg.export_dir + "/cut_gen" + std::to_string(k + 1) + ".txt") << [&] {
        std::ostringstream o;
        cut.module.gens[k].write(o);
        return o.str();
      }();
    }
  }
  json j = module_json(b->modules);
  j["group"] = r.group;
  j["block"] = b->label;
  j["omega"] = r.omega;
  std::ostringstream t;
  t << r.group << " " << b->label << ", |Omega| " << r.omega << "\n" << module_text(b->modules);
  emit(cfg, j, t.str());
  bool ok = b->mismatches.empty();
  return ok ? 0 : 1;
}

// ---- scan ----
int cmd_scan(const Config& cfg) {
  json found = json::array();
  std::ostringstream t;
  for (auto& f : cfg.files) {
    CharacterTable T = CharacterTable::compute(load_group(f));
    for (auto& B : block_partition(T)) {
      if (!B.couple || B.defect < 3 || !B.defect_group || !is_dihedral_2group(*B.defect_group)) continue;
      std::string et = B.couple->etype ? ext_type_name(*B.couple->etype) : "none";
      bool interesting = et != "a" && et != "principal";
      found.push_back({{"file", f}, {"block", block_label(T, B)}, {"defect", B.defect}, {"etype", et}, {"non_a", interesting}});
      t << f << "  " << block_label(T, B) << "  d " << B.defect << "  etype " << et << (interesting ? "  <- non-(a)" : "") << "\n";
    }
  }
  if (found.empty()) t << "no real blocks with dihedral defect groups\n";
  emit(cfg, {{"blocks", found}}, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Workbench for real 2-blocks with dihedral defect groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json_out, "JSON output");
  app.add_option("--seed", cfg.seed, "seed for randomized internals")->default_val(0);

  auto* group = app.add_subcommand("group", "group invariants and conjugacy classes");
  group->add_option("--group,-g", cfg.group, "builtin name or generator file")->required();
  auto* ext = app.add_subcommand("extensions", "census of degree-2 extensions of D_{2^d}");
  ext->add_option("--d", cfg.d)->required()->check(CLI::Range(3, 7));
  ext->add_flag("--census", cfg.census, "fingerprint and realization count of each class");
  auto* t1 = app.add_subcommand("table1", "E-classes of E\\D by extension type");
  t1->add_option("--d", cfg.d)->required()->check(CLI::Range(3, 7));
  t1->add_option("--type", cfg.type, "a, b, c, d, e or principal")->required();
  t1->add_flag("--reality", cfg.reality, "also list real and strongly real subgroups");
  auto* ct = app.add_subcommand("chartab", "ordinary character table");
  ct->add_option("--group,-g", cfg.group)->required();
  auto* bl = app.add_subcommand("blocks", "2-blocks, defect groups and couples");
  bl->add_option("--group,-g", cfg.group)->required();
  auto* inv = app.add_subcommand("invmod", "involution module of one block");
  inv->add_option("--group,-g", cfg.group)->required();
  inv->add_option("--block", cfg.block, "'principal' or a block index")->default_val("principal");
  inv->add_option("--export", cfg.export_dir, "directory for generator matrices");
  inv->add_option("--max-split-dim", cfg.max_split_dim)->default_val(128);
  inv->add_option("--table", cfg.table_path, "golden table file");
  auto* sv = app.add_subcommand("solve", "solve one (Morita type, extension type, d) cell");
  sv->add_option("--type,--morita", cfg.type, "i..vi")->required();
  sv->add_option("--etype", cfg.etype, "a..e or principal")->required();
  sv->add_option("--d", cfg.d)->required()->check(CLI::Range(3, 12));
  sv->add_flag("--no-tiebreak", cfg.no_tiebreak);
  auto* vt = app.add_subcommand("verify-table2", "solve every cell and compare with the golden table");
  vt->add_option("--table", cfg.table_path, "golden table file");
  vt->add_option("--dmin", cfg.dmin)->default_val(3)->check(CLI::Range(3, 12));
  vt->add_option("--dmax", cfg.dmax)->default_val(6)->check(CLI::Range(3, 12));
  vt->add_option("--jobs,-j", cfg.jobs)->default_val(1)->check(CLI::Range(1, 64));
  vt->add_option("--d-range", cfg.d_range, "lo..hi, overrides --dmin/--dmax");
  vt->add_flag("--no-tiebreak", cfg.no_tiebreak);
  auto* pl = app.add_subcommand("pipeline", "table, blocks, couples, table row and module checks");
  pl->add_option("--group,-g", cfg.group)->required();
  pl->add_option("--table", cfg.table_path, "golden table file");
  pl->add_option("--max-split-dim", cfg.max_split_dim)->default_val(128);
  auto* sc = app.add_subcommand("scan", "look for real dihedral blocks of extension type other than (a)");
  sc->add_option("files", cfg.files, "generator files or builtin names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*group) return cmd_group(cfg);
    if (*ext) return cmd_extensions(cfg);
    if (*t1) return cmd_table1(cfg);
    if (*ct) return cmd_chartab(cfg);
    if (*bl) return cmd_blocks(cfg);
    if (*inv) return cmd_invmod(cfg);
    if (*sv) return cmd_solve(cfg);
    if (*vt) return cmd_verify(cfg);
    if (*pl) return cmd_pipeline(cfg);
    if (*sc) return cmd_scan(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
