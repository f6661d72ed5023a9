#include "workbench/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "json.hpp"
#include "workbench/errors.hpp"

namespace wb {
namespace {

int sign_of(char c) {
  switch (c) {
    case '+': return 1;
    case '-': return -1;
    case '0': return 0;
  }
  throw ParseError(std::string("bad sign character '") + c + "'");
}

}  // namespace

SignAssignment Table2Row::expected(int d) const {
  SignAssignment a;
  if (eps_height0.size() != 4 || eps_low.size() != 1 || eps_last.size() != 1)
    throw ParseError("malformed sign strings in row " + key());
  for (int i = 0; i < 4; ++i) a.eps_height0[i] = sign_of(eps_height0[i]);
  a.eps_family.assign(d - 3, sign_of(eps_low[0]));
  a.eps_family.push_back(sign_of(eps_last[0]));
  return a;
}

std::string Table2Row::key() const { return std::string(morita_name(block_type)) + "/" + ext_type_name(etype); }

const Table2Row* Table2::find(MoritaType t, ExtType e) const {
  for (auto& r : rows)
    if (r.block_type == t && r.etype == e) return &r;
  return nullptr;
}

const InfeasibleCell* Table2::find_infeasible(MoritaType t, ExtType e) const {
  for (auto& r : infeasible)
    if (r.block_type == t && r.etype == e) return &r;
  return nullptr;
}

std::string default_table2_path() {
  if (const char* env = std::getenv("WORKBENCH_DATA_DIR")) return std::string(env) + "/table2.json";
  return std::string(WORKBENCH_DATA_DIR) + "/table2.json";
}

Table2 load_table2(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  Table2 t;
  try {
    for (auto& r : j.at("rows")) {
      Table2Row row;
      row.block_type = parse_morita(r.at("block_type").get<std::string>());
      row.label = r.value("label", "");
      row.etype = parse_ext_type(r.at("etype").get<std::string>());
      row.eps_height0 = r.at("eps_height0").get<std::string>();
      row.eps_low = r.at("eps_low").get<std::string>();
      row.eps_last = r.at("eps_last").get<std::string>();
      row.komega = r.value("komega", "");
      row.expected(4);  // validates the sign strings
      t.rows.push_back(std::move(row));
    }
    for (auto& r : j.value("infeasible", nlohmann::json::array())) {
      InfeasibleCell c;
      c.block_type = parse_morita(r.at("block_type").get<std::string>());
      c.etype = parse_ext_type(r.at("etype").get<std::string>());
      c.reason = r.value("reason", "");
      t.infeasible.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const UsageError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return t;
}

bool Table2Report::all_ok() const {
  for (auto& c : cells)
    if (!c.ok) return false;
  return !cells.empty();
}

Table2Report verify_table2(const Table2& table, int dmin, int dmax, const SolverOptions& opt, int jobs) {
  Table2Report rep;
  for (int d = dmin; d <= dmax; ++d)
    for (MoritaType t : kMoritaTypes)
      for (ExtType e : kExtTypes) {
        if (e == ExtType::e && d < 4) continue;
        CellReport c;
        c.type = t;
        c.etype = e;
        c.d = d;
        rep.cells.push_back(std::move(c));
      }
  // cells are independent; each worker takes every jobs-th cell
  auto work = [&](int start, int step) {
    for (size_t i = start; i < rep.cells.size(); i += step) {
      CellReport& c = rep.cells[i];
      c.result = solve(c.type, c.etype, c.d, opt);
      MoritaProfile p = build_profile(c.type, c.d);
      bool counts_ok = true;
      for (auto& a : c.result.solutions) {
        int rc = count_real_characters(a), cc = count_real_columns_for(a, p, c.etype);
        if (c.real_characters < 0) c.real_characters = rc, c.real_columns = cc;
        if (rc != cc) counts_ok = false;
      }
      const Table2Row* row = table.find(c.type, c.etype);
      c.in_table = row != nullptr;
      if (row) {
        SignAssignment want = row->expected(c.d);
        c.expected = want.str();
        c.ok = c.result.status == SolveStatus::unique && c.result.solutions[0] == want && counts_ok;
        if (c.result.status == SolveStatus::ambiguous) c.note = "ambiguous";
        else if (!counts_ok) c.note = "real character and real column counts differ";
        else if (!c.ok) c.note = "solution differs from the table";
      } else {
        c.expected = "infeasible";
        const InfeasibleCell* inf = table.find_infeasible(c.type, c.etype);
        c.ok = c.result.status == SolveStatus::infeasible && inf;
        if (inf) c.note = inf->reason;
        if (c.result.status != SolveStatus::infeasible)
          c.note = std::string("expected infeasible, got ") + status_name(c.result.status);
        else if (!inf)
          c.note = "infeasible, but the table records no reason for excluding this cell";
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }
  std::map<std::string, bool> row_ok, excl_ok;
  for (auto& c : rep.cells) {
    std::string key = std::string(morita_name(c.type)) + "/" + ext_type_name(c.etype);
    auto& m = c.in_table ? row_ok : excl_ok;
    auto [it, fresh] = m.emplace(key, c.ok);
    if (!fresh) it->second = it->second && c.ok;
    if (c.result.status == SolveStatus::ambiguous) ++rep.ambiguous;
  }
  rep.rows_total = static_cast<int>(row_ok.size());
  for (auto& [k, ok] : row_ok) rep.rows_ok += ok;
  rep.excluded_total = static_cast<int>(excl_ok.size());
  for (auto& [k, ok] : excl_ok) rep.excluded_ok += ok;
  return rep;
}

}  // namespace wb
