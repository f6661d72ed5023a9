#pragma once

#include <string>
#include <vector>

#include "workbench/fs_solver.hpp"

namespace wb {

struct Table2Row {
  MoritaType block_type = MoritaType::i;
  std::string label;
  ExtType etype = ExtType::a;
  std::string eps_height0, eps_low, eps_last;  // sign strings over {+,-,0}
  std::string komega;
  SignAssignment expected(int d) const;
  std::string key() const;  // e.g. "vi/a"
};

struct InfeasibleCell {
  MoritaType block_type = MoritaType::i;
  ExtType etype = ExtType::a;
  std::string reason;
};

struct Table2 {
  std::vector<Table2Row> rows;
  std::vector<InfeasibleCell> infeasible;
  const Table2Row* find(MoritaType t, ExtType e) const;
  const InfeasibleCell* find_infeasible(MoritaType t, ExtType e) const;
};

std::string default_table2_path();
Table2 load_table2(const std::string& path = default_table2_path());  // throws ParseError

struct CellReport {
  MoritaType type = MoritaType::i;
  ExtType etype = ExtType::a;
  int d = 3;
  bool in_table = false;
  std::string expected;  // "++00 ++" or "infeasible"
  SolveResult result;
  int real_characters = -1;  // for the first solution, if any
  int real_columns = -1;
  bool ok = false;
  std::string note;
};

struct Table2Report {
  std::vector<CellReport> cells;
  int rows_total = 0, rows_ok = 0;
  int excluded_total = 0, excluded_ok = 0;
  int ambiguous = 0;
  bool all_ok() const;
};

// Every (Morita type, extension type) cell for dmin <= d <= dmax; type (e)
// only from d = 4. Table rows must solve uniquely to the stored signs and all
// other cells must be infeasible and listed with a reason; real-character and
// real-column counts must agree on every solution. Cells are solved on up to
// `jobs` threads.
Table2Report verify_table2(const Table2& table, int dmin = 3, int dmax = 6, const SolverOptions& opt = {}, int jobs = 1);

}  // namespace wb
