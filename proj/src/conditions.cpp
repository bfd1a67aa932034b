#include "dikeopt/conditions.hpp"

#include <sstream>

#include "dikeopt/error.hpp"

namespace dikeopt {

namespace {

std::int64_t pair_count64(int levels) {
  return static_cast<std::int64_t>(levels) * (levels + 1) / 2;
}

std::int64_t multiset4_count(int levels) {
  // C(levels + 3, 4)
  std::int64_t n = levels;
  return n * (n + 1) * (n + 2) * (n + 3) / 24;
}

// Condition (i) quadruple sweep over one (t, d) cell. Counts both the >=
// and the <= direction; (i) uses geq, (i') uses both.
void sweep_damage_cell(const Instance& inst, int t, int d, ConditionCell& geq,
                       ConditionCell& leq) {
  const int mD = inst.numDikeLevels();
  const int mB = inst.numBarrierLevels();
  geq.total = leq.total = pair_count64(mD) * pair_count64(mB);
  for (int h2 = 0; h2 < mD; ++h2) {
    for (int h2p = h2; h2p < mD; ++h2p) {
      for (int hb = 0; hb < mB; ++hb) {
        for (int hbp = hb; hbp < mB; ++hbp) {
          const Money lhs = inst.dikeExpDam(t, d, h2p, hb) + inst.dikeExpDam(t, d, h2, hbp);
          const Money rhs = inst.dikeExpDam(t, d, h2, hb) + inst.dikeExpDam(t, d, h2p, hbp);
          if (lhs >= rhs)
            ++geq.satisfied;
          else if (!geq.firstViolation)
            geq.firstViolation = Quad{h2, h2p, hb, hbp};
          if (lhs <= rhs)
            ++leq.satisfied;
          else if (!leq.firstViolation)
            leq.firstViolation = Quad{h2, h2p, hb, hbp};
        }
      }
    }
  }
}

// Monge sweep for a cost table c over `levels` heights: canonical quadruples
// are 4-multisets a <= b <= c <= d read as (h1, h1', h2, h2'), so every
// looked-up entry has its first index <= its second.
template <typename CostFn>
void sweep_monge_cell(int levels, CostFn&& cost, ConditionCell& cell) {
  cell.total = multiset4_count(levels);
  for (int a = 0; a < levels; ++a) {
    for (int b = a; b < levels; ++b) {
      for (int c = b; c < levels; ++c) {
        for (int d = c; d < levels; ++d) {
          const Money lhs = cost(a, d) + cost(b, c);
          const Money rhs = cost(a, c) + cost(b, d);
          if (lhs >= rhs)
            ++cell.satisfied;
          else if (!cell.firstViolation)
            cell.firstViolation = Quad{a, b, c, d};
        }
      }
    }
  }
}

template <typename Fn>
void for_cells(int periods, int cols, ExecutionMode mode, Fn&& fn) {
  const int n = periods * cols;
  if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (int i = 0; i < n; ++i) fn(i / cols, i % cols);
  } else {
    for (int i = 0; i < n; ++i) fn(i / cols, i % cols);
  }
}

std::vector<std::vector<ConditionCell>> make_cells(int periods, int cols) {
  return std::vector<std::vector<ConditionCell>>(static_cast<size_t>(periods),
                                                 std::vector<ConditionCell>(static_cast<size_t>(cols)));
}

bool all_full(const std::vector<std::vector<ConditionCell>>& cells) {
  for (const auto& row : cells)
    for (const auto& cell : row)
      if (!cell.full()) return false;
  return true;
}

}  // namespace

ConditionReport check_condition_i(const Instance& inst, ExecutionMode mode) {
  require_valid(inst);
  ConditionReport report;
  report.condition = Condition::I;
  const int periods = inst.numPeriods();
  const int cols = inst.numSegments();
  report.cells = make_cells(periods, cols);
  auto leqScratch = make_cells(periods, cols);
  for_cells(periods, cols, mode, [&](int t, int d) {
    sweep_damage_cell(inst, t, d, report.cells[t][d], leqScratch[t][d]);
  });
  report.satisfied = all_full(report.cells);
  return report;
}

ConditionReport check_condition_ii(const Instance& inst, ExecutionMode mode) {
  require_valid(inst);
  ConditionReport report;
  report.condition = Condition::II;
  const int periods = inst.numPeriods();
  report.cells = make_cells(periods, 1);
  for_cells(periods, 1, mode, [&](int t, int) {
    sweep_monge_cell(
        inst.numBarrierLevels(),
        [&inst, t](int x, int y) -> const Money& { return inst.barrierCost(t, x, y); },
        report.cells[t][0]);
  });
  report.satisfied = all_full(report.cells);
  return report;
}

ConditionReport check_condition_iii(const Instance& inst, ExecutionMode mode) {
  require_valid(inst);
  ConditionReport report;
  report.condition = Condition::III;
  const int periods = inst.numPeriods();
  const int cols = inst.numSegments();
  report.cells = make_cells(periods, cols);
  for_cells(periods, cols, mode, [&](int t, int d) {
    sweep_monge_cell(
        inst.numDikeLevels(),
        [&inst, t, d](int x, int y) -> const Money& { return inst.dikeCost(t, d, x, y); },
        report.cells[t][d]);
  });
  report.satisfied = all_full(report.cells);
  return report;
}

ConditionReport check_condition_i_prime(const Instance& inst, ExecutionMode mode) {
  require_valid(inst);
  ConditionReport report;
  report.condition = Condition::IPrime;
  const int periods = inst.numPeriods();
  const int cols = inst.numSegments();
  report.cellsGeq = make_cells(periods, cols);
  report.cellsLeq = make_cells(periods, cols);
  for_cells(periods, cols, mode, [&](int t, int d) {
    sweep_damage_cell(inst, t, d, report.cellsGeq[t][d], report.cellsLeq[t][d]);
  });

  report.cells = make_cells(periods, cols);
  for (int t = 0; t < periods; ++t) {
    for (int d = 0; d < cols; ++d) {
      const auto& g = report.cellsGeq[t][d];
      const auto& l = report.cellsLeq[t][d];
      report.cells[t][d] = g.satisfied >= l.satisfied ? g : l;
    }
  }

  report.segmentVerdicts.resize(static_cast<size_t>(cols));
  for (int d = 0; d < cols; ++d) {
    bool geqAll = true, leqAll = true;
    for (int t = 0; t < periods; ++t) {
      geqAll = geqAll && report.cellsGeq[t][d].full();
      leqAll = leqAll && report.cellsLeq[t][d].full();
    }
    report.segmentVerdicts[static_cast<size_t>(d)] = {geqAll, leqAll};
  }
  report.satisfied = true;
  for (const auto& v : report.segmentVerdicts) report.satisfied = report.satisfied && v.holds();
  return report;
}

std::vector<SurveyTable> survey(const Instance& inst, ExecutionMode mode) {
  require_valid(inst);
  std::vector<SurveyTable> tables;

  ConditionReport iPrime = check_condition_i_prime(inst, mode);
  tables.push_back({"i_prime", inst.segments(), iPrime.cells});

  ConditionReport ii = check_condition_ii(inst, mode);
  tables.push_back({"ii", {"barrier"}, ii.cells});

  ConditionReport iii = check_condition_iii(inst, mode);
  tables.push_back({"iii", inst.segments(), iii.cells});

  return tables;
}

std::string survey_text(const std::vector<SurveyTable>& tables) {
  std::ostringstream out;
  for (const auto& table : tables) {
    out << "condition " << table.condition;
    if (!table.rows.empty() && !table.rows[0].empty())
      out << " (" << table.rows[0][0].total << " quadruples per cell)";
    out << "\n";
    out << "  year";
    for (const auto& col : table.columns) out << "\t" << col;
    out << "\n";
    for (size_t t = 0; t < table.rows.size(); ++t) {
      out << "  " << t;
      for (const auto& cell : table.rows[t]) out << "\t" << cell.satisfied;
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

std::string survey_csv(const SurveyTable& table) {
  std::ostringstream out;
  out << "year,dike,satisfied,total\n";
  for (size_t t = 0; t < table.rows.size(); ++t) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      out << t << "," << table.columns[c] << "," << table.rows[t][c].satisfied << ","
          << table.rows[t][c].total << "\n";
    }
  }
  return out.str();
}

}  // namespace dikeopt
