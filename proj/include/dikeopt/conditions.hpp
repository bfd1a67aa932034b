#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dikeopt/instance.hpp"
#include "dikeopt/parallel.hpp"

namespace dikeopt {

// Exchange-inequality checkers for the integrality conditions.
//
//   (i)   dike damage:   D(t,d,h2',hb) + D(t,d,h2,hb') >= D(t,d,h2,hb) + D(t,d,h2',hb')
//         for h2 <= h2', hb <= hb'; enumerated over ordered pairs with
//         repetition on both sides (105 x 105 = 11025 per cell at 14 levels).
//   (ii)  barrier cost:  C(t,a,d) + C(t,b,c) >= C(t,a,c) + C(t,b,d)
//         for each 4-multiset a <= b <= c <= d (C(17,4) = 2380 at 14 levels).
//   (iii) dike cost: same shape as (ii), per (t, segment).
//   (i')  per segment, (i) holds with >= for every (t, quadruple) or with <=
//         for every (t, quadruple).

enum class Condition { I, II, III, IPrime };

struct Quad {
  int x1, x2, y1, y2;
};

struct ConditionCell {
  std::int64_t total = 0;
  std::int64_t satisfied = 0;
  std::optional<Quad> firstViolation;  // lexicographically first

  bool full() const { return satisfied == total; }
};

struct ConditionReport {
  Condition condition;
  // cells[t][col]; col runs over segments for (i)/(iii)/(i'), and is the
  // single barrier column for (ii). For (i') these carry the better
  // direction's counts per cell.
  std::vector<std::vector<ConditionCell>> cells;
  bool satisfied = false;

  // (i') only: both directions plus the per-segment verdicts.
  std::vector<std::vector<ConditionCell>> cellsGeq;
  std::vector<std::vector<ConditionCell>> cellsLeq;
  struct SegmentVerdict {
    bool geqAll = false;
    bool leqAll = false;
    bool holds() const { return geqAll || leqAll; }
  };
  std::vector<SegmentVerdict> segmentVerdicts;
};

ConditionReport check_condition_i(const Instance& inst,
                                  ExecutionMode mode = ExecutionMode::serial);
ConditionReport check_condition_ii(const Instance& inst,
                                   ExecutionMode mode = ExecutionMode::serial);
ConditionReport check_condition_iii(const Instance& inst,
                                    ExecutionMode mode = ExecutionMode::serial);
ConditionReport check_condition_i_prime(const Instance& inst,
                                        ExecutionMode mode = ExecutionMode::serial);

struct SurveyTable {
  std::string condition;             // "i_prime", "ii", "iii"
  std::vector<std::string> columns;  // segment ids, or {"barrier"}
  std::vector<std::vector<ConditionCell>> rows;  // [t][col]
};

// The satisfied-count survey tables: rows are periods
// (period 0 first, trivially full when the period-0 tables are constant),
// columns are segments (or the single barrier column for (ii)).
std::vector<SurveyTable> survey(const Instance& inst, ExecutionMode mode = ExecutionMode::serial);

std::string survey_text(const std::vector<SurveyTable>& tables);
// Columns: year,dike,satisfied,total.
std::string survey_csv(const SurveyTable& table);

}  // namespace dikeopt
