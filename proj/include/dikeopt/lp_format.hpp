#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dikeopt/ip_builder.hpp"

namespace dikeopt {

// Textual LP model (CPLEX LP dialect): Minimize / Subject To / Bounds / End.
// Coefficients are written as exact decimals when they terminate and as
// "num/den" otherwise; our own parser accepts both, external solvers accept
// the all-decimal files produced from decimal instance data.
struct LpModel {
  struct LpRow {
    std::string name;
    std::vector<std::pair<int, Rational>> terms;  // (variable position, coefficient)
    Rational rhs;

    bool operator==(const LpRow&) const = default;
  };

  std::vector<std::string> varNames;  // declaration order = Bounds order
  std::vector<Rational> objective;    // aligned with varNames
  std::vector<LpRow> rows;
  std::vector<std::pair<Rational, Rational>> bounds;  // [lo, hi] per variable

  bool operator==(const LpModel&) const = default;
};

LpModel to_lp_model(const ConstraintSystem& sys, const Instance& inst);

void write_lp(const LpModel& model, std::ostream& out);

// Writes sys to path; variable names follow the CY_t_d_h1_h2 / DY_t_d_h2_hb /
// B_t_hb1_hb2 grammar. Throws Error(IoError) on write failure.
void export_lp(const ConstraintSystem& sys, const Instance& inst,
               const std::filesystem::path& path);

LpModel parse_lp(std::istream& in);
LpModel parse_lp_file(const std::filesystem::path& path);

}  // namespace dikeopt
