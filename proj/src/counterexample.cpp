#include "dikeopt/counterexample.hpp"

#include "dikeopt/error.hpp"

namespace dikeopt {

Instance counterexample_instance() {
  Instance inst(2, {"d0"}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)});
  inst.fillAllTables(Money(0));
  return inst;
}

IpPoint build_point_P(const ConstraintSystem& sys) {
  const VarIndex& V = sys.vars;
  if (V.periods() != 3 || V.numSegments() != 1 || V.dikeLevels() != 2 || V.barrierLevels() != 2)
    fail(ErrorCode::DimensionMismatch, "point P lives on the horizon-2, one-segment, two-height system");

  IpPoint p(V);
  const Rational half(1, 2);

  p[V.cy(0, 0, 0, 0)] = 1;
  p[V.cy(1, 0, 0, 1)] = half;
  p[V.cy(1, 0, 0, 0)] = half;
  p[V.cy(2, 0, 1, 1)] = half;
  p[V.cy(2, 0, 0, 0)] = half;
  // CY(2,0,1) stays 0: the upper half-flow is already at height 1.

  p[V.b(0, 0, 0)] = 1;
  p[V.b(1, 0, 1)] = half;
  p[V.b(1, 0, 0)] = half;
  p[V.b(2, 1, 1)] = half;
  p[V.b(2, 0, 0)] = half;

  // The DY halves couple the high dike flow with the *low* barrier flow and
  // vice versa at t=1, and align at t=2.
  p[V.dy(0, 0, 0, 0)] = 1;
  p[V.dy(1, 0, 1, 0)] = half;
  p[V.dy(1, 0, 0, 1)] = half;
  p[V.dy(2, 0, 0, 0)] = half;
  p[V.dy(2, 0, 1, 1)] = half;

  return p;
}

IpPoint build_point_P() { return build_point_P(build_system(counterexample_instance())); }

RationalMatrix tight_matrix(const ConstraintSystem& sys, const IpPoint& p) {
  const int n = sys.vars.size();
  std::vector<int> tightBoundVars;
  for (int i = 0; i < n; ++i) {
    if (p[i] == 0 || p[i] == 1) tightBoundVars.push_back(i);
  }
  RationalMatrix m(static_cast<int>(sys.rows.size() + tightBoundVars.size()), n);
  int r = 0;
  for (const auto& row : sys.rows) {
    for (const auto& [var, coeff] : row.coeffs) m.at(r, var) = coeff;
    ++r;
  }
  for (int var : tightBoundVars) {
    m.at(r, var) = 1;
    ++r;
  }
  return m;
}

VertexCertificate certify_vertex(const ConstraintSystem& sys, const IpPoint& p) {
  FeasibilityReport report = check_feasible(sys, p);
  if (!report.feasible())
    fail(ErrorCode::PointInfeasible, "certify_vertex requires a feasible point");

  RationalMatrix tight = tight_matrix(sys, p);
  Elimination elim = eliminate(tight);

  VertexCertificate cert;
  cert.numVariables = sys.vars.size();
  cert.tightRows = tight.rows();
  cert.rank = elim.rank;
  cert.isVertex = elim.rank == cert.numVariables;
  if (!cert.isVertex) cert.nullDirection = nullspace_vector(elim);
  return cert;
}

Rational wiggle_epsilon(const IpPoint& p, const std::vector<Rational>& direction) {
  Rational maxAbs = 0;
  for (const auto& v : direction) {
    Rational a = abs(v);
    if (a > maxAbs) maxAbs = a;
  }
  if (maxAbs == 0) return Rational(0);

  Rational minSlack = 1;
  bool any = false;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0 && p[i] < 1) {
      Rational slack = p[i] < 1 - p[i] ? p[i] : Rational(1 - p[i]);
      if (!any || slack < minSlack) minSlack = slack;
      any = true;
    }
  }
  if (!any) return Rational(0);
  return minSlack / (2 * maxAbs);
}

}  // namespace dikeopt
