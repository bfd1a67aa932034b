#include <doctest.h>

#include "dikeopt/counterexample.hpp"
#include "dikeopt/error.hpp"
#include "dikeopt/gen_instance.hpp"
#include "test_support.hpp"

using namespace dikeopt;
using dikeopt::testing::all_plans;
using dikeopt::testing::tiny1;

TEST_SUITE_BEGIN("counterexample");

TEST_CASE("point P carries the expected coordinates") {
  ConstraintSystem sys = build_system(counterexample_instance());
  IpPoint p = build_point_P(sys);
  const Rational half(1, 2);
  CHECK(p[sys.vars.cy(0, 0, 0, 0)] == 1);
  CHECK(p[sys.vars.cy(1, 0, 0, 1)] == half);
  CHECK(p[sys.vars.cy(1, 0, 0, 0)] == half);
  CHECK(p[sys.vars.cy(2, 0, 1, 1)] == half);
  CHECK(p[sys.vars.cy(2, 0, 0, 0)] == half);
  CHECK(p[sys.vars.cy(2, 0, 0, 1)] == 0);
  CHECK(p[sys.vars.b(2, 0, 1)] == 0);
  CHECK(p[sys.vars.dy(1, 0, 1, 0)] == half);
  CHECK(p[sys.vars.dy(1, 0, 0, 1)] == half);
  CHECK(p[sys.vars.dy(2, 0, 0, 0)] == half);
  CHECK(p[sys.vars.dy(2, 0, 1, 1)] == half);
  CHECK(p.fractionalCount() == 12);
}

TEST_CASE("P is feasible and certified as a fractional vertex with rank 30") {
  ConstraintSystem sys = build_system(counterexample_instance());
  IpPoint p = build_point_P(sys);
  REQUIRE(check_feasible(sys, p).feasible());

  VertexCertificate cert = certify_vertex(sys, p);
  CHECK(cert.isVertex);
  CHECK(cert.rank == 30);
  CHECK(cert.numVariables == 30);
  CHECK(!cert.nullDirection.has_value());
  CHECK(!p.isIntegral());
}

TEST_CASE("integral feasible points of tiny1 are vertices") {
  Instance inst = tiny1();
  ConstraintSystem sys = build_system(inst);
  for (const HeightPlan& plan : all_plans(inst)) {
    VertexCertificate cert = certify_vertex(sys, plan_to_point(sys, plan));
    CHECK(cert.isVertex);
    CHECK(cert.rank == sys.vars.size());
  }
}

TEST_CASE("midpoints of distinct integral points are not vertices") {
  ConstraintSystem sys = build_system(counterexample_instance());
  Instance inst = counterexample_instance();

  const std::vector<HeightPlan> plans = all_plans(inst);
  REQUIRE(plans.size() >= 2);
  int checked = 0;
  for (size_t a = 0; a < plans.size(); ++a) {
    for (size_t b = a + 1; b < plans.size() && checked < 20; ++b, ++checked) {
      IpPoint pa = plan_to_point(sys, plans[a]);
      IpPoint pb = plan_to_point(sys, plans[b]);
      IpPoint mid(sys.vars);
      for (int i = 0; i < mid.size(); ++i) mid[i] = (pa[i] + pb[i]) / 2;

      VertexCertificate cert = certify_vertex(sys, mid);
      CHECK(!cert.isVertex);
      CHECK(cert.rank < 30);
      REQUIRE(cert.nullDirection.has_value());

      // p +- eps v stays in the polytope for the certified direction.
      const auto& v = *cert.nullDirection;
      Rational eps = wiggle_epsilon(mid, v);
      CHECK(eps > 0);
      IpPoint plus = mid, minus = mid;
      for (int i = 0; i < mid.size(); ++i) {
        plus[i] += eps * v[i];
        minus[i] -= eps * v[i];
      }
      CHECK(check_feasible(sys, plus).feasible());
      CHECK(check_feasible(sys, minus).feasible());
      CHECK(!(plus == minus));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("certify_vertex rejects infeasible points") {
  ConstraintSystem sys = build_system(counterexample_instance());
  IpPoint zero(sys.vars);
  CHECK_THROWS_AS(certify_vertex(sys, zero), Error);
}

TEST_CASE("the tight matrix covers equalities plus active bounds") {
  ConstraintSystem sys = build_system(counterexample_instance());
  IpPoint p = build_point_P(sys);
  RationalMatrix m = tight_matrix(sys, p);
  // 26 equality rows + 18 tight bounds (15 zeros and 3 ones).
  CHECK(m.rows() == static_cast<int>(sys.rows.size()) + 18);
  CHECK(m.cols() == 30);
}

TEST_SUITE_END();
