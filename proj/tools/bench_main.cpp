// Serial vs OpenMP timing for the four parallel kernels, with exact
// result-equality checks between the two paths. Reports the best of two
// runs per mode; GMP allocation churn makes first runs noisy.

#include <omp.h>

#include <cstdio>
#include <string>

#include "dikeopt/conditions.hpp"
#include "dikeopt/gen_instance.hpp"
#include "dikeopt/solvers.hpp"

using namespace dikeopt;

namespace {

struct BenchRow {
  const char* kernel;
  double serialMs;
  double parallelMs;
  bool equal;
};

template <typename Fn>
double best_of_two_ms(Fn&& fn) {
  double best = 1e300;
  for (int rep = 0; rep < 2; ++rep) {
    double start = omp_get_wtime();
    fn();
    double elapsed = (omp_get_wtime() - start) * 1000.0;
    if (elapsed < best) best = elapsed;
  }
  return best;
}

void print_rows(const BenchRow* rows, int n) {
  std::printf("%-12s %12s %12s %9s %7s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
              "equal");
  for (int i = 0; i < n; ++i) {
    std::printf("%-12s %12.2f %12.2f %8.2fx %7s\n", rows[i].kernel, rows[i].serialMs,
                rows[i].parallelMs, rows[i].serialMs / rows[i].parallelMs,
                rows[i].equal ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool small = argc > 1 && std::string(argv[1]) == "--small";
  std::printf("threads: %d\n\n", omp_get_max_threads());

  // Spin up the thread pool and each worker's allocator arena before timing.
#pragma omp parallel
  {
    Rational acc = 0;
    for (long i = 1; i < 5000; ++i) {
      Rational term(1, i);
      term.canonicalize();
      acc += term;
    }
  }

  BenchRow rows[4];

  {
    GenDims dims{small ? 6 : 10, 2, small ? 5 : 7, small ? 4 : 6};
    Instance inst = gen_instance(41, dims, InstanceFamily::monge);
    SolveResult serial, parallel;
    double s = best_of_two_ms([&] { serial = solve_dp(inst, ExecutionMode::serial); });
    double p = best_of_two_ms([&] { parallel = solve_dp(inst, ExecutionMode::parallel); });
    rows[0] = {"dp", s, p, serial.optimum == parallel.optimum && serial.plan == parallel.plan};
  }

  {
    GenDims dims{small ? 10 : 14, 2, small ? 8 : 12, 4};
    Instance inst = gen_instance(42, dims, InstanceFamily::monge);
    SpResult serial, parallel;
    double s = best_of_two_ms([&] { serial = solve_sp(inst, {ExecutionMode::serial, {}}); });
    double p = best_of_two_ms([&] { parallel = solve_sp(inst, {ExecutionMode::parallel, {}}); });
    rows[1] = {"sp", s, p, serial.optimum == parallel.optimum && serial.plan == parallel.plan};
  }

  {
    GenDims dims{small ? 4 : 5, 2, small ? 4 : 5, small ? 3 : 4};
    Instance inst = gen_instance(43, dims, InstanceFamily::random);
    SolveResult serial, parallel;
    double s = best_of_two_ms([&] { serial = solve_bf(inst, {ExecutionMode::serial, 10'000'000}); });
    double p = best_of_two_ms([&] { parallel = solve_bf(inst, {ExecutionMode::parallel, 10'000'000}); });
    rows[2] = {"bf", s, p, serial.optimum == parallel.optimum && serial.plan == parallel.plan};
  }

  {
    GenDims dims{small ? 12 : 30, small ? 4 : 10, 14, 14};
    Instance inst = gen_instance(44, dims, InstanceFamily::random);
    ConditionReport serial, parallel;
    double s = best_of_two_ms([&] { serial = check_condition_i(inst, ExecutionMode::serial); });
    double p = best_of_two_ms([&] { parallel = check_condition_i(inst, ExecutionMode::parallel); });
    bool equal = serial.satisfied == parallel.satisfied && serial.cells.size() == parallel.cells.size();
    for (size_t t = 0; equal && t < serial.cells.size(); ++t)
      for (size_t d = 0; equal && d < serial.cells[t].size(); ++d)
        equal = serial.cells[t][d].satisfied == parallel.cells[t][d].satisfied;
    rows[3] = {"conditions", s, p, equal};
  }

  print_rows(rows, 4);

  for (const auto& row : rows) {
    if (!row.equal) {
      std::printf("\nserial/parallel mismatch in %s\n", row.kernel);
      return 1;
    }
  }
  return 0;
}
