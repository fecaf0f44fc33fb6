// Times the serial census against the OpenMP kernel and checks they agree.
//
// usage: census-bench [nmin [nmax [repetitions]]]

#include "narayana/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_seconds(int repetitions, F&& run) {
  double best = 1e100;
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int nmin = 10;
  int nmax = narayana::kDefaultSemilengthBound;
  int repetitions = 3;
  if (argc > 1) nmin = std::atoi(argv[1]);
  if (argc > 2) nmax = std::atoi(argv[2]);
  if (argc > 3) repetitions = std::atoi(argv[3]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP; parallel = serial)\n");
#endif
  std::printf("%4s  %12s  %12s  %12s  %8s  %s\n", "n", "paths", "serial (s)",
              "parallel (s)", "speedup", "tables");

  for (int n = nmin; n <= nmax; ++n) {
    narayana::CountTable serial_table, parallel_table;
    const double serial_s = best_seconds(
        repetitions, [&] { serial_table = narayana::census_serial(n, nmax); });
    const double parallel_s = best_seconds(
        repetitions, [&] { parallel_table = narayana::census_parallel(n, nmax); });
    const bool equal = serial_table == parallel_table;
    std::printf("%4d  %12s  %12.4f  %12.4f  %7.2fx  %s\n", n,
                narayana::catalan(n).str().c_str(), serial_s, parallel_s,
                serial_s / parallel_s, equal ? "equal" : "DIFFER");
    if (!equal) return 1;
  }
  return 0;
}
