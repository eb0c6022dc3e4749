// Compares the serial reference extension kernel against the OpenMP one on
// identical frontiers and checks they produce byte-identical catalogs.
#include <chrono>
#include <cstdio>

#include "pcarr/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pcarr;

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
  int level = argc > 1 ? std::atoi(argv[1]) : 5;
  EnumerateOptions opts;
  opts.parallel = false;
  EnumerateResult base = enumerate_intersecting(level, opts);
  std::vector<CanonicalCode> frontier;
  for (const CatalogEntry& e : base.catalog.level(level)->entries)
    frontier.push_back(e.code);
  std::printf("frontier: %zu arrangements of %d pseudocircles\n", frontier.size(), level);

  std::vector<CatalogEntry> serial, parallel;
  double ts = timed([&] { serial = extend_level_serial(frontier); });
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  double tp = timed([&] { parallel = extend_level_parallel(frontier); });

  bool identical = serial.size() == parallel.size();
  for (size_t i = 0; identical && i < serial.size(); ++i)
    identical = serial[i].code == parallel[i].code;

  std::printf("children: %zu (level %d)\n", serial.size(), level + 1);
  std::printf("serial reference: %.2fs\n", ts);
  std::printf("openmp (%d threads): %.2fs  speedup %.2fx\n", threads, tp, ts / tp);
  std::printf("identical catalogs: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
