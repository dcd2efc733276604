// Compares the serial DP driver against the task-parallel one on frameworks
// whose decompositions branch enough to expose subtree parallelism.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "afcount/dp.hpp"
#include "afcount/graph.hpp"
#include "afcount/solver.hpp"

using namespace afc;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// chain of attacks a0 -> a1 -> ... -> a{n-1}
Framework path_framework(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> attacks;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) attacks.emplace_back(i, i + 1);
  return Framework(std::move(names), std::move(attacks));
}

// complete binary tree, parents attack children
Framework tree_framework(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> attacks;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i < n; ++i) attacks.emplace_back((i - 1) / 2, i);
  return Framework(std::move(names), std::move(attacks));
}

// many independent attack chains; their decompositions branch at the top
Framework forest_framework(int chains, int len) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> attacks;
  for (int c = 0; c < chains; ++c)
    for (int i = 0; i < len; ++i) {
      int id = c * len + i;
      names.push_back("a" + std::to_string(id));
      if (i > 0) attacks.emplace_back(id - 1, id);
    }
  return Framework(std::move(names), std::move(attacks));
}

void bench_one(const std::string& name, const Framework& f, SemanticsKind sem) {
  UGraph g = underlying_graph(f);
  Td td = compute_td(g, 1, 3);
  NiceTd ntd = make_nice(td);
  auto alg = make_local_alg(sem);

  auto t0 = Clock::now();
  Ttd serial = run_dp(*alg, ntd, f, -1, 1);
  double serial_ms = ms_since(t0);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  auto t1 = Clock::now();
  Ttd parallel = run_dp(*alg, ntd, f, -1, threads);
  double parallel_ms = ms_since(t1);

  bool equal = serial.tables == parallel.tables;
  PurgedTtd purged = purge(*alg, ntd, f, -1, serial);
  mpz_class count = count_extensions(ntd, purged);

  std::printf("%-28s %-12s n=%-6d width=%-3d serial=%9.2fms parallel(%d)=%9.2fms speedup=%.2fx tables_equal=%s count=%s\n",
              name.c_str(), to_string(sem), f.size(), ntd.width(), serial_ms, threads,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "yes" : "NO", count.get_str().c_str());
  if (!equal) std::exit(1);
}

}  // namespace

int main() {
  bench_one("path-1000", path_framework(1000), SemanticsKind::Stable);
  bench_one("path-1000", path_framework(1000), SemanticsKind::Admissible);
  bench_one("tree-2047", tree_framework(2047), SemanticsKind::Stable);
  bench_one("tree-2047", tree_framework(2047), SemanticsKind::Admissible);
  bench_one("tree-2047", tree_framework(2047), SemanticsKind::Complete);
  bench_one("forest-64x32", forest_framework(64, 32), SemanticsKind::Stable);
  bench_one("forest-64x32", forest_framework(64, 32), SemanticsKind::Preferred);
  return 0;
}
