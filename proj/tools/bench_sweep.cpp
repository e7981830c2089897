#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kostant/grid.hpp"

using namespace kostant;

namespace {

double run(SweepStats (*sweep)(const std::vector<ParabolicDatum>&),
           const std::vector<ParabolicDatum>& data, SweepStats& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = sweep(data);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same(const SweepStats& a, const SweepStats& b) {
  return a.datums == b.datums && a.subsets == b.subsets && a.order_ok == b.order_ok &&
         a.cone_feasible == b.cone_feasible && a.cap_hits == b.cap_hits &&
         a.violations == b.violations && a.tlevel_violations == b.tlevel_violations &&
         a.capped == b.capped;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 3;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) max_n = std::atoi(argv[++i]);

  std::vector<ParabolicDatum> data;
  for (const ParabolicDatum& d : sweep_representatives(standard_grid()))
    if (d.n <= max_n) data.push_back(d);
  std::printf("benchmark: %zu datums (n <= %d)\n", data.size(), max_n);

  SweepStats serial, parallel;
  double ts = run(sweep_serial, data, serial);
  double tp = run(sweep_parallel, data, parallel);
  std::printf("serial:   %8.3f s  (%lld subsets, %lld discordant)\n", ts,
              (long long)serial.subsets, (long long)serial.violations.size());
  std::printf("parallel: %8.3f s  (%lld subsets, %lld discordant)\n", tp,
              (long long)parallel.subsets, (long long)parallel.violations.size());
  std::printf("speedup:  %8.2fx\n", tp > 0 ? ts / tp : 0.0);

  if (!same(serial, parallel)) {
    std::printf("MISMATCH: serial and parallel statistics differ\n");
    return 1;
  }
  std::printf("statistics identical\n");
  return 0;
}
