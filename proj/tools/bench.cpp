// Timing comparison of the serial reference enumeration against the OpenMP
// variant, plus the end-to-end pipelines at different worker counts.
// Results are checked for equality while timing.
#include <chrono>
#include <iostream>

#include "k3fib/enumerate.hpp"
#include "k3fib/niemeier.hpp"
#include "k3fib/nishiyama.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace k3fib;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void bench_roots(const std::string& name, const Lattice& L, int jobs) {
  IntMat neg(L.rank, L.rank);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j) neg.at(i, j) = -L.gram.at(i, j);
  auto t0 = clock_type::now();
  auto serial = short_vectors_serial(neg, 2);
  double ts = ms_since(t0);
  t0 = clock_type::now();
  auto parallel = short_vectors(neg, 2, jobs);
  double tp = ms_since(t0);
  bool same = serial == parallel;
  std::printf("%-14s %5zu roots   serial %8.2f ms   %d threads %8.2f ms   x%.2f   %s\n",
              name.c_str(), serial.size(), ts, jobs, tp, tp > 0 ? ts / tp : 0.0,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 4;
#ifdef _OPENMP
  jobs = std::min(4, omp_get_max_threads());
#endif
  if (argc > 1) jobs = std::atoi(argv[1]);

  std::printf("short-vector enumeration (serial reference vs OpenMP)\n");
  for (const char* id : {"E8^3", "D24", "D12^2", "D5^2+A7^2"}) {
    NiemeierRealization r = realize(niemeier_by_id(id));
    bench_roots(id, r.over.lattice, jobs);
  }

  std::printf("\nfull classification (enumerate_all)\n");
  auto t0 = clock_type::now();
  auto rows1 = enumerate_all(1);
  double ts = ms_since(t0);
  t0 = clock_type::now();
  auto rowsN = enumerate_all(jobs);
  double tp = ms_since(t0);
  bool same = rows1.size() == rowsN.size();
  for (size_t i = 0; same && i < rows1.size(); ++i)
    same = rows1[i].host_id == rowsN[i].host_id && rows1[i].embedding == rowsN[i].embedding &&
           rows1[i].fibers == rowsN[i].fibers && rows1[i].torsion == rowsN[i].torsion;
  std::printf("30 rows   serial %8.2f ms   %d threads %8.2f ms   x%.2f   %s\n", ts, jobs, tp,
              tp > 0 ? ts / tp : 0.0, same ? "match" : "MISMATCH");
  return same ? 0 : 1;
}
