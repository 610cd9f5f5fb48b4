// Times the serial reference implementations against the OpenMP kernels on
// the workloads that dominate the oracle batteries.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kleinfour/classification.hpp"
#include "kleinfour/kernels.hpp"
#include "kleinfour/verify.hpp"

using namespace kleinfour;
using kernels::Budget;
using kernels::Exec;

namespace {

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  Budget budget;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP; both columns run serially)\n");
#endif
  std::printf("%-34s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

  {
    Fq F(3, 2);
    FqExt ext(F, F.smallest_nonsquare());
    std::vector<std::uint8_t> a, b;
    double s = time_ms([&] { a = kernels::admissible_sweep(ext, Exec::serial, budget); });
    double p = time_ms([&] { b = kernels::admissible_sweep(ext, Exec::parallel, budget); });
    if (a != b) {
      std::printf("MISMATCH between serial and parallel sweep at q = 9\n");
      return 1;
    }
    row("admissible_sweep q=9", s, p);
  }

  {
    Fq F(13);
    FqExt ext(F, F.smallest_nonsquare());
    auto transversal_member = fq_transversal(F).front();
    FqAlgebra A(ext, transversal_member);
    bool r1 = false, r2 = false;
    double s = time_ms([&] {
      for (int i = 0; i < 20; ++i) r1 = kernels::admissible_bruteforce(A, Exec::serial, budget);
    });
    double p = time_ms([&] {
      for (int i = 0; i < 20; ++i) r2 = kernels::admissible_bruteforce(A, Exec::parallel, budget);
    });
    if (r1 != r2) {
      std::printf("MISMATCH between serial and parallel scan at q = 13\n");
      return 1;
    }
    row("admissible_bruteforce q=13 x20", s, p);
  }

  {
    Fq F(7);
    FqExt ext(F, F.smallest_nonsquare());
    auto triples = verify::admissible_triples(ext);
    FqAlgebra A(ext, triples[0]), B(ext, triples[1]);
    std::size_t n1 = 0, n2 = 0;
    double s = time_ms([&] {
      for (const auto& c : triples)
        n1 += kernels::brute_force_morphisms(FqAlgebra(ext, c), B, Exec::serial, budget).size();
    });
    double p = time_ms([&] {
      for (const auto& c : triples)
        n2 += kernels::brute_force_morphisms(FqAlgebra(ext, c), B, Exec::parallel, budget).size();
    });
    if (n1 != n2) {
      std::printf("MISMATCH between serial and parallel morphism scans at q = 7\n");
      return 1;
    }
    row("brute_force_morphisms q=7 row", s, p);
  }
  return 0;
}
