// Timing comparison of the OpenMP kernels against their serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "interferoq/kernels.hpp"
#include "interferoq/states.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double omp_ms) {
  std::printf("%-24s serial %10.3f ms   omp %10.3f ms   speedup %5.2fx\n", name,
              serial_ms, omp_ms, serial_ms / omp_ms);
}

}  // namespace

int main() {
  using namespace iq;
  std::printf("threads: %d\n", omp_get_max_threads());

  for (int n : {8, 10, 12}) {
    const DensityMatrix rho = random_density_matrix(n, 42);
    Matrix a = rho.matrix, b = rho.matrix;
    const int reps = n >= 12 ? 5 : 50;
    char label[64];
    std::snprintf(label, sizeof(label), "damp_hamming N=%d", n);
    report(label,
           time_ms([&] { kernels::damp_hamming_serial(a, 0.3); }, reps),
           time_ms([&] { kernels::damp_hamming_omp(b, 0.3); }, reps));
    std::snprintf(label, sizeof(label), "damp_jz_gap N=%d", n);
    report(label,
           time_ms([&] { kernels::damp_jz_gap_serial(a, 0.3, n); }, reps),
           time_ms([&] { kernels::damp_jz_gap_omp(b, 0.3, n); }, reps));
  }

  for (std::uint64_t trials : {1000000ULL, 10000000ULL}) {
    char label[64];
    std::snprintf(label, sizeof(label), "mc_majority n=15 %.0e", double(trials));
    report(label,
           time_ms([&] { kernels::mc_majority_failures_serial(15, 0.05, trials, 1); }, 1),
           time_ms([&] { kernels::mc_majority_failures_omp(15, 0.05, trials, 1); }, 1));
  }
  return 0;
}
