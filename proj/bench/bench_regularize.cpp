// Benchmark: OpenMP row kernel vs. the serial reference, plus single
// projection scaling. Usage: simproj_bench [rows cols]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <vector>

#include "simproj/core.hpp"
#include "simproj/matrix.hpp"

using namespace simproj;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Rows sum to one but carry negative entries, like roots of transition
// matrices do.
MatrixTable quasi_stochastic(std::mt19937_64& rng, std::size_t r,
                             std::size_t c) {
  std::uniform_real_distribution<double> noise(-0.2, 0.2);
  MatrixTable m;
  m.rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    RealVector row(c);
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < c; ++j) {
      row[j] = 1.0 / static_cast<double>(c) + noise(rng);
      sum += row[j];
    }
    row[c - 1] = 1.0 - sum;
    m.rows.push_back(std::move(row));
  }
  return m;
}

template <typename F>
double best_of(int reps, F&& body) {
  double best = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < reps; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t rows = 2000;
  std::size_t cols = 512;
  if (argc == 3) {
    rows = std::strtoull(argv[1], nullptr, 10);
    cols = std::strtoull(argv[2], nullptr, 10);
  }

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif

  std::mt19937_64 rng(1);
  const MatrixTable m = quasi_stochastic(rng, rows, cols);

  std::pair<MatrixTable, RegularizationReport> serial_result;
  std::pair<MatrixTable, RegularizationReport> parallel_result;
  const double t_serial =
      best_of(3, [&] { serial_result = regularize_matrix_serial(m); });
  const double t_parallel =
      best_of(3, [&] { parallel_result = regularize_matrix(m); });

  std::printf("regularize %zux%zu: serial %.4fs, parallel %.4fs, "
              "speedup %.2fx\n",
              rows, cols, t_serial, t_parallel, t_serial / t_parallel);
  std::printf("outputs bitwise identical: %s\n",
              serial_result.first.rows == parallel_result.first.rows
                  ? "yes"
                  : "NO (bug)");

  std::printf("\nsingle projection scaling\n");
  for (const std::size_t n :
       {std::size_t{100000}, std::size_t{1000000}, std::size_t{10000000}}) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    RealVector a(n);
    for (double& v : a) {
      v = dist(rng);
    }
    double sink = 0.0;
    const double t = best_of(3, [&] { sink += project(a).shift; });
    std::printf("  n=%8zu: %.4fs%s\n", n, t, sink == 0.5 ? " " : "");
  }
  return 0;
}
