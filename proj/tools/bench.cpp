// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "chanfact/checks.hpp"
#include "chanfact/convex.hpp"
#include "chanfact/mc.hpp"
#include "chanfact/reference.hpp"
#include "chanfact/twirl.hpp"
#include "chanfact/werner.hpp"

using namespace chanfact;

namespace {

template <typename F>
double time_ms(F&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    best = std::min(best, ms);
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms, double residual) {
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx   resid %.2e\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, residual);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    const Mat a = random_matrix(81, 7);
    const Mat b = random_matrix(9, 8);
    Mat out_s, out_p;
    const double ts = time_ms([&] { out_s = reference::kron(a, b); });
    const double tp = time_ms([&] { out_p = kron(a, b); });
    row("kron 81x81 (x) 9x9", ts, tp, max_abs(out_s - out_p));
  }

  {
    const Superop t = random_ucpt(3, 42);
    const int n = 20000;
    const auto draw = [&t](std::uint64_t s) { return rho_u(haar_unitary(3, s), t).m; };
    Mat out_s, out_c, out_p;
    const double ts = time_ms([&] { out_s = reference::mean_of_samples(n, 42, 9, 9, draw); });
    const double tc = time_ms([&] { out_c = mc::mean_of_samples(n, 42, 9, 9, draw, false); });
    const double tp = time_ms([&] { out_p = mc::mean_of_samples(n, 42, 9, 9, draw, true); });
    row("twirl sampling, 20k draws", ts, tp, max_abs(out_s - out_p));
    std::printf("%-34s %10.2f ms   (chunked serial; bitwise vs parallel: %.1e)\n",
                "  chunked serial reference", tc, max_abs(out_c - out_p));
  }

  {
    const Superop w9 = tensor(werner_holevo(3).w_plus, werner_holevo(3).w_minus);
    const Superop w3 = werner_holevo(3).w_minus;
    Mat out;
    const double tp = time_ms([&] { out = tensor(w9, w3).m; });
    std::printf("%-34s %24.2f ms   (parallel only)\n", "superop tensor to dim 27", tp);
  }

  {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    const double tp = time_ms([&] { curve_export(grid); }, 1);
    std::printf("%-34s %24.2f ms   (101-point curve export)\n", "curve export", tp);
  }

  return 0;
}
