// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/mc.hpp"

#include <stdexcept>
#include <vector>

#include "chanfact/rng.hpp"

namespace chanfact::mc {

Mat mean_of_samples(std::int64_t n_samples, std::uint64_t root_seed, int rows,
                    int cols, const MatrixDraw& draw, bool parallel) {
  if (n_samples < 1) throw std::invalid_argument("mean_of_samples: n_samples < 1");
  const std::int64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<Mat> partial(n_chunks);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    Mat acc = Mat::Zero(rows, cols);
    const std::int64_t lo = c * kChunkSize;
    const std::int64_t hi = std::min(lo + kChunkSize, n_samples);
    for (std::int64_t i = lo; i < hi; ++i)
      acc += draw(rng::derive_seed(root_seed, static_cast<std::uint64_t>(i)));
    partial[c] = std::move(acc);
  }

  Mat total = Mat::Zero(rows, cols);
  for (std::int64_t c = 0; c < n_chunks; ++c) total += partial[c];
  return total / static_cast<double>(n_samples);
}

}  // namespace chanfact::mc
