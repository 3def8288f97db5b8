// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/reference.hpp"

#include <stdexcept>

#include "chanfact/rng.hpp"

namespace chanfact::reference {

Mat kron(const Mat& a, const Mat& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Mat out(ra * rb, ca * cb);
  for (Eigen::Index i1 = 0; i1 < ra; ++i1)
    for (Eigen::Index i2 = 0; i2 < rb; ++i2)
      for (Eigen::Index j1 = 0; j1 < ca; ++j1)
        for (Eigen::Index j2 = 0; j2 < cb; ++j2)
          out(i1 * rb + i2, j1 * cb + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

Mat mean_of_samples(std::int64_t n_samples, std::uint64_t root_seed, int rows,
                    int cols, const mc::MatrixDraw& draw) {
  if (n_samples < 1) throw std::invalid_argument("mean_of_samples: n_samples < 1");
  Mat acc = Mat::Zero(rows, cols);
  for (std::int64_t i = 0; i < n_samples; ++i)
    acc += draw(rng::derive_seed(root_seed, static_cast<std::uint64_t>(i)));
  return acc / static_cast<double>(n_samples);
}

}  // namespace chanfact::reference
