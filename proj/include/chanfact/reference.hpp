// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "chanfact/matcore.hpp"
#include "chanfact/mc.hpp"

// Plain serial implementations of the parallel kernels, kept as oracles for
// the tests and the benchmark. No OpenMP, no chunking, no blocking.
namespace chanfact::reference {

Mat kron(const Mat& a, const Mat& b);

// Sequential mean in sample order (a different summation order than the
// chunked kernel, so agreement is up to roundoff only).
Mat mean_of_samples(std::int64_t n_samples, std::uint64_t root_seed, int rows,
                    int cols, const mc::MatrixDraw& draw);

}  // namespace chanfact::reference
