// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

#include "chanfact/matcore.hpp"

namespace chanfact::mc {

// Samples are grouped into fixed-size chunks; each chunk accumulates in
// sample order and chunks are combined in chunk order. The reduction tree
// therefore does not depend on the number of threads, and parallel runs
// are bitwise identical to serial ones.
inline constexpr std::int64_t kChunkSize = 128;

using MatrixDraw = std::function<Mat(std::uint64_t sample_seed)>;

// Mean of draw(derive_seed(root_seed, i)) over i = 0..n_samples-1.
Mat mean_of_samples(std::int64_t n_samples, std::uint64_t root_seed, int rows,
                    int cols, const MatrixDraw& draw, bool parallel = true);

}  // namespace chanfact::mc
