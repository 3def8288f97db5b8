// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace chanfact::rng {

std::uint64_t splitmix64(std::uint64_t& state);

// Stateless per-sample seed derivation; parallel workers get identical
// streams regardless of how samples are distributed over threads.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

// Standard normal sampler over mt19937_64 uniforms (Box-Muller), so
// sequences do not depend on the standard library's distribution
// implementation.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : eng_(seed) {}

  double operator()();
  std::complex<double> complex_unit_variance();

 private:
  double uniform_open();  // (0, 1]
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace chanfact::rng
