// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/rng.hpp"

#include <cmath>

namespace chanfact::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t state = root ^ (0x2545f4914f6cdd1dULL * (index + 1));
  std::uint64_t s = splitmix64(state);
  return splitmix64(state) ^ s;
}

double Gaussian::uniform_open() {
  // 53-bit mantissa in [0,1); flip to (0,1] so log() is safe.
  const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return 1.0 - u;
}

double Gaussian::operator()() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::complex<double> Gaussian::complex_unit_variance() {
  const double re = (*this)();
  const double im = (*this)();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

}  // namespace chanfact::rng
