// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chanfact/report.hpp"
#include "chanfact/superop.hpp"

namespace chanfact {

struct CheckOptions {
  double tol = 1e-9;           // loose class: PSD slack, Haar floors, reconstructions
  std::uint64_t seed = 42;     // root seed for every randomized check
  int mc_samples = 20000;      // Monte-Carlo sample count
};

std::vector<std::string> suite_names();  // werner, twirl, factorize, convex, haar

// Runs one suite's battery; throws std::invalid_argument on unknown names.
ReportDocument run_suite(const std::string& suite, const CheckOptions& opts);

// Helpers shared by the check batteries and the tests.
Superop random_ucpt(int n, std::uint64_t seed, int terms = 4);
Mat random_psd_unit_diagonal(int n, std::uint64_t seed);
Mat random_matrix(int n, std::uint64_t seed);

}  // namespace chanfact
