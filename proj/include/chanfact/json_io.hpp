// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "chanfact/factorize.hpp"
#include "chanfact/superop.hpp"

namespace chanfact::io {

using nlohmann::json;

// {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// {"n": N, "kind": "superop" | "kraus" | "choi", "data": ...}; kraus data is
// a list of [a, b] matrix pairs.
json channel_to_json(const Superop& t);
json channel_to_json_choi(const Choi& c);
json channel_to_json_kraus(int n, const std::vector<std::pair<Mat, Mat>>& pairs);
Superop channel_from_json(const json& j);

// {"n": N, "k": K, "u": matrix}.
json witness_to_json(const ExactFactorization& f);
ExactFactorization witness_from_json(const json& j);

}  // namespace chanfact::io
