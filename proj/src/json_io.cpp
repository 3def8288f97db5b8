// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/json_io.hpp"

#include <stdexcept>

namespace chanfact::io {

json matrix_to_json(const Mat& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix_from_json: missing fields");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix_from_json: bad shape");
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  Mat m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++idx) {
      const json& e = entries.at(idx);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix_from_json: entries must be [re, im] pairs");
      m(i, j2) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  require_finite(m, "matrix_from_json");
  return m;
}

json channel_to_json(const Superop& t) {
  return json{{"n", t.dim}, {"kind", "superop"}, {"data", matrix_to_json(t.m)}};
}

json channel_to_json_choi(const Choi& c) {
  return json{{"n", c.dim}, {"kind", "choi"}, {"data", matrix_to_json(c.m)}};
}

json channel_to_json_kraus(int n, const std::vector<std::pair<Mat, Mat>>& pairs) {
  json data = json::array();
  for (const auto& [a, b] : pairs)
    data.push_back(json::array({matrix_to_json(a), matrix_to_json(b)}));
  return json{{"n", n}, {"kind", "kraus"}, {"data", std::move(data)}};
}

Superop channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("kind") || !j.contains("data"))
    throw std::invalid_argument("channel_from_json: missing fields");
  const int n = j.at("n").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "superop") return Superop(n, matrix_from_json(j.at("data")));
  if (kind == "choi") return choi_to_superop(Choi{n, matrix_from_json(j.at("data"))});
  if (kind == "kraus") {
    std::vector<std::pair<Mat, Mat>> pairs;
    for (const json& e : j.at("data")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("channel_from_json: kraus entries must be pairs");
      pairs.emplace_back(matrix_from_json(e.at(0)), matrix_from_json(e.at(1)));
    }
    return superop_from_kraus_pairs(n, pairs);
  }
  throw std::invalid_argument("channel_from_json: unknown kind '" + kind + "'");
}

json witness_to_json(const ExactFactorization& f) {
  return json{{"n", f.n}, {"k", f.k}, {"u", matrix_to_json(f.u.m)}};
}

ExactFactorization witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("u"))
    throw std::invalid_argument("witness_from_json: missing fields");
  return ExactFactorization(j.at("n").get<int>(), j.at("k").get<int>(),
                            Unitary(matrix_from_json(j.at("u"))));
}

}  // namespace chanfact::io
