// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "chanfact/checks.hpp"
#include "chanfact/json_io.hpp"
#include "chanfact/report.hpp"
#include "chanfact/werner.hpp"

using namespace chanfact;
using nlohmann::json;

TEST_CASE("matrix json round trip") {
  const Mat m = random_matrix(3, 7);
  const json j = io::matrix_to_json(m);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 3);
  CHECK(j.at("entries").size() == 9);
  // row-major: entry index 1 is (0, 1)
  CHECK(j.at("entries").at(1).at(0).get<double>() == m(0, 1).real());
  CHECK(max_abs(io::matrix_from_json(j) - m) == 0.0);

  json bad = j;
  bad["entries"].erase(0);
  CHECK_THROWS_AS(io::matrix_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2}}), std::invalid_argument);
}

TEST_CASE("channel json in all three kinds") {
  const WernerHolevoPair wh = werner_holevo(3);

  const Superop from_superop = io::channel_from_json(io::channel_to_json(wh.w_minus));
  CHECK(max_abs(from_superop.m - wh.w_minus.m) == 0.0);

  const Superop from_choi =
      io::channel_from_json(io::channel_to_json_choi(jamiolkowski(wh.w_minus)));
  CHECK(max_abs(from_choi.m - wh.w_minus.m) <= 1e-14);

  std::vector<std::pair<Mat, Mat>> pairs;
  const double c = 1.0 / std::sqrt(4.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      pairs.emplace_back(c * antisym_unit(3, i, j), c * antisym_unit(3, i, j));
  const Superop from_kraus =
      io::channel_from_json(io::channel_to_json_kraus(3, pairs));
  CHECK(max_abs(from_kraus.m - wh.w_minus.m) <= 1e-14);

  json unknown = io::channel_to_json(wh.w_minus);
  unknown["kind"] = "mystery";
  CHECK_THROWS_AS(io::channel_from_json(unknown), std::invalid_argument);
}

TEST_CASE("witness json round trip") {
  const ExactFactorization f(3, 2, haar_unitary(6, 17));
  const json j = io::witness_to_json(f);
  const ExactFactorization g = io::witness_from_json(j);
  CHECK(g.n == 3);
  CHECK(g.k == 2);
  CHECK(max_abs(g.u.m - f.u.m) == 0.0);

  // a non-unitary payload is rejected by the witness validation
  json bad = j;
  bad["u"]["entries"][0] = {5.0, 0.0};
  CHECK_THROWS_AS(io::witness_from_json(bad), std::invalid_argument);
}

TEST_CASE("report document json") {
  ReportDocument doc;
  doc.suite = "werner";
  doc.seed = 42;
  doc.elapsed_ms = 12;
  doc.checks.push_back(CheckResult{"a.b", "desc", 1e-13, 1e-12, true});
  doc.checks.push_back(CheckResult{"c.d", "other", 2.0, 1.0, false});
  CHECK_FALSE(doc.all_pass());

  const json j = report_to_json(doc);
  const ReportDocument back = report_from_json(j);
  CHECK(back.suite == "werner");
  CHECK(back.seed == 42);
  CHECK(back.checks.size() == 2);
  CHECK(back.checks[0].pass);
  CHECK(back.checks[1].residual_or_value == 2.0);

  // unknown fields are rejected on re-parse
  json extra = j;
  extra["surprise"] = 1;
  CHECK_THROWS_AS(report_from_json(extra), std::invalid_argument);

  json extra_check = j;
  extra_check["checks"][0]["note"] = "hm";
  CHECK_THROWS_AS(report_from_json(extra_check), std::invalid_argument);

  // schema version is enforced
  json wrong_version = j;
  wrong_version["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(wrong_version), std::invalid_argument);
}
