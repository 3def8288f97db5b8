// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "chanfact/checks.hpp"
#include "chanfact/convex.hpp"
#include "chanfact/factorize.hpp"
#include "chanfact/json_io.hpp"
#include "chanfact/report.hpp"
#include "chanfact/werner.hpp"

namespace {

using namespace chanfact;

// Exit codes: 0 pass, 1 check failure, 2 usage error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_report(const ReportDocument& doc) {
  for (const CheckResult& c : doc.checks)
    std::printf("[%s] %-46s value=%.6g tol=%.3g  %s\n", c.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.residual_or_value, c.tolerance, c.description.c_str());
  std::printf("suite %s: %zu checks, %s (%lld ms, seed %llu)\n", doc.suite.c_str(),
              doc.checks.size(), doc.all_pass() ? "all passed" : "FAILURES",
              static_cast<long long>(doc.elapsed_ms),
              static_cast<unsigned long long>(doc.seed));
}

bool write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) return false;
  out << j.dump(2) << "\n";
  return out.good();
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0 ||
      hi < lo)
    throw CLI::ValidationError("grid", "expected start:stop:step with step > 0");
  std::vector<double> grid;
  for (double v = lo; v <= hi + step * 1e-9; v += step)
    grid.push_back(std::min(v, hi));
  return grid;
}

nlohmann::json certificate_to_json(const MembershipCertificate& cert) {
  return nlohmann::json{{"lambda", cert.lambda},
                        {"power", cert.power},
                        {"basis", cert.coefficients.basis},
                        {"weights", cert.coefficients.weights},
                        {"min_weight", cert.min_weight},
                        {"reconstruction_residual", cert.reconstruction_residual},
                        {"verdict", cert.verdict}};
}

int run_verify(const std::string& suite, const CheckOptions& opts,
               const std::string& json_path) {
  ReportDocument doc;
  if (suite == "all") {
    doc.suite = "all";
    doc.seed = opts.seed;
    const auto start = std::chrono::steady_clock::now();
    for (const std::string& name : suite_names()) {
      ReportDocument part = run_suite(name, opts);
      doc.checks.insert(doc.checks.end(), part.checks.begin(), part.checks.end());
    }
    doc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  } else {
    doc = run_suite(suite, opts);
  }
  print_report(doc);
  if (!json_path.empty() && !write_json_file(json_path, report_to_json(doc))) {
    std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
    return kExitFail;
  }
  return doc.all_pass() ? kExitPass : kExitFail;
}

int run_certify(double lambda, int power, const std::string& json_path) {
  const MembershipCertificate cert = certify_tensor_membership(lambda, power);
  const nlohmann::json j = certificate_to_json(cert);
  std::cout << j.dump(2) << "\n";
  if (!json_path.empty() && !write_json_file(json_path, j)) {
    std::fprintf(stderr, "error: cannot write %s\n", json_path.c_str());
    return kExitFail;
  }
  return cert.verdict ? kExitPass : kExitFail;
}

int run_distance(const std::string& target, int n) {
  if (target == "w3minus-mixedunitary" || target == "wnminus-mixedunitary") {
    const int dim = target == "w3minus-mixedunitary" ? 3 : n;
    const WMinusDistanceCertificate cert = dist_mixed_unitary_wminus(dim);
    std::printf("d_cb(W_%d^-, conv(Aut(M_%d))) = 2/%d = %.12g\n", dim, dim, dim,
                cert.distance);
    std::printf("witness: F(ad(v)) = (1/%d) W+ + (%d/%d) W-, a mixed-unitary channel\n",
                dim, dim - 1, dim);
    std::printf("upper bound: ||W- - F(ad(v))||_cb = c+ * ||W+ - W-||_cb = %.12g\n",
                cert.witness_distance);
    std::printf("lower bound: min ||(v+v^t)/2||_2^2 = %.12g over U(%d) forces 2*lambda >= %.12g\n",
                cert.min_lambda, dim, cert.lower_bound);
    return kExitPass;
  }
  if (target == "w3minus-factorizable") {
    const ExactFactorization wit = s_minus_2q_witness();
    const WernerHolevoPair wh = werner_holevo(3);
    const Mat expect = (2.0 / 27.0) * wh.w_plus.m + (25.0 / 27.0) * wh.w_minus.m;
    const double residual = max_abs(channel_of(wit).m - expect);
    if (residual > 1e-12) {
      std::fprintf(stderr, "error: witness channel residual %.3g exceeds 1e-12\n", residual);
      return kExitFail;
    }
    std::printf("d_cb(W_3^-, FM(M_3)) = 4/27 = %.12g\n", 4.0 / 27.0);
    std::printf("witness: u = s - 2q factors (2/27) W+ + (25/27) W- through M_3 (x) M_3 "
                "(channel residual %.3g)\n", residual);
    std::printf("lower bound: ||b||_2^2 <= 25/27 for every factorization defect, so "
                "2*lambda >= 4/27\n");
    return kExitPass;
  }
  std::fprintf(stderr, "error: unknown distance target '%s'\n", target.c_str());
  return kExitUsage;
}

int run_export(const std::string& what, const std::string& grid_spec,
               const std::string& out_path) {
  const std::vector<double> grid = parse_grid(grid_spec);
  std::string csv;
  if (what == "curves") {
    csv = curves_csv(curve_export(grid));
  } else {
    csv = path_csv(grid);
  }
  if (out_path.empty()) {
    std::cout << csv;
    return kExitPass;
  }
  std::ofstream out(out_path);
  if (!out || !(out << csv)) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chanfact: matrix-level verification of twirling, Werner-Holevo "
               "channels, factorization witnesses and mixed-unitary certificates"};
  app.require_subcommand(1);

  CheckOptions opts;
  std::string suite = "all";
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run an identity-check battery");
  verify->add_option("suite", suite, "all, werner, twirl, factorize, convex or haar")
      ->check(CLI::IsMember({"all", "werner", "twirl", "factorize", "convex", "haar"}));
  verify->add_option("--tol", opts.tol, "tolerance for slack and sampling checks");
  verify->add_option("--seed", opts.seed, "root seed for randomized checks");
  verify->add_option("--mc-samples", opts.mc_samples, "Monte-Carlo sample count");
  verify->add_option("--json", json_path, "write the report document to PATH");

  double lambda = 0.0;
  int power = 2;
  std::string cert_json;
  auto* certify = app.add_subcommand("certify",
                                     "membership certificate for T_lambda tensor powers");
  certify->add_option("lambda", lambda, "mixture weight in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  certify->add_option("power", power, "tensor power, 2 or 3")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  certify->add_option("--json", cert_json, "write the certificate to PATH");

  std::string target;
  int dist_n = 5;
  auto* distance = app.add_subcommand("distance", "closed-form channel distances");
  distance->add_option("target", target,
                       "w3minus-mixedunitary, wnminus-mixedunitary or w3minus-factorizable")
      ->required()
      ->check(CLI::IsMember({"w3minus-mixedunitary", "wnminus-mixedunitary",
                             "w3minus-factorizable"}));
  distance->add_option("n", dist_n, "dimension for wnminus-mixedunitary (odd, >= 3)");

  std::string what;
  std::string grid_spec = "0:1:0.01";
  std::string out_path;
  auto* exporter = app.add_subcommand("export", "write CSV data");
  exporter->add_option("what", what, "curves or path")
      ->required()
      ->check(CLI::IsMember({"curves", "path"}));
  exporter->add_option("--grid", grid_spec, "start:stop:step (default 0:1:0.01)");
  exporter->add_option("--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return run_verify(suite, opts, json_path);
    if (*certify) return run_certify(lambda, power, cert_json);
    if (*distance) {
      if (target == "wnminus-mixedunitary" && (dist_n < 3 || dist_n % 2 == 0)) {
        std::fprintf(stderr, "error: n must be odd and >= 3\n");
        return kExitUsage;
      }
      return run_distance(target, dist_n);
    }
    if (*exporter) return run_export(what, grid_spec, out_path);
  } catch (const CLI::ValidationError&) {
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
