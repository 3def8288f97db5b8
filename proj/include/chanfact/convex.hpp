// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "chanfact/superop.hpp"

namespace chanfact {

// T_lambda = lambda W_3^+ + (1-lambda) W_3^- on M_3.
Superop t_lambda(double lambda);

// Named channel bases on M_9 and M_27.
struct TensorBasis2 {
  Superop wpp;  // W+ (x) W+
  Superop wm;   // (W+ (x) W- + W- (x) W+)/2
  Superop wmm;  // W- (x) W-
};
TensorBasis2 basis_channels2();

struct TensorBasis3 {
  Superop wppp;
  Superop wm_plus;   // symmetrized two-plus-one-minus average
  Superop wm_minus;  // symmetrized one-plus-two-minus average
  Superop wmmm;
};
TensorBasis3 basis_channels3();

// The phased cyclic unitary v = v_1 + w v_2 + conj(w) v_3 in U(9).
Unitary omega_unitary();

// Q_1 = W+ (x) W+, Q_2 = (2/27) W+W+ + (25/27) W-W-, Q_3 = (2/3) W_m + (1/3) W-W-.
std::array<Superop, 3> q_channels();

// Average over the 6 leg permutations of M_3 (x) M_3 (x) M_3.
Superop symmetrize3(const Superop& t);

// R_1..R_4 built from their displayed mixtures.
std::array<Superop, 4> r_channels();

struct RChannelProvenance {
  std::array<double, 3> sigma_residual{};  // R_i = sym3(Q_i (x) (W+/3 + 2W-/3))
  double r4_residual = 0.0;                // R_4 = (1/27) W_27^+ + (26/27) W_27^-
};
RChannelProvenance r_channels_provenance();

struct W27Residuals {
  double w27_plus = 0.0;   // W_27^+ = (4 W+++ + 3 Wm-)/7
  double w27_minus = 0.0;  // W_27^- = (12 Wm+ + W---)/13
  double s27 = 0.0;        // S_27 = (8 W+++ + 12 Wm+ + 6 Wm- + W---)/27
  double t27 = 0.0;        // t_27 = 8 W+++ - 12 Wm+ + 6 Wm- - W---
  double s27_cross = 0.0;  // S_27 vs S_3 (x) S_3 (x) S_3
  double t27_cross = 0.0;  // t_27 vs t_3 (x) t_3 (x) t_3
};
W27Residuals w27_decompositions();

struct MixtureCoefficients {
  std::vector<std::string> basis;
  std::vector<double> weights;

  double sum() const;
  double min_weight() const;
};

// Coefficients of T_lambda (x) T_lambda over (Q_1, Q_2, Q_3) and of the
// triple tensor power over (R_1..R_4), by linear solve against the basis
// change matrices.
MixtureCoefficients p_coefficients(double lambda);
MixtureCoefficients q_coefficients(double lambda);

// Cubic/quadratic coefficient rows (ascending powers) for cross-checks.
std::array<std::array<double, 3>, 3> p_polynomials_closed_form();
std::array<std::array<double, 3>, 3> p_polynomials_solved();
std::array<std::array<double, 4>, 4> q_polynomials_printed();
std::array<std::array<double, 4>, 4> q_polynomials_corrected();
std::array<std::array<double, 4>, 4> q_polynomials_solved();

double eval_poly(const std::vector<double>& ascending, double x);

// Sign-change bisection, bracket width 1e-12.
std::vector<double> real_roots(const std::vector<double>& ascending, double lo, double hi);

struct MembershipCertificate {
  double lambda = 0.0;
  int power = 0;
  MixtureCoefficients coefficients;
  double min_weight = 0.0;
  double reconstruction_residual = 0.0;
  bool verdict = false;
};

// Membership of T_lambda^(power) in the mixed-unitary channels. For
// lambda >= 1/3 the single-factor threshold already certifies every tensor
// power; below it the Q/R coefficients decide.
MembershipCertificate certify_tensor_membership(double lambda, int power);

struct PathPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// gamma(t) = (1/9)(-(8/3)(t+1)^2 + 3, 16 t^2 - 7), t in [0, 1].
PathPoint mw_path(double t);

// (sqrt(2)-1)(1 - 1/sqrt(3)).
double mw_lambda0();

struct CurveRow {
  double lambda = 0.0;
  std::array<double, 3> p{};
  std::array<double, 4> q{};
  bool member2 = false;
  bool member3 = false;
};

std::vector<CurveRow> curve_export(const std::vector<double>& grid);

// CSV with header "lambda,p1,p2,p3,q1,q2,q3,q4,member2,member3", floats to
// 12 significant digits, rows in grid order.
std::string curves_csv(const std::vector<CurveRow>& rows);
std::string path_csv(const std::vector<double>& grid);

}  // namespace chanfact
