// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "chanfact/superop.hpp"
#include "chanfact/twirl.hpp"

namespace chanfact {

// Witness of T(x) = (id_n (x) tau_k)(u (x (x) 1_k) u*) with u in M_n (x) M_k.
struct ExactFactorization {
  int n = 0;
  int k = 0;
  Unitary u;

  ExactFactorization(int n_, int k_, Unitary u_);
};

// The channel induced by a witness; always UCPT.
Superop channel_of(const ExactFactorization& f);

// Block-diagonal join on the ancilla leg: the induced channel is the convex
// combination (k/(k+l)) channel(f1) + (l/(k+l)) channel(f2).
ExactFactorization direct_sum_mix(const ExactFactorization& f1,
                                  const ExactFactorization& f2);

// Five anti-commuting self-adjoint unitaries in M_4 whose pair products are
// orthonormal under tau_4.
std::array<Mat, 5> clifford_generators();

// Circulant unitary in M_5 with zero diagonal and all off-diagonal entries
// of modulus 1/2.
Unitary sigma5();

// The degree-4 witness for W_5^-: u = diag(v_1..v_5)(sigma (x) 1_4)diag(v_1..v_5).
ExactFactorization w5_minus_witness();

// u = s_3 - 2 q_3, witnessing (2/27) W_3^+ + (25/27) W_3^-.
ExactFactorization s_minus_2q_witness();

// Finite mixed-unitary decomposition of W_n^- for even n: signed
// perfect-matching unitaries sum(eps_p (e_ip jp - e_jp ip)), averaged over
// all matchings and sign patterns. Every unitary in it is anti-symmetric.
std::vector<std::pair<double, Unitary>> wminus_even_mixed_unitary(int n);

struct FactorizationMixture {
  std::vector<std::pair<double, ExactFactorization>> terms;
};

struct Degree4Certificate {
  Superop r;  // block channel W_5^- (+) W_{n-5}^-
  FactorizationMixture plus;
  FactorizationMixture minus;
  TwirlCoefficients coeffs;       // twirl of r: (0, 1), so F(r) = W_n^-
  double split_residual = 0.0;    // || r - (r_plus + r_minus)/2 ||_max
  double witness_max_c_plus = 0.0;  // max generalized c+ over all witnesses
};

// Degree-4 factorizability certificate for W_n^-, odd n >= 7.
Degree4Certificate wn_minus_degree4_certificate(int n);

// b = (u - u^t1)/2 for u in M_3(M_k), transpose on the M_3 leg.
Mat antisym_defect(const Mat& u, int k);

struct InequalityReport {
  int samples = 0;
  double min_slack_op = 0.0;    // 5/3 - ||b||
  double min_slack_12 = 0.0;    // ||b||_1 - ||b||_2^2
  double min_slack_42 = 0.0;    // ||b||_4^4 - (3/2)||b||_2^4
  double min_slack_2527 = 0.0;  // 25/27 - ||b||_2^2
};

// Minimum slack of the four defect inequalities over Haar samples in U(3k).
InequalityReport antisym_defect_stats(int k, int samples, std::uint64_t seed,
                                      bool parallel = true);
InequalityReport antisym_defect_slacks(const Mat& u, int k);

struct TransposeBoundReport {
  double psd_min_eigenvalue = 0.0;  // of the Choi matrix of W_3^+ - (1/6) id_3
  double identity_residual = 0.0;   // id_3 - t_3 = (2/3 id + W-) - 2(W+ - id/6)
  double bound = 0.0;               // 5/3 + 2 * 5/6 = 10/3
};

// The chain certifying ||id_3 - t_3||_cb <= 10/3.
TransposeBoundReport id_minus_transpose_bound();

// Sample mean of (1 (x) w)* z (1 (x) w) over Haar w in U(k), z in M_n (x) M_k.
Mat conj_ancilla_average(const Mat& z, int n, int k, int samples,
                         std::uint64_t seed, bool parallel = true);

struct HaarIdentityResiduals {
  double conjugation_average = 0.0;  // vs (id (x) tau_k)(z) (x) 1_k
  double twirl_mean = 0.0;           // mean of u (x) conj(u) vs q
};

// Monte-Carlo checks of the two Haar averaging identities (n = 3).
HaarIdentityResiduals haar_average_identity_check(int k, int samples,
                                                  std::uint64_t seed,
                                                  bool parallel = true);

}  // namespace chanfact
