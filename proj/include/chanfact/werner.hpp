// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "chanfact/superop.hpp"

namespace chanfact {

// Flip symmetry s, its spectral projections p+-, and the maximally
// entangled projection q, all in M_n (x) M_n.
struct SymmetryData {
  int n = 0;
  Mat s;
  Mat p_plus;
  Mat p_minus;
  Mat q;
};

SymmetryData build_symmetry(int n);

struct WernerHolevoPair {
  int n = 0;
  Superop w_plus;
  Superop w_minus;
};

// W_n^+(x) = (Tr(x) 1 + x^t)/(n+1), W_n^-(x) = (Tr(x) 1 - x^t)/(n-1).
WernerHolevoPair werner_holevo(int n);

// Same channels from their Kraus form, (e_ij +- e_ji)/sqrt(2n +- 2) over
// all index pairs. Kept separate so the two constructions can be compared.
WernerHolevoPair werner_holevo_from_kraus(int n);

// Computes ||((W+ - W-) (x) id)(s_n)|| and checks it equals 2, the
// cb-distance between the two channels.
double wh_distance_witness(int n);

// Minimizer of ||(v+v^t)/2||_2^2 over U(n) for odd n, with the minimum 1/n.
std::pair<Unitary, double> min_symmetric_unitary(int n);

// Distance from W_n^- to the mixed-unitary channels (odd n >= 3), together
// with the data certifying both halves of the equality d = 2/n.
struct WMinusDistanceCertificate {
  int n = 0;
  double distance = 0.0;        // 2/n
  Superop witness;              // twirl of ad(v): (1/n) W+ + ((n-1)/n) W-
  double witness_c_plus = 0.0;
  double witness_c_minus = 0.0;
  double witness_distance = 0.0;  // c_plus * ||W+ - W-||_cb
  // Lower bound: every mixed-unitary T twirls to lambda W+ + (1-lambda) W-
  // with lambda >= 1/n, so ||W- - T||_cb >= 2 lambda >= 2/n.
  double min_lambda = 0.0;
  double lower_bound = 0.0;
};

WMinusDistanceCertificate dist_mixed_unitary_wminus(int n);

// Exact rational in [0, 1]; membership thresholds compare without rounding.
struct Rational {
  long long num = 0;
  long long den = 1;
};

// lambda W_n^+ + (1-lambda) W_n^- mixed-unitary iff lambda >= 1/n (n odd).
bool mixture_membership_mixed_unitary(Rational lambda, int n);
bool mixture_membership_mixed_unitary(double lambda, int n);

// lambda W_3^+ + (1-lambda) W_3^- factorizable iff lambda >= 2/27.
bool mixture_membership_factorizable(Rational lambda);
bool mixture_membership_factorizable(double lambda);

}  // namespace chanfact
