// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "chanfact/superop.hpp"

namespace chanfact {

Mat sym_part(const Mat& a);      // (a + a^t)/2
Mat antisym_part(const Mat& a);  // (a - a^t)/2

// Trace-preserving conditional expectation onto span{p+, p-}:
// E(x) = 2/(n(n+1)) Tr(x p+) p+ + 2/(n(n-1)) Tr(x p-) p-  (non-normalized Tr).
Mat conditional_expectation(const Mat& x, int n);

struct TwirlCoefficients {
  double c_plus = 0.0;
  double c_minus = 0.0;
};

struct TwirlResult {
  Superop map;  // c_plus W+ + c_minus W-
  TwirlCoefficients coeffs;
};

// Closed form of the Haar twirl: F(T) = Tr(T-hat p+) W+ + Tr(T-hat p-) W-.
TwirlResult twirl_closed_form(const Superop& t);

// c+- = (1/4) sum_i ||a_i +- a_i^t||_2^2 for T(x) = sum a_i x a_i*.
TwirlCoefficients twirl_coeffs_kraus(const std::vector<Mat>& kraus);

// rho_u(T) = ad(u) T ad(u^t).
Superop rho_u(const Unitary& u, const Superop& t);

// Sample mean of rho_u(T) over Haar unitaries; diagnostic companion of the
// closed form, O(1/sqrt(N)) Frobenius error. Deterministic in seed and
// independent of the thread count.
Superop twirl_monte_carlo(const Superop& t, int samples, std::uint64_t seed,
                          bool parallel = true);

// || (F(T))-hat - E(T-hat) ||_2 under the normalized norm.
double intertwining_residual(const Superop& t);

// Weights of (F (x) F)(ad(u)) on {W+ (x) W+, W+ (x) W-, W- (x) W+, W- (x) W-}
// for u in U(9) viewed in M_3 (x) M_3, via leg-wise symmetrization.
struct DoubleTwirlCoefficients {
  double c_pp = 0.0;
  double c_pm = 0.0;
  double c_mp = 0.0;
  double c_mm = 0.0;
};

DoubleTwirlCoefficients double_twirl(const Unitary& u);

// F(T_a) weights for a in M_n (x) M_k with T_a(x) = (id (x) tau_k)(a (x (x) 1) a*);
// the transpose acts on the M_n leg and norms are taken under tau_n (x) tau_k.
TwirlCoefficients generalized_twirl_coeffs(const Mat& a, const TensorShape& shape);

}  // namespace chanfact
