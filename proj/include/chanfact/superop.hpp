// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "chanfact/matcore.hpp"

namespace chanfact {

// Linear map on M_n stored as its n^2 x n^2 matrix under row-major vec:
// vec(T(x)) = matrix * vec(x). Under this convention the map
// x -> a x b^t has matrix kron(a, b).
struct Superop {
  int dim = 0;
  Mat m;

  Superop() = default;
  Superop(int n, Mat matrix);

  Mat apply(const Mat& x) const;

  Superop& operator+=(const Superop& o);
  Superop& operator-=(const Superop& o);
  friend Superop operator+(Superop a, const Superop& b) { return a += b; }
  friend Superop operator-(Superop a, const Superop& b) { return a -= b; }
  friend Superop operator*(double c, Superop a) {
    a.m *= c;
    return a;
  }
};

Superop identity_superop(int n);
Superop transpose_superop(int n);

// T(x) = sum_i a_i x b_i*
Superop superop_from_kraus_pairs(int n, const std::vector<std::pair<Mat, Mat>>& pairs);
Superop superop_from_kraus(int n, const std::vector<Mat>& kraus);

// ad(u): x -> u x u*
Superop ad(const Unitary& u);

// Acts as T (x) S on M_n (x) M_k, first leg slow.
Superop tensor(const Superop& t, const Superop& s);

Superop compose(const Superop& t, const Superop& s);  // t after s

struct Choi {
  int dim = 0;
  Mat m;  // n^2 x n^2, legs (n, n)
};

// Normalized Jamiolkowski transform (1/n) sum T(e_ij) (x) e_ij; mutually
// inverse with choi_to_superop.
Choi jamiolkowski(const Superop& t);
Superop choi_to_superop(const Choi& c);

struct ChannelReport {
  double unital_residual = 0.0;
  double trace_preserving_residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  bool is_ucpt = false;
};

// CP threshold scales with dimension: min Choi eigenvalue >= -tol * n.
ChannelReport validate_ucpt(const Superop& t, double tol = 1e-9);

// Completely depolarizing channel S_k: x -> tau_k(x) 1_k.
Superop depolarizing(int k);

// Clock-and-shift unitaries X^a Z^b; averaging their conjugations gives S_k.
std::vector<Unitary> weyl_unitaries(int k);

// Schur multiplier x -> B o x (entrywise product).
Superop schur_multiplier(const Mat& b);

// Kraus operators from the Choi eigendecomposition (eigenvalue cutoff,
// eigenvectors reshaped row-major).
std::vector<Mat> canonical_kraus(const Superop& t, double cutoff = 1e-10);

// sum c_i T_i with c_i > 0, sum c_i = 1 within 1e-12.
Superop mixture(const std::vector<std::pair<double, Superop>>& weights);

// ||T||_cb = ||T(1)|| for completely positive T. Throws if the Choi matrix
// has an eigenvalue below -tol * n.
double cb_norm_cp(const Superop& t, double tol = 1e-9);

// Residual of T (x) S_k = sum c_j ad(u_j) in the normalized 2-norm of
// superoperator matrices. u_j live in U(n*k).
double check_degree_k_certificate(const Superop& t, int k,
                                  const std::vector<std::pair<double, Unitary>>& cert);

struct CornerCompression {
  Superop compressed;  // mixture of the 2m unitary conjugations
  double bound = 0.0;  // ||T - compressed||_cb <= 2 * alpha
};

// Constructive half of the tensor-splitting theorem for Schur multipliers:
// extracts the corner blocks b_j = (1 (x) f_11) u_j (1 (x) f_11) of a
// decomposition T (x) S ~ sum c_j ad(u_j), completes each contraction to an
// average of two unitaries via the polar decomposition, and returns the
// resulting mixed-unitary map together with the certified bound 2*alpha
// (alpha is the caller's cb-estimate of the decomposition error).
CornerCompression corner_compress(const Superop& t, const Superop& s,
                                  const std::vector<std::pair<double, Unitary>>& decomposition,
                                  double alpha);

}  // namespace chanfact
