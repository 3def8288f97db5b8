// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace chanfact {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Structural validations (unitarity, hermiticity) use kValidationTol;
// exact algebraic identities are checked at kIdentityTol, scaled by
// dimension where noted.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

bool all_finite(const Mat& m);
void require_finite(const Mat& m, const char* what);

double max_abs(const Mat& m);
double frobenius(const Mat& m);

// sqrt(tau(m* m)) for square m; equals the Schatten 2-norm under the
// normalized trace.
double normalized_two_norm(const Mat& m);

// Canonical matrix unit e_ij (0-based indices) and the symmetric /
// antisymmetric combinations e_ij + e_ji, e_ij - e_ji.
Mat matrix_unit(int n, int i, int j);
Mat sym_unit(int n, int i, int j);
Mat antisym_unit(int n, int i, int j);

// Leg structure of a tensor-product matrix. Row-major convention: the
// first factor is the slow index.
struct TensorShape {
  std::vector<int> factors;

  explicit TensorShape(std::vector<int> f);
  TensorShape(std::initializer_list<int> f) : TensorShape(std::vector<int>(f)) {}

  int dim() const;
  int legs() const { return static_cast<int>(factors.size()); }
  void require_matches(const Mat& m, const char* what) const;
};

// Square matrix validated to satisfy ||u u* - 1||_max <= tol.
struct Unitary {
  Mat m;

  explicit Unitary(Mat u, double tol = kValidationTol);
  int dim() const { return static_cast<int>(m.rows()); }
};

Mat kron(const Mat& a, const Mat& b);

// (id_n x Tr_k)(m) for m in M_n x M_k; divides by k when normalized
// (tau_k = Tr_k / k).
Mat partial_trace_second(const Mat& m, const TensorShape& shape, bool normalized);

// Transposes a single tensor leg.
Mat partial_transpose(const Mat& m, const TensorShape& shape, int leg);

// p-norm of singular values under the normalized trace:
// ||m||_p = ((1/n) sum s_i^p)^(1/p); p = inf gives the operator norm.
double schatten_norm_normalized(const Mat& m, double p);
double operator_norm(const Mat& m);

struct EigSystem {
  Eigen::VectorXd values;  // descending
  Mat vectors;             // orthonormal columns, matching order
};

// Spectral decomposition of a Hermitian matrix. Throws if
// ||m - m*||_max exceeds herm_tol.
EigSystem hermitian_eigensystem(const Mat& m, double herm_tol = kValidationTol);

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// R-diagonal phases normalized to positive reals. Deterministic in seed.
Unitary haar_unitary(int n, std::uint64_t seed);

}  // namespace chanfact
