// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/superop.hpp"

#include <cmath>
#include <stdexcept>

namespace chanfact {

Superop::Superop(int n, Mat matrix) : dim(n), m(std::move(matrix)) {
  if (n < 1) throw std::invalid_argument("Superop: dim must be >= 1");
  if (m.rows() != static_cast<Eigen::Index>(n) * n || m.cols() != m.rows())
    throw std::invalid_argument("Superop: matrix must be n^2 x n^2");
}

Mat Superop::apply(const Mat& x) const {
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("Superop::apply: dimension mismatch");
  Vec v(static_cast<Eigen::Index>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) v(i * dim + j) = x(i, j);
  Vec w = m * v;
  Mat y(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) y(i, j) = w(i * dim + j);
  return y;
}

Superop& Superop::operator+=(const Superop& o) {
  if (dim != o.dim) throw std::invalid_argument("Superop: dimension mismatch");
  m += o.m;
  return *this;
}

Superop& Superop::operator-=(const Superop& o) {
  if (dim != o.dim) throw std::invalid_argument("Superop: dimension mismatch");
  m -= o.m;
  return *this;
}

Superop identity_superop(int n) {
  return Superop(n, Mat::Identity(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n));
}

Superop transpose_superop(int n) {
  // vec(x^t)[(i,j)] = x(j,i): the flip symmetry as a superoperator matrix.
  Mat m = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i * n + j, j * n + i) = 1.0;
  return Superop(n, std::move(m));
}

Superop superop_from_kraus_pairs(int n, const std::vector<std::pair<Mat, Mat>>& pairs) {
  Mat acc = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (const auto& [a, b] : pairs) {
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
      throw std::invalid_argument("superop_from_kraus_pairs: dimension mismatch");
    acc += kron(a, b.conjugate());
  }
  return Superop(n, std::move(acc));
}

Superop superop_from_kraus(int n, const std::vector<Mat>& kraus) {
  std::vector<std::pair<Mat, Mat>> pairs;
  pairs.reserve(kraus.size());
  for (const Mat& a : kraus) pairs.emplace_back(a, a);
  return superop_from_kraus_pairs(n, pairs);
}

Superop ad(const Unitary& u) {
  return Superop(u.dim(), kron(u.m, u.m.conjugate()));
}

Superop tensor(const Superop& t, const Superop& s) {
  const int n = t.dim, k = s.dim, nk = n * k;
  Mat out(static_cast<Eigen::Index>(nk) * nk, static_cast<Eigen::Index>(nk) * nk);
#pragma omp parallel for collapse(2)
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = 0; r2 < k; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
          const Eigen::Index row = static_cast<Eigen::Index>(r1 * k + r2) * nk + (c1 * k + c2);
          for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < k; ++i2)
              for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < k; ++j2)
                  out(row, static_cast<Eigen::Index>(i1 * k + i2) * nk + (j1 * k + j2)) =
                      t.m(r1 * n + c1, i1 * n + j1) * s.m(r2 * k + c2, i2 * k + j2);
        }
  return Superop(nk, std::move(out));
}

Superop compose(const Superop& t, const Superop& s) {
  if (t.dim != s.dim) throw std::invalid_argument("compose: dimension mismatch");
  return Superop(t.dim, t.m * s.m);
}

Choi jamiolkowski(const Superop& t) {
  const int n = t.dim;
  Mat c(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  // Choi[(r1,r2),(c1,c2)] = (1/n) * M[(r1,c1),(r2,c2)]
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = 0; r2 < n; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = 0; c2 < n; ++c2)
          c(r1 * n + r2, c1 * n + c2) = t.m(r1 * n + c1, r2 * n + c2) / static_cast<double>(n);
  return Choi{n, std::move(c)};
}

Superop choi_to_superop(const Choi& c) {
  const int n = c.dim;
  Mat m(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (int r1 = 0; r1 < n; ++r1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int r2 = 0; r2 < n; ++r2)
        for (int c2 = 0; c2 < n; ++c2)
          m(r1 * n + c1, r2 * n + c2) = c.m(r1 * n + r2, c1 * n + c2) * static_cast<double>(n);
  return Superop(n, std::move(m));
}

ChannelReport validate_ucpt(const Superop& t, double tol) {
  const int n = t.dim;
  ChannelReport rep;
  rep.unital_residual = max_abs(t.apply(Mat::Identity(n, n)) - Mat::Identity(n, n));

  // Tr(T(e_ij)) is the (i,j) entry of vec(1)^T M; compare against Tr(e_ij).
  Vec one = Vec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) one(i * n + i) = 1.0;
  Vec traces = t.m.transpose() * one;
  double trace_dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      trace_dev = std::max(trace_dev, std::abs(traces(i * n + j) - (i == j ? 1.0 : 0.0)));
  rep.trace_preserving_residual = trace_dev;

  const Choi c = jamiolkowski(t);
  // Hermitize before the eigensolve; Hermiticity-preserving maps give a
  // Hermitian Choi matrix up to roundoff, anything else is caught by the
  // residuals and the eigenvalue check.
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (c.m + c.m.adjoint()));
  rep.min_choi_eigenvalue = es.eigenvalues().minCoeff();

  rep.is_ucpt = rep.unital_residual <= tol && rep.trace_preserving_residual <= tol &&
                rep.min_choi_eigenvalue >= -tol * n &&
                max_abs(c.m - c.m.adjoint()) <= tol;
  return rep;
}

Superop depolarizing(int k) {
  if (k < 1) throw std::invalid_argument("depolarizing: k must be >= 1");
  Mat m = Mat::Zero(static_cast<Eigen::Index>(k) * k, static_cast<Eigen::Index>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i * k + i, j * k + j) = 1.0 / static_cast<double>(k);
  return Superop(k, std::move(m));
}

std::vector<Unitary> weyl_unitaries(int k) {
  if (k < 2) throw std::invalid_argument("weyl_unitaries: k must be >= 2");
  Mat x = Mat::Zero(k, k);
  for (int j = 0; j < k; ++j) x((j + 1) % k, j) = 1.0;
  Mat z = Mat::Zero(k, k);
  for (int j = 0; j < k; ++j)
    z(j, j) = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / k);
  std::vector<Unitary> out;
  out.reserve(static_cast<std::size_t>(k) * k);
  Mat xa = Mat::Identity(k, k);
  for (int a = 0; a < k; ++a) {
    Mat xazb = xa;
    for (int b = 0; b < k; ++b) {
      out.emplace_back(xazb);
      xazb = xazb * z;
    }
    xa = x * xa;
  }
  return out;
}

Superop schur_multiplier(const Mat& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("schur_multiplier: B not square");
  const int n = static_cast<int>(b.rows());
  Mat m = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i * n + j, i * n + j) = b(i, j);
  return Superop(n, std::move(m));
}

std::vector<Mat> canonical_kraus(const Superop& t, double cutoff) {
  const int n = t.dim;
  const Choi c = jamiolkowski(t);
  EigSystem sys = hermitian_eigensystem(c.m);
  std::vector<Mat> kraus;
  for (Eigen::Index idx = 0; idx < sys.values.size(); ++idx) {
    const double lambda = sys.values(idx);
    if (lambda <= cutoff) continue;
    const double scale = std::sqrt(lambda * n);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = scale * sys.vectors(i * n + j, idx);
    kraus.push_back(std::move(a));
  }
  return kraus;
}

Superop mixture(const std::vector<std::pair<double, Superop>>& weights) {
  if (weights.empty()) throw std::invalid_argument("mixture: empty");
  double total = 0.0;
  for (const auto& [c, t] : weights) {
    if (c <= 0.0) throw std::invalid_argument("mixture: weights must be positive");
    total += c;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixture: weights must sum to 1");
  Superop acc = weights.front().second;
  acc.m *= weights.front().first;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i].second.dim != acc.dim)
      throw std::invalid_argument("mixture: dimension mismatch");
    acc.m += weights[i].first * weights[i].second.m;
  }
  return acc;
}

double cb_norm_cp(const Superop& t, double tol) {
  const Choi c = jamiolkowski(t);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (c.m + c.m.adjoint()));
  if (es.eigenvalues().minCoeff() < -tol * t.dim)
    throw std::invalid_argument("cb_norm_cp: input not completely positive");
  return operator_norm(t.apply(Mat::Identity(t.dim, t.dim)));
}

namespace {

void require_convex(const std::vector<std::pair<double, Unitary>>& cert, const char* what) {
  if (cert.empty()) throw std::invalid_argument(std::string(what) + ": empty decomposition");
  double total = 0.0;
  for (const auto& [c, u] : cert) {
    if (c <= 0.0) throw std::invalid_argument(std::string(what) + ": weights must be positive");
    total += c;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(what) + ": weights must sum to 1");
}

}  // namespace

double check_degree_k_certificate(const Superop& t, int k,
                                  const std::vector<std::pair<double, Unitary>>& cert) {
  require_convex(cert, "check_degree_k_certificate");
  const int nk = t.dim * k;
  Superop target = tensor(t, depolarizing(k));
  Mat acc = Mat::Zero(static_cast<Eigen::Index>(nk) * nk, static_cast<Eigen::Index>(nk) * nk);
  for (const auto& [c, u] : cert) {
    if (u.dim() != nk)
      throw std::invalid_argument("check_degree_k_certificate: dimension mismatch");
    acc += c * ad(u).m;
  }
  return normalized_two_norm(target.m - acc);
}

CornerCompression corner_compress(const Superop& t, const Superop& s,
                                  const std::vector<std::pair<double, Unitary>>& decomposition,
                                  double alpha) {
  require_convex(decomposition, "corner_compress");
  const int n = t.dim, k = s.dim, nk = n * k;
  std::vector<std::pair<double, Superop>> terms;
  terms.reserve(2 * decomposition.size());
  for (const auto& [c, u] : decomposition) {
    if (u.dim() != nk) throw std::invalid_argument("corner_compress: dimension mismatch");
    // b = (1 (x) f_11) u (1 (x) f_11) read off as an n x n block.
    Mat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = u.m(i * k, j * k);
    // b = U S V*; v_pm = U (S pm i sqrt(1 - S^2)) V* average back to b.
    Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vec dplus(n), dminus(n);
    for (int i = 0; i < n; ++i) {
      const double sigma = std::min(svd.singularValues()(i), 1.0);
      const double w = std::sqrt(std::max(0.0, 1.0 - sigma * sigma));
      dplus(i) = Complex(sigma, w);
      dminus(i) = Complex(sigma, -w);
    }
    const Mat vplus = svd.matrixU() * dplus.asDiagonal() * svd.matrixV().adjoint();
    const Mat vminus = svd.matrixU() * dminus.asDiagonal() * svd.matrixV().adjoint();
    terms.emplace_back(c / 2.0, ad(Unitary(vplus)));
    terms.emplace_back(c / 2.0, ad(Unitary(vminus)));
  }
  return CornerCompression{mixture(terms), 2.0 * alpha};
}

}  // namespace chanfact
