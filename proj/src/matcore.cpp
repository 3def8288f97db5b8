// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/matcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chanfact/rng.hpp"

namespace chanfact {

bool all_finite(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

void require_finite(const Mat& m, const char* what) {
  if (!all_finite(m))
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

double max_abs(const Mat& m) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

double frobenius(const Mat& m) { return m.norm(); }

double normalized_two_norm(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("normalized_two_norm: matrix not square");
  return m.norm() / std::sqrt(static_cast<double>(m.rows()));
}

Mat matrix_unit(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("matrix_unit: index out of range");
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

Mat sym_unit(int n, int i, int j) {
  Mat b = matrix_unit(n, i, j);
  b(j, i) += 1.0;
  return b;
}

Mat antisym_unit(int n, int i, int j) {
  Mat a = matrix_unit(n, i, j);
  a(j, i) -= 1.0;
  return a;
}

TensorShape::TensorShape(std::vector<int> f) : factors(std::move(f)) {
  if (factors.empty()) throw std::invalid_argument("TensorShape: no factors");
  for (int d : factors)
    if (d < 1) throw std::invalid_argument("TensorShape: non-positive factor");
}

int TensorShape::dim() const {
  long long d = 1;
  for (int f : factors) d *= f;
  return static_cast<int>(d);
}

void TensorShape::require_matches(const Mat& m, const char* what) const {
  if (m.rows() != dim() || m.cols() != dim())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

Unitary::Unitary(Mat u, double tol) : m(std::move(u)) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Unitary: not square");
  require_finite(m, "Unitary");
  Mat r = m * m.adjoint();
  r -= Mat::Identity(m.rows(), m.cols());
  if (max_abs(r) > tol) throw std::invalid_argument("Unitary: u u* != 1");
}

Mat kron(const Mat& a, const Mat& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Mat out(ra * rb, ca * cb);
#pragma omp parallel for collapse(2) if (ra * ca > 16)
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Mat partial_trace_second(const Mat& m, const TensorShape& shape, bool normalized) {
  if (shape.legs() != 2)
    throw std::invalid_argument("partial_trace_second: expected two legs");
  shape.require_matches(m, "partial_trace_second");
  const int n = shape.factors[0];
  const int k = shape.factors[1];
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int a = 0; a < k; ++a) s += m(i * k + a, j * k + a);
      out(i, j) = s;
    }
  if (normalized) out /= static_cast<double>(k);
  return out;
}

namespace {

// Row-major digit decomposition over the shape's factors.
void decompose(int index, const std::vector<int>& factors, std::vector<int>& digits) {
  for (int l = static_cast<int>(factors.size()) - 1; l >= 0; --l) {
    digits[l] = index % factors[l];
    index /= factors[l];
  }
}

int compose(const std::vector<int>& factors, const std::vector<int>& digits) {
  int index = 0;
  for (std::size_t l = 0; l < factors.size(); ++l) index = index * factors[l] + digits[l];
  return index;
}

}  // namespace

Mat partial_transpose(const Mat& m, const TensorShape& shape, int leg) {
  if (leg < 0 || leg >= shape.legs())
    throw std::invalid_argument("partial_transpose: leg out of range");
  shape.require_matches(m, "partial_transpose");
  const int d = shape.dim();
  Mat out(d, d);
  std::vector<int> ri(shape.legs()), ci(shape.legs());
  for (int r = 0; r < d; ++r) {
    decompose(r, shape.factors, ri);
    for (int c = 0; c < d; ++c) {
      decompose(c, shape.factors, ci);
      std::swap(ri[leg], ci[leg]);
      out(compose(shape.factors, ri), compose(shape.factors, ci)) = m(r, c);
      std::swap(ri[leg], ci[leg]);
    }
  }
  return out;
}

double schatten_norm_normalized(const Mat& m, double p) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("schatten_norm_normalized: matrix not square");
  if (!(p >= 1.0))
    throw std::invalid_argument("schatten_norm_normalized: p must be >= 1 or inf");
  const double n = static_cast<double>(m.rows());
  if (std::isinf(p)) return operator_norm(m);
  if (p == 2.0) return m.norm() / std::sqrt(n);
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc / n, 1.0 / p);
}

double operator_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

EigSystem hermitian_eigensystem(const Mat& m, double herm_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  require_finite(m, "hermitian_eigensystem");
  if (max_abs(m - m.adjoint()) > herm_tol)
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  const Eigen::Index n = m.rows();
  EigSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sys.values(i) = es.eigenvalues()(n - 1 - i);
    sys.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return sys;
}

Unitary haar_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  rng::Gaussian g(seed);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.complex_unit_variance();
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat& qrmat = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = qrmat(j, j);
    const double mod = std::abs(d);
    if (mod > 0.0) q.col(j) *= d / mod;
  }
  return Unitary(std::move(q));
}

}  // namespace chanfact
