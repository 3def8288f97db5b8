// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/factorize.hpp"

#include <cmath>
#include <stdexcept>

#include "chanfact/mc.hpp"
#include "chanfact/rng.hpp"
#include "chanfact/werner.hpp"

namespace chanfact {

ExactFactorization::ExactFactorization(int n_, int k_, Unitary u_)
    : n(n_), k(k_), u(std::move(u_)) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("ExactFactorization: dimensions must be >= 1");
  if (u.dim() != n * k)
    throw std::invalid_argument("ExactFactorization: witness must live in M_n (x) M_k");
}

Superop channel_of(const ExactFactorization& f) {
  const int n = f.n, k = f.k, nk = n * k;
  const TensorShape shape{n, k};
  Mat m(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  const Mat ustar = f.u.m.adjoint();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat arg = Mat::Zero(nk, nk);
      for (int a = 0; a < k; ++a) arg(i * k + a, j * k + a) = 1.0;  // e_ij (x) 1_k
      const Mat y = partial_trace_second(f.u.m * arg * ustar, shape, true);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r * n + c, i * n + j) = y(r, c);
    }
  return Superop(n, std::move(m));
}

ExactFactorization direct_sum_mix(const ExactFactorization& f1,
                                  const ExactFactorization& f2) {
  if (f1.n != f2.n) throw std::invalid_argument("direct_sum_mix: n mismatch");
  const int n = f1.n, k = f1.k, l = f2.k, kl = k + l;
  Mat u = Mat::Zero(static_cast<Eigen::Index>(n) * kl, static_cast<Eigen::Index>(n) * kl);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          u(i * kl + a, j * kl + b) = f1.u.m(i * k + a, j * k + b);
      for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
          u(i * kl + k + a, j * kl + k + b) = f2.u.m(i * l + a, j * l + b);
    }
  return ExactFactorization(n, kl, Unitary(std::move(u)));
}

std::array<Mat, 5> clifford_generators() {
  const Complex I(0.0, 1.0);
  Mat j(2, 2), k(2, 2), l(2, 2);
  j << I, 0.0, 0.0, -I;
  k << 0.0, 1.0, -1.0, 0.0;
  l << 0.0, I, I, 0.0;
  const Mat id2 = Mat::Identity(2, 2);
  auto off_block = [](const Mat& b) {
    Mat v = Mat::Zero(4, 4);
    v.block(0, 2, 2, 2) = -b;
    v.block(2, 0, 2, 2) = b;
    return v;
  };
  std::array<Mat, 5> v;
  v[0] = Mat::Zero(4, 4);
  v[0].block(0, 0, 2, 2) = id2;
  v[0].block(2, 2, 2, 2) = -id2;
  v[1] = Mat::Zero(4, 4);
  v[1].block(0, 2, 2, 2) = id2;
  v[1].block(2, 0, 2, 2) = id2;
  v[2] = off_block(j);
  v[3] = off_block(k);
  v[4] = off_block(l);
  return v;
}

Unitary sigma5() {
  const Complex alpha(-0.5, std::sqrt(3.0) / 2.0);
  const Complex beta = std::conj(alpha);
  const std::array<Complex, 5> row = {0.0, alpha, beta, beta, alpha};
  Mat sigma(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) sigma(i, j) = 0.5 * row[(j - i + 5) % 5];
  return Unitary(std::move(sigma));
}

ExactFactorization w5_minus_witness() {
  const auto v = clifford_generators();
  Mat d = Mat::Zero(20, 20);
  for (int i = 0; i < 5; ++i) d.block(4 * i, 4 * i, 4, 4) = v[i];
  const Mat u = d * kron(sigma5().m, Mat::Identity(4, 4)) * d;
  return ExactFactorization(5, 4, Unitary(u));
}

ExactFactorization s_minus_2q_witness() {
  const SymmetryData sym = build_symmetry(3);
  return ExactFactorization(3, 3, Unitary(sym.s - 2.0 * sym.q));
}

namespace {

void enumerate_matchings(std::vector<int>& free_items,
                         std::vector<std::pair<int, int>>& current,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free_items.empty()) {
    out.push_back(current);
    return;
  }
  const int first = free_items.front();
  for (std::size_t idx = 1; idx < free_items.size(); ++idx) {
    const int partner = free_items[idx];
    std::vector<int> rest;
    for (std::size_t t = 1; t < free_items.size(); ++t)
      if (t != idx) rest.push_back(free_items[t]);
    current.emplace_back(first, partner);
    enumerate_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::pair<double, Unitary>> wminus_even_mixed_unitary(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("wminus_even_mixed_unitary: n must be even and >= 2");
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> current;
  enumerate_matchings(items, current, matchings);

  const int pairs = n / 2;
  const long long n_signs = 1LL << pairs;
  const double weight = 1.0 / (static_cast<double>(matchings.size()) * static_cast<double>(n_signs));
  std::vector<std::pair<double, Unitary>> out;
  out.reserve(matchings.size() * static_cast<std::size_t>(n_signs));
  for (const auto& matching : matchings)
    for (long long signs = 0; signs < n_signs; ++signs) {
      Mat u = Mat::Zero(n, n);
      for (int p = 0; p < pairs; ++p) {
        const double eps = (signs >> p) & 1 ? -1.0 : 1.0;
        const auto [i, j] = matching[p];
        u(i, j) = eps;
        u(j, i) = -eps;
      }
      out.emplace_back(weight, Unitary(std::move(u)));
    }
  return out;
}

Degree4Certificate wn_minus_degree4_certificate(int n) {
  if (n < 7 || n % 2 == 0)
    throw std::invalid_argument("wn_minus_degree4_certificate: n must be odd and >= 7");
  const int m = n - 5;  // even tail dimension
  const ExactFactorization w5 = w5_minus_witness();
  const auto tail = wminus_even_mixed_unitary(m);

  Degree4Certificate cert;
  // R(x) = diag(W_5^-(x_11), W_m^-(x_22)) as a superoperator on M_n.
  const WernerHolevoPair wh5 = werner_holevo(5);
  const WernerHolevoPair whm = werner_holevo(m);
  Mat r = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          r(a * n + b, i * n + j) = wh5.w_minus.m(a * 5 + b, i * 5 + j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          r((a + 5) * n + (b + 5), (i + 5) * n + (j + 5)) = whm.w_minus.m(a * m + b, i * m + j);
  cert.r = Superop(n, std::move(r));

  const int nk = n * 4;
  auto embed = [&](const Unitary& ui, double side) {
    Mat u = Mat::Zero(nk, nk);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int s = 0; s < 4; ++s)
          for (int t = 0; t < 4; ++t)
            u(a * 4 + s, b * 4 + t) = w5.u.m(a * 4 + s, b * 4 + t);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int s = 0; s < 4; ++s)
          u((a + 5) * 4 + s, (b + 5) * 4 + s) = side * ui.m(a, b);
    return ExactFactorization(n, 4, Unitary(std::move(u)));
  };

  for (const auto& [c, ui] : tail) {
    cert.plus.terms.emplace_back(c, embed(ui, 1.0));
    cert.minus.terms.emplace_back(c, embed(ui, -1.0));
  }

  Mat average = Mat::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  double c_plus_max = 0.0;
  const TensorShape shape{n, 4};
  for (const auto& side : {&cert.plus, &cert.minus})
    for (const auto& [c, f] : side->terms) {
      average += 0.5 * c * channel_of(f).m;
      c_plus_max = std::max(c_plus_max, generalized_twirl_coeffs(f.u.m, shape).c_plus);
    }
  cert.split_residual = max_abs(cert.r.m - average);
  cert.witness_max_c_plus = c_plus_max;
  cert.coeffs = twirl_closed_form(cert.r).coeffs;
  return cert;
}

Mat antisym_defect(const Mat& u, int k) {
  const TensorShape shape{3, k};
  return 0.5 * (u - partial_transpose(u, shape, 0));
}

InequalityReport antisym_defect_slacks(const Mat& u, int k) {
  const Mat b = antisym_defect(u, k);
  const double n2 = schatten_norm_normalized(b, 2.0);
  const double n1 = schatten_norm_normalized(b, 1.0);
  const double n4 = schatten_norm_normalized(b, 4.0);
  InequalityReport rep;
  rep.samples = 1;
  rep.min_slack_op = 5.0 / 3.0 - operator_norm(b);
  rep.min_slack_12 = n1 - n2 * n2;
  rep.min_slack_42 = std::pow(n4, 4) - 1.5 * std::pow(n2, 4);
  rep.min_slack_2527 = 25.0 / 27.0 - n2 * n2;
  return rep;
}

InequalityReport antisym_defect_stats(int k, int samples, std::uint64_t seed,
                                      bool parallel) {
  if (k < 1 || samples < 1)
    throw std::invalid_argument("antisym_defect_stats: bad arguments");
  InequalityReport rep;
  rep.samples = samples;
  double s_op = 1e300, s_12 = 1e300, s_42 = 1e300, s_2527 = 1e300;
  // min is exact under reordering, so a plain reduction stays deterministic.
#pragma omp parallel for reduction(min : s_op, s_12, s_42, s_2527) if (parallel)
  for (int i = 0; i < samples; ++i) {
    const Unitary u = haar_unitary(3 * k, rng::derive_seed(seed, i));
    const InequalityReport one = antisym_defect_slacks(u.m, k);
    s_op = std::min(s_op, one.min_slack_op);
    s_12 = std::min(s_12, one.min_slack_12);
    s_42 = std::min(s_42, one.min_slack_42);
    s_2527 = std::min(s_2527, one.min_slack_2527);
  }
  rep.min_slack_op = s_op;
  rep.min_slack_12 = s_12;
  rep.min_slack_42 = s_42;
  rep.min_slack_2527 = s_2527;
  return rep;
}

TransposeBoundReport id_minus_transpose_bound() {
  const WernerHolevoPair wh = werner_holevo(3);
  const Superop id3 = identity_superop(3);
  const Superop t3 = transpose_superop(3);
  const Superop gap = wh.w_plus - Superop(3, id3.m / 6.0);

  TransposeBoundReport rep;
  rep.psd_min_eigenvalue =
      hermitian_eigensystem(jamiolkowski(gap).m).values.minCoeff();
  const Superop lhs = id3 - t3;
  const Superop rhs = (Superop(3, (2.0 / 3.0) * id3.m) + wh.w_minus) - Superop(3, 2.0 * gap.m);
  rep.identity_residual = max_abs(lhs.m - rhs.m);
  rep.bound = cb_norm_cp(Superop(3, (2.0 / 3.0) * id3.m + wh.w_minus.m)) + 2.0 * cb_norm_cp(gap);
  return rep;
}

Mat conj_ancilla_average(const Mat& z, int n, int k, int samples,
                         std::uint64_t seed, bool parallel) {
  const int nk = n * k;
  if (z.rows() != nk || z.cols() != nk)
    throw std::invalid_argument("conj_ancilla_average: shape mismatch");
  return mc::mean_of_samples(
      samples, seed, nk, nk,
      [&z, n, k](std::uint64_t s) {
        const Unitary w = haar_unitary(k, s);
        const Mat lifted = kron(Mat::Identity(n, n), w.m);
        return Mat(lifted.adjoint() * z * lifted);
      },
      parallel);
}

HaarIdentityResiduals haar_average_identity_check(int k, int samples,
                                                  std::uint64_t seed,
                                                  bool parallel) {
  if (k < 1 || samples < 1)
    throw std::invalid_argument("haar_average_identity_check: bad arguments");
  const int n = 3;
  const int nk = n * k;

  // Fixed test matrix with unit Frobenius norm, drawn from a sub-stream.
  rng::Gaussian g(rng::derive_seed(seed, 0x5eedULL));
  Mat z(nk, nk);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) z(i, j) = g.complex_unit_variance();
  z /= frobenius(z);

  HaarIdentityResiduals res;
  const Mat mean = conj_ancilla_average(z, n, k, samples, seed, parallel);
  const Mat target =
      kron(partial_trace_second(z, TensorShape{n, k}, true), Mat::Identity(k, k));
  res.conjugation_average = frobenius(mean - target);

  const Mat mean_uu = mc::mean_of_samples(
      samples, seed ^ 0x9e3779b97f4a7c15ULL, n * n, n * n,
      [n](std::uint64_t s) {
        const Unitary u = haar_unitary(n, s);
        return kron(u.m, u.m.conjugate());
      },
      parallel);
  res.twirl_mean = frobenius(mean_uu - build_symmetry(n).q);
  return res;
}

}  // namespace chanfact
