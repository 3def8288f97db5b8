// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/werner.hpp"

#include <cmath>
#include <stdexcept>

#include "chanfact/twirl.hpp"

namespace chanfact {

SymmetryData build_symmetry(int n) {
  if (n < 2) throw std::invalid_argument("build_symmetry: n must be >= 2");
  const int d = n * n;
  SymmetryData sym;
  sym.n = n;
  sym.s = Mat::Zero(d, d);
  sym.q = Mat::Zero(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sym.s(i * n + j, j * n + i) = 1.0;
      sym.q(i * n + i, j * n + j) = 1.0 / static_cast<double>(n);
    }
  sym.p_plus = 0.5 * (Mat::Identity(d, d) + sym.s);
  sym.p_minus = 0.5 * (Mat::Identity(d, d) - sym.s);
  return sym;
}

WernerHolevoPair werner_holevo(int n) {
  if (n < 2) throw std::invalid_argument("werner_holevo: n must be >= 2");
  const int d = n * n;
  // x -> Tr(x) 1_n
  Mat tr_map = Mat::Zero(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr_map(i * n + i, j * n + j) = 1.0;
  const Mat t = transpose_superop(n).m;
  WernerHolevoPair pair;
  pair.n = n;
  pair.w_plus = Superop(n, (tr_map + t) / static_cast<double>(n + 1));
  pair.w_minus = Superop(n, (tr_map - t) / static_cast<double>(n - 1));
  return pair;
}

WernerHolevoPair werner_holevo_from_kraus(int n) {
  if (n < 2) throw std::invalid_argument("werner_holevo_from_kraus: n must be >= 2");
  std::vector<Mat> plus, minus;
  const double cp = 1.0 / std::sqrt(2.0 * n + 2.0);
  const double cm = 1.0 / std::sqrt(2.0 * n - 2.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      plus.push_back(cp * sym_unit(n, i, j));
      minus.push_back(cm * antisym_unit(n, i, j));
    }
  WernerHolevoPair pair;
  pair.n = n;
  pair.w_plus = superop_from_kraus(n, plus);
  pair.w_minus = superop_from_kraus(n, minus);
  return pair;
}

double wh_distance_witness(int n) {
  const WernerHolevoPair wh = werner_holevo(n);
  const SymmetryData sym = build_symmetry(n);
  const Superop diff = wh.w_plus - wh.w_minus;
  const Mat image = tensor(diff, identity_superop(n)).apply(sym.s);
  const double value = operator_norm(image);
  if (std::abs(value - 2.0) > 1e-10)
    throw std::runtime_error("wh_distance_witness: witness norm differs from 2");
  return value;
}

std::pair<Unitary, double> min_symmetric_unitary(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("min_symmetric_unitary: n must be odd");
  Mat v = Mat::Zero(n, n);
  v(0, 0) = 1.0;
  for (int i = 1; i + 1 < n; i += 2) {
    v(i, i + 1) = 1.0;
    v(i + 1, i) = -1.0;
  }
  Mat sym = 0.5 * (v + v.transpose());
  const double value = normalized_two_norm(sym);
  return {Unitary(std::move(v)), value * value};
}

WMinusDistanceCertificate dist_mixed_unitary_wminus(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("dist_mixed_unitary_wminus: n must be odd and >= 3");
  WMinusDistanceCertificate cert;
  cert.n = n;
  cert.distance = 2.0 / n;
  const auto [v, min_value] = min_symmetric_unitary(n);
  const TwirlResult twirled = twirl_closed_form(ad(v));
  cert.witness = twirled.map;
  cert.witness_c_plus = twirled.coeffs.c_plus;
  cert.witness_c_minus = twirled.coeffs.c_minus;
  cert.witness_distance = cert.witness_c_plus * wh_distance_witness(n);
  cert.min_lambda = min_value;
  cert.lower_bound = 2.0 * cert.min_lambda;
  return cert;
}

namespace {

void require_unit_interval(Rational lambda) {
  if (lambda.den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
  if (lambda.num < 0 || lambda.num > lambda.den)
    throw std::invalid_argument("Rational: lambda must lie in [0, 1]");
}

}  // namespace

bool mixture_membership_mixed_unitary(Rational lambda, int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("mixture_membership_mixed_unitary: n must be odd");
  require_unit_interval(lambda);
  return lambda.num * n >= lambda.den;
}

bool mixture_membership_mixed_unitary(double lambda, int n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("mixture_membership_mixed_unitary: n must be odd");
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("mixture_membership_mixed_unitary: lambda out of [0, 1]");
  return lambda >= 1.0 / n;
}

bool mixture_membership_factorizable(Rational lambda) {
  require_unit_interval(lambda);
  return 27 * lambda.num >= 2 * lambda.den;
}

bool mixture_membership_factorizable(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("mixture_membership_factorizable: lambda out of [0, 1]");
  return lambda >= 2.0 / 27.0;
}

}  // namespace chanfact
