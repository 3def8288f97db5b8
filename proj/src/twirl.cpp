// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/twirl.hpp"

#include <stdexcept>

#include "chanfact/mc.hpp"
#include "chanfact/werner.hpp"

namespace chanfact {

Mat sym_part(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("sym_part: matrix not square");
  return 0.5 * (a + a.transpose());
}

Mat antisym_part(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("antisym_part: matrix not square");
  return 0.5 * (a - a.transpose());
}

Mat conditional_expectation(const Mat& x, int n) {
  const int d = n * n;
  if (x.rows() != d || x.cols() != d)
    throw std::invalid_argument("conditional_expectation: expected an n^2 x n^2 matrix");
  const SymmetryData sym = build_symmetry(n);
  const Complex tp = (x * sym.p_plus).trace();
  const Complex tm = (x * sym.p_minus).trace();
  const double cp = 2.0 / (static_cast<double>(n) * (n + 1));
  const double cm = 2.0 / (static_cast<double>(n) * (n - 1));
  return cp * tp * sym.p_plus + cm * tm * sym.p_minus;
}

TwirlResult twirl_closed_form(const Superop& t) {
  const int n = t.dim;
  const SymmetryData sym = build_symmetry(n);
  const Choi choi = jamiolkowski(t);
  const Complex cp = (choi.m * sym.p_plus).trace();
  const Complex cm = (choi.m * sym.p_minus).trace();
  const WernerHolevoPair wh = werner_holevo(n);
  TwirlResult out;
  out.coeffs = TwirlCoefficients{cp.real(), cm.real()};
  out.map = Superop(n, cp.real() * wh.w_plus.m + cm.real() * wh.w_minus.m);
  return out;
}

TwirlCoefficients twirl_coeffs_kraus(const std::vector<Mat>& kraus) {
  TwirlCoefficients c;
  for (const Mat& a : kraus) {
    const double sp = normalized_two_norm(a + a.transpose());
    const double sm = normalized_two_norm(a - a.transpose());
    c.c_plus += 0.25 * sp * sp;
    c.c_minus += 0.25 * sm * sm;
  }
  return c;
}

Superop rho_u(const Unitary& u, const Superop& t) {
  if (u.dim() != t.dim) throw std::invalid_argument("rho_u: dimension mismatch");
  // ad(u) T ad(u^t); the matrix of ad(w) is kron(w, conj(w)).
  const Mat left = kron(u.m, u.m.conjugate());
  const Mat right = kron(u.m.transpose(), u.m.adjoint());
  return Superop(t.dim, left * (t.m * right));
}

Superop twirl_monte_carlo(const Superop& t, int samples, std::uint64_t seed,
                          bool parallel) {
  if (samples < 1) throw std::invalid_argument("twirl_monte_carlo: samples < 1");
  const int n = t.dim;
  const int d = n * n;
  const Mat estimate = mc::mean_of_samples(
      samples, seed, d, d,
      [&t, n](std::uint64_t s) { return rho_u(haar_unitary(n, s), t).m; }, parallel);
  return Superop(n, estimate);
}

double intertwining_residual(const Superop& t) {
  const Mat lhs = jamiolkowski(twirl_closed_form(t).map).m;
  const Mat rhs = conditional_expectation(jamiolkowski(t).m, t.dim);
  return normalized_two_norm(lhs - rhs);
}

DoubleTwirlCoefficients double_twirl(const Unitary& u) {
  if (u.dim() != 9) throw std::invalid_argument("double_twirl: expected a unitary in U(9)");
  const TensorShape shape{3, 3};
  const Mat t1 = partial_transpose(u.m, shape, 0);
  const Mat t2 = partial_transpose(u.m, shape, 1);
  const Mat t12 = partial_transpose(t1, shape, 1);
  const Mat ss = 0.25 * (u.m + t1 + t2 + t12);
  const Mat sa = 0.25 * (u.m + t1 - t2 - t12);
  const Mat as = 0.25 * (u.m - t1 + t2 - t12);
  const Mat aa = 0.25 * (u.m - t1 - t2 + t12);
  const auto sq = [](const Mat& x) {
    const double v = normalized_two_norm(x);
    return v * v;
  };
  return DoubleTwirlCoefficients{sq(ss), sq(sa), sq(as), sq(aa)};
}

TwirlCoefficients generalized_twirl_coeffs(const Mat& a, const TensorShape& shape) {
  if (shape.legs() != 2)
    throw std::invalid_argument("generalized_twirl_coeffs: expected two legs");
  shape.require_matches(a, "generalized_twirl_coeffs");
  const Mat at = partial_transpose(a, shape, 0);
  const double sp = normalized_two_norm(a + at);
  const double sm = normalized_two_norm(a - at);
  return TwirlCoefficients{0.25 * sp * sp, 0.25 * sm * sm};
}

}  // namespace chanfact
