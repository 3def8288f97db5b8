// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/convex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chanfact/werner.hpp"

namespace chanfact {

namespace {

const WernerHolevoPair& wh3() {
  static const WernerHolevoPair pair = werner_holevo(3);
  return pair;
}

}  // namespace

Superop t_lambda(double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("t_lambda: lambda out of [0, 1]");
  return Superop(3, lambda * wh3().w_plus.m + (1.0 - lambda) * wh3().w_minus.m);
}

TensorBasis2 basis_channels2() {
  const Superop& wp = wh3().w_plus;
  const Superop& wm = wh3().w_minus;
  TensorBasis2 b;
  b.wpp = tensor(wp, wp);
  b.wm = Superop(9, 0.5 * (tensor(wp, wm).m + tensor(wm, wp).m));
  b.wmm = tensor(wm, wm);
  return b;
}

TensorBasis3 basis_channels3() {
  const Superop& wp = wh3().w_plus;
  const Superop& wm = wh3().w_minus;
  const Superop pp = tensor(wp, wp);
  const Superop pm = tensor(wp, wm);
  const Superop mp = tensor(wm, wp);
  const Superop mm = tensor(wm, wm);
  TensorBasis3 b;
  b.wppp = tensor(pp, wp);
  b.wm_plus = Superop(27, (tensor(pp, wm).m + tensor(pm, wp).m + tensor(mp, wp).m) / 3.0);
  b.wm_minus = Superop(27, (tensor(pm, wm).m + tensor(mp, wm).m + tensor(mm, wp).m) / 3.0);
  b.wmmm = tensor(mm, wm);
  return b;
}

Unitary omega_unitary() {
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  const Complex omega_bar = std::conj(omega);
  Mat v = Mat::Zero(9, 9);
  auto put = [&v](int i1, int j1, int i2, int j2, Complex c) {
    // e_{i1 j1} (x) e_{i2 j2}, 1-based indices as displayed.
    v((i1 - 1) * 3 + (i2 - 1), (j1 - 1) * 3 + (j2 - 1)) = c;
  };
  // v1 + omega v2 + conj(omega) v3
  put(1, 2, 1, 2, 1.0);
  put(2, 3, 2, 3, 1.0);
  put(3, 1, 3, 1, 1.0);
  put(1, 2, 2, 1, omega);
  put(2, 3, 3, 2, omega);
  put(3, 1, 1, 3, omega);
  put(2, 1, 1, 2, omega_bar);
  put(3, 2, 2, 3, omega_bar);
  put(1, 3, 3, 1, omega_bar);
  return Unitary(std::move(v));
}

std::array<Superop, 3> q_channels() {
  const TensorBasis2 b = basis_channels2();
  std::array<Superop, 3> q = {
      b.wpp,
      Superop(9, (2.0 / 27.0) * b.wpp.m + (25.0 / 27.0) * b.wmm.m),
      Superop(9, (2.0 / 3.0) * b.wm.m + (1.0 / 3.0) * b.wmm.m),
  };
  return q;
}

Superop symmetrize3(const Superop& t) {
  if (t.dim != 27) throw std::invalid_argument("symmetrize3: expected dim 27");
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  Mat acc = Mat::Zero(729, 729);
  for (const auto& perm : perms) {
    // Index map of the leg permutation on C^27 and on vec indices.
    std::array<int, 27> p{};
    for (int idx = 0; idx < 27; ++idx) {
      const int d0 = idx / 9, d1 = (idx / 3) % 3, d2 = idx % 3;
      const std::array<int, 3> digits = {d0, d1, d2};
      p[idx] = digits[perm[0]] * 9 + digits[perm[1]] * 3 + digits[perm[2]];
    }
    for (int r = 0; r < 729; ++r) {
      const int pr = p[r / 27] * 27 + p[r % 27];
      for (int c = 0; c < 729; ++c)
        acc(pr, p[c / 27] * 27 + p[c % 27]) += t.m(r, c);
    }
  }
  return Superop(27, acc / 6.0);
}

std::array<Superop, 4> r_channels() {
  const TensorBasis3 b = basis_channels3();
  return {
      Superop(27, (b.wppp.m + 2.0 * b.wm_plus.m) / 3.0),
      Superop(27, (2.0 * b.wppp.m + 4.0 * b.wm_plus.m + 25.0 * b.wm_minus.m +
                   50.0 * b.wmmm.m) /
                      81.0),
      Superop(27, (2.0 * b.wm_plus.m + 5.0 * b.wm_minus.m + 2.0 * b.wmmm.m) / 9.0),
      Superop(27, (4.0 * b.wppp.m + 168.0 * b.wm_plus.m + 3.0 * b.wm_minus.m +
                   14.0 * b.wmmm.m) /
                      189.0),
  };
}

RChannelProvenance r_channels_provenance() {
  const auto r = r_channels();
  const auto q = q_channels();
  const Superop third_mix =
      Superop(3, wh3().w_plus.m / 3.0 + 2.0 * wh3().w_minus.m / 3.0);
  RChannelProvenance prov;
  for (int i = 0; i < 3; ++i)
    prov.sigma_residual[i] = max_abs(symmetrize3(tensor(q[i], third_mix)).m - r[i].m);
  const WernerHolevoPair wh27 = werner_holevo(27);
  prov.r4_residual =
      max_abs(r[3].m - (wh27.w_plus.m / 27.0 + 26.0 * wh27.w_minus.m / 27.0));
  return prov;
}

W27Residuals w27_decompositions() {
  const TensorBasis3 b = basis_channels3();
  const WernerHolevoPair wh27 = werner_holevo(27);
  const Superop s3 = depolarizing(3);
  const Superop t3 = transpose_superop(3);
  const Mat s27 = depolarizing(27).m;
  const Mat t27 = transpose_superop(27).m;

  W27Residuals res;
  res.w27_plus = max_abs(wh27.w_plus.m - (4.0 * b.wppp.m + 3.0 * b.wm_minus.m) / 7.0);
  res.w27_minus = max_abs(wh27.w_minus.m - (12.0 * b.wm_plus.m + b.wmmm.m) / 13.0);
  res.s27 = max_abs(s27 - (8.0 * b.wppp.m + 12.0 * b.wm_plus.m + 6.0 * b.wm_minus.m +
                           b.wmmm.m) /
                              27.0);
  res.t27 = max_abs(t27 - (8.0 * b.wppp.m - 12.0 * b.wm_plus.m + 6.0 * b.wm_minus.m -
                           b.wmmm.m));
  res.s27_cross = max_abs(s27 - tensor(tensor(s3, s3), s3).m);
  res.t27_cross = max_abs(t27 - tensor(tensor(t3, t3), t3).m);
  return res;
}

double MixtureCoefficients::sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double MixtureCoefficients::min_weight() const {
  double m = weights.empty() ? 0.0 : weights.front();
  for (double w : weights) m = std::min(m, w);
  return m;
}

namespace {

Eigen::Matrix3d b_system() {
  // Columns express Q_1, Q_2, Q_3 in the basis (W+W+, W_m, W-W-); the first
  // column is (1,0,0) since Q_1 = W+ (x) W+.
  Eigen::Matrix3d b;
  b << 1.0, 2.0 / 27.0, 0.0,
       0.0, 0.0, 2.0 / 3.0,
       0.0, 25.0 / 27.0, 1.0 / 3.0;
  return b;
}

Eigen::Matrix4d c_system() {
  Eigen::Matrix4d c;
  c << 1.0 / 3.0, 2.0 / 81.0, 0.0, 4.0 / 189.0,
       2.0 / 3.0, 4.0 / 81.0, 2.0 / 9.0, 168.0 / 189.0,
       0.0, 25.0 / 81.0, 5.0 / 9.0, 3.0 / 189.0,
       0.0, 50.0 / 81.0, 2.0 / 9.0, 14.0 / 189.0;
  return c;
}

Eigen::Vector3d moments2(double lambda) {
  return {lambda * lambda, 2.0 * lambda * (1.0 - lambda), (1.0 - lambda) * (1.0 - lambda)};
}

Eigen::Vector4d moments3(double lambda) {
  const double mu = 1.0 - lambda;
  return {lambda * lambda * lambda, 3.0 * lambda * lambda * mu, 3.0 * lambda * mu * mu,
          mu * mu * mu};
}

void require_lambda(double lambda, const char* what) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument(std::string(what) + ": lambda out of [0, 1]");
}

}  // namespace

MixtureCoefficients p_coefficients(double lambda) {
  require_lambda(lambda, "p_coefficients");
  const Eigen::Vector3d p = b_system().partialPivLu().solve(moments2(lambda));
  return MixtureCoefficients{{"Q1", "Q2", "Q3"}, {p(0), p(1), p(2)}};
}

MixtureCoefficients q_coefficients(double lambda) {
  require_lambda(lambda, "q_coefficients");
  const Eigen::Vector4d q = c_system().partialPivLu().solve(moments3(lambda));
  return MixtureCoefficients{{"R1", "R2", "R3", "R4"}, {q(0), q(1), q(2), q(3)}};
}

std::array<std::array<double, 3>, 3> p_polynomials_closed_form() {
  return {{{-2.0 / 25.0, 6.0 / 25.0, 21.0 / 25.0},
           {27.0 / 25.0, -81.0 / 25.0, 54.0 / 25.0},
           {0.0, 3.0, -3.0}}};
}

std::array<std::array<double, 3>, 3> p_polynomials_solved() {
  // m2 components as polynomials in lambda (ascending powers).
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.0, 1.0,
        0.0, 2.0, -2.0,
        1.0, -2.0, 1.0;
  const Eigen::Matrix3d coef = b_system().partialPivLu().solve(m2);
  std::array<std::array<double, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = coef(i, j);
  return out;
}

std::array<std::array<double, 4>, 4> q_polynomials_printed() {
  return {{{-149.0 / 900.0, 77.0 / 100.0, -123.0 / 100.0, 15.0 / 4.0},
           {397.0 / 200.0, -1629.0 / 200.0, 1971.0 / 200.0, -27.0 / 8.0},
           {-10.0 / 9.0, 10.0, -33.0 / 20.0, 15.0 / 2.0},
           {7.0 / 24.0, -21.0 / 8.0, 63.0 / 8.0, -63.0 / 8.0}}};
}

std::array<std::array<double, 4>, 4> q_polynomials_corrected() {
  auto q = q_polynomials_printed();
  q[2][2] = -33.0 / 2.0;
  return q;
}

std::array<std::array<double, 4>, 4> q_polynomials_solved() {
  Eigen::Matrix4d m3;
  m3 << 0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 3.0, -3.0,
        0.0, 3.0, -6.0, 3.0,
        1.0, -3.0, 3.0, -1.0;
  const Eigen::Matrix4d coef = c_system().partialPivLu().solve(m3);
  std::array<std::array<double, 4>, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = coef(i, j);
  return out;
}

double eval_poly(const std::vector<double>& ascending, double x) {
  double acc = 0.0;
  for (std::size_t i = ascending.size(); i-- > 0;) acc = acc * x + ascending[i];
  return acc;
}

std::vector<double> real_roots(const std::vector<double>& ascending, double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("real_roots: empty interval");
  const int cells = 4096;
  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = eval_poly(ascending, lo);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / cells;
    const double f = eval_poly(ascending, x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (prev_f * f < 0.0) {
      double a = prev_x, b = x, fa = prev_f;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = eval_poly(ascending, mid);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

namespace {

const std::array<Superop, 3>& cached_q_channels() {
  static const std::array<Superop, 3> q = q_channels();
  return q;
}

const std::array<Superop, 4>& cached_r_channels() {
  static const std::array<Superop, 4> r = r_channels();
  return r;
}

}  // namespace

MembershipCertificate certify_tensor_membership(double lambda, int power) {
  require_lambda(lambda, "certify_tensor_membership");
  if (power != 2 && power != 3)
    throw std::invalid_argument("certify_tensor_membership: power must be 2 or 3");

  MembershipCertificate cert;
  cert.lambda = lambda;
  cert.power = power;

  if (lambda >= 1.0 / 3.0) {
    // Single-factor membership holds, so every tensor power is covered.
    cert.coefficients = MixtureCoefficients{{"W3+", "W3-"}, {lambda, 1.0 - lambda}};
    cert.min_weight = cert.coefficients.min_weight();
    cert.reconstruction_residual = 0.0;
    cert.verdict = true;
    return cert;
  }

  cert.coefficients = power == 2 ? p_coefficients(lambda) : q_coefficients(lambda);
  cert.min_weight = cert.coefficients.min_weight();

  const Superop tl = t_lambda(lambda);
  if (power == 2) {
    const auto& q = cached_q_channels();
    Mat mix = Mat::Zero(81, 81);
    for (int i = 0; i < 3; ++i) mix += cert.coefficients.weights[i] * q[i].m;
    cert.reconstruction_residual = normalized_two_norm(mix - tensor(tl, tl).m);
  } else {
    const auto& r = cached_r_channels();
    Mat mix = Mat::Zero(729, 729);
    for (int i = 0; i < 4; ++i) mix += cert.coefficients.weights[i] * r[i].m;
    cert.reconstruction_residual =
        normalized_two_norm(mix - tensor(tensor(tl, tl), tl).m);
  }

  cert.verdict = cert.min_weight >= -1e-10 && cert.reconstruction_residual <= 1e-9;
  return cert;
}

PathPoint mw_path(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("mw_path: t out of [0, 1]");
  PathPoint p;
  p.t = t;
  p.x = (-(8.0 / 3.0) * (t + 1.0) * (t + 1.0) + 3.0) / 9.0;
  p.y = (16.0 * t * t - 7.0) / 9.0;
  return p;
}

double mw_lambda0() { return (std::sqrt(2.0) - 1.0) * (1.0 - 1.0 / std::sqrt(3.0)); }

std::vector<CurveRow> curve_export(const std::vector<double>& grid) {
  for (double lambda : grid) require_lambda(lambda, "curve_export");
  std::vector<CurveRow> rows(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CurveRow& row = rows[i];
    row.lambda = grid[i];
    const MixtureCoefficients p = p_coefficients(grid[i]);
    const MixtureCoefficients q = q_coefficients(grid[i]);
    for (int j = 0; j < 3; ++j) row.p[j] = p.weights[j];
    for (int j = 0; j < 4; ++j) row.q[j] = q.weights[j];
    row.member2 = certify_tensor_membership(grid[i], 2).verdict;
    row.member3 = certify_tensor_membership(grid[i], 3).verdict;
  }
  return rows;
}

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string curves_csv(const std::vector<CurveRow>& rows) {
  std::string out = "lambda,p1,p2,p3,q1,q2,q3,q4,member2,member3\n";
  for (const CurveRow& r : rows) {
    out += fmt12(r.lambda);
    for (double v : r.p) out += "," + fmt12(v);
    for (double v : r.q) out += "," + fmt12(v);
    out += r.member2 ? ",1" : ",0";
    out += r.member3 ? ",1\n" : ",0\n";
  }
  return out;
}

std::string path_csv(const std::vector<double>& grid) {
  std::string out = "t,x,y\n";
  for (double t : grid) {
    const PathPoint p = mw_path(t);
    out += fmt12(p.t) + "," + fmt12(p.x) + "," + fmt12(p.y) + "\n";
  }
  return out;
}

}  // namespace chanfact
