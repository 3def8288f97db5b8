// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include "chanfact/checks.hpp"
#include "chanfact/convex.hpp"
#include "chanfact/factorize.hpp"
#include "chanfact/twirl.hpp"
#include "chanfact/werner.hpp"

using namespace chanfact;

TEST_CASE("basis channels") {
  const TensorBasis2 b2 = basis_channels2();
  CHECK(validate_ucpt(b2.wpp).is_ucpt);
  CHECK(validate_ucpt(b2.wm).is_ucpt);
  CHECK(validate_ucpt(b2.wmm).is_ucpt);

  // W_m is swap symmetric.
  const SymmetryData sym = build_symmetry(3);
  const Mat k = kron(sym.s, sym.s.conjugate());
  CHECK(max_abs(k * b2.wm.m * k.adjoint() - b2.wm.m) <= 1e-14);

  const TensorBasis3 b3 = basis_channels3();
  CHECK(validate_ucpt(b3.wppp).is_ucpt);
  CHECK(validate_ucpt(b3.wm_plus).is_ucpt);
  CHECK(validate_ucpt(b3.wm_minus).is_ucpt);
  CHECK(validate_ucpt(b3.wmmm).is_ucpt);

  // W_m^+ is the average of exactly three product terms.
  const WernerHolevoPair wh = werner_holevo(3);
  const Mat expect = (tensor(tensor(wh.w_plus, wh.w_plus), wh.w_minus).m +
                      tensor(tensor(wh.w_plus, wh.w_minus), wh.w_plus).m +
                      tensor(tensor(wh.w_minus, wh.w_plus), wh.w_plus).m) /
                     3.0;
  CHECK(max_abs(b3.wm_plus.m - expect) == 0.0);
}

TEST_CASE("omega unitary") {
  const Unitary v = omega_unitary();
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  // displayed entries, 1-based (1,5) = 1 and (2,4) = omega
  CHECK(v.m(0, 4) == Complex(1.0, 0.0));
  CHECK(v.m(1, 3) == omega);
  CHECK(v.m(8, 0) == Complex(1.0, 0.0));

  // (S (x) S)(v) = (1 + omega + conj(omega)) * (...) = 0
  const TensorShape shape{3, 3};
  const Mat t1 = partial_transpose(v.m, shape, 0);
  const Mat t2 = partial_transpose(v.m, shape, 1);
  const Mat t12 = partial_transpose(t1, shape, 1);
  CHECK(max_abs(0.25 * (v.m + t1 + t2 + t12)) <= 1e-15);

  const DoubleTwirlCoefficients d = double_twirl(v);
  CHECK(d.c_pp == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(d.c_pm == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(d.c_mp == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(d.c_mm == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("q channels carry their double-twirl provenance") {
  const auto q = q_channels();
  const TensorBasis2 b = basis_channels2();

  const DoubleTwirlCoefficients d2 = double_twirl(s_minus_2q_witness().u);
  CHECK(max_abs(q[1].m - d2.c_pp * b.wpp.m - d2.c_mm * b.wmm.m) <= 1e-14);

  const DoubleTwirlCoefficients d3 = double_twirl(omega_unitary());
  CHECK(max_abs(q[2].m - (d3.c_pm + d3.c_mp) * b.wm.m - d3.c_mm * b.wmm.m) <= 1e-14);

  // Q_1 is the double twirl of the identity.
  CHECK(max_abs(q[0].m - b.wpp.m) == 0.0);
}

TEST_CASE("threefold symmetrizer") {
  const WernerHolevoPair wh = werner_holevo(3);
  const Superop ppm = tensor(tensor(wh.w_plus, wh.w_plus), wh.w_minus);
  const TensorBasis3 b3 = basis_channels3();
  CHECK(max_abs(symmetrize3(ppm).m - b3.wm_plus.m) <= 1e-15);

  // idempotent on a random superoperator
  const Superop t(27, random_matrix(729, 61));
  const Superop once = symmetrize3(t);
  CHECK(max_abs(symmetrize3(once).m - once.m) <= 1e-13);

  // preserves channels
  CHECK(validate_ucpt(symmetrize3(random_ucpt(27, 62, 2))).is_ucpt);
}

TEST_CASE("r channels and their provenance") {
  const auto r = r_channels();
  const TensorBasis3 b = basis_channels3();
  CHECK(max_abs(r[0].m - (b.wppp.m + 2.0 * b.wm_plus.m) / 3.0) == 0.0);
  const Mat r4_expect = (4.0 * b.wppp.m + 168.0 * b.wm_plus.m + 3.0 * b.wm_minus.m +
                         14.0 * b.wmmm.m) /
                        189.0;
  CHECK(max_abs(r[3].m - r4_expect) == 0.0);

  const RChannelProvenance prov = r_channels_provenance();
  for (double s : prov.sigma_residual) CHECK(s <= 1e-12);
  CHECK(prov.r4_residual <= 1e-12);
}

TEST_CASE("w27 decompositions") {
  const W27Residuals res = w27_decompositions();
  CHECK(res.w27_plus <= 1e-12);
  CHECK(res.w27_minus <= 1e-12);
  CHECK(res.s27 <= 1e-12);
  CHECK(res.t27 <= 1e-12);
  CHECK(res.s27_cross <= 1e-12);
  CHECK(res.t27_cross <= 1e-12);
}

TEST_CASE("p coefficients") {
  const MixtureCoefficients p1 = p_coefficients(1.0);
  CHECK(p1.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(p1.weights[1]) <= 1e-12);
  CHECK(std::abs(p1.weights[2]) <= 1e-12);

  // lambda = 1/4 from the solve: (13/400, 81/200, 9/16)
  const MixtureCoefficients pq = p_coefficients(0.25);
  CHECK(pq.weights[0] == doctest::Approx(13.0 / 400.0).epsilon(1e-12));
  CHECK(pq.weights[1] == doctest::Approx(81.0 / 200.0).epsilon(1e-12));
  CHECK(pq.weights[2] == doctest::Approx(9.0 / 16.0).epsilon(1e-12));

  // solved polynomials match closed forms; the closed forms invert B.
  const auto solved = p_polynomials_solved();
  const auto closed = p_polynomials_closed_form();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(solved[i][j] == doctest::Approx(closed[i][j]).epsilon(1e-12));

  for (double lambda : {0.0, 0.3, 0.77}) {
    const MixtureCoefficients p = p_coefficients(lambda);
    // B p reproduces the moment vector
    const double m0 = p.weights[0] + (2.0 / 27.0) * p.weights[1];
    const double m1 = (2.0 / 3.0) * p.weights[2];
    const double m2 = (25.0 / 27.0) * p.weights[1] + (1.0 / 3.0) * p.weights[2];
    CHECK(m0 == doctest::Approx(lambda * lambda).epsilon(1e-12));
    CHECK(m1 == doctest::Approx(2.0 * lambda * (1.0 - lambda)).epsilon(1e-12));
    CHECK(m2 == doctest::Approx((1.0 - lambda) * (1.0 - lambda)).epsilon(1e-12));
  }
}

TEST_CASE("q coefficients") {
  // hand-solved value at lambda = 1/3
  const MixtureCoefficients q = q_coefficients(1.0 / 3.0);
  CHECK(q.weights[0] == doctest::Approx(7.0 / 75.0).epsilon(1e-12));
  CHECK(q.weights[1] == doctest::Approx(6.0 / 25.0).epsilon(1e-12));
  CHECK(q.weights[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(q.weights[3]) <= 1e-12);

  // q4 agrees with its factored closed form everywhere
  for (double lambda : {0.0, 0.2, 0.5, 0.9}) {
    const double expect = -(7.0 / 24.0) * std::pow(3.0 * lambda - 1.0, 3);
    CHECK(q_coefficients(lambda).weights[3] == doctest::Approx(expect).epsilon(1e-11));
  }

  const auto solved = q_polynomials_solved();
  const auto printed = q_polynomials_printed();
  const auto corrected = q_polynomials_corrected();
  for (int i : {0, 1, 3})
    for (int j = 0; j < 4; ++j)
      CHECK(solved[i][j] == doctest::Approx(printed[i][j]).epsilon(1e-10));
  for (int j = 0; j < 4; ++j)
    CHECK(solved[2][j] == doctest::Approx(corrected[2][j]).epsilon(1e-10));
  // the printed q3 lambda^2 coefficient disagrees by 33/2 - 33/20
  CHECK(std::abs(solved[2][2] - printed[2][2]) == doctest::Approx(33.0 / 2.0 - 33.0 / 20.0).epsilon(1e-9));
}

TEST_CASE("polynomial roots") {
  const auto closed = p_polynomials_closed_form();
  const std::vector<double> p1(closed[0].begin(), closed[0].end());
  const auto roots = real_roots(p1, 0.0, 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx((-3.0 + std::sqrt(51.0)) / 21.0).epsilon(1e-10));

  const auto solved = q_polynomials_solved();
  const std::vector<double> q1(solved[0].begin(), solved[0].end());
  const auto r1 = real_roots(q1, -1.0, 2.0);
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0] - 0.23971) <= 1e-4);

  const std::vector<double> q3(solved[2].begin(), solved[2].end());
  const auto r3 = real_roots(q3, -1.0, 2.0);
  REQUIRE(r3.size() == 3);
  CHECK(std::abs(r3[0] - 0.14241) <= 1e-4);
  CHECK(std::abs(r3[1] - 0.89425) <= 1e-4);
  CHECK(std::abs(r3[2] - 1.16334) <= 1e-4);
}

TEST_CASE("membership certification") {
  const MembershipCertificate c2 = certify_tensor_membership(0.25, 2);
  CHECK(c2.verdict);
  CHECK(c2.reconstruction_residual <= 1e-10);

  const MembershipCertificate c3 = certify_tensor_membership(0.25, 3);
  CHECK(c3.verdict);
  CHECK(c3.coefficients.weights[0] == doctest::Approx(499.0 / 57600.0).epsilon(1e-10));
  CHECK(c3.coefficients.weights[1] == doctest::Approx(6553.0 / 12800.0).epsilon(1e-10));
  CHECK(c3.coefficients.weights[2] == doctest::Approx(547.0 / 1152.0).epsilon(1e-10));
  CHECK(c3.coefficients.weights[3] == doctest::Approx(7.0 / 1536.0).epsilon(1e-10));

  const MembershipCertificate low = certify_tensor_membership(0.15, 2);
  CHECK_FALSE(low.verdict);
  CHECK(low.coefficients.weights[0] < 0.0);

  // trivial certificates above 1/3
  const MembershipCertificate high = certify_tensor_membership(0.8, 3);
  CHECK(high.verdict);
  CHECK(high.reconstruction_residual == 0.0);
  CHECK(high.min_weight >= 0.0);

  // verdict is monotone in lambda on a grid
  for (int power : {2, 3}) {
    bool prev = false;
    for (int i = 0; i <= 40; ++i) {
      const bool now = certify_tensor_membership(i / 40.0, power).verdict;
      CHECK((!prev || now));
      prev = now;
    }
  }

  CHECK_THROWS_AS(certify_tensor_membership(1.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(certify_tensor_membership(0.5, 4), std::invalid_argument);
}

TEST_CASE("mendl-wolf path data") {
  const PathPoint g1 = mw_path(1.0);
  CHECK(g1.x == doctest::Approx(-23.0 / 27.0).epsilon(1e-15));
  CHECK(g1.y == doctest::Approx(1.0).epsilon(1e-15));

  const PathPoint gh = mw_path(0.5);
  CHECK(gh.x == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(gh.y == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  CHECK(mw_lambda0() == doctest::Approx(0.17507).epsilon(1e-4));
  CHECK_THROWS_AS(mw_path(1.5), std::invalid_argument);
  CHECK_THROWS_AS(mw_path(-0.1), std::invalid_argument);
}

TEST_CASE("curve export") {
  const std::vector<CurveRow> one = curve_export({1.0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].p[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(one[0].p[1]) <= 1e-12);
  CHECK(one[0].member2);
  CHECK(one[0].member3);

  const std::vector<CurveRow> third = curve_export({1.0 / 3.0});
  CHECK(std::abs(third[0].q[3]) <= 1e-12);

  // p1 vanishes at its root
  const double root = (-3.0 + std::sqrt(51.0)) / 21.0;
  const std::vector<CurveRow> at_root = curve_export({root});
  CHECK(std::abs(at_root[0].p[0]) <= 1e-9);

  // CSV format: header and one line per row
  const std::string csv = curves_csv(curve_export({0.5, 1.0}));
  std::istringstream stream(csv);
  std::string line;
  std::getline(stream, line);
  CHECK(line == "lambda,p1,p2,p3,q1,q2,q3,q4,member2,member3");
  int rows = 0;
  while (std::getline(stream, line)) ++rows;
  CHECK(rows == 2);

  const std::string path = path_csv({0.0, 0.5, 1.0});
  CHECK(path.substr(0, 6) == "t,x,y\n");
}
