// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "chanfact/checks.hpp"
#include "chanfact/matcore.hpp"
#include "chanfact/rng.hpp"
#include "chanfact/werner.hpp"

using namespace chanfact;

namespace {

// Independent oracle: textbook double loop, no shared code with kron().
Mat kron_oracle(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

}  // namespace

TEST_CASE("kron basics") {
  const Mat id2 = Mat::Identity(2, 2);
  CHECK(max_abs(kron(id2, id2) - Mat::Identity(4, 4)) == 0.0);

  // Single-entry factors place a single entry at the row-major position.
  const Mat e11 = matrix_unit(2, 0, 0);
  Mat expect = Mat::Zero(4, 4);
  expect(0, 0) = 1.0;
  CHECK(max_abs(kron(e11, e11) - expect) == 0.0);

  const Mat k = kron(matrix_unit(2, 0, 1), matrix_unit(2, 1, 0));
  Mat single = Mat::Zero(4, 4);
  single(0 * 2 + 1, 1 * 2 + 0) = 1.0;
  CHECK(max_abs(k - single) == 0.0);
}

TEST_CASE("kron agrees with the naive oracle and is bilinear") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Mat a = random_matrix(3, seed);
    const Mat b = random_matrix(4, seed + 10);
    const Mat c = random_matrix(3, seed + 20);
    const Mat d = random_matrix(4, seed + 30);
    CHECK(max_abs(kron(a, b) - kron_oracle(a, b)) <= 1e-15);
    // (a (x) b)(c (x) d) = ac (x) bd
    CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) <= 1e-12);
    // associativity and bilinearity
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-12);
    CHECK(max_abs(kron(a + c, b) - kron(a, b) - kron(c, b)) <= 1e-12);
  }
}

TEST_CASE("partial trace over the second leg") {
  const Mat a = random_matrix(3, 5);
  const Mat b = random_matrix(4, 6);
  const TensorShape shape{3, 4};
  // a (x) b -> tau(b) a when normalized
  const Mat traced = partial_trace_second(kron(a, b), shape, true);
  CHECK(max_abs(traced - (b.trace() / 4.0) * a) <= 1e-13);

  // flip symmetry: (id (x) Tr/3)(s_3) = (1/3) 1_3
  const SymmetryData sym = build_symmetry(3);
  const Mat ps = partial_trace_second(sym.s, TensorShape{3, 3}, true);
  CHECK(max_abs(ps - Mat::Identity(3, 3) / 3.0) <= 1e-15);

  // trace consistency: tau(output) = tau(input)
  const Mat m = random_matrix(12, 7);
  const Mat pt = partial_trace_second(m, shape, true);
  CHECK(std::abs(pt.trace() / 3.0 - m.trace() / 12.0) <= 1e-13);

  CHECK_THROWS_AS(partial_trace_second(m, TensorShape{3, 5}, true), std::invalid_argument);
}

TEST_CASE("partial transpose") {
  const Mat a = random_matrix(3, 11);
  const Mat b = random_matrix(4, 12);
  const TensorShape shape{3, 4};
  CHECK(max_abs(partial_transpose(kron(a, b), shape, 0) - kron(a.transpose(), b)) <= 1e-14);
  CHECK(max_abs(partial_transpose(kron(a, b), shape, 1) - kron(a, b.transpose())) <= 1e-14);

  // s_n^t1 = n q_n
  const SymmetryData sym = build_symmetry(3);
  CHECK(max_abs(partial_transpose(sym.s, TensorShape{3, 3}, 0) - 3.0 * sym.q) <= 1e-15);

  // involution
  const Mat m = random_matrix(12, 13);
  CHECK(max_abs(partial_transpose(partial_transpose(m, shape, 1), shape, 1) - m) == 0.0);

  // Hermiticity and the normalized 2-norm survive the transpose.
  const Mat h = m + m.adjoint();
  const Mat ht = partial_transpose(h, shape, 0);
  CHECK(max_abs(ht - ht.adjoint()) <= 1e-14);
  CHECK(normalized_two_norm(ht) == doctest::Approx(normalized_two_norm(h)).epsilon(1e-12));

  CHECK_THROWS_AS(partial_transpose(m, shape, 2), std::invalid_argument);
}

TEST_CASE("schatten norms under the normalized trace") {
  for (double p : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()})
    CHECK(schatten_norm_normalized(Mat::Identity(5, 5), p) == doctest::Approx(1.0).epsilon(1e-13));

  const Mat e = matrix_unit(3, 0, 0);
  const double n2 = schatten_norm_normalized(e, 2.0);
  CHECK(n2 * n2 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  const Mat a12 = antisym_unit(3, 0, 1);
  const double na = schatten_norm_normalized(a12, 2.0);
  CHECK(na * na == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

  for (int n : {2, 5}) {
    const Unitary u = haar_unitary(n, 99 + n);
    CHECK(std::abs(schatten_norm_normalized(u.m, 2.0) - 1.0) <= 1e-12);
  }

  CHECK_THROWS_AS(schatten_norm_normalized(e, 0.5), std::invalid_argument);
}

TEST_CASE("hermitian eigensystem") {
  Mat d = Mat::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const EigSystem sys = hermitian_eigensystem(d);
  CHECK(sys.values(0) == doctest::Approx(3.0));
  CHECK(sys.values(1) == doctest::Approx(2.0));
  CHECK(sys.values(2) == doctest::Approx(1.0));

  const SymmetryData sym = build_symmetry(3);
  const EigSystem flip = hermitian_eigensystem(sym.s);
  int plus = 0, minus = 0;
  for (int i = 0; i < 9; ++i) {
    if (std::abs(flip.values(i) - 1.0) < 1e-12) ++plus;
    if (std::abs(flip.values(i) + 1.0) < 1e-12) ++minus;
  }
  CHECK(plus == 6);
  CHECK(minus == 3);

  const EigSystem qsys = hermitian_eigensystem(sym.q);
  CHECK(qsys.values(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 9; ++i) CHECK(std::abs(qsys.values(i)) <= 1e-12);

  // Orthonormality and reconstruction on a random Hermitian matrix.
  const Mat r = random_matrix(6, 17);
  const Mat h = r + r.adjoint();
  const EigSystem hs = hermitian_eigensystem(h);
  CHECK(max_abs(hs.vectors.adjoint() * hs.vectors - Mat::Identity(6, 6)) <= 1e-10);
  Mat rebuilt = Mat::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    rebuilt += hs.values(i) * (hs.vectors.col(i) * hs.vectors.col(i).adjoint());
  CHECK(max_abs(rebuilt - h) <= 1e-10 * 6);

  CHECK_THROWS_AS(hermitian_eigensystem(random_matrix(4, 3)), std::invalid_argument);
}

TEST_CASE("haar sampling") {
  const Unitary u = haar_unitary(6, 123);
  CHECK(max_abs(u.m * u.m.adjoint() - Mat::Identity(6, 6)) <= 1e-12);

  const Unitary again = haar_unitary(6, 123);
  CHECK(max_abs(u.m - again.m) == 0.0);  // bitwise

  CHECK_THROWS_AS(haar_unitary(0, 1), std::invalid_argument);
}

TEST_CASE("haar mean of u (x) conj(u) approaches q") {
  const SymmetryData sym = build_symmetry(3);
  Mat acc = Mat::Zero(9, 9);
  const int n_samples = 20000;
  for (int i = 0; i < n_samples; ++i) {
    const Unitary u = haar_unitary(3, rng::derive_seed(42, i));
    acc += kron(u.m, u.m.conjugate());
  }
  acc /= static_cast<double>(n_samples);
  CHECK(frobenius(acc - sym.q) <= 0.05);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(TensorShape({}), std::invalid_argument);
  CHECK_THROWS_AS(TensorShape({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)Unitary{2.0 * Mat::Identity(3, 3)}, std::invalid_argument);

  Mat bad = Mat::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(all_finite(bad));
  CHECK_THROWS_AS((void)Unitary{bad}, std::invalid_argument);
}
