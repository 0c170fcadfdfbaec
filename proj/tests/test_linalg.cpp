// Copyright 2026 The mdregion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "mdr/error.hpp"
#include "mdr/linalg.hpp"
#include "oracles.hpp"

using namespace mdr;

namespace {

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix random_pd(std::mt19937_64& rng, int n, double lo, double hi) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = g(rng);
  const Matrix q = Eigen::HouseholderQR<Matrix>(a).householderQ();
  Vector e(n);
  for (int i = 0; i < n; ++i) e[i] = u(rng);
  return symmetrize(q * e.asDiagonal() * q.transpose());
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("SpdMatrix symmetrises on construction") {
  const SpdMatrix s(m2(1.0, 0.2, 0.4, 2.0));
  CHECK(s(0, 1) == s(1, 0));
  CHECK(s(0, 1) == doctest::Approx(0.3));
  CHECK(kind_of([] { SpdMatrix(Matrix(2, 3)); }) == ErrorKind::kDimensionMismatch);
}

TEST_CASE("logdet examples") {
  CHECK(logdet(SpdMatrix::identity(3)) == 0.0);
  CHECK(logdet(SpdMatrix(m2(2, 0, 0, 2))) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(logdet(SpdMatrix(m2(2, 1, 1, 2))) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(kind_of([] { logdet(SpdMatrix(m2(1, 2, 2, 1))); }) ==
        ErrorKind::kNotPositiveDefinite);
  CHECK(std::isinf(logdet_or_neg_inf(m2(1, 2, 2, 1))));
}

TEST_CASE("loewner_less examples") {
  const SpdMatrix i2 = SpdMatrix::identity(2);
  CHECK(loewner_less(i2, SpdMatrix::identity(2, 2.0), 1e-12));
  CHECK_FALSE(loewner_less(i2, i2, 1e-12));
  CHECK_FALSE(loewner_less(SpdMatrix(m2(1, 0, 0, 3)), SpdMatrix(m2(2, 0, 0, 2)), 1e-12));
  CHECK(kind_of([&] { loewner_less(i2, SpdMatrix::identity(3), 0.0); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("inversion identity examples") {
  const SpdMatrix one = SpdMatrix::scalar(1.0);
  CHECK(inversion_identity_residual(one, one, Matrix::Ones(1, 1), Matrix::Ones(1, 1)) <
        1e-15);
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(inversion_identity_residual(SpdMatrix::identity(2, 2.0), SpdMatrix::identity(2),
                                    i2, i2) < 1e-12);
  std::mt19937_64 rng(7);
  const SpdMatrix a(random_pd(rng, 3, 0.5, 5));
  const SpdMatrix b(random_pd(rng, 3, 0.5, 5));
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK(inversion_identity_residual(a, b, i3, i3) < 1e-10);
  CHECK(kind_of([&] {
          inversion_identity_residual(a, b, Matrix::Identity(2, 3), i3);
        }) == ErrorKind::kDimensionMismatch);
  CHECK(kind_of([&] {
          inversion_identity_residual(SpdMatrix(Matrix::Zero(3, 3)), b, i3, i3);
        }) == ErrorKind::kSingularMatrix);
}

TEST_CASE("ordering consequences examples") {
  CHECK(ordering_consequences_hold(SpdMatrix::identity(2, 2.0), SpdMatrix::identity(2)));
  CHECK(ordering_consequences_hold(SpdMatrix(m2(3, 1, 1, 2)), SpdMatrix::identity(2)));
  CHECK(kind_of([] {
          ordering_consequences_hold(SpdMatrix::identity(2), SpdMatrix::identity(2));
        }) == ErrorKind::kOrderingViolation);
}

TEST_CASE("kron examples") {
  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  const Matrix k = kron(Matrix::Identity(2, 2), m);
  CHECK(k.rows() == 4);
  CHECK(k.block(0, 0, 2, 2) == m);
  CHECK(k.block(2, 2, 2, 2) == m);
  CHECK(k.block(0, 2, 2, 2).isZero(0));
  CHECK(kron(Matrix::Ones(1, 1), m) == m);
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(kron(swap, Matrix::Identity(1, 1)) == swap);
}

TEST_CASE("random properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int i = 0; i < 1000; ++i) {
    const int n = dim(rng);
    const SpdMatrix a(random_pd(rng, n, 0.01, 100.0));
    CHECK(std::abs(logdet(a) + logdet(inverse(a))) < 1e-9);
    CHECK(std::abs(logdet(a) - oracle::logdet_eig(a.mat())) < 1e-9);

    const SpdMatrix b(random_pd(rng, n, 0.01, 100.0));
    const Matrix c = random_pd(rng, n, 0.1, 1.0);
    CHECK(inversion_identity_residual(a, b, c, c.transpose()) < 1e-10);

    const SpdMatrix up(b.mat() + random_pd(rng, n, 0.01, 1.0));
    const SpdMatrix top(up.mat() + random_pd(rng, n, 0.01, 1.0));
    CHECK(ordering_consequences_hold(up, b));
    CHECK_FALSE(loewner_less(b, b, 1e-12));
    CHECK(loewner_less(b, up, 1e-12));
    CHECK(loewner_less(up, top, 1e-12));
    CHECK(loewner_less(b, top, 1e-12));
    CHECK_FALSE(loewner_less(top, b, 1e-12));
  }
}
