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

// Dense symmetric-matrix helpers shared by every solver module.

#ifndef MDR_LINALG_HPP_
#define MDR_LINALG_HPP_

#include <Eigen/Dense>

namespace mdr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Symmetric matrix value. The constructor averages the input with its
// transpose; positive definiteness is checked by the consumers that need it.
class SpdMatrix {
 public:
  SpdMatrix() = default;
  explicit SpdMatrix(const Matrix& m);

  static SpdMatrix identity(int n, double scale = 1.0);
  static SpdMatrix scalar(double v) { return identity(1, v); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double min_eigenvalue() const;
  // Cholesky succeeds and every pivot exceeds the relative PD tolerance.
  bool is_pd() const;

 private:
  Matrix m_;
};

Matrix symmetrize(const Matrix& m);

// 1e-10 scaled by trace/dim.
double pd_tolerance(const Matrix& m);

double min_eigenvalue(const Matrix& m);

// Throws NotPositiveDefinite when a Cholesky pivot is not positive.
double logdet(const Matrix& m);
double logdet(const SpdMatrix& m);
// Returns -infinity instead of throwing.
double logdet_or_neg_inf(const Matrix& m) noexcept;

Matrix spd_inverse(const Matrix& m);
SpdMatrix inverse(const SpdMatrix& m);

// True iff min eig(B - A) > tol.
bool loewner_less(const SpdMatrix& a, const SpdMatrix& b, double tol);

// Max-abs entry of (A + C B D)^{-1} minus the Woodbury expansion.
double inversion_identity_residual(const SpdMatrix& a, const SpdMatrix& b,
                                   const Matrix& c, const Matrix& d);

// For A > B > 0: det A > det B and A^{-1} < B^{-1}.
bool ordering_consequences_hold(const SpdMatrix& a, const SpdMatrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace mdr

#endif  // MDR_LINALG_HPP_
