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

#include "mdr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mdr/error.hpp"

namespace mdr {
namespace {

constexpr double kRelPdTol = 1e-10;
constexpr double kOrderingCheckTol = 1e-10;

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square");
  }
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "operands are " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

Matrix checked_inverse(const Matrix& m, const char* what) {
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::kSingularMatrix, std::string(what) + " is singular");
  }
  return lu.inverse();
}

}  // namespace

SpdMatrix::SpdMatrix(const Matrix& m) {
  require_square(m, "matrix");
  m_ = symmetrize(m);
}

SpdMatrix SpdMatrix::identity(int n, double scale) {
  return SpdMatrix(Matrix::Identity(n, n) * scale);
}

double SpdMatrix::min_eigenvalue() const { return mdr::min_eigenvalue(m_); }

bool SpdMatrix::is_pd() const {
  if (m_.size() == 0) return false;
  Eigen::LLT<Matrix> llt(m_);
  if (llt.info() != Eigen::Success) return false;
  const double tol = std::sqrt(pd_tolerance(m_));
  return llt.matrixLLT().diagonal().minCoeff() > tol;
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

double pd_tolerance(const Matrix& m) {
  if (m.rows() == 0) return kRelPdTol;
  const double scale = std::abs(m.trace()) / static_cast<double>(m.rows());
  return kRelPdTol * std::max(scale, std::numeric_limits<double>::min());
}

double min_eigenvalue(const Matrix& m) {
  require_square(m, "matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double logdet(const Matrix& m) {
  require_square(m, "matrix");
  const double v = logdet_or_neg_inf(m);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::kNotPositiveDefinite,
                "Cholesky pivot not positive in logdet");
  }
  return v;
}

double logdet(const SpdMatrix& m) { return logdet(m.mat()); }

double logdet_or_neg_inf(const Matrix& m) noexcept {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    return -std::numeric_limits<double>::infinity();
  }
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    return -std::numeric_limits<double>::infinity();
  }
  double s = 0.0;
  const auto diag = llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag[i] > 0.0)) return -std::numeric_limits<double>::infinity();
    s += std::log(diag[i]);
  }
  return 2.0 * s;
}

Matrix spd_inverse(const Matrix& m) {
  require_square(m, "matrix");
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success ||
      !(llt.matrixLLT().diagonal().minCoeff() > 0.0)) {
    throw Error(ErrorKind::kNotPositiveDefinite,
                "Cholesky pivot not positive in inverse");
  }
  return symmetrize(llt.solve(Matrix::Identity(m.rows(), m.cols())));
}

SpdMatrix inverse(const SpdMatrix& m) { return SpdMatrix(spd_inverse(m.mat())); }

bool loewner_less(const SpdMatrix& a, const SpdMatrix& b, double tol) {
  require_same_dim(a.mat(), b.mat());
  return min_eigenvalue(b.mat() - a.mat()) > tol;
}

double inversion_identity_residual(const SpdMatrix& a, const SpdMatrix& b,
                                   const Matrix& c, const Matrix& d) {
  const Eigen::Index n = a.dim();
  const Eigen::Index m = b.dim();
  if (c.rows() != n || c.cols() != m || d.rows() != m || d.cols() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "C must be n x m and D must be m x n");
  }
  const Matrix ainv = checked_inverse(a.mat(), "A");
  const Matrix binv = checked_inverse(b.mat(), "B");
  const Matrix lhs = checked_inverse(a.mat() + c * b.mat() * d, "A + C B D");
  const Matrix inner = checked_inverse(binv + d * ainv * c, "B^-1 + D A^-1 C");
  const Matrix rhs = ainv - ainv * c * inner * d * ainv;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool ordering_consequences_hold(const SpdMatrix& a, const SpdMatrix& b) {
  require_same_dim(a.mat(), b.mat());
  if (!b.is_pd() || !loewner_less(b, a, pd_tolerance(a.mat()))) {
    throw Error(ErrorKind::kOrderingViolation, "requires A > B > 0");
  }
  const bool det_ok = logdet(a) - logdet(b) > -kOrderingCheckTol;
  const Matrix gap = spd_inverse(b.mat()) - spd_inverse(a.mat());
  const bool inv_ok = min_eigenvalue(gap) > -kOrderingCheckTol;
  return det_ok && inv_ok;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace mdr
