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

#include "mdr/epi.hpp"

#include <cmath>

#include "mdr/error.hpp"

namespace mdr {
namespace {

constexpr double kEqualityTol = 1e-9;

}  // namespace

void validate(const EpiInstance& inst) {
  if (!(inst.mu1 > inst.mu2) || !(inst.mu2 > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "requires mu1 > mu2 > 0");
  }
  if (inst.n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  const int d = inst.N1.dim();
  if (inst.N2.dim() != d || inst.B.dim() != d) {
    throw Error(ErrorKind::kDimensionMismatch, "N1, N2, B sizes differ");
  }
  if (!inst.N1.is_pd()) {
    throw Error(ErrorKind::kNotPositiveDefinite, "N1 must be positive definite");
  }
  const SpdMatrix lo(inst.mu1 * inst.N1.mat());
  const SpdMatrix hi(inst.mu2 * inst.N2.mat());
  if (!loewner_less(lo, hi, 0.0)) {
    throw Error(ErrorKind::kOrderingViolation, "requires mu1 N1 < mu2 N2");
  }
}

double epi_lhs_gaussian(const EpiInstance& inst) {
  validate(inst);
  const Matrix& b = inst.B.mat();
  const double v = inst.mu2 * 0.5 * logdet(b + inst.N2.mat()) -
                   inst.mu1 * 0.5 * logdet(b + inst.N1.mat()) +
                   (inst.mu1 - inst.mu2) * 0.5 * logdet_or_neg_inf(b);
  return inst.n * v;
}

double epi_rhs(const EpiInstance& inst) {
  validate(inst);
  const double dn = inst.N1.dim();
  const double mu1 = inst.mu1, mu2 = inst.mu2;
  const double ld_gap = logdet(inst.N2.mat() - inst.N1.mat());
  const double t1 = dn * std::log(mu1 - mu2) + logdet(inst.N2) -
                    dn * std::log(mu1) - ld_gap;
  const double t2 = dn * std::log(mu1 - mu2) + logdet(inst.N1) -
                    dn * std::log(mu2) - ld_gap;
  return inst.n * (0.5 * mu1 * t1 - 0.5 * mu2 * t2);
}

SpdMatrix equality_covariance(double mu1, double mu2, const SpdMatrix& n1,
                              const SpdMatrix& n2) {
  if (n1.dim() != n2.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "N1, N2 sizes differ");
  }
  const Matrix gap = mu2 * n2.mat() - mu1 * n1.mat();
  if (!SpdMatrix(gap).is_pd()) {
    throw Error(ErrorKind::kOrderingViolation, "requires mu2 N2 - mu1 N1 > 0");
  }
  return SpdMatrix((mu1 - mu2) * n2.mat() * spd_inverse(gap) * n1.mat());
}

EpiCheck verify_epi(const EpiInstance& inst) {
  EpiCheck c;
  c.gap = epi_rhs(inst) - epi_lhs_gaussian(inst);
  const SpdMatrix eq = equality_covariance(inst.mu1, inst.mu2, inst.N1, inst.N2);
  const double scale = std::max(1.0, eq.mat().cwiseAbs().maxCoeff());
  c.at_equality =
      (inst.B.mat() - eq.mat()).cwiseAbs().maxCoeff() <= kEqualityTol * scale;
  return c;
}

double costa_gap(const EpiInstance& inst) {
  validate(inst);
  // N1 v = a N2 v with V^t N2 V = I, V^t N1 V = diag(a).
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ges(inst.N1.mat(),
                                                       inst.N2.mat());
  if (ges.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotPositiveDefinite, "generalized eigensolve failed");
  }
  const Matrix& u = ges.eigenvectors();
  const Vector a = ges.eigenvalues();
  const Matrix bt = symmetrize(u.transpose() * inst.B.mat() * u);
  const int dim = inst.N1.dim();
  const double inv = 1.0 / dim;
  const Matrix id = Matrix::Identity(dim, dim);
  const Matrix am = a.asDiagonal();
  auto root = [&](double ld) { return std::exp(inv * ld); };
  double ld_one_minus_a = 0.0, ld_a = 0.0;
  for (int i = 0; i < dim; ++i) {
    ld_one_minus_a += std::log1p(-a[i]);
    ld_a += std::log(a[i]);
  }
  return root(logdet(bt + am)) -
         root(ld_one_minus_a) * root(logdet_or_neg_inf(bt)) -
         root(ld_a) * root(logdet(bt + id));
}

}  // namespace mdr
