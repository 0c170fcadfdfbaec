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

#ifndef MDR_EPI_HPP_
#define MDR_EPI_HPP_

#include "mdr/linalg.hpp"

namespace mdr {

// Two-noise extremal inequality in the jointly Gaussian case. B is the
// conditional covariance Cov[x|v]; n is the block repetition count.
struct EpiInstance {
  double mu1 = 0.0;
  double mu2 = 0.0;
  SpdMatrix N1;
  SpdMatrix N2;
  SpdMatrix B;
  int n = 1;
};

// mu1 > mu2 > 0, mu1 N1 < mu2 N2, N1 > 0, n >= 1.
void validate(const EpiInstance& inst);

// Returns -inf when B is singular.
double epi_lhs_gaussian(const EpiInstance& inst);
double epi_rhs(const EpiInstance& inst);

// (mu1 - mu2) N2 (mu2 N2 - mu1 N1)^{-1} N1.
SpdMatrix equality_covariance(double mu1, double mu2, const SpdMatrix& n1,
                              const SpdMatrix& n2);

struct EpiCheck {
  double gap = 0.0;  // rhs - lhs
  bool at_equality = false;
};

EpiCheck verify_epi(const EpiInstance& inst);

// |B~ + A|^{1/N} - |I - A|^{1/N}|B~|^{1/N} - |A|^{1/N}|B~ + I|^{1/N} after the
// congruence that maps N2 to I and N1 to the diagonal A.
double costa_gap(const EpiInstance& inst);

}  // namespace mdr

#endif  // MDR_EPI_HPP_
