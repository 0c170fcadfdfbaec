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

#include "mdr/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mdr/error.hpp"

namespace mdr {
namespace {

constexpr double kTieTol = 1e-12;

bool strictly_below(const SpdMatrix& a, const SpdMatrix& b) {
  return loewner_less(a, b, pd_tolerance(b.mat()));
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidInstance, "invariant violated: " + what);
}

}  // namespace

void validate(const ProblemInstance& inst) {
  const int n = inst.N();
  if (n < 1) invalid("Kx must be a non-empty square matrix");
  if (inst.L() < 2) invalid("L >= 2 (at least two descriptions)");
  if (inst.D0.dim() != n) invalid("D0 has the dimension of Kx");
  for (int l = 0; l < inst.L(); ++l) {
    if (inst.D[l].dim() != n) {
      invalid("D[" + std::to_string(l) + "] has the dimension of Kx");
    }
  }
  if (!inst.Kx.is_pd()) invalid("Kx > 0");
  if (!inst.D0.is_pd()) invalid("D0 > 0");
  for (int l = 0; l < inst.L(); ++l) {
    const std::string idx = std::to_string(l);
    if (!strictly_below(inst.D0, inst.D[l])) invalid("D0 < D[" + idx + "]");
    if (!strictly_below(inst.D[l], inst.Kx)) invalid("D[" + idx + "] < Kx");
  }
}

ProblemInstance make_instance(SpdMatrix kx, SpdMatrix d0,
                              std::vector<SpdMatrix> d) {
  ProblemInstance inst{std::move(kx), std::move(d0), std::move(d)};
  validate(inst);
  return inst;
}

int WeightProfile::M(int j) const {
  int s = 0;
  for (int i = 0; i < j; ++i) s += groups[static_cast<size_t>(i)].m;
  return s;
}

WeightProfile group_weights(std::span<const double> beta) {
  const int L = static_cast<int>(beta.size());
  if (L < 2) {
    throw Error(ErrorKind::kLengthMismatch, "at least two weights required");
  }
  for (int l = 0; l < L; ++l) {
    if (!(beta[l] > 0.0) || !std::isfinite(beta[l])) {
      throw Error(ErrorKind::kNonPositiveWeight,
                  "beta[" + std::to_string(l) + "] must be positive");
    }
  }
  WeightProfile p;
  p.permutation.resize(static_cast<size_t>(L));
  std::iota(p.permutation.begin(), p.permutation.end(), 0);
  std::stable_sort(p.permutation.begin(), p.permutation.end(),
                   [&](int a, int b) { return beta[a] > beta[b]; });
  for (int i : p.permutation) p.sorted_beta.push_back(beta[i]);

  p.alpha0 = p.sorted_beta[0] - p.sorted_beta[1];
  std::vector<double> modified = p.sorted_beta;
  modified[0] = modified[1];
  for (double v : modified) {
    if (!p.groups.empty() && std::abs(p.groups.back().alpha - v) < kTieTol) {
      ++p.groups.back().m;
    } else {
      p.groups.push_back({v, 1});
    }
  }
  return p;
}

double weighted_sum(const WeightProfile& profile, const RatePoint& point) {
  if (static_cast<int>(point.rates.size()) != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch,
                "rate point has " + std::to_string(point.rates.size()) +
                    " entries, profile has " + std::to_string(profile.L()));
  }
  double s = profile.alpha0 * point.rates[0];
  int idx = 0;
  for (const WeightGroup& g : profile.groups) {
    for (int i = 0; i < g.m; ++i) s += g.alpha * point.rates[idx++];
  }
  return s;
}

std::vector<double> to_caller_order(const WeightProfile& profile,
                                    std::span<const double> sorted) {
  if (static_cast<int>(sorted.size()) != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch, "vector length differs from L");
  }
  std::vector<double> out(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    out[static_cast<size_t>(profile.permutation[i])] = sorted[i];
  }
  return out;
}

std::vector<double> to_sorted_order(const WeightProfile& profile,
                                    std::span<const double> caller) {
  if (static_cast<int>(caller.size()) != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch, "vector length differs from L");
  }
  std::vector<double> out(caller.size());
  for (size_t i = 0; i < caller.size(); ++i) {
    out[i] = caller[static_cast<size_t>(profile.permutation[i])];
  }
  return out;
}

std::vector<SpdMatrix> sorted_distortions(const ProblemInstance& inst,
                                          const WeightProfile& profile) {
  if (inst.L() != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch,
                "instance has " + std::to_string(inst.L()) +
                    " descriptions, profile has " +
                    std::to_string(profile.L()));
  }
  std::vector<SpdMatrix> out;
  out.reserve(inst.D.size());
  for (int i : profile.permutation) out.push_back(inst.D[static_cast<size_t>(i)]);
  return out;
}

double min_single_description_rate(const SpdMatrix& kx, const SpdMatrix& dl) {
  return 0.5 * (logdet(kx) - logdet(dl));
}

double min_single_description_rate(const ProblemInstance& inst, int l) {
  if (l < 0 || l >= inst.L()) {
    throw Error(ErrorKind::kInvalidArgument,
                "description index " + std::to_string(l) + " out of range");
  }
  return min_single_description_rate(inst.Kx, inst.D[static_cast<size_t>(l)]);
}

}  // namespace mdr
