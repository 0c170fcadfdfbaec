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

#include "mdr/achievable.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "mdr/error.hpp"
#include "mdr/nelder_mead.hpp"

namespace mdr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kRayGrowth = 60;
constexpr int kRayBisection = 48;

struct Setup {
  const WeightProfile* profile;
  int n;
  int L;
  SpdMatrix kx;
  std::vector<Matrix> kmax_half;  // sorted order
  Matrix target;
  double target_tol;
};

struct Candidate {
  std::vector<SpdMatrix> k;
  std::vector<SpdMatrix> a;
  Matrix kw;
};

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

std::vector<SpdMatrix> noises(const Setup& s, const Vector& x) {
  const int n = s.n;
  std::vector<SpdMatrix> k;
  for (int l = 0; l < s.L; ++l) {
    const Eigen::Map<const Matrix> h(x.data() + l * n * n, n, n);
    const Matrix shrink =
        spd_inverse(Matrix::Identity(n, n) + h * h.transpose());
    k.emplace_back(s.kmax_half[l] * shrink * s.kmax_half[l]);
  }
  return k;
}

std::vector<Matrix> directions(const Setup& s, const Vector& x, double eps) {
  const int n = s.n;
  const WeightProfile& p = *s.profile;
  std::vector<Matrix> out;
  Matrix acc = Matrix::Zero(n, n);
  const int offset = s.L * n * n;
  for (int j = 1; j <= p.J(); ++j) {
    const Eigen::Map<const Matrix> g(x.data() + offset + (j - 1) * n * n, n, n);
    acc += g * g.transpose() + eps * Matrix::Identity(n, n);
    out.push_back(acc / p.alpha(j));
  }
  return out;
}

// 0: K_w not PD, 1: PD but central constraint violated, 2: feasible.
int classify(const Setup& s, const std::vector<SpdMatrix>& k,
             const std::vector<Matrix>& dir, double t, Candidate* out) {
  std::vector<SpdMatrix> a;
  for (const auto& d : dir) a.emplace_back(t * d);
  Matrix kw;
  try {
    kw = build_Kw(k, a, *s.profile);
  } catch (const Error&) {
    return 0;
  }
  Subset all(static_cast<size_t>(s.L));
  for (int l = 0; l < s.L; ++l) all[static_cast<size_t>(l)] = l;
  Matrix uk;
  try {
    uk = effective_noise(kw, s.n, all).value.mat();
  } catch (const Error&) {
    return 0;
  }
  if (min_eigenvalue(s.target - uk) < -s.target_tol) return 1;
  if (out) *out = {k, std::move(a), std::move(kw)};
  return 2;
}

double vertex_value(const Setup& s, const Candidate& c) {
  const int n = s.n;
  Eigen::LLT<Matrix> llt(c.kw);
  const auto diag = llt.matrixLLT().diagonal();
  RatePoint r;
  double prev = 0.0, ld_sum = 0.0, ld_prefix = 0.0;
  for (int i = 0; i < s.L; ++i) {
    ld_sum += logdet(s.kx.mat() + c.k[static_cast<size_t>(i)].mat());
    for (int q = i * n; q < (i + 1) * n; ++q) ld_prefix += 2.0 * std::log(diag[q]);
    const double f = 0.5 * (ld_sum - ld_prefix);
    r.rates.push_back(f - prev);
    prev = f;
  }
  return weighted_sum(*s.profile, r);
}

// Smallest feasible scale along the ray t * dir, or false when none is found.
bool boundary_point(const Setup& s, const std::vector<SpdMatrix>& k,
                    const std::vector<Matrix>& dir, Candidate& out) {
  double lo = 0.0;
  double hi = 1.0;
  int cls = classify(s, k, dir, hi, &out);
  for (int g = 0; cls == 1 && g < kRayGrowth; ++g) {
    lo = hi;
    hi *= 2.0;
    cls = classify(s, k, dir, hi, &out);
  }
  if (cls == 0) {
    double bad = hi;
    bool found = false;
    for (int it = 0; it < kRayBisection && !found; ++it) {
      const double mid = 0.5 * (lo + bad);
      const int c = classify(s, k, dir, mid, &out);
      if (c == 2) {
        hi = mid;
        found = true;
      } else if (c == 1) {
        lo = mid;
      } else {
        bad = mid;
      }
    }
    if (!found) return false;
  } else if (cls != 2) {
    return false;
  }
  for (int it = 0; it < kRayBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    Candidate c;
    if (classify(s, k, dir, mid, &c) == 2) {
      hi = mid;
      out = std::move(c);
    } else {
      lo = mid;
    }
  }
  return true;
}

}  // namespace

bool channel_meets_constraints(const ProblemInstance& inst,
                               const TestChannel& tc, double rel_tol) {
  const std::vector<SpdMatrix> d = sorted_distortions(inst, tc.profile());
  auto below = [&](const SpdMatrix& got, const SpdMatrix& limit) {
    const double tol = rel_tol * limit.mat().trace() / limit.dim();
    return min_eigenvalue(limit.mat() - got.mat()) >= -tol;
  };
  for (int l = 0; l < tc.L(); ++l) {
    const SpdMatrix got = mmse_distortion(inst.Kx, effective_noise(tc, {l}));
    if (!below(got, d[static_cast<size_t>(l)])) return false;
  }
  Subset all(static_cast<size_t>(tc.L()));
  for (int l = 0; l < tc.L(); ++l) all[static_cast<size_t>(l)] = l;
  return below(mmse_distortion(inst.Kx, effective_noise(tc, all)), inst.D0);
}

AchieveResult achieve(const ProblemInstance& inst, const WeightProfile& profile,
                      const OptimizerOptions& opts) {
  validate(inst);
  const NoiseTargets nt = distortion_to_noise(inst);
  Setup s{&profile, inst.N(), inst.L(), inst.Kx, {}, nt.Kw_target.mat(), 0.0};
  s.target_tol = 1e-12 * nt.Kw_target.mat().trace() / s.n;
  for (int i : profile.permutation) {
    s.kmax_half.push_back(psd_sqrt(nt.K[static_cast<size_t>(i)].mat()));
  }

  const int n = s.n;
  const int nh = s.L * n * n;
  const int dim = nh + profile.J() * n * n;

  AchieveResult res;
  Candidate best;
  double best_value = kInf;

  std::vector<SpdMatrix> kfull;
  for (int i : profile.permutation) kfull.push_back(nt.K[static_cast<size_t>(i)]);
  {
    std::vector<Matrix> zero(static_cast<size_t>(profile.J()),
                             Matrix::Zero(n, n));
    if (classify(s, kfull, zero, 0.0, &best) == 2) {
      best_value = vertex_value(s, best);
      res.loose_corner = true;
      res.converged = true;
    }
  }

  if (!res.loose_corner) {
    auto objective = [&](const Vector& x) {
      ++res.evaluations;
      const std::vector<SpdMatrix> k = noises(s, x);
      Candidate c;
      if (!boundary_point(s, k, directions(s, x, opts.eps_cone), c)) return kInf;
      const double v = vertex_value(s, c);
      if (v < best_value) {
        best_value = v;
        best = std::move(c);
      }
      return v;
    };

    NelderMeadOptions nm;
    nm.rel_tol = opts.rel_tol;
    nm.patience = opts.patience;
    nm.max_evals = opts.max_evals;
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double amp = std::sqrt(profile.alpha(1) * inst.Kx.mat().trace() / n);
    double best_start = kInf;
    for (int st = 0; st < std::max(1, opts.starts); ++st) {
      Vector x0 = Vector::Zero(dim);
      for (int j = 0; j < profile.J(); ++j) {
        Eigen::Map<Matrix> g(x0.data() + nh + j * n * n, n, n);
        g = amp * Matrix::Identity(n, n);
        if (st > 0) {
          for (Eigen::Index e = 0; e < g.size(); ++e) {
            g.data()[e] += 0.5 * amp * gauss(rng);
          }
        }
      }
      if (st > 0) {
        for (int e = 0; e < nh; ++e) x0[e] = 0.05 * gauss(rng);
      }
      Vector step = Vector::Constant(dim, 0.25 * amp);
      step.head(nh).setConstant(0.1);
      const NelderMeadResult r = nelder_mead_minimize(objective, x0, step, nm);
      if (r.fx < best_start) {
        best_start = r.fx;
        res.converged = r.converged;
      }
    }
  }

  if (!std::isfinite(best_value)) {
    throw Error(ErrorKind::kInvalidInstance,
                "no feasible layered test channel found");
  }
  TestChannel tc = TestChannel::make(best.k, best.a, profile);
  res.rates = vertex_rates(inst.Kx, tc);
  res.value = weighted_sum(profile, res.rates);
  res.rates_caller = to_caller_order(profile, res.rates.rates);
  res.channel = std::move(tc);
  return res;
}

}  // namespace mdr
