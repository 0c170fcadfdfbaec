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

#include "mdr/scalar_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mdr/error.hpp"
#include "mdr/nelder_mead.hpp"

namespace mdr {
namespace {

constexpr int kMaxIterations = 200;
constexpr double kLadderCap = 1e12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<double> sorted_k(const ScalarInstance& inst,
                             const WeightProfile& profile) {
  if (inst.L() != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch,
                "instance has " + std::to_string(inst.L()) +
                    " descriptions, profile has " +
                    std::to_string(profile.L()));
  }
  return to_sorted_order(profile, inst.k);
}

double group_sum(std::span<const double> k, const WeightProfile& p, int j,
                 double s) {
  double acc = 0.0;
  for (int i = p.M(j - 1); i < p.M(j); ++i) acc += 1.0 / (s + k[i]);
  return acc;
}

double uk_w(const ChainResult& c) { return c.uk.back(); }

bool at_or_above_target(const ChainResult& c, double target) {
  return c.feasible && uk_w(c) >= target;
}

TestChannel scalar_channel(std::span<const double> k,
                           const std::vector<double>& sigma2,
                           const WeightProfile& profile) {
  std::vector<SpdMatrix> km, am;
  for (double v : k) km.push_back(SpdMatrix::scalar(v));
  for (double v : sigma2) am.push_back(SpdMatrix::scalar(v));
  return TestChannel::make(std::move(km), std::move(am), profile);
}

// Root of sigma_J^2(s) = var_x on (0, hi]; sigma_J^2 increases with s.
double reroot_last_stage(std::span<const double> k, const WeightProfile& p,
                         double var_x, double hi) {
  double lo = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const ChainResult c = chain_solve(k, p, mid);
    if (!c.feasible || c.sigma2.back() >= var_x) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 2.0 * kEps * hi) return hi;
  }
  throw Error(ErrorKind::kBisectionFailure,
              "enhancement re-root did not converge");
}

}  // namespace

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::kLooseCentral: return "LooseCentral";
    case Scenario::kInterior: return "Interior";
    case Scenario::kEnhanced: return "Enhanced";
  }
  return "Unknown";
}

ScalarInstance make_scalar_instance(double var_x, double d0,
                                    std::vector<double> d) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidInstance, "invariant violated: " + what);
  };
  if (d.size() < 2) bad("L >= 2 (at least two descriptions)");
  if (!(var_x > 0.0)) bad("var_x > 0");
  if (!(d0 > 0.0)) bad("d0 > 0");
  ScalarInstance s;
  s.var_x = var_x;
  s.d0 = d0;
  double inv_sum = 0.0;
  for (size_t l = 0; l < d.size(); ++l) {
    const std::string idx = std::to_string(l);
    if (!(d0 < d[l])) bad("d0 < d[" + idx + "]");
    if (!(d[l] < var_x)) bad("d[" + idx + "] < var_x");
    const double k = 1.0 / (1.0 / d[l] - 1.0 / var_x);
    s.k.push_back(k);
    inv_sum += 1.0 / k;
  }
  s.d = std::move(d);
  s.k_target = 1.0 / (1.0 / d0 - 1.0 / var_x);
  s.k_up = 1.0 / inv_sum;
  return s;
}

ScalarInstance make_scalar_instance(const ProblemInstance& inst) {
  if (inst.N() != 1) {
    throw Error(ErrorKind::kDimensionMismatch, "scalar solver requires N = 1");
  }
  std::vector<double> d;
  for (const auto& m : inst.D) d.push_back(m(0, 0));
  return make_scalar_instance(inst.Kx(0, 0), inst.D0(0, 0), std::move(d));
}

ProblemInstance to_problem_instance(const ScalarInstance& s) {
  std::vector<SpdMatrix> d;
  for (double v : s.d) d.push_back(SpdMatrix::scalar(v));
  return make_instance(SpdMatrix::scalar(s.var_x), SpdMatrix::scalar(s.d0),
                       std::move(d));
}

ChainResult chain_solve(std::span<const double> k, const WeightProfile& p,
                        double sigma1sq) {
  if (!(sigma1sq > 0.0)) {
    throw Error(ErrorKind::kDomainError, "sigma_1^2 must be positive");
  }
  if (static_cast<int>(k.size()) != p.L()) {
    throw Error(ErrorKind::kLengthMismatch, "k has the wrong length");
  }
  ChainResult c;
  double s = sigma1sq;
  for (int j = 1; j <= p.J(); ++j) {
    if (j > 1) {
      const double aj = p.alpha(j - 1), an = p.alpha(j);
      const double r = (an / s - (aj - an) / c.uk.back()) / aj;
      const double next = r > 0.0 ? 1.0 / r : 0.0;
      if (!(r > 0.0) || !(next > s)) {
        c.failed_stage = j;
        return c;
      }
      s = next;
    }
    c.sigma2.push_back(s);
    double inv = group_sum(k, p, j, s);
    if (j > 1) inv += 1.0 / (c.uk.back() + s);
    const double u = 1.0 / inv - s;
    if (!(u > 0.0)) {
      c.failed_stage = j;
      return c;
    }
    c.uk.push_back(u);
  }
  c.feasible = true;
  return c;
}

ChainResult chain_solve(const ScalarInstance& inst,
                        const WeightProfile& profile, double sigma1sq) {
  const std::vector<double> k = sorted_k(inst, profile);
  return chain_solve(k, profile, sigma1sq);
}

BisectionResult bisect_sigma1(const ScalarInstance& inst,
                              const WeightProfile& profile, double tol,
                              double initial_upper) {
  const std::vector<double> k = sorted_k(inst, profile);
  const double target = inst.k_target;
  if (inst.k_up <= target) {
    throw Error(ErrorKind::kBracketingFailure,
                "k_up <= k_target: the central constraint is loose");
  }
  double lo = 0.0;
  double hi = initial_upper > 0.0 ? initial_upper : 1e-3 * inst.var_x;
  int grow = 0;
  while (at_or_above_target(chain_solve(k, profile, hi), target)) {
    lo = hi;
    hi *= 2.0;
    if (++grow > kMaxIterations) {
      throw Error(ErrorKind::kBracketingFailure, "upper bracket not found");
    }
  }
  BisectionResult res;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const ChainResult c = chain_solve(k, profile, mid);
    res.iterations = it;
    if (c.feasible && std::abs(uk_w(c) - target) < tol * target) {
      res.sigma1sq = mid;
      res.ladder = {c.sigma2, c.uk, 0.0};
      return res;
    }
    if (at_or_above_target(c, target)) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 2.0 * kEps * hi && lo > 0.0) {
      const ChainResult cl = chain_solve(k, profile, lo);
      res.sigma1sq = lo;
      res.ladder = {cl.sigma2, cl.uk, 0.0};
      return res;
    }
  }
  throw Error(ErrorKind::kBisectionFailure,
              "no root within " + std::to_string(kMaxIterations) +
                  " iterations");
}

ScalarSolution solve(const ScalarInstance& inst, const WeightProfile& profile) {
  const std::vector<double> k = sorted_k(inst, profile);
  const int J = profile.J();
  const int L = profile.L();
  ScalarSolution sol;
  sol.profile = profile;
  sol.var_x = inst.var_x;
  double inv_d = 0.0;
  for (double d : inst.d) inv_d += 1.0 / d;
  sol.d0_star = 1.0 / (inv_d - (L - 1) / inst.var_x);

  std::vector<double> k_used = k;
  if (inst.k_target >= inst.k_up) {
    sol.scenario = Scenario::kLooseCentral;
    sol.ladder.sigma2.assign(static_cast<size_t>(J), 0.0);
    double inv = 0.0;
    for (int j = 1; j <= J; ++j) {
      for (int i = profile.M(j - 1); i < profile.M(j); ++i) inv += 1.0 / k[i];
      sol.ladder.uk.push_back(1.0 / inv);
    }
  } else {
    const BisectionResult b = bisect_sigma1(inst, profile);
    sol.ladder = b.ladder;
    sol.scenario = Scenario::kInterior;
    if (sol.ladder.sigma2.back() >= inst.var_x) {
      sol.scenario = Scenario::kEnhanced;
      Enhancement e;
      e.sigma1_bar = J == 1 ? inst.var_x
                            : reroot_last_stage(k, profile, inst.var_x,
                                                b.sigma1sq);
      const ChainResult c = chain_solve(k, profile, e.sigma1_bar);
      if (!c.feasible) {
        throw Error(ErrorKind::kEnhancementFailure,
                    "chain infeasible at the re-rooted sigma_1^2");
      }
      e.slack = 1.0 / (inst.k_target + inst.var_x) -
                1.0 / (uk_w(c) + inst.var_x);
      if (e.slack < 0.0) {
        if (e.slack < -1e-12 / (inst.k_target + inst.var_x)) {
          throw Error(ErrorKind::kEnhancementFailure, "negative slack");
        }
        e.slack = 0.0;
      }
      e.replaced_index = profile.permutation[static_cast<size_t>(L - 1)];
      e.k_L = k[static_cast<size_t>(L - 1)];
      e.k_L_prime = 1.0 / (1.0 / (e.k_L + inst.var_x) + e.slack) - inst.var_x;
      if (!(e.k_L_prime > 0.0) || e.k_L_prime > e.k_L * (1.0 + 1e-12)) {
        throw Error(ErrorKind::kEnhancementFailure,
                    "enhanced noise k_L' = " + std::to_string(e.k_L_prime) +
                        " exceeds k_L = " + std::to_string(e.k_L));
      }
      e.d_L_prime = 1.0 / (1.0 / e.k_L_prime + 1.0 / inst.var_x);
      k_used[static_cast<size_t>(L - 1)] = e.k_L_prime;
      const ChainResult c2 = chain_solve(k_used, profile, e.sigma1_bar);
      sol.ladder.sigma2 = c2.sigma2;
      sol.ladder.sigma2.back() = inst.var_x;
      sol.ladder.uk = c2.uk;
      sol.ladder.lambda = profile.alpha(J) * e.slack;
      sol.enhancement = e;
    }
  }

  sol.channel = scalar_channel(k_used, sol.ladder.sigma2, profile);
  if (sol.scenario == Scenario::kLooseCentral) {
    for (int i = 0; i < L; ++i) {
      sol.rates.rates.push_back(0.5 * std::log(inst.var_x /
                                               inst.d[profile.permutation[i]]));
    }
    sol.value = loose_central_bound(to_problem_instance(inst), profile);
  } else {
    sol.rates = vertex_rates(SpdMatrix::scalar(inst.var_x), sol.channel);
    sol.value = weighted_sum(profile, sol.rates);
  }
  sol.rates_caller = to_caller_order(profile, sol.rates.rates);
  return sol;
}

double F_objective(const ScalarInstance& inst, const WeightProfile& p,
                   std::span<const double> y) {
  const int J = p.J();
  if (J < 2) throw Error(ErrorKind::kUnsupportedJ, "F requires J >= 2");
  if (static_cast<int>(y.size()) != J) {
    throw Error(ErrorKind::kLengthMismatch, "y must have J entries");
  }
  const std::vector<double> k = sorted_k(inst, p);
  std::vector<double> s(static_cast<size_t>(J));
  double acc = 0.0;
  for (int j = 0; j < J; ++j) {
    if (!(y[j] > 0.0)) throw Error(ErrorKind::kDomainError, "y_j must be > 0");
    acc += y[j];
    s[static_cast<size_t>(j)] = acc;
  }
  if (acc > inst.var_x * (1.0 + 1e-12)) {
    throw Error(ErrorKind::kDomainError, "sum of y exceeds var_x");
  }
  auto a = [&](int j) { return p.alpha(j); };
  double f = a(J) * std::log(inst.k_target + s[J - 1]);
  for (int j = 1; j <= J; ++j) {
    for (int i = p.M(j - 1); i < p.M(j); ++i) {
      f -= a(j) * std::log(s[j - 1] + k[i]);
    }
  }
  for (int j = 1; j <= J - 1; ++j) f += (a(j) - a(j + 1)) * std::log(y[j]);
  for (int j = 2; j <= J - 1; ++j) {
    f -= (a(j - 1) - a(j + 1)) * std::log(s[j - 1]);
  }
  f += a(2) * std::log(y[0]) - a(J - 1) * std::log(s[J - 1]);
  return f;
}

std::vector<double> maximize_F(const ScalarInstance& inst,
                               const WeightProfile& p) {
  const int J = p.J();
  if (J < 2) throw Error(ErrorKind::kUnsupportedJ, "F requires J >= 2");
  auto to_y = [](const Vector& z) {
    std::vector<double> y(static_cast<size_t>(z.size()));
    for (Eigen::Index i = 0; i < z.size(); ++i) y[i] = std::exp(z[i]);
    return y;
  };
  auto neg = [&](const Vector& z) {
    const std::vector<double> y = to_y(z);
    if (std::accumulate(y.begin(), y.end(), 0.0) > inst.var_x) {
      return std::numeric_limits<double>::infinity();
    }
    return -F_objective(inst, p, y);
  };
  Vector z0(J);
  z0.setConstant(std::log(0.5 * inst.var_x / J));
  NelderMeadOptions opts;
  opts.rel_tol = 1e-15;
  opts.patience = 40;
  opts.max_evals = 40000;
  NelderMeadResult r =
      nelder_mead_minimize(neg, z0, Vector::Constant(J, 0.5), opts);

  // Newton refinement with a central-difference Hessian.
  Vector z = r.x;
  double fz = r.fx;
  for (int it = 0; it < 20; ++it) {
    const double h = 1e-4;
    Vector g(J);
    Matrix hess(J, J);
    for (int i = 0; i < J; ++i) {
      Vector zp = z, zm = z;
      zp[i] += h;
      zm[i] -= h;
      const double fp = neg(zp), fm = neg(zm);
      g[i] = (fp - fm) / (2 * h);
      hess(i, i) = (fp - 2 * fz + fm) / (h * h);
      for (int q = 0; q < i; ++q) {
        Vector a = z, b = z, c = z, d = z;
        a[i] += h; a[q] += h;
        b[i] += h; b[q] -= h;
        c[i] -= h; c[q] += h;
        d[i] -= h; d[q] -= h;
        hess(i, q) = hess(q, i) =
            (neg(a) - neg(b) - neg(c) + neg(d)) / (4 * h * h);
      }
    }
    if (!g.allFinite() || !hess.allFinite()) break;
    Eigen::LLT<Matrix> llt(hess);
    if (llt.info() != Eigen::Success) break;
    const Vector zn = z - llt.solve(g);
    const double fn = neg(zn);
    if (!(fn <= fz)) break;
    const bool small = (zn - z).cwiseAbs().maxCoeff() < 1e-13;
    z = zn;
    fz = fn;
    if (small) break;
  }
  return to_y(z);
}

double kkt_residual(const ScalarInstance& inst, const WeightProfile& p,
                    const ScalarLadder& ladder) {
  const int J = p.J();
  if (static_cast<int>(ladder.sigma2.size()) != J) {
    throw Error(ErrorKind::kLengthMismatch, "ladder must have J entries");
  }
  const std::vector<double> k = sorted_k(inst, p);
  const std::vector<double>& s = ladder.sigma2;
  auto sig = [&](int j) { return s[static_cast<size_t>(j - 1)]; };
  auto a = [&](int j) { return p.alpha(j); };
  auto sum = [&](int j) { return a(j) * group_sum(k, p, j, sig(j)); };
  auto from_below = [&](int j) {
    return a(j - 1) / sig(j) - (a(j - 1) - a(j)) / (sig(j) - sig(j - 1));
  };
  auto from_above = [&](int j) {
    return a(j + 1) / sig(j) - (a(j) - a(j + 1)) / (sig(j + 1) - sig(j));
  };

  double worst = 0.0;
  if (J >= 2) {
    worst = std::abs(sum(1) - from_above(1));
    for (int j = 2; j <= J - 1; ++j) {
      worst = std::max(worst, std::abs(sum(j) + from_below(j) - from_above(j)));
    }
  }
  double last = ladder.lambda + sum(J) - a(J) / (sig(J) + inst.k_target);
  if (J >= 2) last += from_below(J);
  worst = std::max(worst, std::abs(last));
  worst = std::max(worst, std::abs(ladder.lambda * (inst.var_x - sig(J))));
  worst = std::max(worst, std::max(0.0, -ladder.lambda));
  worst = std::max(worst, std::max(0.0, sig(J) - inst.var_x));
  return worst;
}

AuxiliaryLadder induced_ladder(const ScalarSolution& sol) {
  if (sol.scenario == Scenario::kLooseCentral) {
    throw Error(ErrorKind::kInvalidArgument,
                "loose-central solutions have no finite ladder");
  }
  AuxiliaryLadder out;
  const double vx = sol.var_x;
  const double cap = kLadderCap * vx;
  for (double s : sol.ladder.sigma2) {
    double n = s < vx ? 1.0 / (1.0 / s - 1.0 / vx) : cap;
    n = std::min(n, cap);
    out.N.push_back(SpdMatrix::scalar(n));
  }
  return out;
}

}  // namespace mdr
