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

#include "mdr/outer_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mdr/error.hpp"
#include "mdr/nelder_mead.hpp"

namespace mdr {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kDegenerateEig = 1e-12;
constexpr double kPolishStep = 1e-6;
constexpr int kPolishSweeps = 40;

struct Context {
  const WeightProfile* profile;
  int n;
  Matrix kx;
  Matrix d0;
  std::vector<Matrix> d;  // sorted order
  double ld_kx;
  double ld_d0;
  double ld_d1;
};

Context make_context(const ProblemInstance& inst, const WeightProfile& profile) {
  if (inst.L() != profile.L()) {
    throw Error(ErrorKind::kLengthMismatch,
                "instance has " + std::to_string(inst.L()) +
                    " descriptions, profile has " +
                    std::to_string(profile.L()));
  }
  Context c{&profile, inst.N(), inst.Kx.mat(), inst.D0.mat(), {}, 0, 0, 0};
  for (const auto& m : sorted_distortions(inst, profile)) c.d.push_back(m.mat());
  c.ld_kx = logdet(inst.Kx);
  c.ld_d0 = logdet(inst.D0);
  c.ld_d1 = logdet(c.d[0]);
  return c;
}

// Evaluates every term; any non-finite logdet makes the result degenerate.
BoundTerms evaluate_terms(const Context& c, const std::vector<Matrix>& nm,
                          bool& degenerate) {
  const WeightProfile& p = *c.profile;
  const int J = p.J();
  const double dn = static_cast<double>(c.n);
  degenerate = false;
  auto ld = [&](const Matrix& m) {
    const double v = logdet_or_neg_inf(m);
    if (!std::isfinite(v)) degenerate = true;
    return v;
  };
  auto sum_ld_desc = [&](int j, const Matrix& nj) {
    double s = 0.0;
    for (int i = p.M(j - 1); i < p.M(j); ++i) s += ld(nj + c.d[i]);
    return s;
  };

  BoundTerms t;
  t.alpha0 = 0.5 * p.alpha0 * (c.ld_kx - c.ld_d1);
  if (J == 1) {
    const Matrix& n1 = nm[0];
    double s = c.ld_kx + (p.L() - 1) * ld(c.kx + n1) + ld(c.d0 + n1) - c.ld_d0;
    for (const auto& dl : c.d) s -= ld(dl + n1);
    t.head = 0.5 * p.alpha(1) * s;
    return t;
  }

  {
    const double a1 = p.alpha(1), a2 = p.alpha(2);
    const Matrix& n1 = nm[0];
    const Matrix& n2 = nm[1];
    const double s = dn * std::log(a1) + c.ld_kx +
                     (p.m(1) - 1) * ld(c.kx + n1) + ld(n2 - n1) -
                     dn * std::log(a1 - a2) - sum_ld_desc(1, n1) - ld(n2);
    t.head = 0.5 * a1 * s;
  }
  for (int j = 2; j <= J - 1; ++j) {
    const double aprev = p.alpha(j - 1), aj = p.alpha(j), anext = p.alpha(j + 1);
    const Matrix& np = nm[j - 2];
    const Matrix& nj = nm[j - 1];
    const Matrix& nn = nm[j];
    const double s = dn * std::log(aprev - aj) + p.m(j) * ld(c.kx + nj) +
                     ld(np) + ld(nn - nj) - dn * std::log(aj - anext) -
                     sum_ld_desc(j, nj) - ld(nj - np) - ld(nn);
    t.middle.push_back(0.5 * aj * s);
  }
  {
    const double aprev = p.alpha(J - 1), aj = p.alpha(J);
    const Matrix& np = nm[J - 2];
    const Matrix& nj = nm[J - 1];
    const double s = dn * std::log(aprev - aj) + ld(nj + c.d0) +
                     p.m(J) * ld(c.kx + nj) + ld(np) - dn * std::log(aj) -
                     c.ld_d0 - sum_ld_desc(J, nj) - ld(nj - np);
    t.tail = 0.5 * aj * s;
  }
  return t;
}

double fast_objective(const Context& c, const std::vector<Matrix>& nm) {
  bool degenerate = false;
  const BoundTerms t = evaluate_terms(c, nm, degenerate);
  const double v = t.total();
  return degenerate || !std::isfinite(v) ? kNegInf : v;
}

std::vector<Matrix> factor_ladder(const WeightProfile& p, int n,
                                  const Vector& x, double eps) {
  std::vector<Matrix> out;
  Matrix s = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(n, n);
  for (int j = 1; j <= p.J(); ++j) {
    const Eigen::Map<const Matrix> g(x.data() + (j - 1) * n * n, n, n);
    s += g * g.transpose() + eps * id;
    out.push_back(s / p.alpha(j));
  }
  return out;
}

void check_ladder(const Context& c, const AuxiliaryLadder& ladder) {
  const WeightProfile& p = *c.profile;
  if (ladder.J() != p.J()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "ladder has " + std::to_string(ladder.J()) +
                    " entries, profile has J = " + std::to_string(p.J()));
  }
  for (const auto& m : ladder.N) {
    if (m.dim() != c.n) {
      throw Error(ErrorKind::kDimensionMismatch, "ladder matrix size");
    }
  }
  const Matrix& n1 = ladder.N[0].mat();
  if (min_eigenvalue(n1) <= 0.0) {
    throw Error(ErrorKind::kOrderingViolation, "N_1 must be positive definite");
  }
  for (int j = 1; j < p.J(); ++j) {
    const Matrix lo = p.alpha(j) * ladder.N[j - 1].mat();
    const Matrix hi = p.alpha(j + 1) * ladder.N[j].mat();
    const double scale = std::max(pd_tolerance(hi), kDegenerateEig);
    if (min_eigenvalue(hi - lo) < -scale) {
      throw Error(ErrorKind::kOrderingViolation,
                  "alpha_j N_j must increase at j = " + std::to_string(j));
    }
  }
}

bool has_degenerate_difference(const AuxiliaryLadder& ladder) {
  for (int j = 1; j < ladder.J(); ++j) {
    if (min_eigenvalue(ladder.N[j].mat() - ladder.N[j - 1].mat()) <
        kDegenerateEig) {
      return true;
    }
  }
  return false;
}

Vector random_start(const WeightProfile& p, int n, double scale,
                    std::mt19937_64& rng, bool first) {
  std::uniform_real_distribution<double> logu(std::log(1e-2), std::log(1e1));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(p.J() * n * n);
  for (int j = 0; j < p.J(); ++j) {
    const double inc = first ? 0.3 : std::exp(logu(rng));
    const double amp = std::sqrt(p.alpha(1) * scale * inc);
    Eigen::Map<Matrix> g(x.data() + j * n * n, n, n);
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < n; ++q) {
        const double noise = first ? 0.0 : 0.3 * gauss(rng);
        g(r, q) = amp * ((r == q ? 1.0 : 0.0) + noise);
      }
    }
  }
  return x;
}

// Coordinate-wise Newton steps from central differences.
void polish(const std::function<double(const Vector&)>& f, Vector& x,
            double& fx, double rel_tol, int& evals) {
  for (int sweep = 0; sweep < kPolishSweeps; ++sweep) {
    const double start = fx;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double h = kPolishStep * std::max(std::abs(x[i]), 1e-3);
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fp = f(xp), fm = f(xm);
      evals += 2;
      const double g = (fp - fm) / (2.0 * h);
      const double curv = (fp - 2.0 * fx + fm) / (h * h);
      Vector cand = x;
      if (curv > 0.0 && std::isfinite(curv)) {
        cand[i] -= g / curv;
      } else {
        cand[i] = fp < fm ? xp[i] : xm[i];
      }
      const double fc = f(cand);
      ++evals;
      if (fc < fx) {
        x = cand;
        fx = fc;
      }
    }
    if (start - fx <= rel_tol * std::max(std::abs(fx), 1e-12)) break;
  }
}

}  // namespace

double BoundTerms::total() const {
  double s = alpha0 + head + tail;
  for (double m : middle) s += m;
  return s;
}

BoundTerms bound_objective_terms(const ProblemInstance& inst,
                                 const WeightProfile& profile,
                                 const AuxiliaryLadder& ladder) {
  const Context c = make_context(inst, profile);
  check_ladder(c, ladder);
  std::vector<Matrix> nm;
  for (const auto& m : ladder.N) nm.push_back(m.mat());
  bool degenerate = false;
  return evaluate_terms(c, nm, degenerate);
}

double bound_objective(const ProblemInstance& inst,
                       const WeightProfile& profile,
                       const AuxiliaryLadder& ladder) {
  const Context c = make_context(inst, profile);
  check_ladder(c, ladder);
  if (has_degenerate_difference(ladder)) return kNegInf;
  std::vector<Matrix> nm;
  for (const auto& m : ladder.N) nm.push_back(m.mat());
  return fast_objective(c, nm);
}

double loose_central_bound(const ProblemInstance& inst,
                           const WeightProfile& profile) {
  const std::vector<SpdMatrix> d = sorted_distortions(inst, profile);
  double v = profile.alpha0 * min_single_description_rate(inst.Kx, d[0]);
  int idx = 0;
  for (const WeightGroup& g : profile.groups) {
    for (int i = 0; i < g.m; ++i, ++idx) {
      v += g.alpha * min_single_description_rate(inst.Kx, d[idx]);
    }
  }
  return v;
}

AuxiliaryLadder epsilon_ladder(const WeightProfile& profile, int n,
                               double eps) {
  AuxiliaryLadder out;
  double geom = 0.0;
  double power = 1.0;
  for (int j = 1; j <= profile.J(); ++j) {
    geom += power;
    power *= eps;
    out.N.push_back(SpdMatrix::identity(n, eps * geom / profile.alpha(j)));
  }
  return out;
}

AuxiliaryLadder ladder_from_factors(const WeightProfile& profile, int n,
                                    const Vector& factors, double eps) {
  if (factors.size() != profile.J() * n * n) {
    throw Error(ErrorKind::kDimensionMismatch, "factor vector length");
  }
  AuxiliaryLadder out;
  for (const auto& m : factor_ladder(profile, n, factors, eps)) {
    out.N.emplace_back(m);
  }
  return out;
}

BoundResult maximize_bound(const ProblemInstance& inst,
                           const WeightProfile& profile,
                           const OptimizerOptions& opts) {
  validate(inst);
  const Context c = make_context(inst, profile);
  const int n = c.n;
  const double scale = c.kx.trace() / n;

  double best = kNegInf;
  Vector best_x;
  auto neg = [&](const Vector& x) {
    const double v = fast_objective(c, factor_ladder(profile, n, x, opts.eps_cone));
    if (v > best) {
      best = v;
      best_x = x;
    }
    return -v;
  };

  NelderMeadOptions nm;
  nm.rel_tol = opts.rel_tol;
  nm.patience = opts.patience;
  nm.max_evals = opts.max_evals;

  BoundResult res;
  std::mt19937_64 rng(opts.seed);
  bool best_converged = false;
  for (int s = 0; s < std::max(1, opts.starts); ++s) {
    const Vector x0 = random_start(profile, n, scale, rng, s == 0);
    Vector step(x0.size());
    const double floor = 0.1 * std::sqrt(profile.alpha(1) * scale);
    for (Eigen::Index i = 0; i < x0.size(); ++i) {
      step[i] = 0.25 * std::max(std::abs(x0[i]), floor);
    }
    const double before = best;
    const NelderMeadResult r = nelder_mead_minimize(neg, x0, step, nm);
    res.evaluations += r.evaluations;
    res.start_values.push_back(-r.fx);
    if (best > before || s == 0) best_converged = r.converged;
  }

  Vector x = best_x;
  double fx = -best;
  polish(neg, x, fx, opts.rel_tol, res.evaluations);

  res.converged = best_converged;
  const double loose = loose_central_bound(inst, profile);
  if (loose >= best) {
    res.value = loose;
    res.at_limit = true;
    res.converged = true;
    res.ladder = epsilon_ladder(profile, n, 1e-9);
  } else {
    res.value = best;
    res.ladder = ladder_from_factors(profile, n, best_x, opts.eps_cone);
  }
  return res;
}

}  // namespace mdr
