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

#include "mdr/nelder_mead.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

namespace mdr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// GSL rejects non-finite objective values; infeasible points get this instead.
constexpr double kPenalty = std::numeric_limits<double>::max() / 16;

struct Run {
  Vector x;
  double fx;
  bool converged;
};

double clean(double v) { return std::isfinite(v) ? v : kInf; }

double scale_of(double v) { return std::max(std::abs(v), 1e-12); }

struct Bridge {
  const Objective* f;
  int* evals;
  Vector scratch;
};

double trampoline(const gsl_vector* x, void* params) {
  auto* b = static_cast<Bridge*>(params);
  for (Eigen::Index i = 0; i < b->scratch.size(); ++i) {
    b->scratch[i] = gsl_vector_get(x, static_cast<size_t>(i));
  }
  ++*b->evals;
  const double v = (*b->f)(b->scratch);
  return std::isfinite(v) ? std::min(v, kPenalty) : kPenalty;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const {
    gsl_multimin_fminimizer_free(m);
  }
};

std::unique_ptr<gsl_vector, VectorDeleter> to_gsl(const Vector& v) {
  std::unique_ptr<gsl_vector, VectorDeleter> out(
      gsl_vector_alloc(static_cast<size_t>(v.size())));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    gsl_vector_set(out.get(), static_cast<size_t>(i), v[i]);
  }
  return out;
}

Run simplex_run(const Objective& f, const Vector& x0, const Vector& step,
                const NelderMeadOptions& opts, int& evals) {
  const int n = static_cast<int>(x0.size());
  Bridge bridge{&f, &evals, Vector(n)};
  gsl_multimin_function fn{&trampoline, static_cast<size_t>(n), &bridge};
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2,
                                    static_cast<size_t>(n)));
  auto x = to_gsl(x0);
  auto ss = to_gsl(step);
  if (gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), ss.get()) !=
      GSL_SUCCESS) {
    return {x0, kInf, false};
  }

  std::vector<double> history;
  bool converged = false;
  while (evals < opts.max_evals) {
    const int status = gsl_multimin_fminimizer_iterate(m.get());
    const double best = gsl_multimin_fminimizer_minimum(m.get());
    history.push_back(best);
    const size_t it = history.size() - 1;
    const double tol = opts.rel_tol * scale_of(best);
    if (status != GSL_SUCCESS) {
      converged = it >= static_cast<size_t>(opts.patience) &&
                  history[it - opts.patience] - best <= tol;
      break;
    }
    if (it >= static_cast<size_t>(opts.patience) && best < kPenalty &&
        history[it - opts.patience] - best <= tol) {
      converged = true;
      break;
    }
  }
  const gsl_vector* xm = gsl_multimin_fminimizer_x(m.get());
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = gsl_vector_get(xm, static_cast<size_t>(i));
  const double fx = gsl_multimin_fminimizer_minimum(m.get());
  return {out, fx < kPenalty ? fx : kInf, converged};
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const Objective& f, const Vector& x0,
                                      const Vector& step,
                                      const NelderMeadOptions& opts) {
  gsl_set_error_handler_off();
  NelderMeadResult res;
  res.x = x0;
  res.fx = clean(f(x0));
  res.evaluations = 1;
  if (x0.size() == 0) {
    res.converged = true;
    return res;
  }
  Vector cur_step = step;
  for (int r = 0; r <= opts.max_restarts && res.evaluations < opts.max_evals;
       ++r) {
    const double before = res.fx;
    Run run = simplex_run(f, res.x, cur_step, opts, res.evaluations);
    if (run.fx <= res.fx) {
      res.x = run.x;
      res.fx = run.fx;
    }
    res.converged = run.converged;
    if (r > 0 && before - res.fx <= opts.rel_tol * scale_of(res.fx)) break;
    cur_step *= 0.25;
  }
  return res;
}

}  // namespace mdr
