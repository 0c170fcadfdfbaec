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

// Reference computations used only by the tests. They share no code with the
// library beyond Eigen's dense types.

#ifndef MDR_TESTS_ORACLES_HPP_
#define MDR_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;

// Log-determinant from eigenvalues.
inline double logdet_eig(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  return es.eigenvalues().array().log().sum();
}

// Cov[x | x + w_S] via the Schur complement of the joint covariance.
inline Mat conditional_cov(const Mat& kx, const Mat& kw, int n,
                           const std::vector<int>& s) {
  const int sz = static_cast<int>(s.size());
  Mat joint(n + sz * n, n + sz * n);
  joint.topLeftCorner(n, n) = kx;
  for (int a = 0; a < sz; ++a) {
    joint.block(0, n + a * n, n, n) = kx;
    joint.block(n + a * n, 0, n, n) = kx;
    for (int b = 0; b < sz; ++b) {
      joint.block(n + a * n, n + b * n, n, n) =
          kx + kw.block(s[a] * n, s[b] * n, n, n);
    }
  }
  const Mat c = joint.topRightCorner(n, sz * n);
  const Mat v = joint.bottomRightCorner(sz * n, sz * n);
  return kx - c * v.inverse() * c.transpose();
}

struct Groups {
  double alpha0 = 0.0;
  std::vector<double> alpha;
  std::vector<int> m;
  std::vector<int> order;  // caller indices by decreasing weight
};

inline Groups group(const std::vector<double>& beta) {
  Groups g;
  g.order.resize(beta.size());
  std::iota(g.order.begin(), g.order.end(), 0);
  std::stable_sort(g.order.begin(), g.order.end(),
                   [&](int a, int b) { return beta[a] > beta[b]; });
  std::vector<double> b;
  for (int i : g.order) b.push_back(beta[i]);
  g.alpha0 = b[0] - b[1];
  b[0] = b[1];
  for (double v : b) {
    if (!g.alpha.empty() && std::abs(g.alpha.back() - v) < 1e-12) {
      ++g.m.back();
    } else {
      g.alpha.push_back(v);
      g.m.push_back(1);
    }
  }
  return g;
}

// Outer bound for scalar sources written as a log of ratios. d in caller
// order, n_j ladder values.
inline double scalar_bound(double vx, double d0, const std::vector<double>& d,
                           const std::vector<double>& beta,
                           const std::vector<double>& n) {
  const Groups g = group(beta);
  std::vector<double> ds;
  for (int i : g.order) ds.push_back(d[i]);
  const int J = static_cast<int>(g.alpha.size());
  const auto& a = g.alpha;
  double v = g.alpha0 / 2 * std::log(vx / ds[0]);
  if (J == 1) {
    double den = d0;
    for (double x : ds) den *= x + n[0];
    const double num =
        vx * std::pow(vx + n[0], static_cast<double>(ds.size()) - 1) * (d0 + n[0]);
    return v + a[0] / 2 * std::log(num / den);
  }
  std::vector<int> start(J + 1, 0);
  for (int j = 0; j < J; ++j) start[j + 1] = start[j] + g.m[j];
  auto prod = [&](int j) {
    double p = 1.0;
    for (int i = start[j]; i < start[j + 1]; ++i) p *= n[j] + ds[i];
    return p;
  };
  v += a[0] / 2 *
       std::log(a[0] * vx * std::pow(vx + n[0], g.m[0] - 1) * (n[1] - n[0]) /
                ((a[0] - a[1]) * prod(0) * n[1]));
  for (int j = 1; j < J - 1; ++j) {
    v += a[j] / 2 *
         std::log((a[j - 1] - a[j]) * std::pow(vx + n[j], g.m[j]) * n[j - 1] *
                  (n[j + 1] - n[j]) /
                  ((a[j] - a[j + 1]) * prod(j) * (n[j] - n[j - 1]) * n[j + 1]));
  }
  const int t = J - 1;
  v += a[t] / 2 *
       std::log((a[t - 1] - a[t]) * (n[t] + d0) * std::pow(vx + n[t], g.m[t]) *
                n[t - 1] / (a[t] * d0 * prod(t) * (n[t] - n[t - 1])));
  return v;
}

// Single-group (equal lower weights) bound with N_1 = n I, from determinants.
inline double sum_rate_bound(const Mat& kx, const Mat& d0,
                             const std::vector<Mat>& d,
                             const std::vector<double>& beta, double n) {
  const Groups g = group(beta);
  const Mat n1 = n * Mat::Identity(kx.rows(), kx.cols());
  double den = d0.determinant();
  for (const auto& dl : d) den *= (dl + n1).determinant();
  const double num = kx.determinant() *
                     std::pow((kx + n1).determinant(),
                              static_cast<double>(d.size()) - 1) *
                     (d0 + n1).determinant();
  return g.alpha0 / 2 * std::log(kx.determinant() / d[g.order[0]].determinant()) +
         g.alpha[0] / 2 * std::log(num / den);
}

inline double golden_max(const std::function<double(double)>& f, double lo,
                         double hi, int iters = 200) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - r * (b - a), e = a + r * (b - a);
  double fc = f(c), fe = f(e);
  for (int i = 0; i < iters && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++i) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + r * (b - a);
      fe = f(e);
    }
  }
  return std::max(fc, fe);
}

// 2001-point log grid over [1e-6, 1e6] followed by golden refinement.
inline double log_grid_max(const std::function<double(double)>& f) {
  const int pts = 2001;
  double best = -INFINITY;
  int arg = 0;
  std::vector<double> xs(pts);
  for (int i = 0; i < pts; ++i) {
    xs[i] = std::pow(10.0, -6.0 + 12.0 * i / (pts - 1));
    const double v = f(xs[i]);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const double lo = std::log(xs[std::max(arg - 1, 0)]);
  const double hi = std::log(xs[std::min(arg + 1, pts - 1)]);
  return std::max(best,
                  golden_max([&](double t) { return f(std::exp(t)); }, lo, hi));
}

// Scalar chain for equal noise k and J = 1: uk = (k + s) / m - s.
inline double equal_noise_uk(double k, int m, double s) { return (k + s) / m - s; }

}  // namespace oracle

#endif  // MDR_TESTS_ORACLES_HPP_
