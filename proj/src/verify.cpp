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

#include "mdr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mdr/achievable.hpp"
#include "mdr/epi.hpp"
#include "mdr/error.hpp"

namespace mdr {
namespace {

std::string describe(const ScalarInstance& s, const std::vector<double>& beta) {
  std::ostringstream os;
  os.precision(17);
  os << "var_x=" << s.var_x << " d0=" << s.d0 << " d=[";
  for (size_t i = 0; i < s.d.size(); ++i) os << (i ? "," : "") << s.d[i];
  os << "] beta=[";
  for (size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << "]";
  return os.str();
}

std::string describe_matrix(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ";" : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

// Records a measured violation; fails the suite when it exceeds the limit.
void observe(SuiteResult& r, double violation, double limit,
             const std::string& context) {
  if (!std::isfinite(violation)) violation = std::numeric_limits<double>::max();
  r.worst = std::max(r.worst, violation);
  if (violation > limit && r.passed) {
    r.passed = false;
    std::ostringstream os;
    os << context << " (measured " << violation << ", limit " << limit << ")";
    r.first_failure = os.str();
  }
}

void require(SuiteResult& r, bool ok, const std::string& context) {
  observe(r, ok ? 0.0 : 1.0, 0.5, context);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Subset prefix(int count) {
  Subset s(static_cast<size_t>(count));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Matrix gaussian_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

bool try_channel(const std::vector<SpdMatrix>& k,
                 const std::vector<SpdMatrix>& a, const WeightProfile& p,
                 std::optional<TestChannel>& out) {
  try {
    out = TestChannel::make(k, a, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<SpdMatrix> scaled(const std::vector<Matrix>& dir, double t) {
  std::vector<SpdMatrix> out;
  for (const auto& d : dir) out.emplace_back(t * d);
  return out;
}

std::vector<Matrix> cone_directions(Rng& rng, int n, const WeightProfile& p,
                                    double scale) {
  std::vector<Matrix> out;
  Matrix acc = Matrix::Zero(n, n);
  for (int j = 1; j <= p.J(); ++j) {
    acc += random_spd(rng, n, 0.05 * scale, scale);
    out.push_back(acc / p.alpha(j));
  }
  return out;
}

}  // namespace

std::vector<double> random_strict_weights(Rng& rng, int L) {
  std::vector<double> beta;
  while (static_cast<int>(beta.size()) < L) {
    const double b = uniform(rng, 0.5, 3.0);
    bool distinct = true;
    for (double v : beta) distinct = distinct && std::abs(v - b) > 1e-3;
    if (distinct) beta.push_back(b);
  }
  return beta;
}

Matrix random_spd(Rng& rng, int n, double lo, double hi) {
  const Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(rng, n, n));
  const Matrix q = qr.householderQ();
  Vector eig(n);
  for (int i = 0; i < n; ++i) eig[i] = uniform(rng, lo, hi);
  return symmetrize(q * eig.asDiagonal() * q.transpose());
}

ScalarInstance random_interior_instance(Rng& rng, int L,
                                        const WeightProfile& profile) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double vx = uniform(rng, 0.5, 2.0);
    std::vector<double> d;
    double inv = 0.0;
    for (int l = 0; l < L; ++l) {
      d.push_back(vx * uniform(rng, 0.15, 0.85));
      inv += 1.0 / d.back();
    }
    const double d0_star = 1.0 / (inv - (L - 1) / vx);
    const double d0 = d0_star * uniform(rng, 0.05, 0.95);
    const ScalarInstance s = make_scalar_instance(vx, d0, d);
    if (solve(s, profile).scenario == Scenario::kInterior) return s;
  }
  throw Error(ErrorKind::kInvalidArgument, "no interior instance sampled");
}

std::optional<ScalarInstance> random_enhanced_instance(
    Rng& rng, int L, const WeightProfile& profile) {
  const int loose = profile.permutation[static_cast<size_t>(L - 1)];
  for (int attempt = 0; attempt < 5000; ++attempt) {
    const double vx = uniform(rng, 0.5, 2.0);
    std::vector<double> d;
    for (int l = 0; l < L; ++l) {
      d.push_back(l == loose ? vx * uniform(rng, 0.9, 0.995)
                             : vx * uniform(rng, 0.2, 0.6));
    }
    const double d0 = *std::min_element(d.begin(), d.end()) *
                      uniform(rng, 0.01, 0.3);
    const ScalarInstance s = make_scalar_instance(vx, d0, d);
    if (solve(s, profile).scenario == Scenario::kEnhanced) return s;
  }
  return std::nullopt;
}

TestChannel random_layered_channel(Rng& rng, int n,
                                   const WeightProfile& profile) {
  std::vector<SpdMatrix> k;
  for (int l = 0; l < profile.L(); ++l) {
    k.emplace_back(random_spd(rng, n, 0.5, 2.0));
  }
  const std::vector<Matrix> dir = cone_directions(rng, n, profile, 0.5);
  std::optional<TestChannel> tc;
  double t = 1.0;
  for (int i = 0; i < 200; ++i, t *= 0.5) {
    if (try_channel(k, scaled(dir, t), profile, tc)) break;
  }
  // Keep a margin from the PD boundary.
  if (!try_channel(k, scaled(dir, 0.7 * t), profile, tc)) {
    throw Error(ErrorKind::kNotPositiveDefinite, "no PD layered channel");
  }
  return *tc;
}

std::optional<TestChannel> random_feasible_channel(
    Rng& rng, const ProblemInstance& inst, const WeightProfile& profile) {
  const NoiseTargets nt = distortion_to_noise(inst);
  const int n = inst.N();
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<SpdMatrix> k;
    for (int i : profile.permutation) {
      const Matrix half = psd_sqrt(nt.K[static_cast<size_t>(i)].mat());
      const Matrix h = uniform(rng, 0.0, 0.7) * gaussian_matrix(rng, n, n);
      k.emplace_back(half *
                     spd_inverse(Matrix::Identity(n, n) + h * h.transpose()) *
                     half);
    }
    // Directions shaped like the noise covariances reach the central
    // target well before K_w loses definiteness.
    Matrix mean = Matrix::Zero(n, n);
    for (const auto& m : k) mean += m.mat() / profile.L();
    const Matrix shape = psd_sqrt(mean);
    std::vector<Matrix> dir;
    Matrix acc = Matrix::Zero(n, n);
    for (int j = 1; j <= profile.J(); ++j) {
      acc += shape *
             (uniform(rng, 0.05, 1.0) * Matrix::Identity(n, n) +
              random_spd(rng, n, 0.0, 0.3)) *
             shape;
      dir.push_back(acc / profile.alpha(j));
    }
    std::optional<TestChannel> tc;
    double t = 1e-3;
    for (int g = 0; g < 60; ++g, t *= 1.5) {
      if (!try_channel(k, scaled(dir, t), profile, tc)) break;
      if (channel_meets_constraints(inst, *tc, 1e-12)) {
        const double over = t * uniform(rng, 1.0, 1.3);
        std::optional<TestChannel> wider;
        if (try_channel(k, scaled(dir, over), profile, wider) &&
            channel_meets_constraints(inst, *wider, 1e-12)) {
          return wider;
        }
        return tc;
      }
    }
  }
  return std::nullopt;
}

AuxiliaryLadder random_ladder(Rng& rng, int n, const WeightProfile& profile,
                              double scale) {
  Vector x(profile.J() * n * n);
  for (int j = 0; j < profile.J(); ++j) {
    const double inc = std::exp(uniform(rng, std::log(1e-3), std::log(1e2)));
    const Matrix g = std::sqrt(profile.alpha(1) * scale * inc) *
                     (Matrix::Identity(n, n) + 0.5 * gaussian_matrix(rng, n, n));
    x.segment(j * n * n, n * n) = Eigen::Map<const Vector>(g.data(), n * n);
  }
  return ladder_from_factors(profile, n, x, 1e-9);
}

Matrix conditional_covariance(const Matrix& kx, const Matrix& kw, int n,
                              const Subset& s) {
  const int sz = static_cast<int>(s.size());
  Matrix cross(n, sz * n);
  Matrix cov(sz * n, sz * n);
  for (int a = 0; a < sz; ++a) {
    cross.block(0, a * n, n, n) = kx;
    for (int b = 0; b < sz; ++b) {
      cov.block(a * n, b * n, n, n) = kx + kw.block(s[a] * n, s[b] * n, n, n);
    }
  }
  return symmetrize(kx - cross * cov.ldlt().solve(cross.transpose()));
}

SuiteResult suite_linalg(const VerifyOptions& opts) {
  SuiteResult r{"linalg identities", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x11);
  for (int i = 0; i < 1000; ++i, ++r.cases) {
    const int n = uniform_int(rng, 1, 4);
    const SpdMatrix a(random_spd(rng, n, 0.1, 10.0));
    const SpdMatrix b(random_spd(rng, n, 0.1, 10.0));
    observe(r, std::abs(logdet(a) + logdet(inverse(a))), 1e-9,
            "logdet(A) + logdet(A^-1) for A=" + describe_matrix(a.mat()));

    const Matrix c = 0.5 * gaussian_matrix(rng, n, n);
    observe(r, inversion_identity_residual(a, b, c, c.transpose()), 1e-10,
            "inversion identity for A=" + describe_matrix(a.mat()));

    const SpdMatrix hi(b.mat() + random_spd(rng, n, 0.05, 2.0));
    require(r, ordering_consequences_hold(hi, b),
            "ordering consequences for B=" + describe_matrix(b.mat()));

    const SpdMatrix top(hi.mat() + random_spd(rng, n, 0.05, 2.0));
    require(r, !loewner_less(b, b, 1e-12), "loewner_less is irreflexive");
    require(r, loewner_less(b, hi, 1e-12) && loewner_less(hi, top, 1e-12) &&
                   loewner_less(b, top, 1e-12),
            "loewner_less is transitive on B=" + describe_matrix(b.mat()));
  }
  return r;
}

SuiteResult suite_channel(const VerifyOptions& opts) {
  SuiteResult r{"test channel (MMSE oracle, fixed point)", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x22);
  for (int i = 0; i < 200; ++i, ++r.cases) {
    const int L = uniform_int(rng, 2, 4);
    const int n = uniform_int(rng, 1, 3);
    const WeightProfile p = group_weights(random_strict_weights(rng, L));
    const TestChannel tc = random_layered_channel(rng, n, p);
    const SpdMatrix kx(random_spd(rng, n, 0.5, 3.0));
    const std::string ctx = "channel Kw=" + describe_matrix(tc.Kw());

    observe(r, fixedpoint_residual(tc), 1e-9, "fixed-point residual, " + ctx);
    for (int mask = 1; mask < (1 << L); ++mask) {
      Subset s;
      for (int l = 0; l < L; ++l) {
        if (mask & (1 << l)) s.push_back(l);
      }
      const Matrix via_noise =
          mmse_distortion(kx, effective_noise(tc, s)).mat();
      const Matrix schur = conditional_covariance(kx.mat(), tc.Kw(), n, s);
      observe(r, (via_noise - schur).cwiseAbs().maxCoeff(), 1e-10,
              "MMSE vs Schur complement, " + ctx);
      for (int l = 0; l < L; ++l) {
        if (mask & (1 << l)) continue;
        Subset bigger = s;
        bigger.push_back(l);
        const Matrix more = mmse_distortion(kx, effective_noise(tc, bigger)).mat();
        observe(r, -min_eigenvalue(via_noise - more), 1e-10,
                "MMSE monotone in the subset, " + ctx);
      }
    }
    const RatePoint v = vertex_rates(kx, tc);
    double partial = 0.0;
    for (int m = 1; m <= L; ++m) {
      partial += v.rates[static_cast<size_t>(m - 1)];
      observe(r, std::abs(partial - subset_rate_bound(kx, tc, prefix(m))), 1e-12,
              "vertex partial sums, " + ctx);
    }
  }
  return r;
}

SuiteResult suite_epi(const VerifyOptions& opts) {
  SuiteResult r{"extremal inequality (Gaussian case)", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x33);
  {
    EpiInstance e{2.0, 1.0, SpdMatrix::scalar(1.0), SpdMatrix::scalar(3.0),
                  SpdMatrix::scalar(3.0), 1};
    const double want = 0.5 * std::log(9.0 / 8.0);
    observe(r, std::abs(epi_lhs_gaussian(e) - want), 1e-12, "scalar lhs");
    observe(r, std::abs(epi_rhs(e) - want), 1e-12, "scalar rhs");
    ++r.cases;
  }
  for (int i = 0; i < 500; ++i, ++r.cases) {
    const int n = uniform_int(rng, 1, 3);
    const double mu2 = uniform(rng, 0.2, 2.0);
    const double mu1 = mu2 * uniform(rng, 1.05, 4.0);
    const Matrix n1 = random_spd(rng, n, 0.1, 5.0);
    const Matrix n2 = (mu1 / mu2) * n1 + random_spd(rng, n, 0.1, 5.0);
    EpiInstance e{mu1, mu2, SpdMatrix(n1), SpdMatrix(n2),
                  SpdMatrix(random_spd(rng, n, 0.01, 10.0)), 1};
    const std::string ctx = "mu=(" + std::to_string(mu1) + "," +
                            std::to_string(mu2) + ") N1=" + describe_matrix(n1) +
                            " N2=" + describe_matrix(n2);
    const EpiCheck random_b = verify_epi(e);
    observe(r, -random_b.gap, 1e-9, "gap >= 0 at random B, " + ctx);
    observe(r, -costa_gap(e), 1e-9, "Costa form >= 0, " + ctx);

    e.B = equality_covariance(mu1, mu2, e.N1, e.N2);
    const EpiCheck eq = verify_epi(e);
    require(r, eq.at_equality, "equality covariance recognised, " + ctx);
    observe(r, std::abs(eq.gap), 1e-9, "gap vanishes at equality, " + ctx);

    for (int rep = 2; rep <= 3; ++rep) {
      EpiInstance er = e;
      er.B = SpdMatrix(random_spd(rng, n, 0.01, 10.0));
      const double g1 = verify_epi(er).gap;
      er.n = rep;
      observe(r, std::abs(verify_epi(er).gap - rep * g1),
              1e-10 * rep * std::max(1.0, std::abs(g1)),
              "gap linear in n, " + ctx);
    }
  }
  return r;
}

SuiteResult suite_monotonicity(const VerifyOptions& opts) {
  SuiteResult r{"chain monotonicity", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x44);
  for (int i = 0; i < 20; ++i, ++r.cases) {
    const int L = uniform_int(rng, 3, 5);
    const std::vector<double> beta = random_strict_weights(rng, L);
    const WeightProfile p = group_weights(beta);
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const std::vector<double> k = to_sorted_order(p, s.k);
    const std::string ctx = describe(s, beta);
    // Upper end of the support of the full chain.
    double lo = 0.0, hi = s.var_x;
    while (chain_solve(k, p, hi).feasible) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (chain_solve(k, p, mid).feasible ? lo : hi) = mid;
    }
    ChainResult prev;
    for (int g = 1; g <= 50; ++g) {
      const double s1 = lo * g / 51.0;
      const ChainResult c = chain_solve(k, p, s1);
      require(r, c.feasible, "chain feasible inside support, " + ctx);
      if (!c.feasible) break;
      for (int j = 1; j < p.J(); ++j) {
        require(r, p.alpha(j) * c.sigma2[j - 1] < p.alpha(j + 1) * c.sigma2[j],
                "alpha_j sigma_j^2 increasing, " + ctx);
      }
      if (g > 1) {
        for (int j = 0; j < p.J(); ++j) {
          require(r, c.sigma2[j] > prev.sigma2[j],
                  "sigma_j^2 increasing in sigma_1^2, " + ctx);
          require(r, c.uk[j] < prev.uk[j],
                  "prefix noise decreasing in sigma_1^2, " + ctx);
        }
      }
      prev = c;
    }
  }
  return r;
}

SuiteResult suite_tightness(const VerifyOptions& opts) {
  SuiteResult r{"scalar tightness", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x55);
  for (int i = 0; i < opts.tightness_instances; ++i, ++r.cases) {
    const int L = uniform_int(rng, 2, 5);
    const std::vector<double> beta = random_strict_weights(rng, L);
    const WeightProfile p = group_weights(beta);
    const ScalarInstance s = random_interior_instance(rng, L, p);
    const ScalarSolution sol = solve(s, p);
    const std::string ctx = describe(s, beta);
    const double ws = weighted_sum(p, vertex_rates(SpdMatrix::scalar(s.var_x),
                                                   sol.channel));
    const double bound =
        opts.bound(to_problem_instance(s), p, induced_ladder(sol));
    observe(r, std::abs(ws - bound), 1e-6, "vertex vs induced bound, " + ctx);
    observe(r, std::abs(ws - sol.value), 1e-8, "vertex vs solver value, " + ctx);
    observe(r, fixedpoint_residual(sol.channel), 1e-9, "fixed point, " + ctx);
    require(r, SpdMatrix(sol.channel.Kw()).is_pd(), "K_w PD, " + ctx);
    if (p.J() >= 2) {
      observe(r, kkt_residual(s, p, sol.ladder), 1e-8, "KKT residual, " + ctx);
      observe(r, proportionality_residual(sol.channel), 1e-8,
              "proportionality, " + ctx);
    }
  }
  return r;
}

SuiteResult suite_loose_central(const VerifyOptions& opts) {
  SuiteResult r{"loose central corner", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x66);
  for (int i = 0; i < 50; ++i, ++r.cases) {
    const int L = uniform_int(rng, 2, 5);
    const std::vector<double> beta = random_strict_weights(rng, L);
    const WeightProfile p = group_weights(beta);
    const double vx = uniform(rng, 0.5, 2.0);
    std::vector<double> d;
    double inv = 0.0;
    for (int l = 0; l < L; ++l) {
      d.push_back(vx * uniform(rng, 0.2, 0.9));
      inv += 1.0 / d.back();
    }
    const double d0_star = 1.0 / (inv - (L - 1) / vx);
    const double dmin = *std::min_element(d.begin(), d.end());
    const double d0 = d0_star + uniform(rng, 0.0, 0.95) * (dmin - d0_star);
    const ScalarInstance s = make_scalar_instance(vx, d0, d);
    const std::string ctx = describe(s, beta);
    const ScalarSolution sol = solve(s, p);
    require(r, sol.scenario == Scenario::kLooseCentral, "dispatch, " + ctx);
    double direct = 0.0;
    for (int l = 0; l < L; ++l) direct += beta[l] * 0.5 * std::log(vx / d[l]);
    observe(r, std::abs(sol.value - direct), 1e-9, "value, " + ctx);
    observe(r, sol.d0_star - d0, 0.0, "d0* <= d0, " + ctx);
    observe(r, fixedpoint_residual(sol.channel), 1e-9, "fixed point, " + ctx);
  }
  return r;
}

SuiteResult suite_enhancement(const VerifyOptions& opts) {
  SuiteResult r{"enhancement invariance", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x77);
  int built = 0;
  for (int attempt = 0; built < 20 && attempt < 200; ++attempt) {
    const int L = uniform_int(rng, 2, 4);
    const std::vector<double> beta = random_strict_weights(rng, L);
    const WeightProfile p = group_weights(beta);
    const std::optional<ScalarInstance> s = random_enhanced_instance(rng, L, p);
    if (!s) continue;
    ++built;
    ++r.cases;
    const std::string ctx = describe(*s, beta);
    const ScalarSolution a = solve(*s, p);
    const Enhancement& e = *a.enhancement;
    observe(r, e.k_L_prime - e.k_L, 0.0, "k_L' <= k_L, " + ctx);
    observe(r, -a.ladder.lambda, 0.0, "lambda >= 0, " + ctx);
    observe(r, kkt_residual(*s, p, a.ladder), 1e-8, "KKT residual, " + ctx);
    observe(r, fixedpoint_residual(a.channel), 1e-9, "fixed point, " + ctx);
    const double bound =
        opts.bound(to_problem_instance(*s), p, induced_ladder(a));
    observe(r, std::abs(bound - a.value), 1e-6, "induced bound, " + ctx);

    ScalarInstance moved = *s;
    const double dl = e.d_L_prime + uniform(rng, 0.2, 0.9) * (s->var_x - e.d_L_prime);
    moved.d[static_cast<size_t>(e.replaced_index)] = dl;
    moved = make_scalar_instance(moved.var_x, moved.d0, moved.d);
    const ScalarSolution b = solve(moved, p);
    require(r, b.scenario == Scenario::kEnhanced, "still enhanced, " + ctx);
    observe(r, std::abs(a.value - b.value), 1e-8, "value invariant in d_L, " + ctx);
  }
  require(r, built == 20, "constructed 20 enhanced instances");
  return r;
}

SuiteResult suite_soundness(const VerifyOptions& opts) {
  SuiteResult r{"outer bound soundness sampling", true, 0, 0.0, {}};
  Rng rng(opts.seed ^ 0x88);
  for (int inst_i = 0; inst_i < 4; ++inst_i) {
    const int n = inst_i < 2 ? 1 : 2;
    const int L = inst_i % 2 == 0 ? 3 : 2;
    const std::vector<double> beta = random_strict_weights(rng, L);
    const WeightProfile p = group_weights(beta);
    const Matrix kx = random_spd(rng, n, 1.0, 2.0);
    std::vector<SpdMatrix> d;
    for (int l = 0; l < L; ++l) {
      d.emplace_back(uniform(rng, 0.3, 0.7) * kx);
    }
    const ProblemInstance inst =
        make_instance(SpdMatrix(kx), SpdMatrix(uniform(rng, 0.05, 0.15) * kx), d);
    const double scale = kx.trace() / n;
    for (int pair = 0; pair < 500; ++pair, ++r.cases) {
      const std::optional<TestChannel> tc = random_feasible_channel(rng, inst, p);
      require(r, tc.has_value(), "feasible channel sampled");
      if (!tc) break;
      const double ws = weighted_sum(p, vertex_rates(inst.Kx, *tc));
      const double b = opts.bound(inst, p, random_ladder(rng, n, p, scale));
      observe(r, b - ws, 1e-8,
              "bound <= achievable weighted sum, Kx=" + describe_matrix(kx));
    }
  }
  return r;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  return {suite_linalg(opts),       suite_channel(opts),
          suite_epi(opts),          suite_monotonicity(opts),
          suite_tightness(opts),    suite_loose_central(opts),
          suite_enhancement(opts),  suite_soundness(opts)};
}

}  // namespace mdr
