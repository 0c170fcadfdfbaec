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

#include "mdr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdr/achievable.hpp"
#include "mdr/error.hpp"
#include "mdr/outer_bound.hpp"
#include "mdr/scalar_solver.hpp"
#include "mdr/verify.hpp"

namespace mdr::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string instance_path;
  std::string output_path;
  OptimizerOptions optimizer;
  int resolution = 11;
  bool bits = false;
};

double unit(bool bits) { return bits ? 1.0 / std::log(2.0) : 1.0; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<double> scaled(std::vector<double> v, double s) {
  for (double& x : v) x *= s;
  return v;
}

void emit(const RunConfig& cfg, const std::string& body,
          const std::string& summary, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot write output file: " + cfg.output_path);
  }
  f << body;
  out << summary << "\n";
}

InstanceFile load_with_beta(const RunConfig& cfg) {
  if (cfg.instance_path.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "--instance is required");
  }
  InstanceFile f = load_instance(cfg.instance_path);
  if (!f.beta) throw Error(ErrorKind::kInvalidInstance, "missing key: beta");
  return f;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const InstanceFile f = load_with_beta(cfg);
  const WeightProfile p = group_weights(*f.beta);
  const BoundResult b = maximize_bound(f.instance, p, cfg.optimizer);
  const double u = unit(cfg.bits);

  json doc;
  doc["command"] = "bound";
  doc["units"] = cfg.bits ? "bits" : "nats";
  doc["bound_value"] = b.value * u;
  if (b.at_limit) {
    doc["ladder"] = "limit (eps->0)";
  } else {
    json ladder = json::array();
    for (const auto& m : b.ladder.N) ladder.push_back(matrix_to_json(m.mat()));
    doc["ladder"] = std::move(ladder);
  }
  doc["converged"] = b.converged;
  doc["evaluations"] = b.evaluations;
  doc["start_values"] = scaled(b.start_values, u);
  emit(cfg, doc.dump(2) + "\n",
       "bound " + fmt(b.value * u) + (cfg.bits ? " bits" : " nats"), out);
  return b.converged ? kOk : kNotConverged;
}

int cmd_achieve(const RunConfig& cfg, std::ostream& out) {
  const InstanceFile f = load_with_beta(cfg);
  const WeightProfile p = group_weights(*f.beta);
  const AchieveResult a = achieve(f.instance, p, cfg.optimizer);
  const double u = unit(cfg.bits);

  json doc;
  doc["command"] = "achieve";
  doc["units"] = cfg.bits ? "bits" : "nats";
  doc["achievable_value"] = a.value * u;
  doc["rates"] = scaled(a.rates_caller, u);
  json k = json::array(), am = json::array();
  std::vector<SpdMatrix> k_caller(a.channel->K().size());
  for (size_t i = 0; i < k_caller.size(); ++i) {
    k_caller[static_cast<size_t>(p.permutation[i])] = a.channel->K()[i];
  }
  for (const auto& m : k_caller) k.push_back(matrix_to_json(m.mat()));
  for (const auto& m : a.channel->A()) am.push_back(matrix_to_json(m.mat()));
  doc["channel"] = {{"K", k}, {"A", am}};
  doc["loose_corner"] = a.loose_corner;
  doc["converged"] = a.converged;
  doc["evaluations"] = a.evaluations;
  emit(cfg, doc.dump(2) + "\n",
       "achievable " + fmt(a.value * u) + (cfg.bits ? " bits" : " nats"), out);
  return a.converged ? kOk : kNotConverged;
}

json solution_json(const ScalarInstance& s, const ScalarSolution& sol,
                   double u) {
  json doc;
  doc["scenario"] = to_string(sol.scenario);
  doc["sigma2"] = sol.ladder.sigma2;
  doc["lambda"] = sol.ladder.lambda;
  doc["rates"] = scaled(sol.rates_caller, u);
  doc["value"] = sol.value * u;
  doc["d0_star"] = sol.d0_star;
  if (sol.scenario == Scenario::kLooseCentral) {
    doc["kkt_residual"] = nullptr;
  } else {
    doc["kkt_residual"] = kkt_residual(s, sol.profile, sol.ladder);
  }
  if (sol.enhancement) {
    const Enhancement& e = *sol.enhancement;
    doc["enhancement"] = {{"description", e.replaced_index},
                          {"k_L", e.k_L},
                          {"k_L_prime", e.k_L_prime},
                          {"d_L_prime", e.d_L_prime},
                          {"slack", e.slack},
                          {"lambda", sol.ladder.lambda}};
  }
  return doc;
}

ScalarInstance scalar_from(const InstanceFile& f) {
  if (f.instance.N() != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "instance has N = " + std::to_string(f.instance.N()) +
                    "; the exact solver needs N = 1, use the bound subcommand");
  }
  return make_scalar_instance(f.instance);
}

int cmd_solve_scalar(const RunConfig& cfg, std::ostream& out) {
  const InstanceFile f = load_with_beta(cfg);
  const ScalarInstance s = scalar_from(f);
  const WeightProfile p = group_weights(*f.beta);
  const ScalarSolution sol = solve(s, p);
  const double u = unit(cfg.bits);
  json doc = solution_json(s, sol, u);
  doc["command"] = "solve-scalar";
  doc["units"] = cfg.bits ? "bits" : "nats";
  emit(cfg, doc.dump(2) + "\n",
       std::string(to_string(sol.scenario)) + " value " + fmt(sol.value * u) +
           (cfg.bits ? " bits" : " nats"),
       out);
  return kOk;
}

// Compositions of total into L positive parts, lexicographic.
void compositions(int L, int total, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  const int used = static_cast<int>(cur.size());
  int sum = 0;
  for (int v : cur) sum += v;
  if (used == L - 1) {
    cur.push_back(total - sum);
    visit(cur);
    cur.pop_back();
    return;
  }
  const int remaining = L - used - 1;
  for (int v = 1; v <= total - sum - remaining; ++v) {
    cur.push_back(v);
    compositions(L, total, cur, visit);
    cur.pop_back();
  }
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  if (cfg.instance_path.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "--instance is required");
  }
  const InstanceFile f = load_instance(cfg.instance_path);
  const std::string csv = region_csv(f, cfg.resolution, cfg.bits);
  emit(cfg, csv, "region written to " + cfg.output_path, out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = cfg.optimizer.seed;
  const std::vector<SuiteResult> results = run_all_suites(vo);
  bool ok = true;
  json doc;
  doc["command"] = "verify";
  doc["seed"] = vo.seed;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (cases " << r.cases
        << ", worst " << fmt(r.worst) << ")";
    if (!r.passed) out << ": " << r.first_failure;
    out << "\n";
    ok = ok && r.passed;
    suites.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"worst", r.worst},
                      {"first_failure", r.first_failure}});
  }
  doc["suites"] = std::move(suites);
  doc["passed"] = ok;
  if (!cfg.output_path.empty()) {
    std::ofstream f(cfg.output_path, std::ios::binary);
    f << doc.dump(2) << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool optimizer) {
  sub->add_option("--instance", cfg.instance_path, "Instance JSON file");
  sub->add_option("--out", cfg.output_path, "Output file (JSON or CSV)");
  sub->add_option("--seed", cfg.optimizer.seed, "Random seed");
  sub->add_flag("--bits", cfg.bits, "Report rates in bits instead of nats");
  if (optimizer) {
    sub->add_option("--starts", cfg.optimizer.starts, "Multi-start count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--rel-tol", cfg.optimizer.rel_tol,
                    "Relative convergence tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-evals", cfg.optimizer.max_evals,
                    "Objective evaluations per start")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

std::string region_csv(const InstanceFile& file, int resolution, bool bits) {
  if (resolution < 2) {
    throw Error(ErrorKind::kInvalidArgument, "--resolution must be >= 2");
  }
  const ScalarInstance s = scalar_from(file);
  const int L = s.L();
  const int total = resolution + L - 1;
  const double u = unit(bits);
  std::ostringstream os;
  for (int l = 1; l <= L; ++l) os << "beta_" << l << ",";
  os << "value";
  for (int l = 1; l <= L; ++l) os << ",R_" << l;
  os << ",scenario\n";
  std::vector<int> cur;
  compositions(L, total, cur, [&](const std::vector<int>& parts) {
    std::vector<double> beta;
    for (int v : parts) beta.push_back(static_cast<double>(L) * v / total);
    const WeightProfile p = group_weights(beta);
    const ScalarSolution sol = solve(s, p);
    for (double b : beta) os << fmt(b) << ",";
    os << fmt(sol.value * u);
    for (double r : sol.rates_caller) os << "," << fmt(r * u);
    os << "," << to_string(sol.scenario) << "\n";
  });
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gaussian multiple-description rate region tools"};
  app.require_subcommand(1);
  RunConfig cfg;
  CLI::App* bound = app.add_subcommand("bound", "Maximise the outer bound");
  CLI::App* ach = app.add_subcommand("achieve", "Search layered test channels");
  CLI::App* scalar =
      app.add_subcommand("solve-scalar", "Exact solution for scalar sources");
  CLI::App* region = app.add_subcommand("region", "Weight sweep as CSV");
  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  add_common(bound, cfg, true);
  add_common(ach, cfg, true);
  add_common(scalar, cfg, false);
  add_common(region, cfg, false);
  region->add_option("--resolution", cfg.resolution, "Grid points per edge");
  add_common(verify, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (ach->parsed()) return cmd_achieve(cfg, out);
    if (scalar->parsed()) return cmd_solve_scalar(cfg, out);
    if (region->parsed()) return cmd_region(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kBisectionFailure:
      case ErrorKind::kBracketingFailure:
      case ErrorKind::kEnhancementFailure:
        return kNotConverged;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace mdr::cli
