// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

// motifqc command-line tool: sample, test, sweep, certify, count.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "json.hpp"
#include "motifqc/certify.h"
#include "motifqc/harness.h"
#include "motifqc/io.h"
#include "motifqc/models.h"
#include "motifqc/oracle.h"
#include "motifqc/params.h"
#include "motifqc/rng.h"

namespace motifqc {
namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int Fail(const absl::Status& st) {
  std::cerr << "motifqc: " << st.message() << "\n";
  return IsBudgetError(st) ? kExitBudget : kExitUsage;
}

std::vector<std::string> SplitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

absl::StatusOr<double> ToDouble(const std::string& s) {
  try {
    size_t used = 0;
    const double x = std::stod(s, &used);
    if (used == s.size()) return x;
  } catch (...) {
  }
  return absl::InvalidArgumentError("not a number: " + s);
}

absl::StatusOr<int64_t> ToInt(const std::string& s) {
  try {
    size_t used = 0;
    const long long x = std::stoll(s, &used);
    if (used == s.size()) return x;
  } catch (...) {
  }
  return absl::InvalidArgumentError("not an integer: " + s);
}

// Block sizes "a/b/..." and the upper triangle of the probability matrix,
// row by row, "p11/p12/p22".
absl::StatusOr<Sbm> ParseSbm(const std::string& sizes, const std::string& probs) {
  Sbm sbm;
  for (const std::string& s : SplitList(sizes, '/')) {
    absl::StatusOr<int64_t> v = ToInt(s);
    if (!v.ok()) return v.status();
    sbm.sizes.push_back(static_cast<int>(*v));
  }
  const size_t b = sbm.sizes.size();
  const std::vector<std::string> ps = SplitList(probs, '/');
  if (ps.size() != b * (b + 1) / 2) {
    return absl::InvalidArgumentError("sbm needs " + std::to_string(b * (b + 1) / 2) +
                                      " probabilities");
  }
  sbm.probs.assign(b, std::vector<double>(b, 0.0));
  size_t idx = 0;
  for (size_t i = 0; i < b; ++i) {
    for (size_t j = i; j < b; ++j) {
      absl::StatusOr<double> v = ToDouble(ps[idx++]);
      if (!v.ok()) return v.status();
      sbm.probs[i][j] = sbm.probs[j][i] = *v;
    }
  }
  return sbm;
}

struct ModelArgs {
  std::string name = "gnp";
  int n = 0;
  double p = 0.5;
  int ell = 0;
  int d = 0;
  std::string sizes;
  std::string probs;
};

absl::StatusOr<ModelVariant> BuildModel(const ModelArgs& a) {
  if (a.name == "gnp") return ModelVariant(Gnp{a.n, a.p});
  if (a.name == "planted_clique") return ModelVariant(PlantedClique{a.n, a.p, a.ell});
  if (a.name == "motif_no_dist") return ModelVariant(MotifNoDist{a.n, a.p, a.ell});
  if (a.name == "d_regular") return ModelVariant(DRegular{a.n, a.d});
  if (a.name == "sbm") {
    absl::StatusOr<Sbm> sbm = ParseSbm(a.sizes, a.probs);
    if (!sbm.ok()) return sbm.status();
    return ModelVariant(*std::move(sbm));
  }
  return absl::InvalidArgumentError("unknown model: " + a.name);
}

// "name:key=value,key=value", e.g. "planted_clique:n=1000,p=0.08,ell=160".
absl::StatusOr<ModelVariant> ParseModelText(const std::string& text) {
  ModelArgs a;
  const size_t colon = text.find(':');
  a.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    for (const std::string& kv : SplitList(text.substr(colon + 1), ',')) {
      const size_t eq = kv.find('=');
      if (eq == std::string::npos) return absl::InvalidArgumentError("bad model field: " + kv);
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "sizes") {
        a.sizes = value;
      } else if (key == "probs") {
        a.probs = value;
      } else if (key == "p") {
        absl::StatusOr<double> v = ToDouble(value);
        if (!v.ok()) return v.status();
        a.p = *v;
      } else if (key == "n" || key == "ell" || key == "d") {
        absl::StatusOr<int64_t> v = ToInt(value);
        if (!v.ok()) return v.status();
        (key == "n" ? a.n : key == "ell" ? a.ell : a.d) = static_cast<int>(*v);
      } else {
        return absl::InvalidArgumentError("unknown model field: " + key);
      }
    }
  }
  absl::StatusOr<ModelVariant> m = BuildModel(a);
  if (!m.ok()) return m.status();
  if (absl::Status st = Validate({*m, 0}); !st.ok()) return st;
  return m;
}

// Effective values of every option of a subcommand.
nlohmann::json EffectiveConfig(const CLI::App& app) {
  nlohmann::json out = nlohmann::json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config" || name.empty()) continue;
    if (opt->count() > 0) {
      const std::vector<std::string>& r = opt->results();
      out[name] = r.size() == 1 ? nlohmann::json(r[0]) : nlohmann::json(r);
    } else if (!opt->get_default_str().empty()) {
      out[name] = opt->get_default_str();
    }
  }
  return out;
}

std::string ConfigLine(const CLI::App& app) { return EffectiveConfig(app).dump(); }

struct TesterArgs {
  std::string alg = "clique";
  int k = 3;
  std::string motif;
  double p = 0.5;
  double eps = 0.3;
  std::string mode = "paper";
  int64_t s_star = 0;
  double delta = 0.0;
  double c_const = 1.0;
  bool per_level = false;
  std::string null_sizes;
  std::string null_probs;
  int64_t step_limit = TriangleOptions{}.step_limit;
  bool degree_first = false;
  std::string terms;
  CLI::Option* s_star_opt = nullptr;
  double inner_eps = 0.0;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* inner_eps_opt = nullptr;
};

void AddTesterOptions(CLI::App* app, TesterArgs& a, bool with_alg = true) {
  if (with_alg) {
    app->add_option("--alg", a.alg,
                    "clique, clique_efficient, motif, motif_efficient, motif_induced, "
                    "triangle, graph_parameter");
  }
  app->add_option("--k", a.k, "clique size");
  app->add_option("--motif", a.motif, "motif as k:a-b,c-d");
  app->add_option("--p", a.p, "edge density of the null model");
  app->add_option("--eps", a.eps, "error parameter");
  app->add_option("--mode", a.mode, "paper or calibrated")
      ->check(CLI::IsMember({"paper", "calibrated"}));
  a.s_star_opt = app->add_option("--s-star", a.s_star, "sample size (calibrated mode)");
  a.delta_opt = app->add_option("--delta", a.delta, "jumbledness slack (calibrated mode)");
  a.inner_eps_opt =
      app->add_option("--inner-eps", a.inner_eps, "induced tester inner tolerance (calibrated mode)");
  app->add_option("--c-const", a.c_const, "jumbledness constant C");
  app->add_flag("--per-level", a.per_level, "per-level thresholds");
  app->add_option("--null-sizes", a.null_sizes, "SBM null model block sizes a/b/...");
  app->add_option("--null-probs", a.null_probs, "SBM null model upper-triangle probabilities");
  app->add_option("--step-limit", a.step_limit, "triangle estimator operation limit");
  app->add_flag("--degree-first", a.degree_first, "run the degree filter first");
  app->add_option("--terms", a.terms, "NC0 terms, e.g. '0-1,!1-2;2-3'");
}

absl::StatusOr<TesterConfig> BuildTesterConfig(const TesterArgs& a, int n) {
  TesterConfig c;
  absl::StatusOr<Algorithm> alg = ParseAlgorithm(a.alg);
  if (!alg.ok()) return alg.status();
  c.alg = *alg;
  c.k = a.k;
  if (!a.motif.empty()) {
    absl::StatusOr<Motif> h = Motif::Parse(a.motif);
    if (!h.ok()) return h.status();
    c.motif = *h;
  }
  c.p = a.p;
  c.eps = a.eps;
  c.mode = a.mode == "calibrated" ? ScaleMode::kCalibrated : ScaleMode::kPaper;
  if (a.s_star_opt->count() > 0) c.s_star = a.s_star;
  if (a.delta_opt->count() > 0) c.delta = a.delta;
  if (a.inner_eps_opt->count() > 0) c.inner_eps = a.inner_eps;
  if (c.mode == ScaleMode::kPaper && (c.s_star || c.delta || c.inner_eps)) {
    return absl::InvalidArgumentError("--mode paper forbids --s-star, --delta and --inner-eps");
  }
  c.c_const = a.c_const;
  c.per_level_thresholds = a.per_level;
  if (!a.null_sizes.empty()) {
    absl::StatusOr<Sbm> sbm = ParseSbm(a.null_sizes, a.null_probs);
    if (!sbm.ok()) return sbm.status();
    c.sbm_null = *std::move(sbm);
  }
  c.triangle.step_limit = a.step_limit;
  c.triangle.degree_filter_first = a.degree_first;
  if (c.alg == Algorithm::kGraphParameter) {
    absl::StatusOr<NC0Terms> terms = ParseNc0Terms(n, a.terms);
    if (!terms.ok()) return terms.status();
    c.terms = *std::move(terms);
  }
  return c;
}

int RunSample(const ModelArgs& a, uint64_t seed, const std::string& out) {
  absl::StatusOr<ModelVariant> m = BuildModel(a);
  if (!m.ok()) return Fail(m.status());
  absl::StatusOr<Graph> g = Sample({*m, seed});
  if (!g.ok()) return Fail(g.status());
  if (absl::Status st = WriteEdgeListFile(out, *g); !st.ok()) return Fail(st);
  return kExitAccept;
}

int RunTest(const CLI::App& app, const TesterArgs& a, const std::string& graph_path,
            uint64_t seed, int64_t budget_total) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return Fail(g.status());
  absl::StatusOr<TesterConfig> config = BuildTesterConfig(a, g->n());
  if (!config.ok()) return Fail(config.status());
  absl::StatusOr<PreparedTester> tester = PrepareTester(*config, g->n());
  if (!tester.ok()) return Fail(tester.status());
  QueryBudget budget;
  if (budget_total >= 0) budget.total = budget_total;
  QueryOracle oracle(*g, budget);
  Rng rng(seed);
  absl::StatusOr<Verdict> v = RunTester(*tester, oracle, rng);
  if (!v.ok()) {
    if (IsBudgetError(v.status())) {
      nlohmann::json out = {{"error", "budget"},
                            {"message", std::string(v.status().message())},
                            {"seed", seed},
                            {"mode", a.mode},
                            {"config", EffectiveConfig(app)}};
      std::cout << out.dump(2) << "\n";
    }
    return Fail(v.status());
  }
  nlohmann::json out = VerdictJson(*v);
  out["seed"] = seed;
  out["mode"] = a.mode;
  out["algorithm"] = a.alg;
  out["config"] = EffectiveConfig(app);
  if (!tester->table.s_ell.empty()) out["params"] = ParamTableJson(tester->table);
  std::cout << out.dump(2) << "\n";
  return v->accepted() ? kExitAccept : kExitReject;
}

absl::Status WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::PermissionDeniedError("cannot write " + path);
  out << text;
  return absl::OkStatus();
}

int RunSweep(const CLI::App& app, const TesterArgs& a, const std::string& yes,
             const std::vector<std::string>& no, const std::string& budgets, int trials,
             uint64_t seed, bool exhaustion_rejects, const std::string& out) {
  ExperimentSpec spec;
  absl::StatusOr<ModelVariant> y = ParseModelText(yes);
  if (!y.ok()) return Fail(y.status());
  spec.yes = *y;
  for (const std::string& text : no) {
    absl::StatusOr<ModelVariant> m = ParseModelText(text);
    if (!m.ok()) return Fail(m.status());
    spec.no.push_back(*m);
  }
  absl::StatusOr<TesterConfig> config = BuildTesterConfig(a, ModelVertexCount(spec.yes));
  if (!config.ok()) return Fail(config.status());
  spec.tester = *config;
  spec.trials = trials;
  spec.seed = seed;
  spec.exhaustion_accepts = !exhaustion_rejects;
  for (const std::string& b : SplitList(budgets, ',')) {
    absl::StatusOr<int64_t> q = ToInt(b);
    if (!q.ok()) return Fail(q.status());
    spec.budgets.push_back(*q);
  }
  if (!spec.budgets.empty()) {
    absl::StatusOr<std::vector<SweepRow>> rows = BudgetSweep(spec);
    if (!rows.ok()) return Fail(rows.status());
    if (absl::Status st = WriteText(out, SweepCsv(*rows, ConfigLine(app))); !st.ok()) {
      return Fail(st);
    }
    return kExitAccept;
  }
  absl::StatusOr<std::vector<ModelRate>> rates = RateExperiment(spec);
  if (!rates.ok()) return Fail(rates.status());
  std::string text = "# " + ConfigLine(app) + "\n";
  text += "model,trials,accepts,rejects,errors,rate,low,high,se\n";
  char buf[512];
  for (const ModelRate& r : *rates) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%.6g,%.6g,%.6g,%.6g\n", r.model.c_str(),
                  r.trials, r.accepts, r.rejects, r.errors, r.rate, r.interval.low,
                  r.interval.high, r.standard_error);
    text += buf;
  }
  if (absl::Status st = WriteText(out, text); !st.ok()) return Fail(st);
  return kExitAccept;
}

struct CertifyArgs {
  std::string graph;
  std::string check = "expqr";
  std::string motif = "3:0-1,0-2,1-2";
  double density = -1.0;
  double p = 0.5;
  double tolerance = 0.1;
  double rate = 0.0;
  int trials = 100;
  std::string sizes = "20,50";
  double delta = 0.1;
  bool noninduced = false;
  std::string out;
};

int RunCertify(const CLI::App& app, const CertifyArgs& a, uint64_t seed) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(a.graph);
  if (!g.ok()) return Fail(g.status());
  std::string text = "# " + ConfigLine(app) + "\n";
  char buf[512];
  if (a.check == "jumbled") {
    const JumbledReport rep = JumblednessDegCodeg(*g, a.p, a.delta);
    text += "passed,kind,u,v,value,low,high,implied_beta\n";
    const JumbledOffender w = rep.worst.value_or(JumbledOffender{"none"});
    std::snprintf(buf, sizeof(buf), "%d,%s,%d,%d,%.6g,%.6g,%.6g,%.6g\n", rep.passed ? 1 : 0,
                  w.kind.c_str(), w.u, w.v, w.value, w.low, w.high, rep.implied_beta);
    text += buf;
  } else {
    absl::StatusOr<Motif> h = Motif::Parse(a.motif);
    if (!h.ok()) return Fail(h.status());
    QuasirandomnessSpec spec;
    spec.motif = *h;
    spec.tolerance = a.tolerance;
    spec.rate = a.rate;
    spec.trials = a.trials;
    spec.induced = !a.noninduced;
    // Default density: the G(n, p) value of one labeled copy.
    spec.density = a.density >= 0.0 ? a.density
                                    : ExpectedCountGnp(*h, h->k(), a.p, spec.induced) /
                                          FallingFactorial(h->k(), h->k());
    text += "s,deviation_rate,bound,standard_error,expected,satisfied\n";
    for (const std::string& s_text : SplitList(a.sizes, ',')) {
      absl::StatusOr<int64_t> s = ToInt(s_text);
      if (!s.ok()) return Fail(s.status());
      absl::StatusOr<ExpQrResult> r = EmpiricalExpQr(*g, spec, *s, seed);
      if (!r.ok()) return Fail(r.status());
      std::snprintf(buf, sizeof(buf), "%lld,%.6g,%.6g,%.6g,%.6g,%d\n",
                    static_cast<long long>(*s), r->deviation_rate, r->bound,
                    r->standard_error, r->expected, r->satisfied ? 1 : 0);
      text += buf;
    }
  }
  if (absl::Status st = WriteText(a.out, text); !st.ok()) return Fail(st);
  return kExitAccept;
}

int RunCount(const CLI::App& app, const TesterArgs& a, const std::string& graph_path,
             uint64_t seed) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return Fail(g.status());
  TesterArgs motif_args = a;
  motif_args.alg = "motif";
  absl::StatusOr<TesterConfig> config = BuildTesterConfig(motif_args, g->n());
  if (!config.ok()) return Fail(config.status());
  absl::StatusOr<PreparedTester> tester = PrepareTester(*config, g->n());
  if (!tester.ok()) return Fail(tester.status());
  QueryOracle oracle(*g);
  Rng rng(seed);
  absl::StatusOr<AvgCaseResult> r =
      AvgCaseCount(oracle, config->motif, config->p, tester->table, rng);
  if (!r.ok()) return Fail(r.status());
  nlohmann::json out = {
      {"estimate", r->estimate},
      {"path", r->path == CountPath::kQc ? "qc" : "exact"},
      {"queries",
       {{"matrix", r->queries.matrix}, {"list", r->queries.list}, {"degree", r->queries.degree}}},
      {"verdict", VerdictJson(r->verdict)},
      {"seed", seed},
      {"mode", a.mode},
      {"config", EffectiveConfig(app)}};
  std::cout << out.dump(2) << "\n";
  return kExitAccept;
}

int Main(int argc, char** argv) {
  if (const char* threads = std::getenv("MOTIFQC_THREADS")) {
    const int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }
  CLI::App app{"Quality control of motif counts against random-graph models"};
  app.set_config("--config", "", "TOML or INI file; flags take precedence");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  uint64_t seed = 0;
  auto add_seed = [&](CLI::App* sub, bool required) {
    CLI::Option* o = sub->add_option("--seed", seed, "64-bit seed");
    if (required) o->required();
  };

  ModelArgs model;
  std::string out_path;
  CLI::App* sample = app.add_subcommand("sample", "sample a graph and write an edge list");
  sample->add_option("--model", model.name, "gnp, sbm, planted_clique, motif_no_dist, d_regular")
      ->check(CLI::IsMember({"gnp", "sbm", "planted_clique", "motif_no_dist", "d_regular"}));
  sample->add_option("--n", model.n, "vertex count");
  sample->add_option("--p", model.p, "edge probability");
  sample->add_option("--ell", model.ell, "planted size");
  sample->add_option("--d", model.d, "degree (d_regular)");
  sample->add_option("--sizes", model.sizes, "SBM block sizes a/b/...");
  sample->add_option("--probs", model.probs, "SBM upper-triangle probabilities");
  sample->add_option("--out", out_path, "output edge list")->required();
  add_seed(sample, true);

  TesterArgs test_args, sweep_args, count_args;
  std::string graph_path;
  int64_t budget_total = -1;
  CLI::App* test = app.add_subcommand("test", "run a tester on a graph and print a JSON verdict");
  AddTesterOptions(test, test_args);
  test->add_option("--graph", graph_path, "edge list")->required();
  test->add_option("--budget", budget_total, "total query budget (-1 for none)");
  add_seed(test, true);

  std::string yes, budgets;
  std::vector<std::string> no;
  int trials = 100;
  bool exhaustion_rejects = false;
  CLI::App* sweep = app.add_subcommand("sweep", "acceptance rates or a budget sweep as CSV");
  AddTesterOptions(sweep, sweep_args);
  sweep->add_option("--yes", yes, "YES model, e.g. gnp:n=2000,p=0.3")->required();
  sweep->add_option("--no", no, "NO model (repeatable)");
  sweep->add_option("--budgets", budgets, "comma-separated increasing query budgets");
  sweep->add_option("--trials", trials, "trials per model and budget");
  sweep->add_flag("--exhaustion-rejects", exhaustion_rejects,
                  "count budget exhaustion as reject");
  sweep->add_option("--out", out_path, "CSV path, stdout when absent");
  add_seed(sweep, true);

  CertifyArgs certify_args;
  CLI::App* certify = app.add_subcommand("certify", "quasirandomness or jumbledness CSV");
  certify->add_option("--graph", certify_args.graph, "edge list")->required();
  certify->add_option("--check", certify_args.check, "expqr or jumbled")
      ->check(CLI::IsMember({"expqr", "jumbled"}));
  certify->add_option("--motif", certify_args.motif, "motif as k:a-b,c-d");
  certify->add_option("--density", certify_args.density, "F_D of the motif (default G(n,p))");
  certify->add_option("--p", certify_args.p, "edge density");
  certify->add_option("--tolerance", certify_args.tolerance, "relative deviation");
  certify->add_option("--rate", certify_args.rate, "exponent alpha");
  certify->add_option("--trials", certify_args.trials, "multisets per size");
  certify->add_option("--sizes", certify_args.sizes, "comma-separated multiset sizes");
  certify->add_option("--delta", certify_args.delta, "degree/codegree slack");
  certify->add_flag("--noninduced", certify_args.noninduced, "count noninduced copies");
  certify->add_option("--out", certify_args.out, "CSV path, stdout when absent");
  CLI::Option* certify_seed = certify->add_option("--seed", seed, "64-bit seed");

  CLI::App* count = app.add_subcommand("count", "average-case motif count from quality control");
  count_args.alg = "motif";
  AddTesterOptions(count, count_args, /*with_alg=*/false);
  count->add_option("--graph", graph_path, "edge list")->required();
  add_seed(count, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (sample->parsed()) return RunSample(model, seed, out_path);
  if (test->parsed()) return RunTest(*test, test_args, graph_path, seed, budget_total);
  if (sweep->parsed()) {
    return RunSweep(*sweep, sweep_args, yes, no, budgets, trials, seed, exhaustion_rejects,
                    out_path);
  }
  if (certify->parsed()) {
    if (certify_args.check == "expqr" && certify_seed->count() == 0) {
      std::cerr << "motifqc: --seed is required for --check expqr\n";
      return kExitUsage;
    }
    return RunCertify(*certify, certify_args, seed);
  }
  if (count->parsed()) return RunCount(*count, count_args, graph_path, seed);
  return kExitUsage;
}

}  // namespace
}  // namespace motifqc

int main(int argc, char** argv) { return motifqc::Main(argc, argv); }
