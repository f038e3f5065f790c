// tcdecomp: instance generation, transition-system certification, pipeline
// runs, verification, LP oracle queries, and structural example reports.
//
// Exit codes: 0 success; 1 input error (bad flags, malformed files);
// 2 domain refusal (pipeline abort, certification failure, infeasible or
// inconclusive oracle, failed verification).
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tcd/decomposer.hpp"
#include "tcd/errors.hpp"
#include "tcd/hypergraph.hpp"
#include "tcd/json_io.hpp"
#include "tcd/transitions.hpp"

namespace {

using namespace tcd;

struct Options {
  std::string kind = "complete";
  int n = 0, k = 2, ell = 5, r = 0;
  int delta = 0;           // min-codegree target for random generation
  double eps = 0.1;        // example construction density
  double zeta = 0.05;      // example construction slack
  std::size_t runs = 1;
  std::size_t m_cap = 3;
  std::string mu = "1/2";
  std::uint64_t seed = 0;
  std::int64_t budget = 0;  // attempts (certify/decompose) or ms (oracle)
  std::string in, out, format = "json";
};

Json load_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_json(ss.str());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot open " + out_path + " for writing");
  f << text;
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

int cmd_gen(const Options& o) {
  if (o.k < 2) throw InputError("uniformity k must be >= 2");
  if (o.n < o.k) throw InputError("need n >= k");
  if (o.kind == "complete") {
    emit_json(instance_to_json(gen_complete(o.n, o.k)), o.out);
  } else if (o.kind == "random") {
    if (o.delta < 1) throw InputError("--delta must be >= 1 for random generation");
    emit_json(instance_to_json(gen_random_min_codegree(o.n, o.k, o.delta, o.seed)), o.out);
  } else if (o.kind == "example") {
    emit_json(labeled_to_json(gen_lowerbound_example(o.n, o.k, o.eps, o.zeta, o.seed)), o.out);
  } else {
    throw InputError("unknown --kind " + o.kind);
  }
  return 0;
}

int cmd_certify(const Options& o) {
  Hypergraph h = instance_from_json(load_json(o.in));
  std::size_t attempts = o.budget > 0 ? static_cast<std::size_t>(o.budget) : 16;
  std::vector<std::size_t> ells = designated_lengths(o.ell);
  CertifiedSystem cs = certify_system(h, o.r, ells, o.seed, attempts);
  Json j;
  j["report"] = certify_to_json(cs.report);
  j["system"] = cs.system ? system_to_json(*cs.system) : Json(nullptr);
  emit_json(j, o.out);
  return cs.report.accepted ? 0 : 2;
}

int cmd_decompose(const Options& o) {
  Hypergraph h = instance_from_json(load_json(o.in));
  PipelineConfig cfg;
  cfg.ell = o.ell;
  cfg.r = o.r;
  cfg.m_cap = o.m_cap;
  cfg.seed = o.seed;
  cfg.mu = rat_parse(o.mu);
  if (o.budget > 0) cfg.certify_attempts = static_cast<std::size_t>(o.budget);
  Decomposition d = average_decompositions(h, cfg, o.runs);
  if (o.format == "csv")
    emit(run_summaries_csv(d.runs), o.out);
  else
    emit_json(decomposition_to_json(h, d), o.out);
  return 0;
}

int cmd_verify(const Options& o) {
  auto [h, w] = decomposition_from_json(load_json(o.in));
  DecompositionReport rep = verify(h, w, static_cast<int>(w.ell()), rat_parse(o.mu), o.r);
  emit_json(report_to_json(h, rep), o.out);
  return rep.is_exact_cover ? 0 : 2;
}

int cmd_oracle(const Options& o) {
  Hypergraph h = instance_from_json(load_json(o.in));
  std::int64_t budget_ms = o.budget > 0 ? o.budget : 120000;
  OracleResult res = lp_oracle(h, o.ell, budget_ms);
  emit_json(oracle_to_json(h, res), o.out);
  return res.status == OracleStatus::feasible ? 0 : 2;
}

int cmd_example(const Options& o) {
  LabeledExample le = labeled_from_json(load_json(o.in));
  emit_json(example_report_to_json(example_structure_check(le, o.ell)), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional tight-cycle decompositions of k-uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* c, bool need_in) {
    auto* in = c->add_option("--in", o.in, "input JSON file");
    if (need_in) in->required();
    c->add_option("--out", o.out, "output file (default: stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", o.kind, "complete | random | example")
      ->check(CLI::IsMember({"complete", "random", "example"}));
  gen->add_option("--n", o.n, "vertex count")->required();
  gen->add_option("--k", o.k, "uniformity")->required();
  gen->add_option("--delta", o.delta, "min-codegree target (random)");
  gen->add_option("--eps", o.eps, "density parameter (example)");
  gen->add_option("--zeta", o.zeta, "slack parameter (example)");
  gen->add_option("--seed", o.seed, "RNG seed");
  add_io(gen, false);

  CLI::App* certify = app.add_subcommand("certify", "sample and certify a transition system");
  certify->add_option("--ell", o.ell, "cycle length whose designated lengths are certified");
  certify->add_option("--r", o.r, "transition regularity")->required();
  certify->add_option("--seed", o.seed, "RNG seed");
  certify->add_option("--budget", o.budget, "sampling attempt budget (default 16)");
  add_io(certify, true);

  CLI::App* decompose = app.add_subcommand("decompose", "run the decomposition pipeline");
  decompose->add_option("--ell", o.ell, "cycle length");
  decompose->add_option("--r", o.r, "transition regularity (0 = full system)");
  decompose->add_option("--runs", o.runs, "independent runs to average");
  decompose->add_option("--m-cap", o.m_cap, "max transporters per ordered pair");
  decompose->add_option("--mu", o.mu, "envelope slack, rational p/q");
  decompose->add_option("--seed", o.seed, "RNG seed");
  decompose->add_option("--budget", o.budget, "certification attempt budget");
  decompose->add_option("--format", o.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_io(decompose, true);

  CLI::App* verify = app.add_subcommand("verify", "re-verify a stored decomposition");
  verify->add_option("--mu", o.mu, "envelope slack, rational p/q");
  verify->add_option("--r", o.r, "regularity for the r-envelope (0 = skip)");
  add_io(verify, true);

  CLI::App* oracle = app.add_subcommand("oracle", "LP feasibility oracle");
  oracle->add_option("--ell", o.ell, "cycle length");
  oracle->add_option("--budget", o.budget, "time budget in ms (default 120000)");
  add_io(oracle, true);

  CLI::App* example = app.add_subcommand("example", "structural report on a labeled example");
  example->add_option("--ell", o.ell, "cycle length");
  add_io(example, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (certify->parsed()) return cmd_certify(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (verify->parsed()) return cmd_verify(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (example->parsed()) return cmd_example(o);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PipelineAbort& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
