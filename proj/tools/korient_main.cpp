// korient command line: generate instances, run the insertion walk, check
// feasibility exactly, and drive the experiment harness. Uses only the
// public C API.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "korient.h"

namespace {

int die(korient_status status) {
  std::fprintf(stderr, "error: %s: %s\n", korient_status_name(status),
               korient_last_error());
  return 1;
}

struct HypergraphGuard {
  korient_hypergraph* h = nullptr;
  ~HypergraphGuard() { korient_hypergraph_free(h); }
};

struct OrientationGuard {
  korient_orientation* o = nullptr;
  ~OrientationGuard() { korient_orientation_free(o); }
};

int cmd_generate(std::uint64_t k, std::uint64_t n, std::uint64_t m,
                 std::uint64_t seed, const std::string& out) {
  HypergraphGuard g;
  if (korient_status s = korient_gen_uniform(n, m, static_cast<uint32_t>(k),
                                             seed, &g.h))
    return die(s);
  if (korient_status s = korient_hypergraph_save(g.h, out.c_str()))
    return die(s);
  std::printf("wrote %s (k=%" PRIu64 " n=%" PRIu64 " m=%" PRIu64 ")\n",
              out.c_str(), k, n, m);
  return 0;
}

int cmd_orient(const std::string& in, bool verify, bool audit) {
  HypergraphGuard g;
  if (korient_status s = korient_hypergraph_load(in.c_str(), &g.h))
    return die(s);
  OrientationGuard o;
  if (korient_status s = korient_orient(g.h, audit ? 1 : 0, &o.o))
    return die(s);

  const int success = korient_orientation_success(o.o);
  std::printf("outcome %s\n", success ? "ORIENTED" : "INFEASIBLE");
  if (!success)
    std::printf("failed_edge %" PRIu64 "\n", korient_orientation_failed_edge(o.o));
  std::printf("edges_inserted %" PRIu64 "\n",
              korient_orientation_edges_inserted(o.o));
  std::printf("while_evals %" PRIu64 "\n", korient_orientation_while_evals(o.o));
  std::printf("susceptibility %.10g\n", korient_orientation_susceptibility(o.o));
  uint64_t hypertrees = 0, unicyclic = 0, complex_count = 0, max_size = 0;
  korient_orientation_components(o.o, &hypertrees, &unicyclic, &complex_count,
                                 &max_size);
  std::printf("max_component %" PRIu64 "\n", max_size);
  std::printf("hypertrees %" PRIu64 "\n", hypertrees);
  std::printf("unicyclic %" PRIu64 "\n", unicyclic);
  std::printf("complex %" PRIu64 "\n", complex_count);

  if (verify) {
    int ok = 0;
    char* diagnostics = nullptr;
    if (korient_status s = korient_orientation_verify(g.h, o.o, &ok, &diagnostics))
      return die(s);
    if (diagnostics) {
      std::fputs(diagnostics, stdout);
      korient_string_free(diagnostics);
    }
    std::printf("verify %s\n", ok ? "PASS" : "FAIL");
    if (!ok) return 1;
  }
  return success ? 0 : 2;
}

int cmd_verify(const std::string& in, std::uint64_t d, std::uint64_t b) {
  HypergraphGuard g;
  if (korient_status s = korient_hypergraph_load(in.c_str(), &g.h))
    return die(s);
  const uint64_t m = korient_hypergraph_edge_count(g.h);
  std::vector<uint64_t> witness(m * d);
  int feasible = 0;
  if (m == 0) {
    if (korient_status s = korient_feasible_flow(
            g.h, static_cast<uint32_t>(d), static_cast<uint32_t>(b), &feasible))
      return die(s);
  } else if (korient_status s = korient_feasible_witness(
                 g.h, static_cast<uint32_t>(d), static_cast<uint32_t>(b),
                 &feasible, witness.data())) {
    return die(s);
  }
  if (!feasible) {
    std::printf("INFEASIBLE\n");
    return 2;
  }
  std::printf("FEASIBLE\n");
  for (uint64_t e = 0; e < m; ++e) {
    std::printf("edge %" PRIu64 " ->", e);
    for (uint64_t i = 0; i < d; ++i)
      std::printf(" %" PRIu64, witness[e * d + i]);
    std::printf("\n");
  }
  return 0;
}

int cmd_sweep(const korient_sweep_config& config, const std::string& out,
              std::size_t points) {
  if (korient_status s = korient_run_sweep(&config, out.c_str()))
    return die(s);
  std::printf("wrote %s (%zu points x %u trials)\n", out.c_str(), points,
              config.trials);
  return 0;
}

int cmd_trace(std::uint64_t k, std::uint64_t n, double eps,
              std::uint64_t trials, std::uint64_t seed,
              const std::string& out) {
  if (korient_status s =
          korient_run_trace(static_cast<uint32_t>(k), n, eps,
                            static_cast<uint32_t>(trials), seed, out.c_str()))
    return die(s);
  std::printf("wrote %s (%" PRIu64 " trials, eps=%g)\n", out.c_str(), trials,
              eps);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k-1,1)-orientation of random k-uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_config("--config")->description(
      "read options from an INI file (command line overrides)");

  // generate
  auto* generate = app.add_subcommand("generate", "write a uniform random instance");
  std::uint64_t gen_k = 3, gen_n = 0, gen_m = 0, gen_seed = 1;
  std::string gen_out;
  generate->add_option("--k", gen_k, "edge arity")->capture_default_str();
  generate->add_option("--n", gen_n, "vertex count")->required();
  generate->add_option("--m", gen_m, "edge count")->required();
  generate->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  generate->add_option("--out", gen_out, "output path")->required();

  // orient
  auto* orient = app.add_subcommand("orient", "run the insertion walk on a file");
  std::string orient_in;
  bool orient_verify = false, orient_audit = false;
  orient->add_option("--in", orient_in, "instance path")->required();
  orient->add_flag("--verify", orient_verify, "check the final table");
  orient->add_flag("--audit", orient_audit, "enable structural self-checks");

  // verify
  auto* verify = app.add_subcommand("verify", "exact (d,b) feasibility via max-flow");
  std::string verify_in;
  std::uint64_t verify_d = 0, verify_b = 0;
  verify->add_option("--in", verify_in, "instance path")->required();
  verify->add_option("--d", verify_d, "vertices assigned per edge")->required();
  verify->add_option("--b", verify_b, "max edges per vertex")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "orientability sweep over densities");
  std::uint64_t sweep_k = 3, sweep_n = 100000, sweep_trials = 100, sweep_seed = 1;
  std::vector<double> sweep_densities;
  std::vector<std::uint64_t> sweep_edges;
  std::string sweep_model = "uniform", sweep_out;
  bool sweep_no_timing = false, sweep_audit = false;
  sweep->add_option("--k", sweep_k, "edge arity")->capture_default_str();
  sweep->add_option("--n", sweep_n, "vertex count")->capture_default_str();
  sweep->add_option("--densities", sweep_densities,
                    "densities relative to the threshold n/(k(k-1)) "
                    "(default 0.5 0.8 0.9 0.95 1.0 1.05 1.1 1.2)")
      ->delimiter(',');
  sweep->add_option("--edges", sweep_edges, "explicit edge counts instead")
      ->delimiter(',');
  sweep->add_option("--trials", sweep_trials, "trials per point")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "master seed")->capture_default_str();
  sweep->add_option("--model", sweep_model, "uniform | binomial | process")
      ->check(CLI::IsMember({"uniform", "binomial", "process"}))
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV output path")->required();
  sweep->add_flag("--no-timing", sweep_no_timing,
                  "zero the wall_ns column for byte-stable output");
  sweep->add_flag("--audit", sweep_audit, "enable structural self-checks");

  // trace
  auto* trace = app.add_subcommand("trace", "susceptibility trace of the round process");
  std::uint64_t trace_k = 3, trace_n = 100000, trace_trials = 20, trace_seed = 1;
  double trace_eps = 0.5;
  std::string trace_out;
  trace->add_option("--k", trace_k, "edge arity")->capture_default_str();
  trace->add_option("--n", trace_n, "vertex count")->capture_default_str();
  trace->add_option("--eps", trace_eps, "distance to the critical density, in (0, 1/2]")
      ->capture_default_str();
  trace->add_option("--trials", trace_trials, "independent traces")
      ->capture_default_str();
  trace->add_option("--seed", trace_seed, "master seed")->capture_default_str();
  trace->add_option("--out", trace_out, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed())
    return cmd_generate(gen_k, gen_n, gen_m, gen_seed, gen_out);
  if (orient->parsed()) return cmd_orient(orient_in, orient_verify, orient_audit);
  if (verify->parsed()) return cmd_verify(verify_in, verify_d, verify_b);
  if (sweep->parsed()) {
    if (sweep_densities.empty() && sweep_edges.empty())
      sweep_densities = {0.5, 0.8, 0.9, 0.95, 1.0, 1.05, 1.1, 1.2};
    korient_sweep_config config{};
    config.k = static_cast<uint32_t>(sweep_k);
    config.n = sweep_n;
    config.densities = sweep_densities.empty() ? nullptr : sweep_densities.data();
    config.density_count = sweep_densities.size();
    config.edge_counts = sweep_edges.empty() ? nullptr : sweep_edges.data();
    config.edge_count_count = sweep_edges.size();
    config.trials = static_cast<uint32_t>(sweep_trials);
    config.master_seed = sweep_seed;
    config.model = sweep_model == "binomial"  ? KORIENT_MODEL_BINOMIAL
                   : sweep_model == "process" ? KORIENT_MODEL_PROCESS
                                              : KORIENT_MODEL_UNIFORM;
    config.include_timing = sweep_no_timing ? 0 : 1;
    config.audit = sweep_audit ? 1 : 0;
    return cmd_sweep(config, sweep_out,
                     sweep_densities.size() + sweep_edges.size());
  }
  if (trace->parsed())
    return cmd_trace(trace_k, trace_n, trace_eps, trace_trials, trace_seed,
                     trace_out);
  return 0;
}
