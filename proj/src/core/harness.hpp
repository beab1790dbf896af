#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace korient {

enum class Model { Uniform, Binomial, Process };

const char* model_name(Model model);
std::optional<Model> model_from_name(std::string_view name);

// One sweep = a grid of density (or explicit edge-count) points, each run
// for `trials` independent instances. A density c maps to m = round(c * n /
// (k(k-1))) edges — c = 1 sits at the orientability threshold — or, for the
// binomial model, to edge probability c * (k-2)! / n^(k-1).
struct ExperimentConfig {
  std::uint32_t k = 3;
  std::uint32_t n = 100000;
  std::vector<double> densities;
  std::vector<std::uint64_t> edge_counts;  // alternative to densities
  std::uint32_t trials = 100;
  std::uint64_t master_seed = 1;
  Model model = Model::Uniform;
  bool include_timing = true;  // wall_ns column; off for byte-stable output
  bool audit = false;          // structural self-checks during each trial
};

struct TrialRecord {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;  // realized edge count
  Model model = Model::Uniform;
  std::uint64_t seed = 0;  // per-trial derived seed
  std::uint32_t trial = 0;
  bool success = false;
  std::uint64_t while_evals = 0;
  double susceptibility = 0.0;
  std::uint64_t max_component = 0;
  std::uint64_t hypertrees = 0;
  std::uint64_t unicyclic = 0;
  std::uint64_t complex_count = 0;
  std::uint64_t wall_ns = 0;
};

// Evidence that the audit machinery actually ran (all violations throw).
struct AuditTotals {
  std::uint64_t tracker_checks = 0;
  std::uint64_t walk_checks = 0;
};

// Runs points in schedule order, trials in index order; trial (point p,
// index t) uses seed derive_seed(master_seed, p, t), so records are
// reproducible row for row.
std::vector<TrialRecord> run_sweep(const ExperimentConfig& config,
                                   AuditTotals* audit_totals = nullptr);

// Susceptibility along the round-by-round process, checkpointed every
// max(1, n/100) rounds up to (1-eps) n / (k(k-1)) rounds.
struct TracePoint {
  std::uint32_t trial = 0;
  std::uint64_t t = 0;      // rounds so far
  double theta = 0.0;       // t / n
  double chi = 0.0;         // measured susceptibility
  double x_theta = 0.0;     // susceptibility curve at theta
};

struct TraceResult {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  double eps = 0.0;
  std::uint64_t rounds = 0;  // checkpointed horizon
  std::vector<TracePoint> points;
  AuditTotals audit;
};

TraceResult run_susceptibility_trace(std::uint32_t k, std::uint32_t n,
                                     double eps, std::uint32_t trials,
                                     std::uint64_t master_seed,
                                     bool audit = false);

// CSV with the fixed header
// k,n,m,model,seed,trial,success,while_evals,susceptibility,max_component,hypertrees,unicyclic,complex,wall_ns
std::string to_csv(const std::vector<TrialRecord>& records);
// CSV with header k,n,eps,trial,t,theta,chi,x_theta
std::string to_csv(const TraceResult& trace);

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);
void emit_csv(const TraceResult& trace, const std::string& path);

}  // namespace korient
