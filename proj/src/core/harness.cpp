#include "harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "curves.hpp"
#include "hypergraph.hpp"
#include "process.hpp"
#include "rng.hpp"
#include "walk.hpp"

namespace korient {

const char* model_name(Model model) {
  switch (model) {
    case Model::Uniform: return "uniform";
    case Model::Binomial: return "binomial";
    case Model::Process: return "process";
  }
  return "?";
}

std::optional<Model> model_from_name(std::string_view name) {
  if (name == "uniform") return Model::Uniform;
  if (name == "binomial") return Model::Binomial;
  if (name == "process") return Model::Process;
  return std::nullopt;
}

namespace {

std::uint64_t threshold_edges(std::uint32_t n, std::uint32_t k, double density) {
  const double m = density * static_cast<double>(n) /
                   (static_cast<double>(k) * (k - 1));
  return static_cast<std::uint64_t>(std::llround(m));
}

double binomial_probability(std::uint32_t n, std::uint32_t k, double density) {
  long double factorial = 1.0L;
  for (std::uint32_t i = 2; i + 2 <= k; ++i) factorial *= i;  // (k-2)!
  long double denom = 1.0L;
  for (std::uint32_t i = 0; i + 1 < k; ++i) denom *= n;  // n^(k-1)
  return static_cast<double>(static_cast<long double>(density) * factorial /
                             denom);
}

struct SchedulePoint {
  std::uint64_t m = 0;     // target edge count / process rounds
  double p = 0.0;          // binomial probability
};

std::vector<SchedulePoint> build_schedule(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("need at least one trial");
  if (!cfg.densities.empty() && !cfg.edge_counts.empty())
    throw std::invalid_argument("give densities or edge counts, not both");
  if (cfg.densities.empty() && cfg.edge_counts.empty())
    throw std::invalid_argument("empty sweep schedule");

  std::vector<SchedulePoint> points;
  for (const double c : cfg.densities) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("density must be finite and non-negative");
    SchedulePoint pt;
    pt.m = threshold_edges(cfg.n, cfg.k, c);
    if (cfg.model == Model::Binomial) {
      pt.p = binomial_probability(cfg.n, cfg.k, c);
      if (pt.p > 1.0) throw std::invalid_argument("density implies p > 1");
    }
    points.push_back(pt);
  }
  for (const std::uint64_t m : cfg.edge_counts) {
    SchedulePoint pt;
    pt.m = m;
    if (cfg.model == Model::Binomial) {
      const long double universe = binomial_ld(cfg.n, cfg.k);
      pt.p = static_cast<double>(static_cast<long double>(m) / universe);
      if (pt.p > 1.0) throw std::invalid_argument("edge count implies p > 1");
    }
    points.push_back(pt);
  }
  return points;
}

Hypergraph make_instance(const ExperimentConfig& cfg, const SchedulePoint& pt,
                         std::uint64_t seed) {
  switch (cfg.model) {
    case Model::Uniform:
      return gen_uniform(cfg.n, pt.m, cfg.k, seed);
    case Model::Binomial:
      return gen_binomial(cfg.n, pt.p, cfg.k, seed);
    case Model::Process: {
      SequentialProcess process(cfg.n, cfg.k, seed);
      for (std::uint64_t round = 0; round < pt.m; ++round) process.step();
      return process.hypergraph();
    }
  }
  throw std::logic_error("unknown model");
}

// Shortest stable decimal representation; round-trips a double.
std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  double parsed = 0.0;
  for (int precision = 1; precision < 17; ++precision) {
    char probe[64];
    std::snprintf(probe, sizeof(probe), "%.*g", precision, value);
    std::sscanf(probe, "%lf", &parsed);
    if (parsed == value) return probe;
  }
  return buf;
}

}  // namespace

std::vector<TrialRecord> run_sweep(const ExperimentConfig& cfg,
                                   AuditTotals* audit_totals) {
  if (cfg.k < 2) throw std::invalid_argument("edge arity must be at least 2");
  if (cfg.n < cfg.k) throw std::invalid_argument("need at least k vertices");
  const std::vector<SchedulePoint> points = build_schedule(cfg);

  std::vector<TrialRecord> records;
  records.reserve(points.size() * cfg.trials);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.master_seed, p, t);
      try {
        const auto start = std::chrono::steady_clock::now();
        const Hypergraph h = make_instance(cfg, points[p], seed);
        OrientResult result = orient_all(h, OrientOptions{cfg.audit});
        const auto cls = result.tracker.classify();
        const auto elapsed = std::chrono::steady_clock::now() - start;

        TrialRecord rec;
        rec.k = cfg.k;
        rec.n = cfg.n;
        rec.m = h.edge_count();
        rec.model = cfg.model;
        rec.seed = seed;
        rec.trial = t;
        rec.success = result.stats.success;
        rec.while_evals = result.stats.while_evals;
        rec.susceptibility = result.tracker.susceptibility();
        rec.max_component = cls.max_size;
        rec.hypertrees = cls.hypertrees;
        rec.unicyclic = cls.unicyclic;
        rec.complex_count = cls.complex_count;
        rec.wall_ns =
            cfg.include_timing
                ? static_cast<std::uint64_t>(
                      std::chrono::duration_cast<std::chrono::nanoseconds>(
                          elapsed)
                          .count())
                : 0;
        records.push_back(rec);
        if (audit_totals) {
          audit_totals->tracker_checks += result.tracker.audit_checks();
          audit_totals->walk_checks += result.audit_events;
        }
      } catch (const std::invalid_argument& err) {
        throw std::runtime_error(
            "sweep point " + std::to_string(p) + " trial " + std::to_string(t) +
            " (seed " + std::to_string(seed) + "): " + err.what());
      } catch (const std::logic_error&) {
        throw;  // audit violations must surface untouched
      } catch (const std::exception& err) {
        throw std::runtime_error(
            "sweep point " + std::to_string(p) + " trial " + std::to_string(t) +
            " (seed " + std::to_string(seed) + "): " + err.what());
      }
    }
  }
  return records;
}

TraceResult run_susceptibility_trace(std::uint32_t k, std::uint32_t n,
                                     double eps, std::uint32_t trials,
                                     std::uint64_t master_seed, bool audit) {
  if (k < 2) throw std::invalid_argument("edge arity must be at least 2");
  if (n < k) throw std::invalid_argument("need at least k vertices");
  if (!(eps > 0.0 && eps <= 0.5))
    throw std::invalid_argument("eps must lie in (0, 1/2]");
  if (trials < 1) throw std::invalid_argument("need at least one trial");

  const std::uint64_t horizon = static_cast<std::uint64_t>(
      std::floor((1.0 - eps) * static_cast<double>(n) /
                 (static_cast<double>(k) * (k - 1))));
  const std::uint64_t stride = std::max<std::uint64_t>(1, n / 100);

  TraceResult trace;
  trace.k = k;
  trace.n = n;
  trace.eps = eps;
  trace.rounds = horizon;
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = derive_seed(master_seed, 0, trial);
    SequentialProcess process(n, k, seed);
    ComponentTracker tracker(n, k, audit ? 1000 : 0);
    const auto checkpoint = [&](std::uint64_t t) {
      const double theta = static_cast<double>(t) / static_cast<double>(n);
      trace.points.push_back(TracePoint{trial, t, theta,
                                        tracker.susceptibility(),
                                        susceptibility_curve(theta, k)});
    };
    checkpoint(0);
    for (std::uint64_t t = 1; t <= horizon; ++t) {
      const EdgeId added = process.step();
      if (added != kNoEdge)
        tracker.add_edge(process.hypergraph().edge(added));
      if (t % stride == 0 || t == horizon) checkpoint(t);
    }
    trace.audit.tracker_checks += tracker.audit_checks();
  }
  return trace;
}

std::string to_csv(const std::vector<TrialRecord>& records) {
  std::string out =
      "k,n,m,model,seed,trial,success,while_evals,susceptibility,"
      "max_component,hypertrees,unicyclic,complex,wall_ns\n";
  for (const TrialRecord& r : records) {
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += model_name(r.model);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.trial);
    out += ',';
    out += r.success ? '1' : '0';
    out += ',';
    out += std::to_string(r.while_evals);
    out += ',';
    out += format_double(r.susceptibility);
    out += ',';
    out += std::to_string(r.max_component);
    out += ',';
    out += std::to_string(r.hypertrees);
    out += ',';
    out += std::to_string(r.unicyclic);
    out += ',';
    out += std::to_string(r.complex_count);
    out += ',';
    out += std::to_string(r.wall_ns);
    out += '\n';
  }
  return out;
}

std::string to_csv(const TraceResult& trace) {
  std::string out = "k,n,eps,trial,t,theta,chi,x_theta\n";
  for (const TracePoint& p : trace.points) {
    out += std::to_string(trace.k);
    out += ',';
    out += std::to_string(trace.n);
    out += ',';
    out += format_double(trace.eps);
    out += ',';
    out += std::to_string(p.trial);
    out += ',';
    out += std::to_string(p.t);
    out += ',';
    out += format_double(p.theta);
    out += ',';
    out += format_double(p.chi);
    out += ',';
    out += format_double(p.x_theta);
    out += '\n';
  }
  return out;
}

namespace {
void write_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}
}  // namespace

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
  write_file(to_csv(records), path);
}

void emit_csv(const TraceResult& trace, const std::string& path) {
  write_file(to_csv(trace), path);
}

}  // namespace korient
