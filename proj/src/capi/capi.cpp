#include "korient.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "curves.hpp"
#include "harness.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "process.hpp"
#include "tracker.hpp"
#include "walk.hpp"

struct korient_hypergraph {
  korient::Hypergraph impl;
};

struct korient_process {
  korient::SequentialProcess impl;
};

struct korient_orientation {
  korient::OrientResult result;
  korient::ComponentTracker::Classification components;
  double susceptibility;
};

namespace {

thread_local std::string g_last_error;

korient_status fail(korient_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
korient_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(KORIENT_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const korient::ParseError& e) {
    return fail(KORIENT_ERROR_PARSE, e.what());
  } catch (const korient::IoError& e) {
    return fail(KORIENT_ERROR_IO, e.what());
  } catch (const korient::LimitError& e) {
    return fail(KORIENT_ERROR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KORIENT_ERROR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(KORIENT_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(KORIENT_ERROR_INTERNAL, "unknown error");
  }
}

korient_status require(bool condition, const char* what) {
  return condition ? KORIENT_OK : fail(KORIENT_ERROR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

korient_status check_vertex_count(uint64_t n) {
  return require(n >= 2 && n <= korient::kMaxVertices, "vertex count out of range");
}

}  // namespace

extern "C" {

const char* korient_status_name(korient_status status) {
  switch (status) {
    case KORIENT_OK: return "ok";
    case KORIENT_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case KORIENT_ERROR_PARSE: return "parse error";
    case KORIENT_ERROR_IO: return "io error";
    case KORIENT_ERROR_LIMIT: return "instance limit exceeded";
    case KORIENT_ERROR_NO_MEMORY: return "out of memory";
    case KORIENT_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* korient_last_error(void) { return g_last_error.c_str(); }

void korient_string_free(char* text) { delete[] text; }

korient_status korient_gen_uniform(uint64_t n, uint64_t m, uint32_t k,
                                   uint64_t seed, korient_hypergraph** out) {
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  if (korient_status s = check_vertex_count(n)) return s;
  return guarded([&] {
    *out = new korient_hypergraph{
        korient::gen_uniform(static_cast<std::uint32_t>(n), m, k, seed)};
    return KORIENT_OK;
  });
}

korient_status korient_gen_binomial(uint64_t n, double p, uint32_t k,
                                    uint64_t seed, korient_hypergraph** out) {
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  if (korient_status s = check_vertex_count(n)) return s;
  return guarded([&] {
    *out = new korient_hypergraph{
        korient::gen_binomial(static_cast<std::uint32_t>(n), p, k, seed)};
    return KORIENT_OK;
  });
}

korient_status korient_hypergraph_parse(const char* text,
                                        korient_hypergraph** out) {
  if (korient_status s = require(text != nullptr, "null text")) return s;
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    *out = new korient_hypergraph{korient::parse_hypergraph(text)};
    return KORIENT_OK;
  });
}

korient_status korient_hypergraph_load(const char* path,
                                       korient_hypergraph** out) {
  if (korient_status s = require(path != nullptr, "null path")) return s;
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    *out = new korient_hypergraph{korient::load_hypergraph(path)};
    return KORIENT_OK;
  });
}

korient_status korient_hypergraph_save(const korient_hypergraph* h,
                                       const char* path) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(path != nullptr, "null path")) return s;
  return guarded([&] {
    korient::save_hypergraph(h->impl, path);
    return KORIENT_OK;
  });
}

korient_status korient_hypergraph_format(const korient_hypergraph* h,
                                         char** out) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    *out = copy_string(korient::format_hypergraph(h->impl));
    return KORIENT_OK;
  });
}

void korient_hypergraph_free(korient_hypergraph* h) { delete h; }

uint64_t korient_hypergraph_vertex_count(const korient_hypergraph* h) {
  return h ? h->impl.vertex_count() : 0;
}

uint64_t korient_hypergraph_edge_count(const korient_hypergraph* h) {
  return h ? h->impl.edge_count() : 0;
}

uint32_t korient_hypergraph_arity(const korient_hypergraph* h) {
  return h ? h->impl.arity() : 0;
}

korient_status korient_hypergraph_edge(const korient_hypergraph* h,
                                       uint64_t edge, uint64_t* vertices_out) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(vertices_out != nullptr, "null output buffer"))
    return s;
  if (korient_status s = require(edge < h->impl.edge_count(), "edge id out of range"))
    return s;
  const auto vs = h->impl.edge(static_cast<korient::EdgeId>(edge));
  for (std::size_t i = 0; i < vs.size(); ++i) vertices_out[i] = vs[i];
  return KORIENT_OK;
}

korient_status korient_process_create(uint64_t n, uint32_t k, uint64_t seed,
                                      korient_process** out) {
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  if (korient_status s = check_vertex_count(n)) return s;
  return guarded([&] {
    *out = new korient_process{
        korient::SequentialProcess(static_cast<std::uint32_t>(n), k, seed)};
    return KORIENT_OK;
  });
}

korient_status korient_process_run(korient_process* process, uint64_t rounds) {
  if (korient_status s = require(process != nullptr, "null process")) return s;
  return guarded([&] {
    for (uint64_t i = 0; i < rounds; ++i) process->impl.step();
    return KORIENT_OK;
  });
}

uint64_t korient_process_rounds(const korient_process* process) {
  return process ? process->impl.rounds() : 0;
}

uint64_t korient_process_no_adds(const korient_process* process) {
  return process ? process->impl.no_adds() : 0;
}

korient_status korient_process_snapshot(const korient_process* process,
                                        korient_hypergraph** out) {
  if (korient_status s = require(process != nullptr, "null process")) return s;
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    *out = new korient_hypergraph{process->impl.hypergraph()};
    return KORIENT_OK;
  });
}

void korient_process_free(korient_process* process) { delete process; }

korient_status korient_orient(const korient_hypergraph* h, int audit,
                              korient_orientation** out) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(out != nullptr, "null output handle")) return s;
  return guarded([&] {
    korient::OrientResult result =
        korient::orient_all(h->impl, korient::OrientOptions{audit != 0});
    const auto components = result.tracker.classify();
    const double chi = result.tracker.susceptibility();
    *out = new korient_orientation{std::move(result), components, chi};
    return KORIENT_OK;
  });
}

int korient_orientation_success(const korient_orientation* o) {
  return (o && o->result.stats.success) ? 1 : 0;
}

uint64_t korient_orientation_while_evals(const korient_orientation* o) {
  return o ? o->result.stats.while_evals : 0;
}

uint64_t korient_orientation_edges_inserted(const korient_orientation* o) {
  return o ? o->result.stats.edges_inserted : 0;
}

uint64_t korient_orientation_failed_edge(const korient_orientation* o) {
  if (!o || o->result.failed_edge == korient::kNoEdge) return KORIENT_NO_EDGE;
  return o->result.failed_edge;
}

uint64_t korient_orientation_slot(const korient_orientation* o,
                                  uint64_t vertex) {
  if (!o || vertex >= o->result.table.slot.size()) return KORIENT_NO_EDGE;
  const korient::EdgeId e = o->result.table.slot[vertex];
  return e == korient::kNoEdge ? KORIENT_NO_EDGE : e;
}

double korient_orientation_susceptibility(const korient_orientation* o) {
  return o ? o->susceptibility : 0.0;
}

korient_status korient_orientation_components(const korient_orientation* o,
                                              uint64_t* hypertrees,
                                              uint64_t* unicyclic,
                                              uint64_t* complex_count,
                                              uint64_t* max_size) {
  if (korient_status s = require(o != nullptr, "null orientation")) return s;
  if (hypertrees) *hypertrees = o->components.hypertrees;
  if (unicyclic) *unicyclic = o->components.unicyclic;
  if (complex_count) *complex_count = o->components.complex_count;
  if (max_size) *max_size = o->components.max_size;
  return KORIENT_OK;
}

korient_status korient_orientation_verify(const korient_hypergraph* h,
                                          const korient_orientation* o,
                                          int* ok, char** diagnostics) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(o != nullptr, "null orientation")) return s;
  if (korient_status s = require(ok != nullptr, "null ok output")) return s;
  return guarded([&] {
    const korient::EdgeId inserted =
        o->result.stats.success
            ? h->impl.edge_count()
            : o->result.failed_edge;
    std::vector<std::string> lines;
    const bool good = korient::verify_table_prefix(
        h->impl, o->result.table, inserted, diagnostics ? &lines : nullptr);
    *ok = good ? 1 : 0;
    if (diagnostics) {
      if (lines.empty()) {
        *diagnostics = nullptr;
      } else {
        std::string joined;
        for (const std::string& line : lines) {
          joined += line;
          joined += '\n';
        }
        *diagnostics = copy_string(joined);
      }
    }
    return KORIENT_OK;
  });
}

void korient_orientation_free(korient_orientation* o) { delete o; }

korient_status korient_feasible_flow(const korient_hypergraph* h, uint32_t d,
                                     uint32_t b, int* feasible) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(feasible != nullptr, "null feasible output"))
    return s;
  return guarded([&] {
    *feasible = korient::feasible_flow(h->impl, d, b) ? 1 : 0;
    return KORIENT_OK;
  });
}

korient_status korient_feasible_witness(const korient_hypergraph* h, uint32_t d,
                                        uint32_t b, int* feasible,
                                        uint64_t* witness) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(feasible != nullptr, "null feasible output"))
    return s;
  if (korient_status s = require(witness != nullptr, "null witness buffer"))
    return s;
  return guarded([&] {
    std::vector<std::vector<korient::Vertex>> assignment;
    const bool good = korient::feasible_flow(h->impl, d, b, &assignment);
    *feasible = good ? 1 : 0;
    if (good) {
      std::size_t at = 0;
      for (const auto& per_edge : assignment)
        for (const korient::Vertex v : per_edge) witness[at++] = v;
    }
    return KORIENT_OK;
  });
}

korient_status korient_brute_force(const korient_hypergraph* h, uint32_t d,
                                   uint32_t b, int* feasible) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(feasible != nullptr, "null feasible output"))
    return s;
  return guarded([&] {
    *feasible = korient::brute_force_orient(h->impl, d, b) ? 1 : 0;
    return KORIENT_OK;
  });
}

korient_status korient_capacity_criterion(const korient_hypergraph* h,
                                          uint32_t d, uint32_t b,
                                          int* feasible) {
  if (korient_status s = require(h != nullptr, "null hypergraph")) return s;
  if (korient_status s = require(feasible != nullptr, "null feasible output"))
    return s;
  return guarded([&] {
    *feasible = korient::capacity_criterion(h->impl, d, b) ? 1 : 0;
    return KORIENT_OK;
  });
}

korient_status korient_reference_at(uint64_t n, uint32_t k, double eps,
                                    korient_reference* out) {
  if (korient_status s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    const korient::ReferenceCurves curves = korient::reference(n, k, eps);
    out->x = curves.x;
    out->f = curves.f;
    out->delta = curves.delta;
    out->susceptibility_bound = curves.susceptibility_bound;
    out->iteration_bound = curves.iteration_bound;
    return KORIENT_OK;
  });
}

korient_status korient_run_sweep(const korient_sweep_config* config,
                                 const char* csv_path) {
  if (korient_status s = require(config != nullptr, "null config")) return s;
  if (korient_status s = require(csv_path != nullptr, "null csv path")) return s;
  if (korient_status s = check_vertex_count(config->n)) return s;
  if (korient_status s = require(config->density_count == 0 ||
                                     config->densities != nullptr,
                                 "null densities pointer"))
    return s;
  if (korient_status s = require(config->edge_count_count == 0 ||
                                     config->edge_counts != nullptr,
                                 "null edge counts pointer"))
    return s;
  return guarded([&] {
    korient::ExperimentConfig cfg;
    cfg.k = config->k;
    cfg.n = static_cast<std::uint32_t>(config->n);
    if (config->density_count > 0)
      cfg.densities.assign(config->densities,
                           config->densities + config->density_count);
    if (config->edge_count_count > 0)
      cfg.edge_counts.assign(config->edge_counts,
                             config->edge_counts + config->edge_count_count);
    cfg.trials = config->trials;
    cfg.master_seed = config->master_seed;
    switch (config->model) {
      case KORIENT_MODEL_UNIFORM: cfg.model = korient::Model::Uniform; break;
      case KORIENT_MODEL_BINOMIAL: cfg.model = korient::Model::Binomial; break;
      case KORIENT_MODEL_PROCESS: cfg.model = korient::Model::Process; break;
      default: throw std::invalid_argument("unknown model");
    }
    cfg.include_timing = config->include_timing != 0;
    cfg.audit = config->audit != 0;
    korient::emit_csv(korient::run_sweep(cfg), csv_path);
    return KORIENT_OK;
  });
}

korient_status korient_run_trace(uint32_t k, uint64_t n, double eps,
                                 uint32_t trials, uint64_t master_seed,
                                 const char* csv_path) {
  if (korient_status s = require(csv_path != nullptr, "null csv path")) return s;
  if (korient_status s = check_vertex_count(n)) return s;
  return guarded([&] {
    korient::emit_csv(
        korient::run_susceptibility_trace(k, static_cast<std::uint32_t>(n), eps,
                                          trials, master_seed),
        csv_path);
    return KORIENT_OK;
  });
}

}  // extern "C"
