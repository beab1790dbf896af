#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace korient {

namespace {

void validate_db(const Hypergraph& h, std::uint32_t d, std::uint32_t b) {
  if (d < 1 || d > h.arity())
    throw std::invalid_argument("orientation degree d must be in [1, k]");
  if (b < 1) throw std::invalid_argument("vertex budget b must be at least 1");
}

// Plain Dinic; the networks here are small (m + distinct vertices + 2 nodes).
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      for (;;) {
        const std::int64_t pushed =
            dfs(s, t, std::numeric_limits<std::int64_t>::max());
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Residual capacity of the i-th added arc (pairs: arc 2i forward).
  std::int64_t residual(int arc_index) const { return arcs_[arc_index].cap; }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int u = queue_[qi];
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap <= 0 || level_[arcs_[a].to] != -1) continue;
        level_[arcs_[a].to] = level_[u] + 1;
        queue_.push_back(arcs_[a].to);
      }
    }
    return level_[t] != -1;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      const std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
  std::vector<int> queue_;
};

}  // namespace

bool feasible_flow(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                   std::vector<std::vector<Vertex>>* witness) {
  validate_db(h, d, b);
  const std::uint32_t m = h.edge_count();
  const std::uint32_t k = h.arity();
  if (witness) witness->assign(m, {});
  if (m == 0) return true;

  // Compact the touched vertices so the network ignores isolated ones.
  std::unordered_map<Vertex, int> vertex_node;
  vertex_node.reserve(static_cast<std::size_t>(m) * k);
  for (EdgeId e = 0; e < m; ++e)
    for (Vertex v : h.edge(e))
      vertex_node.emplace(v, static_cast<int>(vertex_node.size()));

  const int source = 0;
  const auto edge_node = [](EdgeId e) { return 1 + static_cast<int>(e); };
  const int vertex_base = 1 + static_cast<int>(m);
  const int sink = vertex_base + static_cast<int>(vertex_node.size());

  Dinic net(sink + 1);
  for (EdgeId e = 0; e < m; ++e) net.add_arc(source, edge_node(e), d);
  // Incidence arcs are added edge-major; remember each one's index so the
  // witness can be read off the residual capacities.
  std::vector<int> incidence_arc(static_cast<std::size_t>(m) * k);
  int arc_counter = 2 * static_cast<int>(m);
  for (EdgeId e = 0; e < m; ++e) {
    const auto vs = h.edge(e);
    for (std::uint32_t i = 0; i < k; ++i) {
      net.add_arc(edge_node(e), vertex_base + vertex_node.at(vs[i]), 1);
      incidence_arc[static_cast<std::size_t>(e) * k + i] = arc_counter;
      arc_counter += 2;
    }
  }
  for (const auto& [v, node] : vertex_node)
    net.add_arc(vertex_base + node, sink, b);

  const std::int64_t want = static_cast<std::int64_t>(m) * d;
  if (net.max_flow(source, sink) != want) {
    if (witness) witness->clear();
    return false;
  }
  if (witness) {
    for (EdgeId e = 0; e < m; ++e) {
      const auto vs = h.edge(e);
      auto& assigned = (*witness)[e];
      for (std::uint32_t i = 0; i < k; ++i)
        if (net.residual(incidence_arc[static_cast<std::size_t>(e) * k + i]) == 0)
          assigned.push_back(vs[i]);  // saturated arc carried one unit
    }
  }
  return true;
}

bool brute_force_orient(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                        std::vector<std::vector<Vertex>>* witness) {
  validate_db(h, d, b);
  const std::uint32_t m = h.edge_count();
  const std::uint32_t k = h.arity();

  const std::uint64_t per_edge = binomial_or_max(k, d);
  long double work = 1.0L;
  for (std::uint32_t e = 0; e < m && work <= 1e6L; ++e)
    work *= static_cast<long double>(per_edge);
  if (work > 1e6L)
    throw LimitError("brute force search space exceeds 10^6 assignments");

  if (witness) witness->assign(m, {});
  if (m == 0) return true;

  // All d-subsets of positions {0..k-1}, as index lists.
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> pick(d);
  for (std::uint32_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    subsets.push_back(pick);
    std::int32_t j = static_cast<std::int32_t>(d) - 1;
    while (j >= 0 && pick[j] == k - d + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (std::uint32_t i = j + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }

  std::vector<std::uint32_t> load(h.vertex_count(), 0);
  std::vector<std::uint32_t> choice(m, 0);

  const auto assign = [&](EdgeId e, std::size_t subset, bool on) {
    const auto vs = h.edge(e);
    for (const std::uint32_t pos : subsets[subset])
      load[vs[pos]] += on ? 1 : -1;
  };
  const auto fits = [&](EdgeId e, std::size_t subset) {
    const auto vs = h.edge(e);
    for (const std::uint32_t pos : subsets[subset])
      if (load[vs[pos]] >= b) return false;
    return true;
  };

  // Depth-first over edges; choice[e] is the subset index currently tried.
  EdgeId e = 0;
  for (;;) {
    bool advanced = false;
    for (std::size_t s = choice[e]; s < subsets.size(); ++s) {
      if (!fits(e, s)) continue;
      choice[e] = static_cast<std::uint32_t>(s);
      assign(e, s, true);
      advanced = true;
      break;
    }
    if (advanced) {
      if (++e == m) break;  // all edges placed
      choice[e] = 0;
      continue;
    }
    if (e == 0) return false;
    --e;
    assign(e, choice[e], false);
    ++choice[e];
  }

  if (witness) {
    for (EdgeId eid = 0; eid < m; ++eid) {
      const auto vs = h.edge(eid);
      for (const std::uint32_t pos : subsets[choice[eid]])
        (*witness)[eid].push_back(vs[pos]);
      std::sort((*witness)[eid].begin(), (*witness)[eid].end());
    }
  }
  return true;
}

std::uint64_t capacity(const Hypergraph& h, std::span<const EdgeId> subset,
                       std::uint32_t b) {
  if (b < 1) throw std::invalid_argument("vertex budget b must be at least 1");
  std::unordered_map<Vertex, std::uint32_t> incidences;
  for (const EdgeId e : subset) {
    if (e >= h.edge_count()) throw std::invalid_argument("edge id out of range");
    for (Vertex v : h.edge(e)) ++incidences[v];
  }
  std::uint64_t cap = 0;
  for (const auto& [v, count] : incidences) cap += std::min(count, b);
  return cap;
}

bool capacity_criterion(const Hypergraph& h, std::uint32_t d, std::uint32_t b) {
  validate_db(h, d, b);
  const std::uint32_t m = h.edge_count();
  if (m > 63 || (1ull << m) > 1'000'000ull)
    throw LimitError("capacity criterion needs 2^m <= 10^6 subsets");

  std::vector<EdgeId> subset;
  subset.reserve(m);
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    subset.clear();
    for (std::uint32_t e = 0; e < m; ++e)
      if (mask & (1ull << e)) subset.push_back(e);
    if (capacity(h, subset, b) <
        static_cast<std::uint64_t>(d) * subset.size())
      return false;
  }
  return true;
}

bool verify_assignment(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                       const std::vector<std::vector<Vertex>>& witness,
                       std::vector<std::string>* diagnostics) {
  validate_db(h, d, b);
  bool ok = true;
  const auto report = [&](const char* kind, const std::string& v,
                          const std::string& e) {
    ok = false;
    if (diagnostics)
      diagnostics->push_back(std::string("VIOLATION ") + kind + " " + v + " " + e);
  };
  if (witness.size() != h.edge_count()) {
    report("arity", "-", "-");
    return ok;
  }
  std::unordered_map<Vertex, std::uint32_t> load;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& assigned = witness[e];
    if (assigned.size() != d) {
      report("arity", "-", std::to_string(e));
      continue;
    }
    const auto vs = h.edge(e);
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      const Vertex v = assigned[i];
      if (std::find(vs.begin(), vs.end(), v) == vs.end())
        report("membership", std::to_string(v), std::to_string(e));
      if (std::count(assigned.begin(), assigned.end(), v) > 1 &&
          std::find(assigned.begin(), assigned.begin() + i, v) ==
              assigned.begin() + i)
        report("distinct", std::to_string(v), std::to_string(e));
      ++load[v];
    }
  }
  for (const auto& [v, count] : load)
    if (count > b) report("load", std::to_string(v), "-");
  return ok;
}

}  // namespace korient
