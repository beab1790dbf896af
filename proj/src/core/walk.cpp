#include "walk.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace korient {

namespace {

constexpr std::uint32_t kTrackerAuditInterval = 1000;

struct SlotChange {
  Vertex v;
  EdgeId prev;
};

InsertOutcome insert_walk(const Hypergraph& h, EdgeId e, OrientationTable& table,
                          ComponentTracker& tracker, WalkStats& stats,
                          std::vector<SlotChange>& journal) {
  const std::uint32_t k = h.arity();

  // Merge first: a component whose excess goes positive has more slot demand
  // than vertices, and growing it further never helps. Exact for this walk.
  const MergeReport merge = tracker.add_edge(h.edge(e));
  if (merge.excess_after > 0) return InsertOutcome::Infeasible;

  const std::uint64_t budget =
      4ull * k * k * merge.size_after;  // >> expected walk length
  std::uint64_t evals = 0;
  journal.clear();
  for (std::uint32_t pass = 1; pass < k; ++pass) {
    EdgeId walking = e;
    Vertex v = h.first(e);
    for (;;) {
      ++evals;
      if (walking == kNoEdge) break;
      if (evals > budget) {
        for (auto it = journal.rbegin(); it != journal.rend(); ++it)
          table.slot[it->v] = it->prev;
        stats.while_evals += evals;
        stats.budget_exhausted = true;
        return InsertOutcome::Infeasible;
      }
      v = h.next(walking, v);
      journal.push_back({v, table.slot[v]});
      std::swap(walking, table.slot[v]);
    }
  }
  stats.while_evals += evals;
  ++stats.edges_inserted;
  return InsertOutcome::Oriented;
}

// Slot conservation after a successful insert: the inserted edge and every
// edge whose slots the walk moved must each hold exactly k-1 slots.
void audit_insertion(const Hypergraph& h, EdgeId e,
                     const std::vector<SlotChange>& journal,
                     const OrientationTable& table,
                     std::vector<std::uint32_t>& held,
                     std::vector<SlotChange>& first_prev) {
  first_prev.clear();
  for (const SlotChange& ch : journal) {
    bool seen = false;
    for (const SlotChange& fp : first_prev)
      if (fp.v == ch.v) {
        seen = true;
        break;
      }
    if (!seen) first_prev.push_back(ch);
  }
  for (const SlotChange& fp : first_prev) {
    const EdgeId now = table.slot[fp.v];
    if (fp.prev != kNoEdge) --held[fp.prev];
    if (now != kNoEdge) ++held[now];
  }
  const std::uint32_t want = h.arity() - 1;
  if (held[e] != want)
    throw std::logic_error("walk audit: inserted edge holds wrong slot count");
  for (const SlotChange& fp : first_prev) {
    const EdgeId now = table.slot[fp.v];
    if (fp.prev != kNoEdge && held[fp.prev] != want)
      throw std::logic_error("walk audit: displaced edge lost a slot");
    if (now != kNoEdge && held[now] != want)
      throw std::logic_error("walk audit: displaced edge lost a slot");
  }
}

}  // namespace

InsertOutcome orient_edge(const Hypergraph& h, EdgeId e, OrientationTable& table,
                          ComponentTracker& tracker, WalkStats& stats) {
  if (e >= h.edge_count()) throw std::invalid_argument("edge id out of range");
  if (table.slot.size() != h.vertex_count())
    throw std::invalid_argument("table size does not match hypergraph");
  std::vector<SlotChange> journal;
  return insert_walk(h, e, table, tracker, stats, journal);
}

OrientResult orient_all(const Hypergraph& h, const OrientOptions& opts) {
  const std::uint32_t n = h.vertex_count();
  const std::uint32_t k = h.arity();
  OrientResult res{WalkStats{}, kNoEdge, OrientationTable(n),
                   ComponentTracker(n, k, opts.audit ? kTrackerAuditInterval : 0),
                   0};
  std::vector<SlotChange> journal;
  std::vector<SlotChange> scratch;
  std::vector<std::uint32_t> held;
  if (opts.audit) held.assign(h.edge_count(), 0);

  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const InsertOutcome out =
        insert_walk(h, e, res.table, res.tracker, res.stats, journal);
    if (out == InsertOutcome::Infeasible) {
      res.failed_edge = e;
      res.stats.success = false;
      if (opts.audit) {
        if (!verify_table_prefix(h, res.table, e))
          throw std::logic_error("walk audit: table corrupt after rejection");
        ++res.audit_events;
      }
      return res;
    }
    if (opts.audit) {
      audit_insertion(h, e, journal, res.table, held, scratch);
      ++res.audit_events;
    }
  }
  res.stats.success = true;
  if (opts.audit) {
    if (!verify_table(h, res.table))
      throw std::logic_error("walk audit: final table verification failed");
    ++res.audit_events;
  }
  return res;
}

bool verify_table_prefix(const Hypergraph& h, const OrientationTable& table,
                         EdgeId inserted,
                         std::vector<std::string>* diagnostics) {
  if (table.slot.size() != h.vertex_count())
    throw std::invalid_argument("table size does not match hypergraph");
  if (inserted > h.edge_count())
    throw std::invalid_argument("inserted count exceeds edge count");
  bool ok = true;
  const auto report = [&](const char* kind, const std::string& v,
                          const std::string& e) {
    ok = false;
    if (diagnostics)
      diagnostics->push_back(std::string("VIOLATION ") + kind + " " + v + " " + e);
  };

  std::vector<std::uint32_t> counts(h.edge_count(), 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const EdgeId e = table.slot[v];
    if (e == kNoEdge) continue;
    if (e >= h.edge_count()) {
      report("range", std::to_string(v), std::to_string(e));
      continue;
    }
    ++counts[e];
    const auto vs = h.edge(e);
    if (std::find(vs.begin(), vs.end(), v) == vs.end())
      report("membership", std::to_string(v), std::to_string(e));
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const std::uint32_t want = e < inserted ? h.arity() - 1 : 0;
    if (counts[e] != want) report("slots", "-", std::to_string(e));
  }
  return ok;
}

bool verify_table(const Hypergraph& h, const OrientationTable& table,
                  std::vector<std::string>* diagnostics) {
  return verify_table_prefix(h, table, h.edge_count(), diagnostics);
}

}  // namespace korient
