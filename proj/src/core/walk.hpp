#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "tracker.hpp"

namespace korient {

// slot[v] is the edge oriented toward v, or kNoEdge. A full orientation
// assigns every edge to exactly k-1 of its vertices, one edge per vertex.
struct OrientationTable {
  explicit OrientationTable(std::uint32_t n) : slot(n, kNoEdge) {}
  std::vector<EdgeId> slot;
};

struct WalkStats {
  std::uint64_t while_evals = 0;    // walk loop condition evaluations
  std::uint64_t edges_inserted = 0;
  bool success = false;
  bool budget_exhausted = false;    // safety budget tripped (never expected)
};

enum class InsertOutcome { Oriented, Infeasible };

// Insert edge e by random-walk displacement, k-1 passes: each pass starts at
// the edge's smallest vertex and repeatedly advances to the cyclic successor
// inside the currently displaced edge, swapping it into that vertex's slot,
// until an empty slot absorbs the displaced edge.
//
// The component tracker is charged with e *before* walking; if the merged
// component's excess turns positive the instance has no orientation (too few
// vertices for the edges), the table is left untouched and the call reports
// Infeasible. As defense in depth each call also carries an eval budget of
// 4*k^2*s (s = merged component size); exhaustion rolls the table back.
//
// Requires every previously inserted edge to be fully placed in `table`.
InsertOutcome orient_edge(const Hypergraph& h, EdgeId e, OrientationTable& table,
                          ComponentTracker& tracker, WalkStats& stats);

struct OrientOptions {
  bool audit = false;  // per-insert slot conservation + tracker self-checks
};

struct OrientResult {
  WalkStats stats;
  EdgeId failed_edge = kNoEdge;  // first edge that could not be placed
  OrientationTable table;
  ComponentTracker tracker;      // includes the failed edge's merge, if any
  std::uint64_t audit_events = 0;
};

// Insert all edges in id order, stopping at the first infeasible edge.
OrientResult orient_all(const Hypergraph& h, const OrientOptions& opts = {});

// True iff edges [0, inserted) each hold exactly k-1 slots at their own
// vertices and every other slot is empty. Diagnostics, when requested, get
// one line per problem: "VIOLATION <kind> <vertex> <edge>" with kind one of
// membership (slot edge not incident to the vertex), slots (edge holds a
// wrong number of slots; vertex field is "-"), or range (slot holds an id
// outside [0, m)).
bool verify_table_prefix(const Hypergraph& h, const OrientationTable& table,
                         EdgeId inserted,
                         std::vector<std::string>* diagnostics = nullptr);

// verify_table_prefix over every edge of h.
bool verify_table(const Hypergraph& h, const OrientationTable& table,
                  std::vector<std::string>* diagnostics = nullptr);

}  // namespace korient
