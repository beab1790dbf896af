#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypergraph.hpp"

namespace korient {

// What one edge insertion did to the component structure.
struct MergeReport {
  std::uint32_t components_touched = 0;  // distinct components before the merge
  std::uint64_t size_before_sum = 0;     // total size of the touched components
  std::uint64_t size_after = 0;          // size of the merged component
  std::int64_t excess_after = 0;         // (k-1)*edges - vertices, merged
  double susceptibility_delta = 0.0;
};

// Union-find over the vertex set with per-component vertex and edge counts,
// plus a running sum of squared component sizes so susceptibility is O(1).
//
// Excess of a component with e edges on s vertices is (k-1)e - s. Connected
// components satisfy excess >= -1; -1 means hypertree, 0 unicyclic, positive
// means structurally overloaded.
class ComponentTracker {
 public:
  // audit_interval > 0 enables self-checks: every merge re-derives the merged
  // excess from the parts, and every audit_interval merges the squared-size
  // sum is recomputed from scratch. Mismatches throw std::logic_error.
  ComponentTracker(std::uint32_t n, std::uint32_t k,
                   std::uint32_t audit_interval = 0);

  // Account one k-edge. Duplicate edges are legal and simply add excess.
  MergeReport add_edge(std::span<const Vertex> vertices);

  Vertex find(Vertex v);
  std::uint64_t component_size(Vertex v);
  std::uint64_t component_edges(Vertex v);
  std::int64_t component_excess(Vertex v);

  // (1/n) * sum of squared component sizes.
  double susceptibility() const {
    return static_cast<double>(s2_) / static_cast<double>(n_);
  }
  std::uint64_t squared_size_sum() const { return s2_; }
  std::uint64_t merges() const { return merges_; }
  std::uint64_t audit_checks() const { return audit_checks_; }

  struct Classification {
    std::uint64_t hypertrees = 0;   // excess -1 (isolated vertices included)
    std::uint64_t unicyclic = 0;    // excess 0
    std::uint64_t complex_count = 0;  // excess > 0
    std::uint64_t max_size = 0;
  };
  Classification classify() const;

 private:
  Vertex resolve(Vertex v);  // find with path compression
  void audit();

  std::uint32_t n_;
  std::uint32_t k_;
  std::uint32_t audit_interval_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;   // valid at roots
  std::vector<std::uint32_t> edges_;  // valid at roots
  std::uint64_t s2_;
  std::uint64_t merges_ = 0;
  std::uint64_t audit_checks_ = 0;
  std::vector<Vertex> roots_;  // scratch
};

}  // namespace korient
