#pragma once

#include <cstdint>
#include <span>

#include "edge_set.hpp"
#include "hypergraph.hpp"
#include "rng.hpp"

namespace korient {

// Round-by-round random process: each round draws k vertices independently
// and uniformly; the round adds an edge only when the draws are pairwise
// distinct and the k-set is not already present. Rounds that add nothing
// are counted as no-adds, so rounds() == edge count + no_adds() always.
class SequentialProcess {
 public:
  SequentialProcess(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

  // One round; returns the id of the added edge, or kNoEdge on a no-add.
  EdgeId step();

  // The add/no-add rule applied to a caller-supplied sample of k vertex ids
  // (order and duplicates as drawn). Exposed so the rule can be tested
  // without touching the generator.
  EdgeId apply_sample(std::span<const Vertex> sample);

  const Hypergraph& hypergraph() const { return h_; }
  std::uint64_t rounds() const { return rounds_; }
  std::uint64_t no_adds() const { return no_adds_; }

 private:
  Hypergraph h_;
  Rng rng_;
  detail::EdgeKeySet seen_;
  std::vector<Vertex> draw_;
  std::vector<Vertex> sorted_;
  std::uint64_t rounds_ = 0;
  std::uint64_t no_adds_ = 0;
};

}  // namespace korient
