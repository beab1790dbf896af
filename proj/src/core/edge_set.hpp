#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "hypergraph.hpp"
#include "rng.hpp"

namespace korient::detail {

// Exact dedup keyed on the sorted vertex tuple (no lossy packing).
struct VertexTupleHash {
  std::size_t operator()(const std::vector<Vertex>& t) const noexcept {
    std::uint64_t h = 0x2545f4914f6cdd1dULL + t.size();
    for (Vertex v : t) h = mix64(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

using EdgeKeySet = std::unordered_set<std::vector<Vertex>, VertexTupleHash>;

}  // namespace korient::detail
