#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace korient {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Vertex-count cap keeps sums of squared component sizes inside uint64.
inline constexpr std::uint64_t kMaxVertices = 1ull << 31;

// Materialization guard for generators and parsers.
inline constexpr std::uint64_t kMaxEdges = 200'000'000;

// C(n, k), exact; UINT64_MAX when the value does not fit in 64 bits.
std::uint64_t binomial_or_max(std::uint64_t n, std::uint32_t k);

// C(n, k) as a long double, for counts far beyond 64 bits.
long double binomial_ld(std::uint64_t n, std::uint32_t k);

// k-uniform hypergraph on vertex ids [0, n). Edges are stored edge-major as
// strictly ascending k-tuples; an edge's id is its insertion index.
class Hypergraph {
 public:
  Hypergraph(std::uint32_t n, std::uint32_t k);

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t arity() const { return k_; }
  std::uint32_t edge_count() const {
    return static_cast<std::uint32_t>(verts_.size() / k_);
  }

  std::span<const Vertex> edge(EdgeId e) const {
    return {verts_.data() + static_cast<std::size_t>(e) * k_, k_};
  }

  // Smallest vertex of the edge (the tuple is ascending).
  Vertex first(EdgeId e) const { return verts_[static_cast<std::size_t>(e) * k_]; }

  // Successor of v inside the edge, cycling back to the smallest vertex.
  Vertex next(EdgeId e, Vertex v) const;

  // Vertices must be strictly ascending and in range. Returns the new id.
  EdgeId add_edge(std::span<const Vertex> vertices);

  bool operator==(const Hypergraph&) const = default;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Vertex> verts_;
};

// m distinct edges drawn uniformly from all C(n, k) possibilities.
Hypergraph gen_uniform(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                       std::uint64_t seed);

// Every possible edge present independently with probability p. The edge
// count is sampled first, then that many distinct edges are drawn uniformly;
// the two-stage view is distribution-identical and never enumerates the
// universe.
Hypergraph gen_binomial(std::uint32_t n, double p, std::uint32_t k,
                        std::uint64_t seed);

// Text format: header "k n m", then m lines of k ascending vertex ids.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& h, const std::string& path);

}  // namespace korient
