#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace korient {

// A (d, b)-orientation assigns every edge to d of its own vertices with no
// vertex assigned more than b edges. witness[e] lists edge e's d vertices in
// ascending order. The insertion walk solves the (k-1, 1) case; these
// oracles decide the general case exactly and independently.

// Max-flow reduction: source -> edge (capacity d), edge -> incident vertex
// (capacity 1), vertex -> sink (capacity b); feasible iff the max flow
// saturates all m*d units.
bool feasible_flow(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                   std::vector<std::vector<Vertex>>* witness = nullptr);

// Exhaustive search over per-edge d-subsets with backtracking. Guarded:
// throws LimitError unless C(k,d)^m <= 10^6.
bool brute_force_orient(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                        std::vector<std::vector<Vertex>>* witness = nullptr);

// cap(S) = sum over vertices of min(b, #incidences from S): the most slot
// demand S's vertices can absorb.
std::uint64_t capacity(const Hypergraph& h, std::span<const EdgeId> subset,
                       std::uint32_t b);

// Hall-type check: feasible iff cap(S) >= d*|S| for every edge subset S.
// Guarded: throws LimitError unless 2^m <= 10^6.
bool capacity_criterion(const Hypergraph& h, std::uint32_t d, std::uint32_t b);

// Validates a complete witness: d distinct own vertices per edge, no vertex
// loaded beyond b. Diagnostics use the same "VIOLATION <kind> <vertex>
// <edge>" shape as table verification, with kinds membership, distinct,
// arity, and load.
bool verify_assignment(const Hypergraph& h, std::uint32_t d, std::uint32_t b,
                       const std::vector<std::vector<Vertex>>& witness,
                       std::vector<std::string>* diagnostics = nullptr);

}  // namespace korient
