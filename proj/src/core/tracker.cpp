#include "tracker.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace korient {

ComponentTracker::ComponentTracker(std::uint32_t n, std::uint32_t k,
                                   std::uint32_t audit_interval)
    : n_(n), k_(k), audit_interval_(audit_interval) {
  if (k < 2) throw std::invalid_argument("edge arity must be at least 2");
  if (n == 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
  size_.assign(n, 1);
  edges_.assign(n, 0);
  s2_ = n;  // n singletons
  roots_.reserve(k);
}

Vertex ComponentTracker::resolve(Vertex v) {
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const Vertex up = parent_[v];
    parent_[v] = root;
    v = up;
  }
  return root;
}

Vertex ComponentTracker::find(Vertex v) {
  if (v >= n_) throw std::invalid_argument("vertex id out of range");
  return resolve(v);
}

std::uint64_t ComponentTracker::component_size(Vertex v) {
  return size_[find(v)];
}

std::uint64_t ComponentTracker::component_edges(Vertex v) {
  return edges_[find(v)];
}

std::int64_t ComponentTracker::component_excess(Vertex v) {
  const Vertex r = find(v);
  return static_cast<std::int64_t>(k_ - 1) * edges_[r] -
         static_cast<std::int64_t>(size_[r]);
}

MergeReport ComponentTracker::add_edge(std::span<const Vertex> vertices) {
  if (vertices.size() != k_)
    throw std::invalid_argument("edge has wrong arity");
  roots_.clear();
  for (Vertex v : vertices) {
    const Vertex r = find(v);
    if (std::find(roots_.begin(), roots_.end(), r) == roots_.end())
      roots_.push_back(r);
  }

  MergeReport report;
  report.components_touched = static_cast<std::uint32_t>(roots_.size());
  std::uint64_t sum = 0, sum_sq = 0, edge_sum = 0;
  std::int64_t excess_sum = 0;
  Vertex winner = roots_[0];
  for (Vertex r : roots_) {
    const std::uint64_t s = size_[r];
    sum += s;
    sum_sq += s * s;
    edge_sum += edges_[r];
    excess_sum += static_cast<std::int64_t>(k_ - 1) * edges_[r] -
                  static_cast<std::int64_t>(size_[r]);
    if (size_[r] > size_[winner] ||
        (size_[r] == size_[winner] && r < winner))
      winner = r;
  }
  report.size_before_sum = sum;
  report.size_after = sum;

  for (Vertex r : roots_)
    if (r != winner) parent_[r] = winner;
  size_[winner] = static_cast<std::uint32_t>(sum);
  edges_[winner] = static_cast<std::uint32_t>(edge_sum + 1);

  s2_ += sum * sum - sum_sq;
  report.susceptibility_delta =
      static_cast<double>(sum * sum - sum_sq) / static_cast<double>(n_);
  report.excess_after = static_cast<std::int64_t>(k_ - 1) * edges_[winner] -
                        static_cast<std::int64_t>(size_[winner]);
  ++merges_;

  if (audit_interval_ > 0) {
    // Merged excess must equal the parts' excesses plus k-1.
    if (report.excess_after != excess_sum + static_cast<std::int64_t>(k_ - 1))
      throw std::logic_error("component audit: excess additivity violated");
    ++audit_checks_;
    if (merges_ % audit_interval_ == 0) audit();
  }
  return report;
}

void ComponentTracker::audit() {
  std::uint64_t s2 = 0, total = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (parent_[v] != v) continue;
    const std::uint64_t s = size_[v];
    s2 += s * s;
    total += s;
    const std::int64_t excess = static_cast<std::int64_t>(k_ - 1) * edges_[v] -
                                static_cast<std::int64_t>(s);
    if (excess < -1)
      throw std::logic_error("component audit: excess below -1");
  }
  if (total != n_)
    throw std::logic_error("component audit: component sizes do not cover n");
  if (s2 != s2_)
    throw std::logic_error("component audit: squared-size sum drifted");
  ++audit_checks_;
}

ComponentTracker::Classification ComponentTracker::classify() const {
  Classification c;
  for (Vertex v = 0; v < n_; ++v) {
    if (parent_[v] != v) continue;
    const std::int64_t excess =
        static_cast<std::int64_t>(k_ - 1) * edges_[v] -
        static_cast<std::int64_t>(size_[v]);
    if (excess < 0)
      ++c.hypertrees;
    else if (excess == 0)
      ++c.unicyclic;
    else
      ++c.complex_count;
    c.max_size = std::max<std::uint64_t>(c.max_size, size_[v]);
  }
  return c;
}

}  // namespace korient
