#include "process.hpp"

#include <algorithm>
#include <stdexcept>

namespace korient {

SequentialProcess::SequentialProcess(std::uint32_t n, std::uint32_t k,
                                     std::uint64_t seed)
    : h_(n, k), rng_(seed) {
  draw_.reserve(k);
  sorted_.reserve(k);
}

EdgeId SequentialProcess::step() {
  draw_.clear();
  for (std::uint32_t i = 0; i < h_.arity(); ++i)
    draw_.push_back(static_cast<Vertex>(rng_.below(h_.vertex_count())));
  return apply_sample(draw_);
}

EdgeId SequentialProcess::apply_sample(std::span<const Vertex> sample) {
  if (sample.size() != h_.arity())
    throw std::invalid_argument("sample has wrong arity");
  for (Vertex v : sample)
    if (v >= h_.vertex_count())
      throw std::invalid_argument("sampled vertex out of range");
  ++rounds_;
  sorted_.assign(sample.begin(), sample.end());
  std::sort(sorted_.begin(), sorted_.end());
  const bool distinct =
      std::adjacent_find(sorted_.begin(), sorted_.end()) == sorted_.end();
  if (!distinct || !seen_.insert(sorted_).second) {
    ++no_adds_;
    return kNoEdge;
  }
  return h_.add_edge(sorted_);
}

}  // namespace korient
