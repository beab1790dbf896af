#include "hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edge_set.hpp"
#include "rng.hpp"

namespace korient {

std::uint64_t binomial_or_max(std::uint64_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (n - k < k) k = static_cast<std::uint32_t>(n - k);
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // every prefix is itself a binomial, so exact
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

long double binomial_ld(std::uint64_t n, std::uint32_t k) {
  if (k > n) return 0.0L;
  if (n - k < k) k = static_cast<std::uint32_t>(n - k);
  long double acc = 1.0L;
  for (std::uint32_t i = 1; i <= k; ++i)
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return acc;
}

namespace {

void validate_shape(std::uint64_t n, std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("edge arity must be at least 2");
  if (n < k) throw std::invalid_argument("need at least k vertices");
  if (n > kMaxVertices) throw std::invalid_argument("vertex count exceeds limit");
}

// One uniform k-subset of [0, n), ascending, by rejection on collisions.
void sample_edge(Rng& rng, std::uint64_t n, std::uint32_t k,
                 std::vector<Vertex>& out) {
  for (;;) {
    out.clear();
    for (std::uint32_t i = 0; i < k; ++i)
      out.push_back(static_cast<Vertex>(rng.below(n)));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) == out.end()) return;
  }
}

Hypergraph fill_distinct_edges(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                               Rng& rng) {
  Hypergraph h(n, k);
  detail::EdgeKeySet seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<Vertex> scratch;
  scratch.reserve(k);
  while (h.edge_count() < m) {
    sample_edge(rng, n, k, scratch);
    if (seen.insert(scratch).second) h.add_edge(scratch);
  }
  return h;
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
  validate_shape(n, k);
}

Vertex Hypergraph::next(EdgeId e, Vertex v) const {
  const std::span<const Vertex> vs = edge(e);
  for (std::uint32_t i = 0; i < k_; ++i)
    if (vs[i] == v) return vs[(i + 1 == k_) ? 0 : i + 1];
  throw std::invalid_argument("vertex not incident to edge");
}

EdgeId Hypergraph::add_edge(std::span<const Vertex> vertices) {
  if (vertices.size() != k_)
    throw std::invalid_argument("edge has wrong arity");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_)
      throw std::invalid_argument("vertex id out of range");
    if (i > 0 && vertices[i - 1] >= vertices[i])
      throw std::invalid_argument("edge vertices must be strictly ascending");
  }
  if (edge_count() >= kMaxEdges) throw LimitError("edge count exceeds limit");
  const EdgeId id = edge_count();
  verts_.insert(verts_.end(), vertices.begin(), vertices.end());
  return id;
}

Hypergraph gen_uniform(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                       std::uint64_t seed) {
  validate_shape(n, k);
  if (m > kMaxEdges) throw LimitError("requested edge count exceeds limit");
  const std::uint64_t universe = binomial_or_max(n, k);
  if (m > universe)
    throw std::invalid_argument("more edges requested than distinct k-sets exist");
  Rng rng(seed);
  return fill_distinct_edges(n, m, k, rng);
}

Hypergraph gen_binomial(std::uint32_t n, double p, std::uint32_t k,
                        std::uint64_t seed) {
  validate_shape(n, k);
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability outside [0, 1]");
  Rng rng(seed);
  const std::uint64_t m = sample_binomial(rng, binomial_ld(n, k), p);
  if (m > kMaxEdges) throw LimitError("sampled edge count exceeds limit");
  return fill_distinct_edges(n, m, k, rng);
}

namespace {

struct TokenReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool next_token(std::string_view& out) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
            text[pos] == '\n')) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
    if (pos >= text.size()) return false;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\r' && text[pos] != '\n')
      ++pos;
    out = text.substr(start, pos - start);
    return true;
  }

  std::uint64_t need_number(const char* what, std::uint64_t max) {
    std::string_view tok;
    if (!next_token(tok)) {
      throw ParseError("line " + std::to_string(line) + ": missing " +
                       std::string(what));
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(line) + ": bad " +
                       std::string(what) + " '" + std::string(tok) + "'");
    if (value > max)
      throw ParseError("line " + std::to_string(line) + ": " +
                       std::string(what) + " out of range");
    return value;
  }
};

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  TokenReader reader{text};
  const auto k =
      static_cast<std::uint32_t>(reader.need_number("arity k", kMaxVertices));
  const auto n = static_cast<std::uint32_t>(
      reader.need_number("vertex count n", kMaxVertices));
  const std::uint64_t m = reader.need_number("edge count m", kMaxEdges);
  if (k < 2) throw ParseError("line 1: arity must be at least 2");
  if (n < k) throw ParseError("line 1: need at least k vertices");

  Hypergraph h(n, k);
  std::vector<Vertex> edge(k);
  for (std::uint64_t e = 0; e < m; ++e) {
    for (std::uint32_t i = 0; i < k; ++i)
      edge[i] = static_cast<Vertex>(reader.need_number("vertex id", n - 1));
    try {
      h.add_edge(edge);
    } catch (const std::invalid_argument& err) {
      throw ParseError("edge " + std::to_string(e) + ": " + err.what());
    }
  }
  std::string_view trailing;
  if (reader.next_token(trailing))
    throw ParseError("line " + std::to_string(reader.line) +
                     ": unexpected trailing token '" + std::string(trailing) +
                     "'");
  return h;
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out;
  out += std::to_string(h.arity());
  out += ' ';
  out += std::to_string(h.vertex_count());
  out += ' ';
  out += std::to_string(h.edge_count());
  out += '\n';
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto vs = h.edge(e);
    for (std::uint32_t i = 0; i < h.arity(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(vs[i]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return parse_hypergraph(buf.str());
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_hypergraph(h);
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace korient
