#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hypergraph.hpp"
#include "rng.hpp"

using namespace korient;

TEST_CASE("binomial coefficients") {
  CHECK(binomial_or_max(5, 3) == 10);
  CHECK(binomial_or_max(12, 4) == 495);
  CHECK(binomial_or_max(12, 3) == 220);
  CHECK(binomial_or_max(3, 5) == 0);
  CHECK(binomial_or_max(50, 3) == 19600);
  // C(70, 35) ~ 1.1e20 does not fit in 64 bits
  CHECK(binomial_or_max(70, 35) == std::numeric_limits<std::uint64_t>::max());
  CHECK(binomial_ld(5, 3) == 10.0L);
  // exact up to 64-bit mantissa: C(100000, 3) = 166661666700000
  CHECK(binomial_ld(100000, 3) == 166661666700000.0L);
}

TEST_CASE("edge storage keeps ascending tuples and cycles through them") {
  Hypergraph h(6, 3);
  CHECK(h.add_edge(std::vector<Vertex>{1, 3, 5}) == 0);
  CHECK(h.edge_count() == 1);
  CHECK(h.first(0) == 1);
  CHECK(h.next(0, 1) == 3);
  CHECK(h.next(0, 3) == 5);
  CHECK(h.next(0, 5) == 1);
  CHECK_THROWS_AS(h.next(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(std::vector<Vertex>{3, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(std::vector<Vertex>{1, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(std::vector<Vertex>{1, 3, 6}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(std::vector<Vertex>{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(5, 1), std::invalid_argument);
}

TEST_CASE("gen_uniform basics") {
  const Hypergraph h = gen_uniform(3, 1, 3, 42);
  REQUIRE(h.edge_count() == 1);
  CHECK(h.edge(0)[0] == 0);
  CHECK(h.edge(0)[1] == 1);
  CHECK(h.edge(0)[2] == 2);

  CHECK(gen_uniform(9, 0, 3, 1).edge_count() == 0);
  CHECK(gen_uniform(5, 10, 3, 7).edge_count() == 10);  // whole universe
  CHECK_THROWS_AS(gen_uniform(5, 11, 3, 7), std::invalid_argument);
  CHECK(gen_uniform(30, 12, 3, 99) == gen_uniform(30, 12, 3, 99));

  const Hypergraph big = gen_uniform(1000, 500, 4, 5);
  REQUIRE(big.edge_count() == 500);
  for (EdgeId e = 0; e < big.edge_count(); ++e) {
    const auto vs = big.edge(e);
    for (std::size_t i = 1; i < vs.size(); ++i) REQUIRE(vs[i - 1] < vs[i]);
  }
}

TEST_CASE("gen_uniform draws single edges uniformly") {
  // n=5, k=3: 10 possible edges, 100000 independent draws. Each cell is
  // Binomial(1e5, 0.1), sd ~95, so +-600 is a >6 sigma band.
  std::map<std::vector<Vertex>, int> counts;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    const Hypergraph h = gen_uniform(5, 1, 3, seed);
    const auto vs = h.edge(0);
    counts[std::vector<Vertex>(vs.begin(), vs.end())]++;
  }
  REQUIRE(counts.size() == 10);
  for (const auto& [edge, count] : counts) {
    CHECK(count > 10000 - 600);
    CHECK(count < 10000 + 600);
  }
}

TEST_CASE("gen_uniform draws edge pairs uniformly") {
  // n=5, k=3, m=2: C(10,2)=45 equally likely pairs; chi-square with 44
  // degrees of freedom. 99.9th percentile is 78.749; seeded draw, no flake.
  std::map<std::vector<Vertex>, int> counts;
  const int samples = 225000;  // 5000 expected per pair
  for (int s = 0; s < samples; ++s) {
    const Hypergraph h = gen_uniform(5, 2, 3, derive_seed(4242, 0, s));
    const auto a = h.edge(0);
    const auto b = h.edge(1);
    std::vector<Vertex> key(a.begin(), a.end());
    std::vector<Vertex> kb(b.begin(), b.end());
    if (kb < key) std::swap(key, kb);  // canonical pair order
    key.insert(key.end(), kb.begin(), kb.end());
    counts[key]++;
  }
  REQUIRE(counts.size() == 45);
  const double expected = samples / 45.0;
  double chi2 = 0;
  for (const auto& [key, count] : counts) {
    const double d = count - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 78.749);
}

TEST_CASE("gen_binomial basics") {
  CHECK(gen_binomial(6, 0.0, 3, 1).edge_count() == 0);
  CHECK(gen_binomial(6, 1.0, 3, 1).edge_count() == 20);
  CHECK(gen_binomial(5, 1.0, 4, 1).edge_count() == 5);
  CHECK_THROWS_AS(gen_binomial(6, 1.5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_binomial(6, -0.5, 3, 1), std::invalid_argument);
  CHECK(gen_binomial(40, 0.01, 3, 5) == gen_binomial(40, 0.01, 3, 5));
}

TEST_CASE("gen_binomial edge count has the right mean") {
  // C(50,3) = 19600, p = 2.5e-4: mean 4.9, sd ~2.21. Mean of 10000 draws
  // within +-0.12 is a ~5.4 sigma band.
  double sum = 0;
  for (int s = 0; s < 10000; ++s)
    sum += static_cast<double>(gen_binomial(50, 2.5e-4, 3, derive_seed(7, 1, s)).edge_count());
  const double mean = sum / 10000.0;
  CHECK(mean > 4.9 - 0.12);
  CHECK(mean < 4.9 + 0.12);
}

TEST_CASE("text format round trips") {
  const Hypergraph h = gen_uniform(12, 6, 4, 31);
  const std::string text = format_hypergraph(h);
  CHECK(parse_hypergraph(text) == h);

  const Hypergraph empty(5, 3);
  CHECK(format_hypergraph(empty) == "3 5 0\n");
  CHECK(parse_hypergraph("3 5 0\n") == empty);
  CHECK(parse_hypergraph("3 5 0") == empty);  // no trailing newline
}

TEST_CASE("parser accepts whitespace variants") {
  const Hypergraph h = parse_hypergraph("3 5 2\r\n0 1 2\r\n1 3 4\r\n");
  CHECK(h.edge_count() == 2);
  CHECK(parse_hypergraph("3  5 1\n\n 0\t1 2 \n") == parse_hypergraph("3 5 1\n0 1 2\n"));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3 5"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n0 1"), ParseError);       // short edge
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n0 1 5\n"), ParseError);   // id >= n
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n2 1 0\n"), ParseError);   // not ascending
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n0 1 1\n"), ParseError);   // repeat
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n0 1 2\n3\n"), ParseError);  // trailing
  CHECK_THROWS_AS(parse_hypergraph("3 5 1\n0 x 2\n"), ParseError);   // not a number
  CHECK_THROWS_AS(parse_hypergraph("1 5 0\n"), ParseError);          // arity < 2
  CHECK_THROWS_AS(parse_hypergraph("4 3 0\n"), ParseError);          // n < k
  CHECK_THROWS_AS(parse_hypergraph("3 5 -1\n"), ParseError);
}

TEST_CASE("file save and load round trip") {
  const Hypergraph h = gen_uniform(20, 9, 3, 8);
  const std::string path = "hypergraph_roundtrip_test.txt";
  save_hypergraph(h, path);
  CHECK(load_hypergraph(path) == h);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_hypergraph("does_not_exist_anywhere.txt"), IoError);
}
