#include "doctest.h"
#include "oracle.hpp"
#include "psg/error.hpp"
#include "psg/graph.hpp"

using namespace psg;

namespace {
  DefiningGraph p4() {
    return parse_graph("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\n");
  }
  DefiningGraph c4() {
    return parse_graph(
        "vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\nedge: d a\n");
  }
  VertexSet set_of(DefiningGraph const& g, std::vector<std::string> const& names) {
    VertexSet s;
    for (auto const& n : names) {
      s |= VertexSet::single(g.vertex(n));
    }
    return s;
  }
}  // namespace

TEST_CASE("parse_graph reads vertices and edges") {
  auto g = parse_graph("vertices: a b\nedge: a b");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));

  auto p = p4();
  CHECK(p.names() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(p.num_edges() == 3);
  CHECK(p.adjacent(p.vertex("b"), p.vertex("c")));
  CHECK_FALSE(p.adjacent(p.vertex("a"), p.vertex("c")));
}

TEST_CASE("parse_graph comments and duplicate edges") {
  auto g = parse_graph("# comment\nvertices: x y_1 Z\nedge: x y_1\nedge: y_1 x\n\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 1);
  CHECK(g.name(2) == "Z");
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("vertices: a a"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a c"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a a"), ParseError);
  CHECK_THROWS_AS(parse_graph("edge: a b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a\nvertices: b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a-b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: a b\nedge: a"), ParseError);
  try {
    parse_graph("vertices: a b\n\nedge: a q\n");
    FAIL("no throw");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("format_graph round trip") {
  auto g = c4();
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("join_factors") {
  auto g = c4();
  auto j = join_factors(g);
  REQUIRE(j);
  CHECK(j->first == set_of(g, {"a", "c"}));
  CHECK(j->second == set_of(g, {"b", "d"}));
  CHECK_FALSE(join_factors(p4()));
  CHECK_FALSE(join_factors(parse_graph("vertices: a")));
}

TEST_CASE("star and link") {
  auto g = p4();
  CHECK(star(g, g.vertex("b")) == set_of(g, {"a", "b", "c"}));
  CHECK(star(g, g.vertex("a")) == set_of(g, {"a", "b"}));
  CHECK(link(g, g.vertex("a")) == set_of(g, {"b"}));
  auto e = parse_graph("vertices: x y");
  CHECK(star(e, 0) == VertexSet::single(0));
  CHECK(link(e, 0).empty());
  CHECK_THROWS(e.vertex("q"));
}

TEST_CASE("max_clique_size") {
  CHECK(max_clique_size(parse_graph(
            "vertices: a b c\nedge: a b\nedge: b c\nedge: a c")) == 3);
  CHECK(max_clique_size(c4()) == 2);
  CHECK(max_clique_size(parse_graph("vertices: a b c")) == 1);
  CHECK_THROWS_AS(max_clique_size(parse_graph("vertices:")), DomainError);
}

TEST_CASE("enumerate_subjoins") {
  auto edge = parse_graph("vertices: a b\nedge: a b");
  CHECK(enumerate_subjoins(edge) == std::vector<VertexSet>{VertexSet(0b11)});
  CHECK(enumerate_subjoins(parse_graph("vertices: x y")).empty());

  auto p3 = parse_graph("vertices: a b c\nedge: a b\nedge: b c");
  auto s  = enumerate_subjoins(p3);
  CHECK(std::find(s.begin(), s.end(), VertexSet(0b111)) != s.end());
  CHECK(std::find(s.begin(), s.end(), VertexSet(0b011)) != s.end());
  CHECK(std::find(s.begin(), s.end(), VertexSet(0b110)) != s.end());
  CHECK(s.size() == 3);

  CHECK_THROWS_AS(enumerate_subjoins(*oracle::edgeless_graph(13)),
                  OracleCapExceeded);
  CHECK_NOTHROW(enumerate_subjoins(*oracle::edgeless_graph(13), 13));
}

TEST_CASE("connected_components") {
  CHECK(connected_components(p4()) == std::vector<VertexSet>{VertexSet(0b1111)});
  CHECK(connected_components(parse_graph("vertices: x y"))
        == std::vector<VertexSet>{VertexSet(0b01), VertexSet(0b10)});
  auto g = parse_graph("vertices: a b c e\nedge: a b\nedge: b c");
  CHECK(connected_components(g)
        == std::vector<VertexSet>{VertexSet(0b0111), VertexSet(0b1000)});
}

TEST_CASE("induced_subgraph keeps order and adjacency") {
  auto g = p4();
  auto h = induced_subgraph(g, set_of(g, {"b", "d", "c"}));
  CHECK(h.names() == std::vector<std::string>{"b", "c", "d"});
  CHECK(h.num_edges() == 2);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
}

TEST_CASE("property: join factors are complete bipartitions") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 8), 2, 3);
    auto j = join_factors(*g);
    if (!j) {
      continue;
    }
    CHECK_FALSE(j->first.empty());
    CHECK_FALSE(j->second.empty());
    CHECK((j->first | j->second) == g->vertices());
    CHECK_FALSE(j->first.intersects(j->second));
    for (auto x : j->first.indices()) {
      for (auto y : j->second.indices()) {
        CHECK(g->adjacent(x, y));
      }
    }
  }
}

TEST_CASE("property: subjoin enumeration agrees with join_factors of induced subgraphs") {
  oracle::Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    auto g    = oracle::random_graph(rng, rng.between(1, 7), 1, 2);
    auto subs = enumerate_subjoins(*g);
    std::size_t found = 0;
    for (std::uint64_t w = 1; w < (std::uint64_t(1) << g->num_vertices()); ++w) {
      bool listed = std::find(subs.begin(), subs.end(), VertexSet(w)) != subs.end();
      bool join   = join_factors(induced_subgraph(*g, VertexSet(w))).has_value();
      CHECK(listed == join);
      found += listed;
    }
    CHECK(found == subs.size());
  }
}

TEST_CASE("property: complement is an involution") {
  oracle::Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(0, 10), 1, 3);
    CHECK(complement(complement(*g)) == *g);
    auto c = complement(*g);
    CHECK(c.num_edges() + g->num_edges()
          == g->num_vertices() * (g->num_vertices() - (g->num_vertices() ? 1 : 0)) / 2);
  }
}

TEST_CASE("property: clique number is monotone and matches brute force") {
  oracle::Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 9), 1, 2);
    auto k = max_clique_size(*g);
    CHECK(k == oracle::max_clique_brute(*g));
    auto w = VertexSet(rng.below(std::uint64_t(1) << g->num_vertices())) ;
    if (!w.empty()) {
      CHECK(max_clique_size(induced_subgraph(*g, w)) <= k);
      CHECK(max_clique_size_within(*g, w) == max_clique_size(induced_subgraph(*g, w)));
    }
  }
}
