#include "doctest.h"
#include "oracle.hpp"
#include "psg/error.hpp"
#include "psg/word.hpp"

using namespace psg;

namespace {
  GraphPtr graph(std::string const& text) {
    return std::make_shared<DefiningGraph const>(parse_graph(text));
  }
  GraphPtr const f2 = graph("vertices: a b");
  GraphPtr const c4 = graph("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\nedge: d a");
  GraphPtr const p4 = graph("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d");

  std::string nf(GraphPtr const& g, std::string const& w) {
    return parse_word(g, w).to_string();
  }
  GroupWord w(GraphPtr const& g, std::string const& s) {
    return parse_word(g, s);
  }
}  // namespace

TEST_CASE("normal_form examples") {
  CHECK(nf(f2, "a b b^-1 a") == "a a");
  CHECK(nf(c4, "b a") == "a b");
  CHECK(nf(c4, "a c a^-1") == "a c a^-1");
  CHECK(nf(f2, "a a^-1").empty());
  CHECK(w(f2, "").is_identity());
  CHECK(nf(p4, "c a b") == "b c a");
  CHECK(nf(p4, "d b c^-1 b^-1") == "c^-1 d");
}

TEST_CASE("parse_word rejects bad tokens") {
  CHECK_THROWS_AS(parse_word(f2, "a q"), ParseError);
  CHECK_THROWS_AS(parse_word(f2, "a^2"), ParseError);
  CHECK_THROWS_AS(parse_word(f2, "a^-"), ParseError);
}

TEST_CASE("multiply examples") {
  CHECK((w(f2, "a") * w(f2, "a^-1")).is_identity());
  CHECK((w(f2, "a b") * w(f2, "b^-1 a")).to_string() == "a a");
  CHECK((w(p4, "a c") * w(p4, "d")).to_string() == "a c d");
  CHECK_THROWS(w(f2, "a") * w(p4, "a"));
}

TEST_CASE("support examples") {
  CHECK(w(f2, "a b a^-1").support() == VertexSet(0b11));
  CHECK(w(f2, "").support().empty());
  CHECK(w(c4, "a c a^-1").support() == VertexSet(0b101));
}

TEST_CASE("cyclic_reduce examples") {
  auto d = cyclic_reduce(w(f2, "a b a^-1"));
  CHECK(d.conjugator.to_string() == "a");
  CHECK(d.core.to_string() == "b");
  d = cyclic_reduce(w(p4, "a c a^-1"));
  CHECK(d.conjugator.to_string() == "a");
  CHECK(d.core.to_string() == "c");
  d = cyclic_reduce(w(p4, "a d"));
  CHECK(d.conjugator.is_identity());
  CHECK(d.core.to_string() == "a d");
  CHECK(is_cyclically_reduced(w(p4, "a d")));
  CHECK_FALSE(is_cyclically_reduced(w(p4, "a c a^-1")));
  // b commutes with a and c, so a b^-1 c b reduces cyclically around b.
  d = cyclic_reduce(w(p4, "b a c b^-1"));
  CHECK(d.core.length() == 2);
}

TEST_CASE("commutes examples") {
  CHECK(commutes(w(p4, "a"), w(p4, "b")));
  CHECK_FALSE(commutes(w(p4, "a"), w(p4, "d")));
  auto u = w(p4, "a c d^-1 b");
  CHECK(commutes(u, u * u));
}

TEST_CASE("primitive_root examples") {
  auto r = primitive_root(w(f2, "a b a b"));
  CHECK(r.root.to_string() == "a b");
  CHECK(r.exponent == 2);
  r = primitive_root(w(f2, "a"));
  CHECK(r.root.to_string() == "a");
  CHECK(r.exponent == 1);
  r = primitive_root(w(f2, "a b b a^-1"));
  CHECK(r.root.to_string() == "a b a^-1");
  CHECK(r.exponent == 2);
  CHECK_THROWS_AS(primitive_root(w(f2, "")), DomainError);
  // Commuting letters: (a b)^2 = a a b b in A(C4).
  r = primitive_root(w(c4, "a a b b"));
  CHECK(r.root.to_string() == "a b");
  CHECK(r.exponent == 2);
}

TEST_CASE("symmetric_closure examples") {
  auto s = symmetric_closure(WordSet(f2, {w(f2, "a")}));
  CHECK(s.size() == 2);
  CHECK(s.symmetric());
  CHECK(s.contains(w(f2, "a^-1")));
  WordSet both(f2, {w(f2, "a"), w(f2, "a^-1")});
  CHECK(both.symmetric());
  CHECK(symmetric_closure(both) == both);
  auto t = symmetric_closure(WordSet(f2, {w(f2, "a b")}));
  CHECK(t.contains(w(f2, "b^-1 a^-1")));
  CHECK(t.size() == 2);
}

TEST_CASE("parse_word_set") {
  auto s = parse_word_set(f2, "# gens\nsymmetric: true\na\nb a\n\n");
  CHECK(s.size() == 5);
  CHECK(s.symmetric());
  CHECK(s.contains(w(f2, "")));
  auto t = parse_word_set(f2, "a\na\nb b^-1 a\n");
  CHECK(t.size() == 1);
  CHECK_FALSE(t.symmetric());
  try {
    parse_word_set(f2, "a\nb\nz\n");
    FAIL("no throw");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
  CHECK(parse_word_set(f2, format_word_set(s)) == s);
}

TEST_CASE("property: normal form matches exhaustive rewriting") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 5), 1, 2);
    for (int i = 0; i < 60; ++i) {
      auto raw = oracle::random_letters(rng, g->num_vertices(), rng.between(0, 8));
      GroupWord u(g, raw);
      auto rw = oracle::rewrite_normal_form(raw, *g);
      CHECK(u.letters() == rw.least);
      CHECK(rw.single_class);
      CHECK(GroupWord(g, u.letters()) == u);
    }
  }
}

TEST_CASE("property: group axioms and parity") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 6), 1, 2);
    auto u = oracle::random_word(rng, g, 10);
    auto v = oracle::random_word(rng, g, 10);
    auto x = oracle::random_word(rng, g, 10);
    CHECK((u * v) * x == u * (v * x));
    CHECK((u * u.inverse()).is_identity());
    CHECK((u * v).length() <= u.length() + v.length());
    CHECK(u.support() == u.inverse().support());
    CHECK(power(u, 3) == u * u * u);
    CHECK(power(u, -2) == u.inverse() * u.inverse());
    auto e = oracle::edgeless_graph(g->num_vertices());
    GroupWord fu(e, u.letters()), fv(e, v.letters());
    CHECK((fu * fv).length() % 2 == (fu.length() + fv.length()) % 2);
  }
}

TEST_CASE("property: cyclic reduction") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 6), 1, 2);
    auto h = oracle::random_word(rng, g, 6);
    auto c = oracle::random_word(rng, g, 6);
    auto u = conjugate(h, c);
    auto d = cyclic_reduce(u);
    CHECK(conjugate(d.conjugator, d.core) == u);
    CHECK(is_cyclically_reduced(d.core));
    CHECK(d.core.length() <= cyclic_reduce(c).core.length());
    auto dd = cyclic_reduce(d.core);
    CHECK(dd.core == d.core);
    CHECK(dd.conjugator.is_identity());
    CHECK(d.core.support().subset_of(u.support()));
    // Minimality against every cyclic permutation of the canonical form.
    auto const& l = d.core.letters();
    for (std::size_t i = 0; i < l.size(); ++i) {
      Letters rot(l.begin() + i, l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + i);
      CHECK(GroupWord(g, rot).length() == l.size());
    }
  }
}

TEST_CASE("property: free cyclic core matches string reduction") {
  oracle::Rng rng(14);
  auto g = oracle::edgeless_graph(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto u = oracle::random_word(rng, g, 12);
    if (u.is_identity()) {
      continue;
    }
    CHECK(cyclic_reduce(u).core.length()
          == oracle::translation_length(oracle::to_free_string(u)));
  }
}

TEST_CASE("property: generator commutation is adjacency") {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 7), 1, 2);
    for (std::size_t x = 0; x < g->num_vertices(); ++x) {
      for (std::size_t y = 0; y < g->num_vertices(); ++y) {
        GroupWord gx(g, Letters{Letter(x, false)});
        GroupWord gy(g, Letters{Letter(y, rng.coin())});
        CHECK(commutes(gx, gy) == (x == y || g->adjacent(x, y)));
      }
    }
  }
}

TEST_CASE("property: primitive roots") {
  oracle::Rng rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, rng.between(1, 5), 1, 3);
    auto h = oracle::random_word(rng, g, 4);
    auto b = oracle::random_word(rng, g, 4);
    if (b.is_identity()) {
      continue;
    }
    auto k = long(rng.between(1, 4));
    auto u = conjugate(h, power(b, k));
    auto r = primitive_root(u);
    CHECK(power(r.root, long(r.exponent)) == u);
    CHECK(r.exponent % std::size_t(k) == 0);
    // The root itself admits no further root.
    CHECK(primitive_root(r.root).exponent == 1);
  }
}
