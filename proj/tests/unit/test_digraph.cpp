#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wph/digraph.hpp"
#include "wph/error.hpp"

using namespace wph;

namespace {

oracle::Digraph plain(const WeightedDigraph& g) {
  oracle::Digraph og;
  og.vertices = g.labels();
  for (const auto& [a, b] : g.edges()) og.edges.insert({g.labels()[a], g.labels()[b]});
  return og;
}

}  // namespace

TEST_CASE("digraph invariants", "[digraph]") {
  WeightedDigraphData d;
  d.vertices = {"a", "b"};
  d.edges = {{"a", "a"}};
  CHECK_THROWS_AS(WeightedDigraph::build(d), InvariantError);
  d.edges = {{"a", "c"}};
  CHECK_THROWS_AS(WeightedDigraph::build(d), InvariantError);
  d.edges = {{"a", "b"}};
  d.weights = WeightMap{{"a", 1}};
  CHECK_THROWS_AS(WeightedDigraph::build(d), InvariantError);
  d.weights = WeightMap{{"a", 1}, {"b", 2}};
  const WeightedDigraph g = WeightedDigraph::build(d);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("paths functor lists edge paths up to the bound", "[digraph]") {
  const WeightedDigraph g = corpus::load("digraphs/line.json").digraph();
  for (std::size_t L = 0; L <= 4; ++L) {
    const PathComplex pc = paths_functor(g, L);
    const auto expected = oracle::walks(g.labels(), L, [&](const std::string& a, const std::string& b) {
      return plain(g).edges.count({a, b}) != 0;
    });
    CHECK(oracle::from_library(pc).paths == expected);
    CHECK(validate(pc).ok());
  }
}

TEST_CASE("box product with the unit interval", "[digraph]") {
  const WeightedDigraph g = corpus::load("digraphs/edge.json").digraph();
  const WeightedDigraph fwd = box_product(g, LineDigraph::unit_forward());
  const WeightedDigraph bwd = box_product(g, LineDigraph::unit_backward());
  CHECK(fwd.vertex_count() == 2 * g.vertex_count());
  CHECK(fwd.edges().size() == 2 * g.edges().size() + g.vertex_count());
  const auto a0 = *fwd.find(product_label(g.labels()[0], 0));
  const auto a1 = *fwd.find(product_label(g.labels()[0], 1));
  CHECK(fwd.has_edge(a0, a1));
  CHECK(bwd.has_edge(*bwd.find(product_label(g.labels()[0], 1)), *bwd.find(product_label(g.labels()[0], 0))));
  CHECK(product_label("v", 2) == "(v,2)");
  CHECK(LineDigraph{{true, false}}.arrows().size() == 2);
}

TEST_CASE("cylinder equals paths of the forward box on the corpus", "[digraph]") {
  for (const auto& f : corpus::files("digraphs")) {
    INFO(f);
    const WeightedDigraph g = corpus::load(f).digraph();
    CHECK(check_cylinder_equality(g, 3).equal());
    const auto og = plain(g);
    CHECK(oracle::box_unit_words(og, 4) == oracle::cylinder_words(og, 4));
  }
}

TEST_CASE("backward unit does not match the forward cylinder", "[digraph]") {
  const WeightedDigraph g = corpus::load("digraphs/edge.json").digraph();
  CHECK_FALSE(check_cylinder_equality(g, 2, LineDigraph::unit_backward()).equal());
}

TEST_CASE("cylinder equality on random digraphs", "[digraph][property]") {
  oracle::Rng rng(401);
  for (int i = 0; i < 40; ++i) {
    WeightedDigraphData d;
    const std::size_t n = 2 + rng.below(5);
    for (std::size_t v = 0; v < n; ++v) d.vertices.push_back("v" + std::to_string(v));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && rng.chance(1, 3)) d.edges.emplace_back(d.vertices[a], d.vertices[b]);
    d.weights = oracle::random_integer_weights(rng, d.vertices, -2, 2, false);
    const WeightedDigraph g = WeightedDigraph::build(d);
    CHECK(check_cylinder_equality(g, 2).equal());
    CHECK(oracle::from_library(truncate(cylinder(paths_functor(g, 3)), 3)).paths ==
          oracle::cylinder_words(plain(g), 3));
  }
}

TEST_CASE("level relabeling", "[digraph]") {
  const auto m = level_to_cylinder_labels({"a", "b"});
  CHECK(m.at("(a,0)") == "a");
  CHECK(m.at("(b,1)") == "b'");
}
