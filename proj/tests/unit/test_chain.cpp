#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wph/chain.hpp"
#include "wph/error.hpp"

using namespace wph;

namespace {

HomologyGroup group(std::size_t rank, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.free_rank = rank;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

PathComplex build(std::vector<std::string> vertices, std::vector<LabelPath> paths, Ring ring,
                  std::optional<WeightMap> weights = std::nullopt) {
  PathComplexData d;
  d.vertices = std::move(vertices);
  d.paths = std::move(paths);
  d.ring = ring;
  d.weights = std::move(weights);
  return PathComplex::build(d);
}

}  // namespace

TEST_CASE("weighted boundary of a triple", "[chain]") {
  const PathComplex pc = build({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}},
                               Ring::integers(), WeightMap{{"a", 2}, {"b", 3}, {"c", 5}});
  const Path abc = pc.path_from_labels({"a", "b", "c"});
  const ChainVector d = weighted_boundary(pc, basis_chain(abc));
  CHECK(format_chain(pc, d).find("(b c)") != std::string::npos);
  CHECK(d.coefficients.at(pc.path_from_labels({"b", "c"})) == 2);
  CHECK(d.coefficients.at(pc.path_from_labels({"a", "c"})) == -3);
  CHECK(d.coefficients.at(pc.path_from_labels({"a", "b"})) == 5);
  CHECK(weighted_boundary(pc, d).is_zero());
}

TEST_CASE("irregular faces vanish", "[chain]") {
  const Ring z = Ring::integers();
  // (a b a): deleting b gives (a a), which is zero.
  const ChainVector d = weighted_boundary(basis_chain({0, 1, 0}), std::vector<Scalar>{1, 1}, z);
  CHECK(d.coefficients.size() == 2);
  CHECK(d.coefficients.at({1, 0}) == 1);
  CHECK(d.coefficients.at({0, 1}) == 1);
}

TEST_CASE("missing weights are reported", "[chain]") {
  std::map<VertexIndex, Scalar> partial{{0, 1}};
  CHECK_THROWS_AS(weighted_boundary(basis_chain({0, 1}), partial, Ring::integers()), MissingWeight);
}

TEST_CASE("homology of the zero-middle diamond", "[chain]") {
  const PathComplex pc = corpus::load("diamond_zero_middle.json").path_complex();
  const HomologyResult h = homology(pc, 3);
  CHECK(h.groups == std::vector<HomologyGroup>{group(2), group(2), group(0)});
  CHECK(homology(pc.with_weights(std::nullopt), 3).groups == std::vector<HomologyGroup>{group(1), group(1), group(0)});
}

TEST_CASE("homology of the weighted edge has torsion", "[chain]") {
  const PathComplex pc = corpus::load("edge_torsion.json").path_complex();
  CHECK(homology(pc, 2).groups == std::vector<HomologyGroup>{group(1, {2}), group(0)});
  // Over Q the torsion disappears, over Z/2 the edge boundary is zero.
  CHECK(homology(pc.over_ring(Ring::rationals()), 2).groups == std::vector<HomologyGroup>{group(1), group(0)});
  CHECK(homology(pc.over_ring(Ring::integers_mod(2)), 2).groups == std::vector<HomologyGroup>{group(2), group(1)});
}

TEST_CASE("allowed chains of the unit square", "[chain]") {
  const PathComplex pc = corpus::load("complexes/square_unit.json").path_complex();
  const OmegaComplex omega = build_omega(pc, 2);
  CHECK(omega.rank(0) == 4);
  CHECK(omega.rank(1) == 4);
  CHECK(omega.rank(2) == 1);
  const ChainVector g = omega.generator(2, 0);
  CHECK(g.coefficients.size() == 2);
  CHECK(weighted_boundary(pc, weighted_boundary(pc, g)).is_zero());
  const auto coords = omega.coordinates(g);
  REQUIRE(coords);
  CHECK((*coords)[0] != 0);
  CHECK_FALSE(omega.coordinates(basis_chain(g.coefficients.begin()->first)).has_value());
  CHECK(homology(omega).groups == std::vector<HomologyGroup>{group(1), group(0)});
}

TEST_CASE("composite moduli are refused", "[chain]") {
  const PathComplex pc = build({"a"}, {{"a"}}, Ring::integers_mod(6));
  CHECK_THROWS_AS(build_omega(pc, 1), UnsupportedRing);
}

TEST_CASE("allowed-chain boundaries compose to zero", "[chain][property]") {
  oracle::Rng rng(301);
  for (int i = 0; i < 60; ++i) {
    auto data = oracle::random_complex(rng, Ring::integers(), 7, 4);
    data.weights = oracle::random_integer_weights(rng, data.vertices, -3, 3, false);
    const PathComplex pc = PathComplex::build(data);
    const OmegaComplex omega = build_omega(pc, static_cast<int>(pc.max_length()));
    for (int n = 1; n < omega.max_degree(); ++n) CHECK((omega.boundary(n) * omega.boundary(n + 1)).is_zero());
  }
}

TEST_CASE("rational dimensions match the rank-nullity oracle", "[chain][property]") {
  oracle::Rng rng(302);
  for (int i = 0; i < 60; ++i) {
    auto data = oracle::random_complex(rng, Ring::rationals(), 7, 4);
    data.weights = oracle::random_integer_weights(rng, data.vertices, -2, 2, false);
    const PathComplex pc = PathComplex::build(data);
    const auto betti = oracle::betti_numbers(oracle::from_library(pc), 3);
    const HomologyResult h = homology(pc, 3);
    REQUIRE(h.groups.size() == betti.size());
    for (std::size_t n = 0; n < betti.size(); ++n) CHECK(h.groups[n].free_rank == betti[n]);
  }
}

TEST_CASE("identity push-forward fixes chains", "[chain]") {
  const auto pc = std::make_shared<const PathComplex>(corpus::load("complexes/triangle.json").path_complex());
  const auto id = PathMorphism::identity(pc);
  const OmegaComplex omega = build_omega(*pc, 2);
  for (int n = 0; n <= 2; ++n) {
    const Matrix m = induced_chain_map(id, omega, omega, n);
    CHECK(m == Matrix::identity(pc->ring(), omega.rank(n)));
  }
}
