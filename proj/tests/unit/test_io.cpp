#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wph/error.hpp"
#include "wph/io.hpp"

using namespace wph;

namespace {

std::string doc(const std::string& kind, const std::string& ring, const std::string& body) {
  return R"({"format_version": "1", "kind": ")" + kind + "\"" + (ring.empty() ? "" : ", \"ring\": " + ring) +
         R"(, "body": )" + body + "}";
}

const std::string kEdgeBody = R"({"vertices": ["a", "b"], "paths": [["a"], ["b"], ["a", "b"]]})";

}  // namespace

TEST_CASE("every corpus document parses and re-emits to the same object", "[io]") {
  for (const auto& f : corpus::all_files()) {
    INFO(f);
    const io::Document d = corpus::load(f);
    const std::string text = io::emit(d);
    const io::Document again = io::parse(text);
    CHECK(io::emit(again) == text);
    CHECK(again.kind == d.kind);
    CHECK(again.description == d.description);
  }
}

TEST_CASE("round trip of random weighted complexes", "[io][property]") {
  oracle::Rng rng(601);
  for (int i = 0; i < 50; ++i) {
    const Ring ring = i % 3 == 0 ? Ring::integers() : i % 3 == 1 ? Ring::rationals() : Ring::integers_mod(11);
    auto data = oracle::random_complex(rng, ring, 7, 3);
    if (ring.is_integers()) data.weights = oracle::random_integer_weights(rng, data.vertices, -9, 9, false);
    else data.weights = oracle::random_rational_weights(rng, data.vertices);
    for (auto& [v, x] : *data.weights) x = ring.from_rational(x);
    const PathComplex pc = PathComplex::build(data);
    const io::Document d = io::parse(io::emit(pc, "random"));
    CHECK(compare(d.path_complex(), pc).equal());
    CHECK(d.path_complex().ring() == ring);
    CHECK(d.description == "random");
  }
}

TEST_CASE("big integers and rationals survive a round trip", "[io]") {
  const std::string big = "123456789012345678901234567890";
  const io::Document z = io::parse(doc("path_complex", "\"Z\"",
                                       R"({"vertices": ["a"], "paths": [["a"]], "weights": {"a": ")" + big + "\"}}"));
  CHECK(z.path_complex().weight(0) == Scalar(big));
  CHECK(io::emit(z).find("\"" + big + "\"") != std::string::npos);
  const io::Document q = io::parse(
      doc("path_complex", "\"Q\"", R"({"vertices": ["a"], "paths": [["a"]], "weights": {"a": "-6/4"}})"));
  CHECK(q.path_complex().weight(0) == Scalar(-3, 2));
  CHECK(io::emit(q).find("\"-3/2\"") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column", "[io]") {
  try {
    io::parse("{\n  \"kind\": \"digraph\",\n  oops\n}");
    FAIL("no exception");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema violations are rejected", "[io]") {
  CHECK_THROWS_AS(io::parse(doc("path_complex", "\"Z\"", R"({"vertices": ["a"], "paths": [["a"]], "extra": 1})")),
                  SchemaError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", "", kEdgeBody)), SchemaError);
  CHECK_THROWS_AS(io::parse(doc("shape", "\"Z\"", kEdgeBody)), SchemaError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", "\"R\"", kEdgeBody)), SchemaError);
  CHECK_THROWS_AS(io::parse(R"({"format_version": "2", "kind": "path_complex", "ring": "Z", "body": {}})"),
                  SchemaError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", "\"Z\"",
                                R"({"vertices": ["a"], "paths": [["a"]], "weights": {"a": "1/2"}})")),
                  SchemaError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", R"({"Zmod": 7})",
                                R"({"vertices": ["a"], "paths": [["a"]], "weights": {"a": "1/2"}})")),
                  SchemaError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", "\"Z\"", R"({"vertices": "a", "paths": []})")), SchemaError);
  CHECK_THROWS_AS(io::parse(doc("homotopy_chain", "",
                                R"({"morphisms": [{"vertex_map": {}}, {"vertex_map": {}}], "directions": ["up"]})")),
                  SchemaError);
}

TEST_CASE("domain invariants are checked while parsing", "[io]") {
  CHECK_THROWS_AS(io::parse(doc("path_complex", "\"Z\"", R"({"vertices": ["a", "b"], "paths": [["a"], ["a", "b"]]})")),
                  InvariantError);
  CHECK_THROWS_AS(io::parse(doc("digraph", "\"Z\"", R"({"vertices": ["a"], "edges": [["a", "a"]]})")),
                  InvariantError);
  CHECK_THROWS_AS(
      io::parse(doc("directed_hypergraph", "\"Z\"",
                    R"({"vertices": ["a", "b"], "arrows": [{"origin": ["a"], "end": ["a", "b"]}]})")),
      InvariantError);
  CHECK_THROWS_AS(io::parse(doc("path_complex", R"({"Zmod": 1})", kEdgeBody)), InvariantError);
  CHECK_THROWS_AS(io::parse(doc("homotopy_chain", "", R"({"morphisms": [{"vertex_map": {}}], "directions": []})")),
                  InvariantError);
}

TEST_CASE("typed access names the actual kind", "[io]") {
  const io::Document d = io::parse(doc("path_complex", "\"Z\"", kEdgeBody));
  CHECK_THROWS_WITH(d.digraph(), Catch::Matchers::ContainsSubstring("found path_complex"));
  CHECK(io::kind_name(io::Kind::DirectedHypergraph) == "directed_hypergraph");
}

TEST_CASE("homology and ring rendering", "[io]") {
  HomologyResult r;
  r.ring = Ring::integers();
  r.max_degree = 2;
  HomologyGroup g0;
  g0.free_rank = 1;
  g0.torsion = {mpz_class(2)};
  r.groups = {g0, HomologyGroup{}};
  const std::string json = io::emit_homology(r);
  CHECK(json.find("\"max_degree\": 2") != std::string::npos);
  CHECK(io::emit_group(g0) == R"({"free_rank":1,"torsion":[2]})");
  CHECK(io::ring_text(Ring::integers_mod(7)) == "Zmod:7");
  CHECK(io::ring_text(Ring::rationals()) == "Q");
}

TEST_CASE("files that cannot be read raise IoError", "[io]") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/nothing.json"), IoError);
  const auto dir = std::filesystem::temp_directory_path() / "wph_io_test";
  std::filesystem::create_directories(dir);
  const auto bad = (dir / "bad.json").string();
  std::ofstream(bad) << "{";
  CHECK_THROWS_WITH(io::read_file(bad), Catch::Matchers::ContainsSubstring("bad.json"));
  const auto out = (dir / "out.json").string();
  io::write_file(out, io::emit(corpus::load("edge_torsion.json")));
  CHECK(io::emit(io::read_file(out)) == io::emit(corpus::load("edge_torsion.json")));
  std::filesystem::remove_all(dir);
}
