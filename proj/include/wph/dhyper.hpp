#pragma once

/**
 * Weighted directed hypergraphs, their morphism classes and the functors into
 * digraphs, hypergraphs and path complexes.
 */

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wph/chain.hpp"
#include "wph/digraph.hpp"

namespace wph {

using VertexSet = std::vector<VertexIndex>;  // sorted, unique

struct Arrow {
  VertexSet origin;
  VertexSet end;
  bool operator==(const Arrow& o) const { return origin == o.origin && end == o.end; }
  bool operator<(const Arrow& o) const { return std::tie(origin, end) < std::tie(o.origin, o.end); }
};

struct LabelArrow {
  std::vector<std::string> origin;
  std::vector<std::string> end;
};

struct DirectedHypergraphData {
  std::vector<std::string> vertices;
  std::vector<LabelArrow> arrows;
  Ring ring = Ring::integers();
  std::optional<WeightMap> weights;
};

class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;
  // Throws InvariantError: arrows need disjoint non-empty origin and end over
  // known vertices, and arrows must cover the vertex set.
  static DirectedHypergraph build(const DirectedHypergraphData& data);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Ring& ring() const { return ring_; }
  const std::optional<std::vector<Scalar>>& weights() const { return weights_; }
  Scalar weight(VertexIndex v) const { return weights_ ? (*weights_)[v] : ring_.one(); }
  std::optional<VertexIndex> find(const std::string& label) const;
  VertexSet vertex_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> set_labels(const VertexSet& s) const;
  // Origins and ends, sorted and deduplicated.
  std::vector<VertexSet> origin_and_end_sets() const;

  DirectedHypergraph with_weights(std::optional<std::vector<Scalar>> weights) const;
  DirectedHypergraph over_ring(const Ring& ring) const;
  DirectedHypergraphData to_data() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  Ring ring_ = Ring::integers();
  std::optional<std::vector<Scalar>> weights_;
};

struct HypergraphData {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  Ring ring = Ring::integers();
  std::optional<WeightMap> weights;
};

// Undirected hypergraph: distinct edges of size >= 2 covering the vertices.
// Weights are optional and only carried along for the density-two functor.
class Hypergraph {
 public:
  Hypergraph() = default;
  static Hypergraph build(const HypergraphData& data);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const Ring& ring() const { return ring_; }
  const std::optional<std::vector<Scalar>>& weights() const { return weights_; }
  HypergraphData to_data() const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
  Ring ring_ = Ring::integers();
  std::optional<std::vector<Scalar>> weights_;
};

struct HyperMorphism {
  std::vector<VertexIndex> vertex_map;
  std::vector<std::size_t> arrow_map;

  // Throws InvariantError for unknown labels, non-total maps, bad indices.
  static HyperMorphism from_labels(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                   const std::map<std::string, std::string>& vertex_map,
                                   const std::vector<std::size_t>& arrow_map);
  // Arrow map inferred from the vertex map (first matching arrow of h).
  static HyperMorphism infer_arrows(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                    const std::map<std::string, std::string>& vertex_map);
};

VertexSet image_set(const std::vector<VertexIndex>& vertex_map, const VertexSet& s);

// Sum of the member weights. The map form throws MissingWeight.
Scalar set_weight(const DirectedHypergraph& g, const VertexSet& x);
Scalar set_weight(const std::vector<std::string>& x, const WeightMap& weights, const Ring& ring);

// Canonical label of a vertex set: "{a,b}" with sorted member labels.
std::string set_label(std::vector<std::string> members);

struct MorphismClass {
  bool vertex_weighted = false;
  bool edge_weighted = false;
  bool strong_weighted = false;
};

// Empty when f is a morphism (diagram commutes), else the first violation.
std::optional<std::string> morphism_violation(const HyperMorphism& f, const DirectedHypergraph& g,
                                              const DirectedHypergraph& h);
// Throws NotAMorphism if the diagram does not commute.
MorphismClass classify_morphism(const HyperMorphism& f, const DirectedHypergraph& g, const DirectedHypergraph& h);

// Vertices are the origin and end sets (labelled by set_label), one edge per
// arrow, vertex weight |A|. Unweighted inputs behave as delta == 1.
WeightedDigraph natural_digraph(const DirectedHypergraph& g);

HomologyResult edge_weighted_homology(const DirectedHypergraph& g, int max_degree);

PathComplex connective_functor(const DirectedHypergraph& g, std::size_t max_length);
PathComplex bold_functor(const DirectedHypergraph& g, std::size_t max_length);
// Membership test for the bold path complex (independent of truncation).
bool is_bold_path(const DirectedHypergraph& g, const Path& p);

struct UnderlyingHypergraph {
  Hypergraph hypergraph;
  std::size_t merged_arrows = 0;  // arrows whose union duplicated an earlier edge
};
UnderlyingHypergraph underlying_hypergraph(const DirectedHypergraph& g);

PathComplex density_two_functor(const Hypergraph& h, std::size_t max_length);

DirectedHypergraph hyper_box_product(const DirectedHypergraph& g, const LineDigraph& line);

enum class VertexPipeline { Connective, Bold, DensityTwo };

PathComplex vertex_weighted_complex(const DirectedHypergraph& g, VertexPipeline which, std::size_t max_length);
// max_length defaults to max_degree when zero.
HomologyResult vertex_weighted_homologies(const DirectedHypergraph& g, VertexPipeline which, int max_degree,
                                          std::size_t max_length = 0);

// natural_digraph(g box I_1) against box_product(natural_digraph(g), I_1),
// compared as path complexes of length <= max_length + 1 after relabeling.
ComparisonReport check_natural_box(const DirectedHypergraph& g, std::size_t max_length);
// Cylinder of the natural pipeline against the pipeline of g box I_1.
ComparisonReport check_natural_cylinder_equality(const DirectedHypergraph& g, std::size_t max_length);
// Cylinder of a vertex pipeline against the pipeline of g box I_1; callers
// read equal() for the connective case, first_contained() for the others.
ComparisonReport check_vertex_pipeline_cylinder(const DirectedHypergraph& g, VertexPipeline which,
                                                std::size_t max_length);

}  // namespace wph
