#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wph/pathcx.hpp"

namespace wph {

struct WeightedDigraphData {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  Ring ring = Ring::integers();
  std::optional<WeightMap> weights;
};

// Loop-free digraph with optional vertex weights; vertices sorted by label.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  // Throws InvariantError for loops, unknown endpoints, duplicate vertices or
  // weights that do not cover the vertex set.
  static WeightedDigraph build(const WeightedDigraphData& data);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::set<std::pair<VertexIndex, VertexIndex>>& edges() const { return edges_; }
  bool has_edge(VertexIndex a, VertexIndex b) const { return edges_.count({a, b}) != 0; }
  const Ring& ring() const { return ring_; }
  const std::optional<std::vector<Scalar>>& weights() const { return weights_; }
  std::optional<VertexIndex> find(const std::string& label) const;

  WeightedDigraphData to_data() const;

 private:
  std::vector<std::string> labels_;
  std::set<std::pair<VertexIndex, VertexIndex>> edges_;
  Ring ring_ = Ring::integers();
  std::optional<std::vector<Scalar>> weights_;
};

// I_n: vertices 0..n with one arrow between consecutive integers.
struct LineDigraph {
  std::vector<bool> forward;  // step i: i -> i+1 when true, i+1 -> i otherwise

  std::size_t length() const { return forward.size(); }
  static LineDigraph unit_forward() { return LineDigraph{{true}}; }   // 0 -> 1
  static LineDigraph unit_backward() { return LineDigraph{{false}}; }  // 1 -> 0
  std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
};

// Label of the product vertex (v, i): "(v,i)".
std::string product_label(const std::string& v, std::size_t level);

// Path complex of all edge paths of length <= max_length, weights carried over.
PathComplex paths_functor(const WeightedDigraph& g, std::size_t max_length);

WeightedDigraph box_product(const WeightedDigraph& g, const LineDigraph& line);

// Relabeling of a box product with I_1 onto cylinder labels:
// (v,0) -> v, (v,1) -> v'.
std::map<std::string, std::string> level_to_cylinder_labels(const std::vector<std::string>& base_labels);

// Compares the cylinder of paths_functor(g) with paths_functor(g box I_1),
// both complete up to length max_length + 1.
ComparisonReport check_cylinder_equality(const WeightedDigraph& g, std::size_t max_length,
                                         const LineDigraph& unit = LineDigraph::unit_forward());

}  // namespace wph
