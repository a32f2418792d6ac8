#include "wph/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wph/error.hpp"

namespace wph {

WeightedDigraph WeightedDigraph::build(const WeightedDigraphData& data) {
  WeightedDigraph g;
  g.ring_ = data.ring;
  g.labels_ = data.vertices;
  std::sort(g.labels_.begin(), g.labels_.end());
  if (std::adjacent_find(g.labels_.begin(), g.labels_.end()) != g.labels_.end()) {
    throw InvariantError("duplicate vertex in digraph");
  }
  for (const auto& [a, b] : data.edges) {
    auto x = g.find(a);
    auto y = g.find(b);
    if (!x || !y) throw InvariantError("edge " + a + " -> " + b + " has an unknown endpoint");
    if (*x == *y) throw InvariantError("loop at " + a + " (digraphs are loop-free)");
    g.edges_.emplace(*x, *y);
  }
  if (data.weights) {
    std::vector<Scalar> w;
    for (const auto& v : g.labels_) {
      auto it = data.weights->find(v);
      if (it == data.weights->end()) throw InvariantError("vertex " + v + " has no weight");
      w.push_back(g.ring_.from_rational(it->second));
    }
    for (const auto& [v, x] : *data.weights)
      if (!g.find(v)) throw InvariantError("weight given for unknown vertex " + v);
    g.weights_ = std::move(w);
  }
  return g;
}

std::optional<VertexIndex> WeightedDigraph::find(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexIndex>(it - labels_.begin());
}

WeightedDigraphData WeightedDigraph::to_data() const {
  WeightedDigraphData d;
  d.vertices = labels_;
  d.ring = ring_;
  for (const auto& [a, b] : edges_) d.edges.emplace_back(labels_[a], labels_[b]);
  if (weights_) {
    WeightMap w;
    for (std::size_t i = 0; i < labels_.size(); ++i) w.emplace(labels_[i], (*weights_)[i]);
    d.weights = std::move(w);
  }
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> LineDigraph::arrows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    out.push_back(forward[i] ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
  }
  return out;
}

std::string product_label(const std::string& v, std::size_t level) {
  return "(" + v + "," + std::to_string(level) + ")";
}

PathComplex paths_functor(const WeightedDigraph& g, std::size_t max_length) {
  auto paths = enumerate_step_paths(g.vertex_count(), max_length,
                                    [&](VertexIndex a, VertexIndex b) { return g.has_edge(a, b); });
  return PathComplex(g.labels(), paths, g.ring(), g.weights());
}

WeightedDigraph box_product(const WeightedDigraph& g, const LineDigraph& line) {
  const std::size_t levels = line.length() + 1;
  WeightedDigraphData d;
  d.ring = g.ring();
  if (g.weights()) d.weights = WeightMap{};
  for (std::size_t i = 0; i < levels; ++i) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto label = product_label(g.labels()[v], i);
      d.vertices.push_back(label);
      if (g.weights()) d.weights->emplace(label, (*g.weights())[v]);
    }
    for (const auto& [a, b] : g.edges()) {
      d.edges.emplace_back(product_label(g.labels()[a], i), product_label(g.labels()[b], i));
    }
  }
  for (const auto& [i, j] : line.arrows()) {
    for (const auto& v : g.labels()) d.edges.emplace_back(product_label(v, i), product_label(v, j));
  }
  return WeightedDigraph::build(d);
}

std::map<std::string, std::string> level_to_cylinder_labels(const std::vector<std::string>& base_labels) {
  std::map<std::string, std::string> m;
  for (const auto& v : base_labels) {
    m.emplace(product_label(v, 0), v);
    m.emplace(product_label(v, 1), primed(v));
  }
  return m;
}

ComparisonReport check_cylinder_equality(const WeightedDigraph& g, std::size_t max_length, const LineDigraph& unit) {
  const std::size_t top = max_length + 1;
  PathComplex lhs = truncate(cylinder(paths_functor(g, top)), top);
  PathComplex rhs = relabel(paths_functor(box_product(g, unit), top), level_to_cylinder_labels(g.labels()));
  return compare(lhs, rhs);
}

}  // namespace wph
