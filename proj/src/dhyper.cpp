#include "wph/dhyper.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wph/error.hpp"

namespace wph {

namespace {

std::vector<std::string> sorted_unique_labels(std::vector<std::string> labels, const char* what) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InvariantError(std::string("duplicate vertex in ") + what);
  }
  return labels;
}

std::optional<VertexIndex> find_sorted(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<VertexIndex>(it - labels.begin());
}

std::optional<std::vector<Scalar>> weight_vector(const std::vector<std::string>& labels,
                                                 const std::optional<WeightMap>& weights, const Ring& ring) {
  if (!weights) return std::nullopt;
  std::vector<Scalar> w;
  for (const auto& v : labels) {
    auto it = weights->find(v);
    if (it == weights->end()) throw InvariantError("vertex " + v + " has no weight");
    w.push_back(ring.from_rational(it->second));
  }
  for (const auto& [v, x] : *weights)
    if (!find_sorted(labels, v)) throw InvariantError("weight given for unknown vertex " + v);
  return w;
}

std::optional<WeightMap> weight_map(const std::vector<std::string>& labels,
                                    const std::optional<std::vector<Scalar>>& weights) {
  if (!weights) return std::nullopt;
  WeightMap m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(labels[i], (*weights)[i]);
  return m;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool member(const VertexSet& s, VertexIndex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace

std::string set_label(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + members[i];
  return s + "}";
}

VertexSet image_set(const std::vector<VertexIndex>& vertex_map, const VertexSet& s) {
  VertexSet out;
  for (auto v : s) out.push_back(vertex_map.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

DirectedHypergraph DirectedHypergraph::build(const DirectedHypergraphData& data) {
  DirectedHypergraph g;
  g.ring_ = data.ring;
  g.labels_ = sorted_unique_labels(data.vertices, "directed hypergraph");
  std::vector<bool> covered(g.labels_.size(), false);
  for (const auto& la : data.arrows) {
    Arrow a{g.vertex_set(la.origin), g.vertex_set(la.end)};
    if (a.origin.size() != la.origin.size() || a.end.size() != la.end.size()) {
      throw InvariantError("arrow lists a vertex twice");
    }
    if (a.origin.empty() || a.end.empty()) throw InvariantError("origin and end must be non-empty");
    if (intersects(a.origin, a.end)) throw InvariantError("origin and end must be disjoint");
    for (auto v : a.origin) covered[v] = true;
    for (auto v : a.end) covered[v] = true;
    g.arrows_.push_back(std::move(a));
  }
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) throw InvariantError("vertex " + g.labels_[v] + " is not covered by any arrow");
  }
  g.weights_ = weight_vector(g.labels_, data.weights, g.ring_);
  return g;
}

std::optional<VertexIndex> DirectedHypergraph::find(const std::string& label) const {
  return find_sorted(labels_, label);
}

VertexSet DirectedHypergraph::vertex_set(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) {
    auto v = find(l);
    if (!v) throw InvariantError("unknown vertex " + l);
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::string> DirectedHypergraph::set_labels(const VertexSet& s) const {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(labels_.at(v));
  return out;
}

std::vector<VertexSet> DirectedHypergraph::origin_and_end_sets() const {
  std::set<VertexSet> sets;
  for (const auto& a : arrows_) {
    sets.insert(a.origin);
    sets.insert(a.end);
  }
  return {sets.begin(), sets.end()};
}

DirectedHypergraph DirectedHypergraph::with_weights(std::optional<std::vector<Scalar>> weights) const {
  DirectedHypergraph g = *this;
  if (weights) {
    if (weights->size() != labels_.size()) throw InvariantError("weight vector size does not match vertex count");
    for (auto& w : *weights) w = ring_.from_rational(w);
  }
  g.weights_ = std::move(weights);
  return g;
}

DirectedHypergraph DirectedHypergraph::over_ring(const Ring& ring) const {
  DirectedHypergraph g = *this;
  g.ring_ = ring;
  if (g.weights_) {
    if (ring_.kind() == Ring::Kind::IntegersMod && !(ring_ == ring)) {
      throw InvariantError("weights over " + ring_.name() + " cannot be moved to " + ring.name());
    }
    for (auto& w : *g.weights_) w = ring.from_rational(w);
  }
  return g;
}

DirectedHypergraphData DirectedHypergraph::to_data() const {
  DirectedHypergraphData d;
  d.vertices = labels_;
  d.ring = ring_;
  for (const auto& a : arrows_) d.arrows.push_back({set_labels(a.origin), set_labels(a.end)});
  d.weights = weight_map(labels_, weights_);
  return d;
}

Hypergraph Hypergraph::build(const HypergraphData& data) {
  Hypergraph h;
  h.ring_ = data.ring;
  h.labels_ = sorted_unique_labels(data.vertices, "hypergraph");
  if (h.labels_.empty()) throw InvariantError("hypergraph needs at least one vertex");
  std::vector<bool> covered(h.labels_.size(), false);
  std::set<VertexSet> seen;
  for (const auto& le : data.edges) {
    VertexSet e;
    for (const auto& l : le) {
      auto v = find_sorted(h.labels_, l);
      if (!v) throw InvariantError("unknown vertex " + l);
      e.push_back(*v);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InvariantError("edge lists a vertex twice");
    if (e.size() < 2) throw InvariantError("hypergraph edges need more than one element");
    if (!seen.insert(e).second) throw InvariantError("hypergraph edges must be distinct");
    for (auto v : e) covered[v] = true;
    h.edges_.push_back(std::move(e));
  }
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) throw InvariantError("vertex " + h.labels_[v] + " is not covered by any edge");
  }
  h.weights_ = weight_vector(h.labels_, data.weights, h.ring_);
  return h;
}

HypergraphData Hypergraph::to_data() const {
  HypergraphData d;
  d.vertices = labels_;
  d.ring = ring_;
  for (const auto& e : edges_) {
    std::vector<std::string> le;
    for (auto v : e) le.push_back(labels_[v]);
    d.edges.push_back(std::move(le));
  }
  d.weights = weight_map(labels_, weights_);
  return d;
}

// ---------------------------------------------------------------------------

HyperMorphism HyperMorphism::from_labels(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                         const std::map<std::string, std::string>& vertex_map,
                                         const std::vector<std::size_t>& arrow_map) {
  HyperMorphism f;
  for (const auto& [from, to] : vertex_map) {
    if (!g.find(from)) throw InvariantError("morphism maps unknown source vertex " + from);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto it = vertex_map.find(g.labels()[v]);
    if (it == vertex_map.end()) throw InvariantError("morphism does not map vertex " + g.labels()[v]);
    auto w = h.find(it->second);
    if (!w) throw InvariantError("morphism maps " + it->first + " to unknown target vertex " + it->second);
    f.vertex_map.push_back(*w);
  }
  if (arrow_map.size() != g.arrows().size()) throw InvariantError("arrow map must list one target per source arrow");
  for (auto i : arrow_map)
    if (i >= h.arrows().size()) throw InvariantError("arrow map refers to arrow " + std::to_string(i) + " out of range");
  f.arrow_map = arrow_map;
  return f;
}

HyperMorphism HyperMorphism::infer_arrows(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                          const std::map<std::string, std::string>& vertex_map) {
  HyperMorphism f = from_labels(g, h, vertex_map, std::vector<std::size_t>(g.arrows().size(), 0));
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    Arrow want{image_set(f.vertex_map, g.arrows()[i].origin), image_set(f.vertex_map, g.arrows()[i].end)};
    auto it = std::find(h.arrows().begin(), h.arrows().end(), want);
    if (it == h.arrows().end()) {
      throw NotAMorphism("no target arrow " + set_label(h.set_labels(want.origin)) + " -> " +
                         set_label(h.set_labels(want.end)));
    }
    f.arrow_map[i] = static_cast<std::size_t>(it - h.arrows().begin());
  }
  return f;
}

Scalar set_weight(const DirectedHypergraph& g, const VertexSet& x) {
  Scalar total = 0;
  for (auto v : x) total = g.ring().add(total, g.weight(v));
  return total;
}

Scalar set_weight(const std::vector<std::string>& x, const WeightMap& weights, const Ring& ring) {
  Scalar total = 0;
  for (const auto& v : x) {
    auto it = weights.find(v);
    if (it == weights.end()) throw MissingWeight("vertex " + v + " has no weight");
    total = ring.add(total, ring.from_rational(it->second));
  }
  return total;
}

std::optional<std::string> morphism_violation(const HyperMorphism& f, const DirectedHypergraph& g,
                                              const DirectedHypergraph& h) {
  if (f.vertex_map.size() != g.vertex_count()) return "vertex map is not total";
  if (f.arrow_map.size() != g.arrows().size()) return "arrow map is not total";
  for (auto w : f.vertex_map)
    if (w >= h.vertex_count()) return "vertex map leaves the target";
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    if (f.arrow_map[i] >= h.arrows().size()) return "arrow map leaves the target";
    const Arrow& a = g.arrows()[i];
    const Arrow& b = h.arrows()[f.arrow_map[i]];
    if (image_set(f.vertex_map, a.origin) != b.origin || image_set(f.vertex_map, a.end) != b.end) {
      return "arrow " + set_label(g.set_labels(a.origin)) + " -> " + set_label(g.set_labels(a.end)) +
             " is sent to " + set_label(h.set_labels(b.origin)) + " -> " + set_label(h.set_labels(b.end)) +
             ", which is not its vertex image";
    }
  }
  return std::nullopt;
}

MorphismClass classify_morphism(const HyperMorphism& f, const DirectedHypergraph& g, const DirectedHypergraph& h) {
  if (auto why = morphism_violation(f, g, h)) throw NotAMorphism(*why);
  if (!(g.ring() == h.ring())) throw InvariantError("morphism between hypergraphs over different rings");
  MorphismClass c;
  c.vertex_weighted = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (h.weight(f.vertex_map[v]) != g.weight(v)) c.vertex_weighted = false;
  }
  c.edge_weighted = true;
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    const Arrow& a = g.arrows()[i];
    const Arrow& b = h.arrows()[f.arrow_map[i]];
    if (set_weight(g, a.origin) != set_weight(h, b.origin) || set_weight(g, a.end) != set_weight(h, b.end)) {
      c.edge_weighted = false;
    }
  }
  c.strong_weighted = c.vertex_weighted && c.edge_weighted;
  return c;
}

WeightedDigraph natural_digraph(const DirectedHypergraph& g) {
  WeightedDigraphData d;
  d.ring = g.ring();
  d.weights = WeightMap{};
  for (const auto& s : g.origin_and_end_sets()) {
    const auto label = set_label(g.set_labels(s));
    d.vertices.push_back(label);
    d.weights->emplace(label, set_weight(g, s));
  }
  for (const auto& a : g.arrows()) {
    d.edges.emplace_back(set_label(g.set_labels(a.origin)), set_label(g.set_labels(a.end)));
  }
  return WeightedDigraph::build(d);
}

HomologyResult edge_weighted_homology(const DirectedHypergraph& g, int max_degree) {
  const auto len = static_cast<std::size_t>(std::max(max_degree, 0));
  return homology(paths_functor(natural_digraph(g), len), max_degree);
}

PathComplex connective_functor(const DirectedHypergraph& g, std::size_t max_length) {
  const std::size_t n = g.vertex_count();
  std::vector<char> step(n * n, 0);
  for (std::size_t v = 0; v < n; ++v) step[v * n + v] = 1;
  for (const auto& a : g.arrows())
    for (auto x : a.origin)
      for (auto y : a.end) step[x * n + y] = 1;
  auto paths = enumerate_step_paths(n, max_length, [&](VertexIndex x, VertexIndex y) { return step[x * n + y] != 0; });
  return PathComplex(g.labels(), paths, g.ring(), g.weights());
}

namespace {

// Nondeterministic automaton recognizing the contiguous pieces of bold
// decompositions p0 v0w0 p1 ... vrwr p(r+1). A state records the zone the
// current vertex lies in:
//   before(e)         inside the origin of e, no arrow crossed yet
//   between(e, e2)    after crossing e, inside end(e) and origin(e2)
//   after(e)          after crossing e, inside end(e), no further crossing
// Inside a zone any step (including a repeat) is allowed; a crossing moves
// from before(e)/between(_, e) to a vertex of end(e).
class BoldAutomaton {
 public:
  explicit BoldAutomaton(const DirectedHypergraph& g) : g_(g), m_(g.arrows().size()) {}

  std::size_t state_count() const { return 2 * m_ + m_ * m_; }

  std::vector<char> start(VertexIndex x) const {
    std::vector<char> s(state_count(), 0);
    for (std::size_t id = 0; id < state_count(); ++id)
      if (in_zone(id, x)) s[id] = 1;
    return s;
  }

  std::vector<char> step(const std::vector<char>& states, VertexIndex y) const {
    std::vector<char> next(state_count(), 0);
    for (std::size_t id = 0; id < state_count(); ++id) {
      if (!states[id]) continue;
      if (in_zone(id, y)) next[id] = 1;
      auto e = next_arrow(id);
      if (!e || !member(g_.arrows()[*e].end, y)) continue;
      next[after(*e)] = 1;
      for (std::size_t e2 = 0; e2 < m_; ++e2)
        if (member(g_.arrows()[e2].origin, y)) next[between(*e, e2)] = 1;
    }
    return next;
  }

  static bool any(const std::vector<char>& s) {
    return std::any_of(s.begin(), s.end(), [](char c) { return c != 0; });
  }

 private:
  std::size_t before(std::size_t e) const { return e; }
  std::size_t after(std::size_t e) const { return m_ + e; }
  std::size_t between(std::size_t e, std::size_t e2) const { return 2 * m_ + e * m_ + e2; }

  bool in_zone(std::size_t id, VertexIndex x) const {
    const auto& arrows = g_.arrows();
    if (id < m_) return member(arrows[id].origin, x);
    if (id < 2 * m_) return member(arrows[id - m_].end, x);
    const std::size_t k = id - 2 * m_;
    return member(arrows[k / m_].end, x) && member(arrows[k % m_].origin, x);
  }

  std::optional<std::size_t> next_arrow(std::size_t id) const {
    if (id < m_) return id;
    if (id < 2 * m_) return std::nullopt;
    return (id - 2 * m_) % m_;
  }

  const DirectedHypergraph& g_;
  std::size_t m_;
};

}  // namespace

bool is_bold_path(const DirectedHypergraph& g, const Path& p) {
  if (p.empty()) return false;
  BoldAutomaton automaton(g);
  auto states = automaton.start(p.front());
  for (std::size_t k = 1; k < p.size() && BoldAutomaton::any(states); ++k) states = automaton.step(states, p[k]);
  return BoldAutomaton::any(states);
}

PathComplex bold_functor(const DirectedHypergraph& g, std::size_t max_length) {
  BoldAutomaton automaton(g);
  std::vector<Path> out;
  std::vector<std::pair<Path, std::vector<char>>> frontier;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto s = automaton.start(v);
    if (BoldAutomaton::any(s)) frontier.emplace_back(Path{v}, std::move(s));
  }
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    for (const auto& [p, s] : frontier) out.push_back(p);
    if (len == max_length) break;
    std::vector<std::pair<Path, std::vector<char>>> next;
    for (const auto& [p, s] : frontier) {
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        auto t = automaton.step(s, y);
        if (!BoldAutomaton::any(t)) continue;
        Path q = p;
        q.push_back(y);
        next.emplace_back(std::move(q), std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return PathComplex(g.labels(), out, g.ring(), g.weights());
}

UnderlyingHypergraph underlying_hypergraph(const DirectedHypergraph& g) {
  HypergraphData d;
  d.vertices = g.labels();
  d.ring = g.ring();
  d.weights = weight_map(g.labels(), g.weights());
  std::set<VertexSet> seen;
  std::size_t merged = 0;
  for (const auto& a : g.arrows()) {
    VertexSet u = a.origin;
    u.insert(u.end(), a.end.begin(), a.end.end());
    std::sort(u.begin(), u.end());
    if (!seen.insert(u).second) {
      ++merged;
      continue;
    }
    d.edges.push_back(g.set_labels(u));
  }
  return UnderlyingHypergraph{Hypergraph::build(d), merged};
}

PathComplex density_two_functor(const Hypergraph& h, std::size_t max_length) {
  const std::size_t n = h.vertex_count();
  std::vector<char> step(n * n, 0);
  for (const auto& e : h.edges())
    for (auto x : e)
      for (auto y : e) step[x * n + y] = 1;
  auto paths = enumerate_step_paths(n, max_length, [&](VertexIndex x, VertexIndex y) { return step[x * n + y] != 0; });
  return PathComplex(h.labels(), paths, h.ring(), h.weights());
}

DirectedHypergraph hyper_box_product(const DirectedHypergraph& g, const LineDigraph& line) {
  const std::size_t levels = line.length() + 1;
  DirectedHypergraphData d;
  d.ring = g.ring();
  if (g.weights()) d.weights = WeightMap{};
  auto lift = [&](const VertexSet& s, std::size_t i) {
    std::vector<std::string> out;
    for (auto v : s) out.push_back(product_label(g.labels()[v], i));
    return out;
  };
  for (std::size_t i = 0; i < levels; ++i) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto label = product_label(g.labels()[v], i);
      d.vertices.push_back(label);
      if (g.weights()) d.weights->emplace(label, (*g.weights())[v]);
    }
  }
  for (std::size_t i = 0; i < levels; ++i)
    for (const auto& a : g.arrows()) d.arrows.push_back({lift(a.origin, i), lift(a.end, i)});
  const auto sets = g.origin_and_end_sets();
  for (const auto& [i, j] : line.arrows())
    for (const auto& s : sets) d.arrows.push_back({lift(s, i), lift(s, j)});
  return DirectedHypergraph::build(d);
}

PathComplex vertex_weighted_complex(const DirectedHypergraph& g, VertexPipeline which, std::size_t max_length) {
  switch (which) {
    case VertexPipeline::Connective:
      return connective_functor(g, max_length);
    case VertexPipeline::Bold:
      return bold_functor(g, max_length);
    case VertexPipeline::DensityTwo:
      return density_two_functor(underlying_hypergraph(g).hypergraph, max_length);
  }
  throw InvariantError("unknown pipeline");
}

HomologyResult vertex_weighted_homologies(const DirectedHypergraph& g, VertexPipeline which, int max_degree,
                                          std::size_t max_length) {
  if (max_length == 0) max_length = static_cast<std::size_t>(std::max(max_degree, 0));
  return homology(vertex_weighted_complex(g, which, max_length), max_degree);
}

// ---------------------------------------------------------------------------

namespace {

// Labels of the natural digraph of g box I_1 mapped onto either the product
// labels "(A,i)" or the cylinder labels A / A'.
std::map<std::string, std::string> natural_box_labels(const DirectedHypergraph& g, bool to_cylinder) {
  std::map<std::string, std::string> m;
  for (const auto& s : g.origin_and_end_sets()) {
    const std::string base = set_label(g.set_labels(s));
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<std::string> lifted;
      for (auto v : s) lifted.push_back(product_label(g.labels()[v], i));
      std::string target = to_cylinder ? (i == 0 ? base : primed(base)) : product_label(base, i);
      m.emplace(set_label(lifted), target);
    }
  }
  return m;
}

}  // namespace

ComparisonReport check_natural_box(const DirectedHypergraph& g, std::size_t max_length) {
  const std::size_t top = max_length + 1;
  const auto unit = LineDigraph::unit_forward();
  PathComplex lhs = relabel(paths_functor(natural_digraph(hyper_box_product(g, unit)), top), natural_box_labels(g, false));
  PathComplex rhs = paths_functor(box_product(natural_digraph(g), unit), top);
  return compare(lhs, rhs);
}

ComparisonReport check_natural_cylinder_equality(const DirectedHypergraph& g, std::size_t max_length) {
  const std::size_t top = max_length + 1;
  PathComplex lhs = truncate(cylinder(paths_functor(natural_digraph(g), top)), top);
  PathComplex rhs = relabel(paths_functor(natural_digraph(hyper_box_product(g, LineDigraph::unit_forward())), top),
                            natural_box_labels(g, true));
  return compare(lhs, rhs);
}

ComparisonReport check_vertex_pipeline_cylinder(const DirectedHypergraph& g, VertexPipeline which,
                                                std::size_t max_length) {
  const std::size_t top = max_length + 1;
  PathComplex lhs = truncate(cylinder(vertex_weighted_complex(g, which, top)), top);
  PathComplex rhs = relabel(vertex_weighted_complex(hyper_box_product(g, LineDigraph::unit_forward()), which, top),
                            level_to_cylinder_labels(g.labels()));
  return compare(lhs, rhs);
}

}  // namespace wph
