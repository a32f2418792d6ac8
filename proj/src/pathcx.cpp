#include "wph/pathcx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wph/error.hpp"

namespace wph {

bool is_regular(const Path& p) {
  for (std::size_t k = 1; k < p.size(); ++k)
    if (p[k] == p[k - 1]) return false;
  return true;
}

Path collapse_repeats(const Path& p) {
  Path out;
  out.reserve(p.size());
  for (auto v : p)
    if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

std::string primed(const std::string& label) { return label + "'"; }

int prime_level(const std::string& label) {
  int n = 0;
  for (auto it = label.rbegin(); it != label.rend() && *it == '\''; ++it) ++n;
  return n;
}

namespace {

std::string join(const LabelPath& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + p[i];
  return s + ")";
}

}  // namespace

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues) os << issue.message << "\n";
  return os.str();
}

ValidationReport validate(const PathComplexData& data) {
  ValidationReport report;
  std::set<std::string> vertices;
  for (const auto& v : data.vertices) {
    if (!vertices.insert(v).second) {
      report.issues.push_back({Violation::DuplicateVertex, {v}, "duplicate vertex " + v});
    }
  }
  std::set<LabelPath> paths;
  for (const auto& p : data.paths) {
    if (p.empty()) {
      report.issues.push_back({Violation::EmptyPath, p, "empty path"});
      continue;
    }
    for (const auto& v : p) {
      if (!vertices.count(v)) {
        report.issues.push_back({Violation::UnknownVertex, p, "path " + join(p) + " uses unknown vertex " + v});
        break;
      }
    }
    paths.insert(p);
  }
  for (const auto& v : vertices) {
    if (!paths.count(LabelPath{v})) {
      report.issues.push_back({Violation::MissingSingleton, {v}, "missing one-vertex path " + join({v})});
    }
  }
  std::set<LabelPath> reported;
  for (const auto& p : paths) {
    if (p.size() < 2) continue;
    LabelPath front(p.begin(), p.end() - 1);
    LabelPath back(p.begin() + 1, p.end());
    for (const auto* q : {&front, &back}) {
      if (q->size() == 1 && vertices.count(q->front())) continue;  // singleton rule covers it
      if (!paths.count(*q) && reported.insert(*q).second) {
        report.issues.push_back({Violation::MissingTruncation, *q,
                                 "missing truncation " + join(*q) + " of " + join(p)});
      }
    }
  }
  if (data.weights) {
    for (const auto& v : vertices) {
      if (!data.weights->count(v)) {
        report.issues.push_back({Violation::MissingWeight, {v}, "vertex " + v + " has no weight"});
      }
    }
    for (const auto& [v, w] : *data.weights) {
      if (!vertices.count(v)) {
        report.issues.push_back({Violation::UnknownWeight, {v}, "weight given for unknown vertex " + v});
      }
    }
  }
  return report;
}

ValidationReport validate(const PathComplex& pc) {
  ValidationReport report;
  for (VertexIndex v = 0; v < pc.vertex_count(); ++v) {
    if (!pc.contains(Path{v})) {
      report.issues.push_back({Violation::MissingSingleton, {pc.label(v)},
                               "missing one-vertex path (" + pc.label(v) + ")"});
    }
  }
  std::set<Path> reported;
  for (std::size_t n = 1; n <= pc.max_length(); ++n) {
    for (const auto& p : pc.paths_of_length(n)) {
      Path front(p.begin(), p.end() - 1);
      Path back(p.begin() + 1, p.end());
      for (const auto* q : {&front, &back}) {
        if (!pc.contains(*q) && reported.insert(*q).second) {
          report.issues.push_back({Violation::MissingTruncation, pc.label_path(*q),
                                   "missing truncation " + pc.format(*q) + " of " + pc.format(p)});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

PathComplex::PathComplex(std::vector<std::string> labels, const std::vector<Path>& paths, Ring ring,
                         std::optional<std::vector<Scalar>> weights)
    : ring_(std::move(ring)) {
  const std::size_t n = labels.size();
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return labels[a] < labels[b]; });
  std::vector<VertexIndex> position(n);
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = static_cast<VertexIndex>(i);
    labels_.push_back(labels[order[i]]);
    if (i > 0 && labels_[i] == labels_[i - 1]) throw InvariantError("duplicate vertex " + labels_[i]);
    index_.emplace(labels_[i], static_cast<VertexIndex>(i));
  }
  if (weights) {
    if (weights->size() != n) throw InvariantError("weight vector size does not match vertex count");
    std::vector<Scalar> w(n);
    for (std::size_t i = 0; i < n; ++i) w[position[i]] = ring_.from_rational((*weights)[i]);
    weights_ = std::move(w);
  }
  for (const auto& p : paths) {
    if (p.empty()) throw InvariantError("empty path");
    Path q;
    q.reserve(p.size());
    for (auto v : p) {
      if (v >= n) throw InvariantError("path refers to a vertex index out of range");
      q.push_back(position[v]);
    }
    if (members_.insert(q).second) {
      if (by_length_.size() < q.size()) by_length_.resize(q.size());
      by_length_[q.size() - 1].push_back(std::move(q));
    }
  }
  for (auto& bucket : by_length_) std::sort(bucket.begin(), bucket.end());
}

PathComplex PathComplex::build(const PathComplexData& data) {
  auto report = validate(data);
  if (!report.ok()) throw InvariantError("invalid path complex:\n" + report.to_string());
  std::unordered_map<std::string, VertexIndex> pos;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) pos.emplace(data.vertices[i], static_cast<VertexIndex>(i));
  std::vector<Path> paths;
  paths.reserve(data.paths.size());
  for (const auto& lp : data.paths) {
    Path p;
    for (const auto& l : lp) p.push_back(pos.at(l));
    paths.push_back(std::move(p));
  }
  std::optional<std::vector<Scalar>> weights;
  if (data.weights) {
    std::vector<Scalar> w;
    for (const auto& v : data.vertices) w.push_back(data.weights->at(v));
    weights = std::move(w);
  }
  return PathComplex(data.vertices, paths, data.ring, std::move(weights));
}

std::optional<VertexIndex> PathComplex::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex PathComplex::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) throw InvariantError("unknown vertex " + label);
  return *v;
}

std::vector<Scalar> PathComplex::effective_weights() const {
  if (weights_) return *weights_;
  return std::vector<Scalar>(labels_.size(), ring_.one());
}

const std::vector<Path>& PathComplex::paths_of_length(std::size_t n) const {
  static const std::vector<Path> empty;
  return n < by_length_.size() ? by_length_[n] : empty;
}

std::vector<Path> PathComplex::all_paths() const {
  std::vector<Path> out;
  for (const auto& bucket : by_length_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

LabelPath PathComplex::label_path(const Path& p) const {
  LabelPath out;
  out.reserve(p.size());
  for (auto v : p) out.push_back(labels_.at(v));
  return out;
}

std::string PathComplex::format(const Path& p) const { return join(label_path(p)); }

Path PathComplex::path_from_labels(const LabelPath& lp) const {
  Path p;
  for (const auto& l : lp) p.push_back(index_of(l));
  return p;
}

PathComplexData PathComplex::to_data() const {
  PathComplexData data;
  data.vertices = labels_;
  data.ring = ring_;
  for (const auto& p : all_paths()) data.paths.push_back(label_path(p));
  if (weights_) {
    WeightMap w;
    for (std::size_t i = 0; i < labels_.size(); ++i) w.emplace(labels_[i], (*weights_)[i]);
    data.weights = std::move(w);
  }
  return data;
}

PathComplex PathComplex::with_weights(std::optional<std::vector<Scalar>> weights) const {
  PathComplex out = *this;
  if (weights) {
    if (weights->size() != labels_.size()) throw InvariantError("weight vector size does not match vertex count");
    for (auto& w : *weights) w = ring_.from_rational(w);
  }
  out.weights_ = std::move(weights);
  return out;
}

PathComplex PathComplex::over_ring(const Ring& ring) const {
  PathComplex out = *this;
  out.ring_ = ring;
  if (out.weights_) {
    // Z/m to anything else has no canonical lift; only identical rings pass.
    if (ring_.kind() == Ring::Kind::IntegersMod && !(ring_ == ring)) {
      throw InvariantError("weights over " + ring_.name() + " cannot be moved to " + ring.name());
    }
    for (auto& w : *out.weights_) w = ring.from_rational(w);
  }
  return out;
}

std::vector<Path> regular_paths(const PathComplex& pc, int n) {
  std::vector<Path> out;
  if (n < 0) return out;
  for (const auto& p : pc.paths_of_length(static_cast<std::size_t>(n)))
    if (is_regular(p)) out.push_back(p);
  return out;
}

PathComplex truncate(const PathComplex& pc, std::size_t max_length) {
  std::vector<Path> paths;
  for (std::size_t n = 0; n <= std::min(max_length, pc.max_length()); ++n) {
    const auto& bucket = pc.paths_of_length(n);
    paths.insert(paths.end(), bucket.begin(), bucket.end());
  }
  return PathComplex(pc.labels(), paths, pc.ring(), pc.weights());
}

PathComplex relabel(const PathComplex& pc, const std::map<std::string, std::string>& mapping) {
  std::vector<std::string> labels;
  labels.reserve(pc.vertex_count());
  for (const auto& l : pc.labels()) {
    auto it = mapping.find(l);
    labels.push_back(it == mapping.end() ? l : it->second);
  }
  return PathComplex(std::move(labels), pc.all_paths(), pc.ring(), pc.weights());
}

std::string ComparisonReport::to_string() const {
  std::ostringstream os;
  if (equal()) return "equal\n";
  if (!vertices_equal) os << "vertex sets differ\n";
  for (const auto& p : only_in_first) os << "only in first: " << join(p) << "\n";
  for (const auto& p : only_in_second) os << "only in second: " << join(p) << "\n";
  for (const auto& w : weight_mismatches) os << "weight mismatch: " << w << "\n";
  return os.str();
}

ComparisonReport compare(const PathComplex& first, const PathComplex& second) {
  ComparisonReport report;
  report.vertices_equal = first.labels() == second.labels();
  std::set<LabelPath> a;
  std::set<LabelPath> b;
  for (const auto& p : first.all_paths()) a.insert(first.label_path(p));
  for (const auto& p : second.all_paths()) b.insert(second.label_path(p));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(report.only_in_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(report.only_in_second));
  for (VertexIndex v = 0; v < first.vertex_count(); ++v) {
    auto w = second.find(first.label(v));
    if (!w) continue;
    const Scalar x = first.weight(v);
    const Scalar y = second.weight(*w);
    if (x != y || !(first.ring() == second.ring())) {
      report.weight_mismatches.push_back(first.label(v) + ": " + first.ring().format(x) + " vs " +
                                         second.ring().format(y));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

PathMorphism PathMorphism::identity(std::shared_ptr<const PathComplex> pc) {
  std::vector<VertexIndex> map(pc->vertex_count());
  std::iota(map.begin(), map.end(), 0);
  return PathMorphism{pc, pc, std::move(map)};
}

PathMorphism PathMorphism::from_labels(std::shared_ptr<const PathComplex> source,
                                       std::shared_ptr<const PathComplex> target,
                                       const std::map<std::string, std::string>& mapping) {
  std::vector<VertexIndex> map(source->vertex_count());
  for (const auto& [from, to] : mapping) {
    if (!source->find(from)) throw InvariantError("morphism maps unknown source vertex " + from);
  }
  for (VertexIndex v = 0; v < source->vertex_count(); ++v) {
    auto it = mapping.find(source->label(v));
    if (it == mapping.end()) throw InvariantError("morphism does not map vertex " + source->label(v));
    auto w = target->find(it->second);
    if (!w) throw InvariantError("morphism maps " + it->first + " to unknown target vertex " + it->second);
    map[v] = *w;
  }
  return PathMorphism{std::move(source), std::move(target), std::move(map)};
}

Path PathMorphism::image(const Path& p) const {
  Path out;
  out.reserve(p.size());
  for (auto v : p) out.push_back(vertex_map.at(v));
  return out;
}

std::map<std::string, std::string> PathMorphism::to_labels() const {
  std::map<std::string, std::string> out;
  for (VertexIndex v = 0; v < vertex_map.size(); ++v) out.emplace(source->label(v), target->label(vertex_map[v]));
  return out;
}

PathComplex cylinder(const PathComplex& pc) {
  const auto n = static_cast<VertexIndex>(pc.vertex_count());
  std::vector<std::string> labels = pc.labels();
  for (VertexIndex v = 0; v < n; ++v) {
    const std::string p = primed(pc.label(v));
    if (pc.find(p)) throw InvariantError("cylinder label " + p + " collides with an existing vertex");
    labels.push_back(p);
  }
  std::vector<Path> paths;
  for (const auto& p : pc.all_paths()) {
    Path top;
    for (auto v : p) top.push_back(v + n);
    paths.push_back(p);
    paths.push_back(top);
    for (std::size_t k = 0; k < p.size(); ++k) {
      Path jump(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      jump.insert(jump.end(), top.begin() + static_cast<std::ptrdiff_t>(k), top.end());
      paths.push_back(std::move(jump));
    }
  }
  std::optional<std::vector<Scalar>> weights;
  if (pc.is_weighted()) {
    auto w = *pc.weights();
    auto doubled = w;
    doubled.insert(doubled.end(), w.begin(), w.end());
    weights = std::move(doubled);
  }
  return PathComplex(std::move(labels), paths, pc.ring(), std::move(weights));
}

CylinderInclusions cylinder_inclusions(std::shared_ptr<const PathComplex> pc) {
  auto cyl = std::make_shared<const PathComplex>(cylinder(*pc));
  std::vector<VertexIndex> bottom(pc->vertex_count());
  std::vector<VertexIndex> top(pc->vertex_count());
  for (VertexIndex v = 0; v < pc->vertex_count(); ++v) {
    bottom[v] = cyl->index_of(pc->label(v));
    top[v] = cyl->index_of(primed(pc->label(v)));
  }
  return CylinderInclusions{cyl, PathMorphism{pc, cyl, std::move(bottom)}, PathMorphism{pc, cyl, std::move(top)}};
}

PathMorphism inclusion_bottom(std::shared_ptr<const PathComplex> pc) {
  return cylinder_inclusions(std::move(pc)).bottom;
}

PathMorphism inclusion_top(std::shared_ptr<const PathComplex> pc) { return cylinder_inclusions(std::move(pc)).top; }

}  // namespace wph
