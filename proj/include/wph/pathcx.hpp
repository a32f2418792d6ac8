#pragma once

/**
 * Path complexes with optional vertex weights.
 *
 * Vertices are identified by string labels and stored sorted; a vertex index
 * is its rank in that order, so lexicographic order on index sequences is
 * lexicographic order on label sequences. Primed copies (cylinder tops) carry
 * a trailing apostrophe, e.g. "a'".
 */

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wph/algebra.hpp"

namespace wph {

using VertexIndex = std::uint32_t;
using Path = std::vector<VertexIndex>;

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

bool is_regular(const Path& p);
// Drops consecutive repeats: (a a b b a) -> (a b a).
Path collapse_repeats(const Path& p);

std::string primed(const std::string& label);
// Number of trailing apostrophes.
int prime_level(const std::string& label);

using LabelPath = std::vector<std::string>;
using WeightMap = std::map<std::string, Scalar>;

// Unvalidated, label-level description of a path complex (what a document
// or a caller supplies before invariants are checked).
struct PathComplexData {
  std::vector<std::string> vertices;
  std::vector<LabelPath> paths;
  Ring ring = Ring::integers();
  std::optional<WeightMap> weights;
};

enum class Violation { EmptyPath, UnknownVertex, DuplicateVertex, MissingSingleton, MissingTruncation, MissingWeight, UnknownWeight };

struct ValidationIssue {
  Violation kind;
  LabelPath path;  // offending path (or the single vertex)
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

class PathComplex {
 public:
  PathComplex() = default;

  // Throws InvariantError listing every violated axiom.
  static PathComplex build(const PathComplexData& data);

  // Index-level constructor used by functors. Labels need not be sorted; the
  // paths refer to positions in `labels` and are remapped. No axiom checks
  // beyond index bounds: call validate() when closure is not guaranteed.
  PathComplex(std::vector<std::string> labels, const std::vector<Path>& paths, Ring ring,
              std::optional<std::vector<Scalar>> weights);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexIndex v) const { return labels_[v]; }
  std::optional<VertexIndex> find(const std::string& label) const;
  VertexIndex index_of(const std::string& label) const;  // throws InvariantError

  const Ring& ring() const { return ring_; }
  bool is_weighted() const { return weights_.has_value(); }
  // Weight of v; unweighted complexes behave as delta == 1.
  Scalar weight(VertexIndex v) const { return weights_ ? (*weights_)[v] : ring_.one(); }
  std::vector<Scalar> effective_weights() const;
  const std::optional<std::vector<Scalar>>& weights() const { return weights_; }

  bool contains(const Path& p) const { return members_.count(p) != 0; }
  std::size_t path_count() const { return members_.size(); }
  // Longest stored path length (a path with k vertices has length k-1).
  std::size_t max_length() const { return by_length_.empty() ? 0 : by_length_.size() - 1; }
  // Paths of length n in canonical order.
  const std::vector<Path>& paths_of_length(std::size_t n) const;
  std::vector<Path> all_paths() const;

  LabelPath label_path(const Path& p) const;
  std::string format(const Path& p) const;  // "a b c" style, space separated
  Path path_from_labels(const LabelPath& lp) const;

  PathComplexData to_data() const;

  PathComplex with_weights(std::optional<std::vector<Scalar>> weights) const;
  // Weights mapped into another ring; throws InvariantError if impossible.
  PathComplex over_ring(const Ring& ring) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<std::vector<Path>> by_length_;
  std::unordered_set<Path, PathHash> members_;
  Ring ring_ = Ring::integers();
  std::optional<std::vector<Scalar>> weights_;
};

ValidationReport validate(const PathComplexData& data);
ValidationReport validate(const PathComplex& pc);

// Regular paths of length n, canonical order; empty for n < 0.
std::vector<Path> regular_paths(const PathComplex& pc, int n);

PathComplex truncate(const PathComplex& pc, std::size_t max_length);

// Complex with every label replaced through `mapping` (labels absent from the
// mapping are kept). The mapping must be injective on the vertex set.
PathComplex relabel(const PathComplex& pc, const std::map<std::string, std::string>& mapping);

struct ComparisonReport {
  bool vertices_equal = true;
  std::vector<LabelPath> only_in_first;
  std::vector<LabelPath> only_in_second;
  std::vector<std::string> weight_mismatches;
  bool equal() const {
    return vertices_equal && only_in_first.empty() && only_in_second.empty() && weight_mismatches.empty();
  }
  // first's paths all belong to second (weights compared on shared vertices).
  bool first_contained() const { return only_in_first.empty() && weight_mismatches.empty(); }
  std::string to_string() const;
};

// Label-level comparison of path sets and effective weights.
ComparisonReport compare(const PathComplex& first, const PathComplex& second);

// Morphism of path complexes given by its vertex map.
struct PathMorphism {
  std::shared_ptr<const PathComplex> source;
  std::shared_ptr<const PathComplex> target;
  std::vector<VertexIndex> vertex_map;

  static PathMorphism identity(std::shared_ptr<const PathComplex> pc);
  // Throws InvariantError on unknown labels or a non-total map.
  static PathMorphism from_labels(std::shared_ptr<const PathComplex> source,
                                  std::shared_ptr<const PathComplex> target,
                                  const std::map<std::string, std::string>& mapping);

  Path image(const Path& p) const;
  std::map<std::string, std::string> to_labels() const;
};

// P-up on V and V' with P, P' and the one-jump prism paths P#.
// Throws InvariantError when a primed label collides with an existing one.
PathComplex cylinder(const PathComplex& pc);

struct CylinderInclusions {
  std::shared_ptr<const PathComplex> cylinder;
  PathMorphism bottom;  // v -> v
  PathMorphism top;     // v -> v'
};

CylinderInclusions cylinder_inclusions(std::shared_ptr<const PathComplex> pc);
PathMorphism inclusion_bottom(std::shared_ptr<const PathComplex> pc);
PathMorphism inclusion_top(std::shared_ptr<const PathComplex> pc);

// Path complex of all step sequences of length <= max_length, where
// step(u, v) decides whether u -> v may be consecutive.
template <typename StepFn>
std::vector<Path> enumerate_step_paths(std::size_t vertex_count, std::size_t max_length, StepFn step) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (VertexIndex v = 0; v < vertex_count; ++v) frontier.push_back({v});
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_length) break;
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (VertexIndex v = 0; v < vertex_count; ++v) {
        if (!step(p.back(), v)) continue;
        Path q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return out;
}

}  // namespace wph
