#include "wph/homotopy.hpp"

#include <algorithm>
#include <sstream>

#include "wph/error.hpp"

namespace wph {

namespace {

constexpr std::size_t kShownWitnesses = 10;

void append_list(std::ostringstream& os, const std::string& title, const std::vector<std::string>& items) {
  if (items.empty()) return;
  os << "\n  " << title << " (" << items.size() << "):";
  for (std::size_t i = 0; i < items.size() && i < kShownWitnesses; ++i) os << "\n    " << items[i];
  if (items.size() > kShownWitnesses) os << "\n    ...";
}

bool same_complex(const std::shared_ptr<const PathComplex>& a, const std::shared_ptr<const PathComplex>& b) {
  return a == b || compare(*a, *b).equal();
}

std::string set_text(const DirectedHypergraph& g, const VertexSet& s) { return set_label(g.set_labels(s)); }

}  // namespace

std::string MorphismReport::to_string() const {
  std::ostringstream os;
  os << (valid ? "morphism: valid" : "morphism: INVALID") << ", weighted: " << (weighted ? "yes" : "no");
  append_list(os, "images outside the target", missing_images);
  append_list(os, "weight mismatches", weight_mismatches);
  return os.str();
}

MorphismReport verify_path_morphism(const PathMorphism& f, Strictness strictness) {
  const PathComplex& src = *f.source;
  const PathComplex& tgt = *f.target;
  if (f.vertex_map.size() != src.vertex_count()) throw InvariantError("vertex map is not total");
  MorphismReport r;
  for (const auto& p : src.all_paths()) {
    Path img = f.image(p);
    if (strictness == Strictness::AllowDegenerate) img = collapse_repeats(img);
    if (!tgt.contains(img)) {
      r.valid = false;
      r.missing_images.push_back(src.format(p) + " -> " + tgt.format(f.image(p)));
    }
  }
  for (VertexIndex v = 0; v < src.vertex_count(); ++v) {
    const Scalar& a = src.weight(v);
    const Scalar b = tgt.weight(f.vertex_map[v]);
    if (a != b) {
      r.weighted = false;
      r.weight_mismatches.push_back(src.label(v) + " (" + src.ring().format(a) + ") -> " +
                                    tgt.label(f.vertex_map[v]) + " (" + tgt.ring().format(b) + ")");
    }
  }
  return r;
}

std::string OneStepReport::to_string() const {
  std::ostringstream os;
  os << "one-step homotopy: " << (valid ? "valid" : "INVALID");
  if (valid) os << ", weighted: " << (weighted ? "yes" : "no");
  if (!failure.empty()) os << "\n  " << failure;
  if (homotopy) {
    os << "\n  F: ";
    std::istringstream lines(morphism.to_string());
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      os << (first ? "" : "\n  ") << line;
      first = false;
    }
  }
  return os.str();
}

OneStepReport one_step_homotopy_pathcx(const PathMorphism& f, const PathMorphism& g, Strictness strictness) {
  OneStepReport r;
  if (!same_complex(f.source, g.source) || !same_complex(f.target, g.target)) {
    r.failure = "f and g do not share source and target";
    return r;
  }
  const PathComplex& src = *f.source;
  auto cyl = std::make_shared<const PathComplex>(cylinder(src));
  std::vector<VertexIndex> map(cyl->vertex_count());
  for (VertexIndex v = 0; v < src.vertex_count(); ++v) {
    map[cyl->index_of(src.label(v))] = f.vertex_map.at(v);
    map[cyl->index_of(primed(src.label(v)))] = g.vertex_map.at(v);
  }
  PathMorphism F{cyl, f.target, std::move(map)};
  r.morphism = verify_path_morphism(F, strictness);
  r.valid = r.morphism.valid;
  r.weighted = r.morphism.weighted;
  if (!r.valid) r.failure = "F does not map the cylinder into the target";
  r.homotopy = std::move(F);
  return r;
}

std::string HyperOneStepReport::to_string() const {
  std::ostringstream os;
  os << "one-step hypergraph homotopy: " << (valid ? "valid" : "INVALID");
  if (!failure.empty()) os << "\n  " << failure;
  append_list(os, "missing vertical arrows", missing_arrows);
  if (exempt_arrows) os << "\n  exempt vertical arrows (f_V(A) = g_V(A)): " << exempt_arrows;
  os << "\n  vertex-weighted: " << (classes.vertex_weighted ? "yes" : "no")
     << ", edge-weighted: " << (classes.edge_weighted ? "yes" : "no")
     << ", strong: " << (classes.strong_weighted ? "yes" : "no");
  return os.str();
}

HyperOneStepReport one_step_homotopy_dhyper(const HyperMorphism& f, const HyperMorphism& g,
                                            const DirectedHypergraph& source, const DirectedHypergraph& target,
                                            HyperHomotopyMode mode) {
  HyperOneStepReport r;
  if (auto why = morphism_violation(f, source, target)) {
    r.failure = "f is not a morphism: " + *why;
    return r;
  }
  if (auto why = morphism_violation(g, source, target)) {
    r.failure = "g is not a morphism: " + *why;
    return r;
  }

  r.classes.vertex_weighted = true;
  for (VertexIndex v = 0; v < source.vertex_count(); ++v) {
    if (target.weight(f.vertex_map[v]) != source.weight(v) || target.weight(g.vertex_map[v]) != source.weight(v)) {
      r.classes.vertex_weighted = false;
    }
  }
  r.classes.edge_weighted = true;
  auto preserves = [&](const VertexSet& a, const VertexSet& image) {
    return set_weight(source, a) == set_weight(target, image);
  };
  for (std::size_t i = 0; i < source.arrows().size(); ++i) {
    const Arrow& a = source.arrows()[i];
    for (const HyperMorphism* m : {&f, &g}) {
      const Arrow& b = target.arrows()[m->arrow_map[i]];
      if (!preserves(a.origin, b.origin) || !preserves(a.end, b.end)) r.classes.edge_weighted = false;
    }
  }

  for (const auto& a : source.origin_and_end_sets()) {
    VertexSet fa = image_set(f.vertex_map, a);
    VertexSet ga = image_set(g.vertex_map, a);
    const std::string name = set_text(source, a) + "x0 -> " + set_text(source, a) + "x1";
    if (fa == ga) {
      if (mode == HyperHomotopyMode::Reflexive) {
        ++r.exempt_arrows;
      } else {
        r.missing_arrows.push_back(name + ": image " + set_text(target, fa) + " -> " + set_text(target, ga) +
                                   " would have equal origin and end");
      }
      continue;
    }
    if (!preserves(a, fa) || !preserves(a, ga)) r.classes.edge_weighted = false;
    if (std::find(target.arrows().begin(), target.arrows().end(), Arrow{fa, ga}) == target.arrows().end()) {
      r.missing_arrows.push_back(name + ": no arrow " + set_text(target, fa) + " -> " + set_text(target, ga));
    }
  }
  r.classes.strong_weighted = r.classes.vertex_weighted && r.classes.edge_weighted;
  r.valid = r.missing_arrows.empty();
  if (!r.valid) r.failure = "F is not defined on every vertical arrow";
  return r;
}

// ---------------------------------------------------------------------------

PrismOperator::PrismOperator(const PathComplex& base)
    : ring_(base.ring()), base_weights_(base.effective_weights()), cylinder_(wph::cylinder(base)) {
  for (VertexIndex v = 0; v < base.vertex_count(); ++v) {
    const Scalar& w = base_weights_[v];
    if (!ring_.is_unit(w)) {
      throw NonInvertibleWeight("weight " + ring_.format(w) + " of vertex " + base.label(v) + " is not invertible in " +
                                ring_.name());
    }
    gamma_.push_back(ring_.inverse(w));
    lower_.push_back(cylinder_.index_of(base.label(v)));
    upper_.push_back(cylinder_.index_of(primed(base.label(v))));
  }
}

ChainVector PrismOperator::prism(const ChainVector& v) const {
  ChainVector out;
  out.degree = v.degree + 1;
  if (v.degree < 0) return out;
  for (const auto& [path, coeff] : v.coefficients) {
    if (!is_regular(path)) continue;
    for (std::size_t k = 0; k < path.size(); ++k) {
      Path word;
      word.reserve(path.size() + 1);
      for (std::size_t i = 0; i <= k; ++i) word.push_back(lower_.at(path[i]));
      for (std::size_t i = k; i < path.size(); ++i) word.push_back(upper_.at(path[i]));
      Scalar term = ring_.mul(coeff, gamma_.at(path[k]));
      if (k % 2 == 1) term = ring_.neg(term);
      accumulate(out, ring_, word, term);
    }
  }
  return out;
}

namespace {

ChainVector map_regular(const ChainVector& v, const std::vector<VertexIndex>& map, const Ring& ring) {
  ChainVector out;
  out.degree = v.degree;
  for (const auto& [path, coeff] : v.coefficients) {
    if (!is_regular(path)) continue;
    Path q;
    for (auto x : path) q.push_back(map.at(x));
    accumulate(out, ring, q, coeff);
  }
  return out;
}

}  // namespace

ChainVector PrismOperator::bottom(const ChainVector& v) const { return map_regular(v, lower_, ring_); }

ChainVector PrismOperator::top(const ChainVector& v) const { return map_regular(v, upper_, ring_); }

PrismOperator::IdentityReport PrismOperator::verify_identity(const ChainVector& v) const {
  IdentityReport r;
  r.lhs = add(ring_, weighted_boundary(cylinder_, prism(v)), prism(weighted_boundary(v, base_weights_, ring_)));
  r.rhs = subtract(ring_, top(v), bottom(v));
  r.difference = subtract(ring_, r.lhs, r.rhs);
  r.holds = r.difference.is_zero();
  return r;
}

// ---------------------------------------------------------------------------

bool ChainHomotopyReport::valid() const {
  if (!one_step.valid || !one_step.weighted || degrees.empty()) return false;
  for (const auto& d : degrees)
    if (!d.prism_in_omega || !d.identity_holds) return false;
  return std::all_of(homology_maps_equal.begin(), homology_maps_equal.end(), [](bool b) { return b; });
}

std::string ChainHomotopyReport::to_string() const {
  std::ostringstream os;
  os << one_step.to_string();
  if (one_step.valid && !one_step.weighted) os << "\n  chain homotopy needs weighted morphisms; not certified";
  for (const auto& d : degrees) {
    os << "\n  degree " << d.degree << ": " << d.generators << " generators, prism in allowed chains: "
       << (d.prism_in_omega ? "yes" : "no") << ", dL + Ld = g - f: " << (d.identity_holds ? "yes" : "no");
  }
  for (std::size_t n = 0; n < homology_maps_equal.size(); ++n) {
    os << "\n  H_" << n << ": induced maps " << (homology_maps_equal[n] ? "equal" : "DIFFER");
  }
  os << "\nchain homotopy certificate: " << (valid() ? "PASS" : "FAIL");
  return os.str();
}

ChainHomotopyReport chain_homotopy_certificate(const PathMorphism& f, const PathMorphism& g, int max_degree,
                                               Strictness strictness) {
  if (max_degree < 0) throw InvariantError("certificate degree must be non-negative");
  ChainHomotopyReport r;
  r.max_degree = max_degree;
  r.one_step = one_step_homotopy_pathcx(f, g, strictness);
  if (!r.one_step.valid || !r.one_step.weighted) return r;

  const PathComplex& source = *f.source;
  const Ring& ring = source.ring();
  ring.require_elimination("chain homotopy certificate");
  if (!(ring == f.target->ring())) throw InvariantError("source and target are over different rings");
  const PrismOperator tau(source);
  const PathMorphism& F = *r.one_step.homotopy;

  const OmegaComplex src = build_omega(source, max_degree);
  const OmegaComplex cyl = build_omega(*F.source, max_degree + 1);
  const OmegaComplex tgt = build_omega(*f.target, max_degree + 1);

  std::vector<Matrix> fmap, gmap, L;
  for (int n = 0; n <= max_degree; ++n) {
    fmap.push_back(induced_chain_map(f, src, tgt, n));
    gmap.push_back(induced_chain_map(g, src, tgt, n));
    Matrix Ln(ring, tgt.rank(n + 1), src.rank(n));
    for (std::size_t j = 0; j < src.rank(n); ++j) {
      const ChainVector v = src.generator(n, j);
      const ChainVector tv = tau.prism(v);
      if (!cyl.coordinates(tv)) {
        throw HomotopyIdentityFailed("prism of " + format_chain(source, v) + " is not an allowed chain of the cylinder");
      }
      auto coords = tgt.coordinates(push_forward(F, ring, tv));
      if (!coords) {
        throw HomotopyIdentityFailed("F_* of the prism of " + format_chain(source, v) +
                                     " is not an allowed chain of the target");
      }
      Ln.set_column(j, *coords);
    }
    Matrix lhs = tgt.boundary(n + 1) * Ln;
    if (n > 0) lhs = lhs + L.back() * src.boundary(n);
    const Matrix rhs = gmap.back() - fmap.back();
    if (!(lhs == rhs)) {
      std::size_t bad = 0;
      while (bad < lhs.cols() && lhs.column(bad) == rhs.column(bad)) ++bad;
      throw HomotopyIdentityFailed("dL + Ld != g_* - f_* on generator " + format_chain(source, src.generator(n, bad)) +
                                   " in degree " + std::to_string(n));
    }
    L.push_back(std::move(Ln));
    r.degrees.push_back(DegreeCertificate{n, src.rank(n), true, true});
  }

  // f_* == g_* on H_n iff (g - f) sends every cycle into the boundary lattice.
  for (int n = 0; n < max_degree; ++n) {
    const Matrix& out = src.boundary(n);
    const Matrix cycles = out.rows() == 0 ? Matrix::identity(ring, src.rank(n)) : kernel_basis(out);
    const Matrix diff = (gmap[n] - fmap[n]) * cycles;
    const Matrix image = image_basis(tgt.boundary(n + 1));
    bool equal = true;
    for (std::size_t c = 0; c < diff.cols() && equal; ++c) {
      if (!solve_in_lattice(image, diff.column(c))) equal = false;
    }
    r.homology_maps_equal.push_back(equal);
  }
  return r;
}

// ---------------------------------------------------------------------------

bool HomotopyChainReport::valid() const {
  return std::all_of(steps.begin(), steps.end(), [](const OneStepReport& s) { return s.valid; });
}

std::string HomotopyChainReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) os << "step " << i << ": " << steps[i].to_string() << "\n";
  os << "homotopy chain: " << (valid() ? "PASS" : "FAIL");
  return os.str();
}

HomotopyChainReport verify_homotopy_chain(const std::vector<PathMorphism>& morphisms, const std::vector<bool>& forward,
                                          Strictness strictness) {
  if (morphisms.size() < 2) throw InvariantError("a homotopy chain needs at least two morphisms");
  if (forward.size() + 1 != morphisms.size()) throw InvariantError("one direction is needed per homotopy step");
  HomotopyChainReport r;
  for (std::size_t i = 0; i + 1 < morphisms.size(); ++i) {
    r.steps.push_back(forward[i] ? one_step_homotopy_pathcx(morphisms[i], morphisms[i + 1], strictness)
                                 : one_step_homotopy_pathcx(morphisms[i + 1], morphisms[i], strictness));
  }
  return r;
}

bool HyperHomotopyChainReport::valid() const {
  return std::all_of(steps.begin(), steps.end(), [](const HyperOneStepReport& s) { return s.valid; });
}

std::string HyperHomotopyChainReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) os << "step " << i << ": " << steps[i].to_string() << "\n";
  os << "homotopy chain: " << (valid() ? "PASS" : "FAIL");
  return os.str();
}

HyperHomotopyChainReport verify_hyper_homotopy_chain(const std::vector<HyperMorphism>& morphisms,
                                                     const std::vector<bool>& forward,
                                                     const DirectedHypergraph& source,
                                                     const DirectedHypergraph& target, HyperHomotopyMode mode) {
  if (morphisms.size() < 2) throw InvariantError("a homotopy chain needs at least two morphisms");
  if (forward.size() + 1 != morphisms.size()) throw InvariantError("one direction is needed per homotopy step");
  HyperHomotopyChainReport r;
  for (std::size_t i = 0; i + 1 < morphisms.size(); ++i) {
    const auto& a = forward[i] ? morphisms[i] : morphisms[i + 1];
    const auto& b = forward[i] ? morphisms[i + 1] : morphisms[i];
    r.steps.push_back(one_step_homotopy_dhyper(a, b, source, target, mode));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct PipelineComplexes {
  std::shared_ptr<const PathComplex> source;
  std::shared_ptr<const PathComplex> target;
};

PipelineComplexes pipeline_complexes(const DirectedHypergraph& g, const DirectedHypergraph& h, HyperPipeline pipeline,
                                     std::size_t source_length, std::size_t target_length) {
  auto build = [&](const DirectedHypergraph& x, std::size_t len) {
    switch (pipeline) {
      case HyperPipeline::Natural:
        return paths_functor(natural_digraph(x), len);
      case HyperPipeline::Connective:
        return vertex_weighted_complex(x, VertexPipeline::Connective, len);
      case HyperPipeline::Bold:
        return vertex_weighted_complex(x, VertexPipeline::Bold, len);
      case HyperPipeline::DensityTwo:
        return vertex_weighted_complex(x, VertexPipeline::DensityTwo, len);
    }
    throw InvariantError("unknown pipeline");
  };
  return {std::make_shared<const PathComplex>(build(g, source_length)),
          std::make_shared<const PathComplex>(build(h, target_length))};
}

PathMorphism pipeline_morphism_on(const HyperMorphism& f, const DirectedHypergraph& g, const DirectedHypergraph& h,
                                  HyperPipeline pipeline, const PipelineComplexes& cx) {
  std::map<std::string, std::string> labels;
  if (pipeline == HyperPipeline::Natural) {
    for (const auto& a : g.origin_and_end_sets()) {
      labels.emplace(set_text(g, a), set_text(h, image_set(f.vertex_map, a)));
    }
  } else {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) labels.emplace(g.labels()[v], h.labels()[f.vertex_map.at(v)]);
  }
  return PathMorphism::from_labels(cx.source, cx.target, labels);
}

}  // namespace

PathMorphism pipeline_morphism(const HyperMorphism& f, const DirectedHypergraph& source,
                               const DirectedHypergraph& target, HyperPipeline pipeline, std::size_t source_length,
                               std::size_t target_length) {
  if (auto why = morphism_violation(f, source, target)) throw NotAMorphism(*why);
  return pipeline_morphism_on(f, source, target, pipeline,
                              pipeline_complexes(source, target, pipeline, source_length, target_length));
}

std::string HyperCertificate::to_string() const {
  std::ostringstream os;
  os << hyper.to_string();
  if (chain) os << "\n" << chain->to_string();
  else os << "\nchain homotopy certificate: FAIL";
  return os.str();
}

HyperCertificate hyper_pipeline_certificate(const HyperMorphism& f, const HyperMorphism& g,
                                            const DirectedHypergraph& source, const DirectedHypergraph& target,
                                            HyperPipeline pipeline, int max_degree, HyperHomotopyMode mode) {
  if (max_degree < 0) throw InvariantError("certificate degree must be non-negative");
  const Ring& ring = source.ring();
  if (pipeline == HyperPipeline::Natural) {
    for (const auto& a : source.origin_and_end_sets()) {
      const Scalar w = set_weight(source, a);
      if (!ring.is_unit(w)) {
        throw NonInvertibleWeight("weight " + ring.format(w) + " of " + set_text(source, a) + " is not invertible in " +
                                  ring.name());
      }
    }
  } else {
    for (VertexIndex v = 0; v < source.vertex_count(); ++v) {
      if (!ring.is_unit(source.weight(v))) {
        throw NonInvertibleWeight("weight " + ring.format(source.weight(v)) + " of vertex " + source.labels()[v] +
                                  " is not invertible in " + ring.name());
      }
    }
  }

  HyperCertificate c;
  c.hyper = one_step_homotopy_dhyper(f, g, source, target, mode);
  if (!c.hyper.valid) return c;
  const auto len = static_cast<std::size_t>(max_degree);
  const auto cx = pipeline_complexes(source, target, pipeline, len, len + 1);
  const PathMorphism fp = pipeline_morphism_on(f, source, target, pipeline, cx);
  const PathMorphism gp = pipeline_morphism_on(g, source, target, pipeline, cx);
  const Strictness strictness =
      mode == HyperHomotopyMode::Reflexive ? Strictness::AllowDegenerate : Strictness::Strict;
  c.chain = chain_homotopy_certificate(fp, gp, max_degree, strictness);
  return c;
}

}  // namespace wph
