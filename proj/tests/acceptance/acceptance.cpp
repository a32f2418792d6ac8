// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wph/chain.hpp"
#include "wph/cli.hpp"
#include "wph/dhyper.hpp"
#include "wph/digraph.hpp"
#include "wph/error.hpp"
#include "wph/homotopy.hpp"
#include "wph/io.hpp"

#ifndef WPH_TOOL
#error "WPH_TOOL must name the wph executable"
#endif

using namespace wph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string groups_text(const HomologyResult& h) {
  std::string s;
  for (const auto& g : h.groups) s += (s.empty() ? "" : " ") + g.to_string();
  return s;
}

HomologyGroup group(std::size_t rank, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.free_rank = rank;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

bool groups_are(const HomologyResult& h, const std::vector<HomologyGroup>& expected) {
  return h.groups == expected;
}

const Ring kQ = Ring::rationals();

std::shared_ptr<const PathComplex> share(PathComplex pc) { return std::make_shared<const PathComplex>(std::move(pc)); }

std::vector<std::string> files_of_kind(io::Kind kind) {
  std::vector<std::string> out;
  for (const auto& f : corpus::all_files())
    if (corpus::load(f).kind == kind) out.push_back(f);
  return out;
}

// --- 1, 2 -------------------------------------------------------------------

Outcome diamond_with_zero_middle() {
  const auto t0 = Clock::now();
  const PathComplex pc = corpus::load("diamond_zero_middle.json").path_complex();
  const HomologyResult weighted = homology(pc, 4);
  const HomologyResult plain = homology(pc.with_weights(std::nullopt), 4);
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = groups_are(weighted, {group(2), group(2), group(0), group(0)}) &&
           groups_are(plain, {group(1), group(1), group(0), group(0)}) && t < 1.0;
  std::ostringstream d;
  d << "weighted [" << groups_text(weighted) << "], unweighted [" << groups_text(plain) << "], " << t << " s";
  o.detail = d.str();
  return o;
}

Outcome edge_with_torsion() {
  const PathComplex pc = corpus::load("edge_torsion.json").path_complex();
  const HomologyResult weighted = homology(pc, 3);
  const HomologyResult plain = homology(pc.with_weights(std::nullopt), 3);
  Outcome o;
  o.pass = groups_are(weighted, {group(1, {2}), group(0), group(0)}) &&
           groups_are(plain, {group(1), group(0), group(0)});
  o.detail = "weighted [" + groups_text(weighted) + "], unweighted [" + groups_text(plain) + "]";
  return o;
}

// --- 3 ----------------------------------------------------------------------

Outcome boundary_squares_vanish() {
  const auto t0 = Clock::now();
  oracle::Rng rng(3);
  const Ring z = Ring::integers();
  std::size_t with_zero = 0, chains = 0, products = 0;
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    auto data = oracle::random_complex(rng, z, 8, 4);
    data.weights = oracle::random_integer_weights(rng, data.vertices, -2, 2, false);
    for (const auto& [v, x] : *data.weights)
      if (x == 0) {
        ++with_zero;
        break;
      }
    const PathComplex pc = PathComplex::build(data);
    const auto oc = oracle::from_library(pc);
    const OmegaComplex omega = build_omega(pc, static_cast<int>(pc.max_length()));
    for (int n = 1; n < omega.max_degree(); ++n) {
      ++products;
      if (!(omega.boundary(n) * omega.boundary(n + 1)).is_zero()) {
        o.pass = false;
        o.detail = "allowed-chain boundaries compose to nonzero in complex " + std::to_string(i);
      }
    }
    for (int n = 2; n <= static_cast<int>(pc.max_length()); ++n) {
      for (const Path& p : regular_paths(pc, n)) {
        ++chains;
        const ChainVector dd = weighted_boundary(pc, weighted_boundary(pc, basis_chain(p)));
        const auto w = pc.label_path(p);
        const auto odd = oracle::boundary(oracle::boundary({{w, 1}}, oc.delta), oc.delta);
        if (!dd.is_zero() || !odd.empty()) {
          o.pass = false;
          o.detail = "boundary squared is nonzero on " + pc.format(p);
        }
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) o.pass = false;
  if (o.pass) {
    std::ostringstream d;
    d << "200 complexes (" << with_zero << " with zero weights), " << products << " allowed-chain products, "
      << chains << " path columns, " << t << " s";
    o.detail = d.str();
  }
  return o;
}

// --- 4 ----------------------------------------------------------------------

Outcome prism_identity_suite() {
  oracle::Rng rng(4);
  std::size_t checked = 0;
  Outcome o;
  for (int i = 0; i < 50 && o.pass; ++i) {
    auto data = oracle::random_complex(rng, kQ, 8, 4);
    data.weights = oracle::random_rational_weights(rng, data.vertices);
    const PathComplex pc = PathComplex::build(data);
    const PrismOperator tau(pc);
    const auto oc = oracle::from_library(pc);
    const auto delta2 = oracle::doubled(oc.delta);
    for (int n = 0; n <= 4 && o.pass; ++n) {
      for (const Path& p : regular_paths(pc, n)) {
        ++checked;
        const auto report = tau.verify_identity(basis_chain(p));
        const oracle::Word w = pc.label_path(p);
        const oracle::Chain v{{w, 1}};
        const auto lhs = oracle::plus(oracle::boundary(oracle::prism(v, oc.delta), delta2),
                                      oracle::prism(oracle::boundary(v, oc.delta), oc.delta));
        const auto rhs = oracle::plus(oracle::lift(v, true), oracle::lift(v, false), -1);
        const auto library_lhs = oracle::to_oracle(tau.cylinder(), report.lhs.coefficients);
        if (!report.holds || lhs != rhs || library_lhs != lhs) {
          o.pass = false;
          o.detail = "identity fails on " + pc.format(p) + " in complex " + std::to_string(i);
          break;
        }
      }
    }
  }
  if (o.pass) o.detail = "50 complexes over Q, " + std::to_string(checked) + " regular paths of length <= 4, oracle agrees";
  return o;
}

// --- 5 ----------------------------------------------------------------------

struct Pair {
  std::string name;
  PathMorphism f;
  PathMorphism g;
  Strictness strictness = Strictness::Strict;
};

// dL + Ld == g - f recomputed on label words, with L = F o prism.
bool oracle_chain_homotopy(const Pair& pair, int top, std::string& why) {
  const PathComplex& source = *pair.f.source;
  const PathComplex& target = *pair.f.target;
  const auto fs = pair.f.to_labels();
  const auto gs = pair.g.to_labels();
  std::map<std::string, std::string> F = fs;
  for (const auto& [v, x] : gs) F[oracle::prime(v)] = x;
  auto push = [](const oracle::Chain& c, const std::map<std::string, std::string>& m) {
    oracle::Chain out;
    for (const auto& [w, x] : c) {
      oracle::Word t;
      for (const auto& v : w) t.push_back(m.at(v));
      if (oracle::regular(t)) oracle::add_to(out, t, x);
    }
    return out;
  };
  const auto src = oracle::from_library(source);
  const auto tgt = oracle::from_library(target);
  const OmegaComplex omega = build_omega(source, top);
  for (int n = 0; n <= top; ++n) {
    for (std::size_t j = 0; j < omega.rank(n); ++j) {
      const auto v = oracle::to_oracle(source, omega.generator(n, j).coefficients);
      const auto L_v = push(oracle::prism(v, src.delta), F);
      const auto L_dv = push(oracle::prism(oracle::boundary(v, src.delta), src.delta), F);
      const auto lhs = oracle::plus(oracle::boundary(L_v, tgt.delta), L_dv);
      const auto rhs = oracle::plus(push(v, gs), push(v, fs), -1);
      if (lhs != rhs) {
        why = "oracle identity fails in degree " + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

std::vector<Pair> homotopy_pairs() {
  std::vector<Pair> pairs;
  // Bottom and top inclusions into the cylinder.
  std::vector<std::pair<std::string, PathComplex>> bases;
  for (const char* f : {"complexes/diamond_q.json", "complexes/square_unit.json", "complexes/cycle3.json",
                        "homotopy/diamond_unit.json", "homotopy/zigzag.json"}) {
    bases.emplace_back(f, corpus::load(f).path_complex().over_ring(kQ));
  }
  oracle::Rng rng(5);
  for (int i = 0; i < 7; ++i) {
    auto data = oracle::random_complex(rng, kQ, 6, 3);
    data.weights = oracle::random_rational_weights(rng, data.vertices);
    bases.emplace_back("random complex " + std::to_string(i), PathComplex::build(data));
  }
  for (auto& [name, pc] : bases) {
    const auto inc = cylinder_inclusions(share(pc));
    pairs.push_back({"cylinder inclusions of " + name, inc.bottom, inc.top});
  }
  // Consecutive levels of G box I_2.
  for (const char* f : {"digraphs/cycle4.json", "digraphs/octahedron_half.json"}) {
    const WeightedDigraph g = corpus::load(f).digraph();
    const auto source = share(paths_functor(g, 3).over_ring(kQ));
    const auto target = share(paths_functor(box_product(g, LineDigraph{{true, true}}), 4).over_ring(kQ));
    for (std::size_t level = 0; level < 2; ++level) {
      std::map<std::string, std::string> lo, hi;
      for (const auto& v : g.labels()) {
        lo[v] = product_label(v, level);
        hi[v] = product_label(v, level + 1);
      }
      pairs.push_back({std::string("levels ") + std::to_string(level) + "," + std::to_string(level + 1) +
                           " of " + f + " box I_2",
                       PathMorphism::from_labels(source, target, lo), PathMorphism::from_labels(source, target, hi)});
    }
  }
  // Document pairs.
  auto morphism = [](const char* src, const char* tgt, const char* m) {
    return PathMorphism::from_labels(share(corpus::load(src).path_complex()), share(corpus::load(tgt).path_complex()),
                                     corpus::load(m).morphism().vertex_map);
  };
  pairs.push_back({"point into interval",
                   morphism("homotopy/point.json", "homotopy/interval.json", "homotopy/a_to_x.json"),
                   morphism("homotopy/point.json", "homotopy/interval.json", "homotopy/a_to_y.json")});
  pairs.push_back({"zigzag first step",
                   morphism("homotopy/point.json", "homotopy/zigzag.json", "homotopy/a_to_x.json"),
                   morphism("homotopy/point.json", "homotopy/zigzag.json", "homotopy/a_to_y.json")});
  pairs.push_back({"zigzag second step",
                   morphism("homotopy/point.json", "homotopy/zigzag.json", "homotopy/a_to_z.json"),
                   morphism("homotopy/point.json", "homotopy/zigzag.json", "homotopy/a_to_y.json")});
  return pairs;
}

Outcome homotopy_instances() {
  std::vector<Pair> pairs = homotopy_pairs();
  Outcome o;
  // Hypergraph homotopy pushed through the natural pipeline.
  const auto G = corpus::load("homotopy/edge_source.json").directed_hypergraph().over_ring(kQ);
  const auto H = corpus::load("homotopy/edge_target.json").directed_hypergraph().over_ring(kQ);
  const auto fd = corpus::load("homotopy/edge_f.json").morphism();
  const auto gd = corpus::load("homotopy/edge_g.json").morphism();
  const auto hf = fd.arrow_map ? HyperMorphism::from_labels(G, H, fd.vertex_map, *fd.arrow_map)
                               : HyperMorphism::infer_arrows(G, H, fd.vertex_map);
  const auto hg = gd.arrow_map ? HyperMorphism::from_labels(G, H, gd.vertex_map, *gd.arrow_map)
                               : HyperMorphism::infer_arrows(G, H, gd.vertex_map);
  const HyperCertificate hc = hyper_pipeline_certificate(hf, hg, G, H, HyperPipeline::Natural, 3);
  if (!hc.valid()) {
    o.pass = false;
    o.detail = "hypergraph edge homotopy through the natural pipeline: " + hc.to_string();
  }
  pairs.push_back({"hypergraph edge through the natural pipeline",
                   pipeline_morphism(hf, G, H, HyperPipeline::Natural, 3, 4),
                   pipeline_morphism(hg, G, H, HyperPipeline::Natural, 3, 4)});

  std::size_t passed = 0;
  for (const Pair& pair : pairs) {
    std::string why;
    try {
      const ChainHomotopyReport r = chain_homotopy_certificate(pair.f, pair.g, 3, pair.strictness);
      bool ok = r.valid() && r.degrees.size() == 4;
      for (bool eq : r.homology_maps_equal) ok = ok && eq;
      if (!ok) why = r.to_string();
      else if (!oracle_chain_homotopy(pair, 3, why)) ok = false;
      if (ok) ++passed;
    } catch (const Error& e) {
      why = e.what();
    }
    if (!why.empty() && o.pass) {
      o.pass = false;
      o.detail = pair.name + ": " + why;
    }
  }
  if (pairs.size() != 20) {
    o.pass = false;
    o.detail = "expected 20 pairs, built " + std::to_string(pairs.size());
  }
  if (o.pass) {
    o.detail = std::to_string(passed) + "/" + std::to_string(pairs.size()) +
               " pairs over Q certified in degrees 0..3, equal homology maps, oracle agrees";
  }
  return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome cylinder_equals_box() {
  Outcome o;
  const std::size_t L = 3;
  const auto digraphs = files_of_kind(io::Kind::Digraph);
  const auto hypers = files_of_kind(io::Kind::DirectedHypergraph);
  for (const auto& f : digraphs) {
    const WeightedDigraph g = corpus::load(f).digraph();
    oracle::Digraph og;
    og.vertices = g.labels();
    for (const auto& [a, b] : g.edges()) og.edges.insert({g.labels()[a], g.labels()[b]});
    const auto report = check_cylinder_equality(g, L);
    const auto box = oracle::box_unit_words(og, L + 1);
    const auto cyl = oracle::cylinder_words(og, L + 1);
    const auto library = oracle::from_library(truncate(cylinder(paths_functor(g, L + 1)), L + 1)).paths;
    if (!report.equal() || box != cyl || library != cyl) {
      o.pass = false;
      o.detail = f + ": " + (report.equal() ? "oracle path sets differ" : report.to_string());
      return o;
    }
  }
  for (const auto& f : hypers) {
    const DirectedHypergraph g = corpus::load(f).directed_hypergraph();
    const auto box = check_natural_box(g, L);
    const auto cyl = check_natural_cylinder_equality(g, L);
    if (!box.equal() || !cyl.equal()) {
      o.pass = false;
      o.detail = f + ": " + (box.equal() ? cyl.to_string() : box.to_string());
      return o;
    }
  }
  o.detail = std::to_string(digraphs.size()) + " digraphs (oracle agrees), " + std::to_string(hypers.size()) +
             " directed hypergraphs (natural box and cylinder), lengths <= " + std::to_string(L + 1);
  o.pass = digraphs.size() >= 10 && hypers.size() >= 10;
  return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome vertex_pipeline_cylinders() {
  const auto hypers = files_of_kind(io::Kind::DirectedHypergraph);
  std::size_t conn = 0, bold = 0, dens = 0;
  std::vector<std::string> conn_fail;
  for (const auto& f : hypers) {
    const DirectedHypergraph g = corpus::load(f).directed_hypergraph();
    if (check_vertex_pipeline_cylinder(g, VertexPipeline::Connective, 3).equal()) ++conn;
    else conn_fail.push_back(std::filesystem::path(f).stem().string());
    if (check_vertex_pipeline_cylinder(g, VertexPipeline::Bold, 3).first_contained()) ++bold;
    if (check_vertex_pipeline_cylinder(g, VertexPipeline::DensityTwo, 3).first_contained()) ++dens;
  }
  const std::string n = std::to_string(hypers.size());
  Outcome o;
  o.pass = conn == hypers.size() && bold == hypers.size() && dens == hypers.size();
  o.detail = "connective equality " + std::to_string(conn) + "/" + n + ", bold containment " + std::to_string(bold) +
             "/" + n + ", density-two containment " + std::to_string(dens) + "/" + n;
  if (!conn_fail.empty()) {
    std::string list;
    for (const auto& s : conn_fail) list += (list.empty() ? "" : ",") + s;
    o.detail += "; connective equality fails on " + list + " (origin or end sets with two or more vertices)";
  }
  return o;
}

// --- 8 ----------------------------------------------------------------------

// Z/p weights have no image in Q; their representatives in [0, p) are used.
PathComplex as_rational(const PathComplex& pc) {
  if (pc.ring().kind() != Ring::Kind::IntegersMod) return pc.over_ring(kQ);
  PathComplexData d = pc.to_data();
  d.ring = kQ;
  return PathComplex::build(d);
}

bool same_dimensions(const PathComplex& pc, int top, std::string& why) {
  const PathComplex q = as_rational(pc);
  const HomologyResult h = homology(q, top);
  const auto betti = oracle::betti_numbers(oracle::from_library(q), top);
  std::vector<std::size_t> ranks;
  for (const auto& g : h.groups) {
    if (!g.torsion.empty()) {
      why = "torsion over Q";
      return false;
    }
    ranks.push_back(g.free_rank);
  }
  if (ranks != betti) {
    std::ostringstream d;
    d << "ranks";
    for (auto r : ranks) d << " " << r;
    d << " vs oracle";
    for (auto r : betti) d << " " << r;
    why = d.str();
    return false;
  }
  return true;
}

Outcome rank_nullity_oracle() {
  const int top = 3;
  std::vector<std::pair<std::string, PathComplex>> instances;
  for (const auto& f : corpus::all_files()) {
    const auto doc = corpus::load(f);
    switch (doc.kind) {
      case io::Kind::PathComplex:
        instances.emplace_back(f, doc.path_complex());
        break;
      case io::Kind::Digraph:
        instances.emplace_back(f, paths_functor(doc.digraph(), 3));
        break;
      case io::Kind::DirectedHypergraph: {
        const auto& g = doc.directed_hypergraph();
        instances.emplace_back(f + " natural", paths_functor(natural_digraph(g), 3));
        instances.emplace_back(f + " connective", vertex_weighted_complex(g, VertexPipeline::Connective, 3));
        instances.emplace_back(f + " bold", vertex_weighted_complex(g, VertexPipeline::Bold, 3));
        instances.emplace_back(f + " density-two", vertex_weighted_complex(g, VertexPipeline::DensityTwo, 3));
        break;
      }
      case io::Kind::Hypergraph:
        instances.emplace_back(f + " density-two", density_two_functor(doc.hypergraph(), 3));
        break;
      default:
        break;
    }
  }
  const std::size_t fixtures = instances.size();
  oracle::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    auto data = oracle::random_complex(rng, kQ, 8, 4);
    data.weights = i % 2 ? oracle::random_rational_weights(rng, data.vertices)
                         : oracle::random_integer_weights(rng, data.vertices, -2, 2, false);
    instances.emplace_back("random complex " + std::to_string(i), PathComplex::build(data));
  }
  Outcome o;
  for (const auto& [name, pc] : instances) {
    std::string why;
    if (!same_dimensions(pc, top, why)) {
      o.pass = false;
      o.detail = name + ": " + why;
      return o;
    }
  }
  o.detail = std::to_string(fixtures) + " fixture complexes and 100 random complexes agree in degrees 0.." +
             std::to_string(top - 1);
  return o;
}

// --- 9 ----------------------------------------------------------------------

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
  bool operator==(const RunResult&) const = default;
};

RunResult run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Standard output and exit status of the installed tool.
RunResult run_process(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(WPH_TOOL);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    r.code = -1;
    return r;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> corpus_commands() {
  std::vector<std::vector<std::string>> cmds;
  for (const auto& f : corpus::all_files()) {
    const std::string p = corpus::path(f);
    const auto kind = corpus::load(f).kind;
    cmds.push_back({"validate", p});
    switch (kind) {
      case io::Kind::PathComplex:
        cmds.push_back({"homology", p});
        cmds.push_back({"homology", p, "--json", "--coeff", "q"});
        cmds.push_back({"homology", p, "--unweighted", "--max-dim", "2"});
        cmds.push_back({"functor", p, "--functor", "cylinder"});
        cmds.push_back({"prism-check", p});
        cmds.push_back({"prism-check", p, "--degree", "2", "--samples", "5", "--seed", "11"});
        break;
      case io::Kind::Digraph:
        cmds.push_back({"homology", p, "--pipeline", "direct", "--maxlen", "3"});
        cmds.push_back({"homology", p, "--pipeline", "direct", "--json"});
        for (const char* fn : {"paths", "box:I1f", "box:I1b"}) cmds.push_back({"functor", p, "--functor", fn});
        break;
      case io::Kind::DirectedHypergraph:
        for (const char* pl : {"natural", "connective", "bold", "density2"}) {
          cmds.push_back({"homology", p, "--pipeline", pl, "--maxlen", "3"});
          cmds.push_back({"homology", p, "--pipeline", pl, "--json", "--coeff", "q"});
        }
        for (const char* fn : {"natural", "connective", "bold", "underlying", "density2", "box:I1f", "box:I1b"})
          cmds.push_back({"functor", p, "--functor", fn, "--maxlen", "3"});
        break;
      case io::Kind::Hypergraph:
        cmds.push_back({"functor", p, "--functor", "density2", "--maxlen", "3"});
        break;
      default:
        break;
    }
  }
  auto h = [](const char* f) { return corpus::path(std::string("homotopy/") + f); };
  cmds.push_back({"homotopy-check", h("point.json"), h("interval.json"), "--f", h("a_to_x.json"), "--g",
                  h("a_to_y.json"), "--certify-chain-homotopy"});
  cmds.push_back({"homotopy-check", h("point.json"), h("zigzag.json"), "--mode", "chain", "--chain",
                  h("zigzag_chain.json"), "--certify-chain-homotopy"});
  cmds.push_back({"homotopy-check", h("interval.json"), h("interval.json"), "--f", h("interval_identity.json"),
                  "--g", h("interval_identity.json")});
  cmds.push_back({"homotopy-check", h("interval.json"), h("interval.json"), "--f", h("interval_identity.json"),
                  "--g", h("interval_identity.json"), "--allow-degenerate", "--certify-chain-homotopy"});
  cmds.push_back({"homotopy-check", h("edge_source.json"), h("edge_target.json"), "--f", h("edge_f.json"), "--g",
                  h("edge_g.json"), "--certify-chain-homotopy"});
  cmds.push_back({"homotopy-check", h("edge_weighted_source.json"), h("edge_weighted_target.json"), "--f",
                  h("edge_f.json"), "--g", h("edge_g.json"), "--certify-chain-homotopy"});
  return cmds;
}

Outcome determinism() {
  const auto cmds = corpus_commands();
  Outcome o;
  for (const auto& args : cmds) {
    const RunResult first = run_in_process(args);
    bool same = run_in_process(args) == first && run_in_process(args) == first;
    const RunResult proc = run_process(args);
    same = same && run_process(args) == proc && proc.code == first.code && proc.out == first.out;
    if (!same) {
      std::string line;
      for (const auto& a : args) line += (line.empty() ? "" : " ") + std::filesystem::path(a).filename().string();
      o.pass = false;
      o.detail = "output differs between runs of: " + line;
      return o;
    }
  }
  o.detail = std::to_string(cmds.size()) + " commands, 3 in-process and 2 separate-process runs each, byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"diamond homology with zero middle weights", diamond_with_zero_middle},
      {"edge homology with invariant factor 2", edge_with_torsion},
      {"boundary squares vanish on random integer complexes", boundary_squares_vanish},
      {"prism identity on random rational complexes", prism_identity_suite},
      {"chain homotopies from one-step homotopies", homotopy_instances},
      {"cylinder of functor equals functor of box product", cylinder_equals_box},
      {"vertex pipeline cylinders", vertex_pipeline_cylinders},
      {"rank-nullity oracle agrees over Q", rank_nullity_oracle},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " of 9 criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
