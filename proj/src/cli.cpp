#include "wph/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <regex>

#include <CLI11.hpp>

#include "wph/error.hpp"
#include "wph/homotopy.hpp"
#include "wph/io.hpp"

namespace wph::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

class Diagnostics {
 public:
  explicit Diagnostics(std::ostream& err) : err_(err) {
    const char* env = std::getenv("WPH_COLOR");
    const bool never = env && std::string(env) == "never";
    color_ = !never && &err == &std::cerr && isatty(fileno(stderr));
  }
  void warn(const std::string& msg) const { err_ << paint("warning:", "33") << " " << msg << "\n"; }
  void error(const std::string& msg) const { err_ << paint("error:", "31") << " " << msg << "\n"; }

 private:
  std::string paint(const std::string& s, const char* code) const {
    return color_ ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
  std::ostream& err_;
  bool color_ = false;
};

std::string base_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Ring parse_coeff(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "z") return Ring::integers();
  if (s == "q") return Ring::rationals();
  static const std::regex mod("mod:([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, mod)) return Ring::integers_mod(mpz_class(m[1].str()));
  throw UsageError("--coeff must be z, q or mod:p (got \"" + s + "\")");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_indented(std::ostream& out, const std::string& prefix, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    out << (first ? prefix : "  ") << line << "\n";
    first = false;
  }
}

// --- homology ----------------------------------------------------------------

struct HomologyOptions {
  std::string file;
  std::string coeff;
  int max_dim = 3;
  std::string pipeline = "direct";
  bool unweighted = false;
  int maxlen = 4;
  bool json = false;
};

int cmd_homology(const HomologyOptions& o, std::ostream& out, const Diagnostics& diag) {
  const io::Document doc = io::read_file(o.file);
  const Ring ring = o.coeff.empty() ? *doc.ring : parse_coeff(o.coeff);
  const auto len = static_cast<std::size_t>(o.maxlen);
  bool truncated = true;
  PathComplex pc;
  switch (doc.kind) {
    case io::Kind::PathComplex:
      if (o.pipeline != "direct") throw UsageError("pipeline " + o.pipeline + " needs a directed_hypergraph input");
      pc = doc.path_complex();
      truncated = false;
      break;
    case io::Kind::Digraph:
      if (o.pipeline != "direct") throw UsageError("pipeline " + o.pipeline + " needs a directed_hypergraph input");
      pc = paths_functor(doc.digraph(), len);
      break;
    case io::Kind::DirectedHypergraph: {
      const auto& g = doc.directed_hypergraph();
      if (o.pipeline == "natural") pc = paths_functor(natural_digraph(g), len);
      else if (o.pipeline == "connective") pc = vertex_weighted_complex(g, VertexPipeline::Connective, len);
      else if (o.pipeline == "bold") pc = vertex_weighted_complex(g, VertexPipeline::Bold, len);
      else if (o.pipeline == "density2") pc = vertex_weighted_complex(g, VertexPipeline::DensityTwo, len);
      else throw UsageError("a directed_hypergraph needs --pipeline natural, connective, bold or density2");
      break;
    }
    default:
      throw UsageError("homology needs a path_complex, digraph or directed_hypergraph, not " + io::kind_name(doc.kind));
  }
  pc = pc.over_ring(ring);
  if (o.unweighted) pc = pc.with_weights(std::nullopt);
  if (truncated && o.max_dim > o.maxlen) {
    diag.warn("max-dim " + std::to_string(o.max_dim) + " exceeds maxlen " + std::to_string(o.maxlen) +
              "; degrees >= " + std::to_string(o.maxlen) + " see the length truncation");
  }
  const HomologyResult result = homology(pc, o.max_dim);
  if (o.json) {
    out << io::emit_homology(result);
    return kOk;
  }
  out << "# homology of " << base_name(o.file) << " (" << io::kind_name(doc.kind) << ")\n";
  out << "# coeff: " << ring.name() << ", max-dim: " << o.max_dim << ", pipeline: " << o.pipeline
      << ", maxlen: " << o.maxlen << ", weights: " << (o.unweighted ? "unit (--unweighted)" : "as given") << "\n";
  for (std::size_t n = 0; n < result.groups.size(); ++n) {
    out << "H_" << n << " " << result.groups[n].to_string() << "\n";
  }
  return kOk;
}

// --- functor -----------------------------------------------------------------

struct FunctorOptions {
  std::string file;
  std::string functor;
  int maxlen = 4;
  std::string output;
};

int cmd_functor(const FunctorOptions& o, std::ostream& out, const Diagnostics& diag) {
  const io::Document doc = io::read_file(o.file);
  const auto len = static_cast<std::size_t>(o.maxlen);
  const std::string note = o.functor + " of " + base_name(o.file);
  const std::string with_len = note + ", maxlen " + std::to_string(o.maxlen);
  auto wrong = [&]() {
    return UsageError("functor " + o.functor + " does not apply to a " + io::kind_name(doc.kind));
  };
  std::string text;
  const std::string& f = o.functor;
  switch (doc.kind) {
    case io::Kind::PathComplex:
      if (f != "cylinder") throw wrong();
      text = io::emit(cylinder(doc.path_complex()), note);
      break;
    case io::Kind::Digraph:
      if (f == "paths") text = io::emit(paths_functor(doc.digraph(), len), with_len);
      else if (f == "box:I1f") text = io::emit(box_product(doc.digraph(), LineDigraph::unit_forward()), note);
      else if (f == "box:I1b") text = io::emit(box_product(doc.digraph(), LineDigraph::unit_backward()), note);
      else throw wrong();
      break;
    case io::Kind::DirectedHypergraph: {
      const auto& g = doc.directed_hypergraph();
      if (f == "natural") {
        text = io::emit(natural_digraph(g), note);
      } else if (f == "connective") {
        text = io::emit(connective_functor(g, len), with_len);
      } else if (f == "bold") {
        text = io::emit(bold_functor(g, len), with_len);
      } else if (f == "underlying") {
        auto u = underlying_hypergraph(g);
        if (u.merged_arrows) {
          diag.warn(std::to_string(u.merged_arrows) + " arrow(s) share their vertex union with an earlier arrow");
        }
        text = io::emit(u.hypergraph, note);
      } else if (f == "density2") {
        text = io::emit(density_two_functor(underlying_hypergraph(g).hypergraph, len), with_len);
      } else if (f == "box:I1f") {
        text = io::emit(hyper_box_product(g, LineDigraph::unit_forward()), note);
      } else if (f == "box:I1b") {
        text = io::emit(hyper_box_product(g, LineDigraph::unit_backward()), note);
      } else {
        throw wrong();
      }
      break;
    }
    case io::Kind::Hypergraph:
      if (f != "density2") throw wrong();
      text = io::emit(density_two_functor(doc.hypergraph(), len), with_len);
      break;
    default:
      throw wrong();
  }
  if (o.output.empty()) out << text;
  else io::write_file(o.output, text);
  return kOk;
}

// --- homotopy-check ----------------------------------------------------------

struct HomotopyOptions {
  std::string source;
  std::string target;
  std::string f;
  std::string g;
  std::string chain;
  std::string mode = "one-step";
  std::string category;
  std::string strictness = "strict";
  bool certify = false;
  std::string pipeline = "natural";
  int max_dim = 3;
};

struct MorphismList {
  std::vector<io::MorphismDoc> docs;
  std::vector<std::string> names;
  std::vector<bool> forward;
};

MorphismList morphism_list(const HomotopyOptions& o) {
  MorphismList m;
  if (o.mode == "one-step") {
    if (o.f.empty() || o.g.empty()) throw UsageError("one-step mode needs --f and --g");
    if (!o.chain.empty()) throw UsageError("--chain belongs to --mode chain");
    m.docs = {io::read_file(o.f).morphism(), io::read_file(o.g).morphism()};
    m.names = {"f", "g"};
    m.forward = {true};
  } else {
    if (o.chain.empty()) throw UsageError("chain mode needs --chain");
    if (!o.f.empty() || !o.g.empty()) throw UsageError("--f and --g belong to --mode one-step");
    const auto chain = io::read_file(o.chain).homotopy_chain();
    m.docs = chain.morphisms;
    m.forward = chain.forward;
    for (std::size_t i = 0; i < m.docs.size(); ++i) m.names.push_back("f_" + std::to_string(i));
  }
  return m;
}

std::string step_name(const MorphismList& m, std::size_t i) {
  return m.names[i] + (m.forward[i] ? " -> " : " <- ") + m.names[i + 1];
}

int homotopy_pathcx(const HomotopyOptions& o, const io::Document& s, const io::Document& t, std::ostream& out) {
  auto src = std::make_shared<const PathComplex>(s.path_complex());
  auto tgt = std::make_shared<const PathComplex>(t.path_complex());
  if (!(src->ring() == tgt->ring())) throw InvariantError("source and target are over different rings");
  const Strictness strictness = o.strictness == "strict" ? Strictness::Strict : Strictness::AllowDegenerate;
  const MorphismList list = morphism_list(o);
  bool ok = true;
  std::vector<PathMorphism> ms;
  for (std::size_t i = 0; i < list.docs.size(); ++i) {
    ms.push_back(PathMorphism::from_labels(src, tgt, list.docs[i].vertex_map));
    const auto r = verify_path_morphism(ms.back(), strictness);
    ok = ok && r.valid;
    print_indented(out, list.names[i] + ": ", r.to_string());
  }
  const auto chain = verify_homotopy_chain(ms, list.forward, strictness);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) print_indented(out, step_name(list, i) + ": ", chain.steps[i].to_string());
  ok = ok && chain.valid();
  if (o.certify) {
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
      const auto& a = list.forward[i] ? ms[i] : ms[i + 1];
      const auto& b = list.forward[i] ? ms[i + 1] : ms[i];
      const auto cert = chain_homotopy_certificate(a, b, o.max_dim, strictness);
      ok = ok && cert.valid();
      print_indented(out, "certificate " + step_name(list, i) + ": ", cert.to_string());
    }
  }
  out << "homotopy-check: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerificationFailed;
}

HyperPipeline hyper_pipeline(const std::string& s) {
  if (s == "natural") return HyperPipeline::Natural;
  if (s == "connective") return HyperPipeline::Connective;
  if (s == "bold") return HyperPipeline::Bold;
  if (s == "density2") return HyperPipeline::DensityTwo;
  throw UsageError("--pipeline must be natural, connective, bold or density2 for dhyper certificates");
}

int homotopy_dhyper(const HomotopyOptions& o, const io::Document& s, const io::Document& t, std::ostream& out) {
  const auto& G = s.directed_hypergraph();
  const auto& H = t.directed_hypergraph();
  if (!(G.ring() == H.ring())) throw InvariantError("source and target are over different rings");
  const HyperHomotopyMode mode = o.strictness == "strict" ? HyperHomotopyMode::Strict : HyperHomotopyMode::Reflexive;
  const HyperPipeline pipeline = hyper_pipeline(o.pipeline);
  const MorphismList list = morphism_list(o);
  bool ok = true;
  std::vector<HyperMorphism> ms;
  for (std::size_t i = 0; i < list.docs.size(); ++i) {
    const auto& doc = list.docs[i];
    ms.push_back(doc.arrow_map ? HyperMorphism::from_labels(G, H, doc.vertex_map, *doc.arrow_map)
                                : HyperMorphism::infer_arrows(G, H, doc.vertex_map));
    if (auto why = morphism_violation(ms.back(), G, H)) {
      ok = false;
      out << list.names[i] << ": morphism: INVALID\n  " << *why << "\n";
    } else {
      const auto c = classify_morphism(ms.back(), G, H);
      out << list.names[i] << ": morphism: valid, vertex-weighted: " << yes_no(c.vertex_weighted)
          << ", edge-weighted: " << yes_no(c.edge_weighted) << ", strong: " << yes_no(c.strong_weighted) << "\n";
    }
  }
  const auto chain = verify_hyper_homotopy_chain(ms, list.forward, G, H, mode);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) print_indented(out, step_name(list, i) + ": ", chain.steps[i].to_string());
  ok = ok && chain.valid();
  if (o.certify) {
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
      const auto& a = list.forward[i] ? ms[i] : ms[i + 1];
      const auto& b = list.forward[i] ? ms[i + 1] : ms[i];
      const auto cert = hyper_pipeline_certificate(a, b, G, H, pipeline, o.max_dim, mode);
      ok = ok && cert.valid();
      print_indented(out, "certificate " + step_name(list, i) + " (" + o.pipeline + "): ", cert.to_string());
    }
  }
  out << "homotopy-check: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_homotopy(const HomotopyOptions& o, std::ostream& out) {
  const io::Document s = io::read_file(o.source);
  const io::Document t = io::read_file(o.target);
  std::string category = o.category;
  if (category.empty()) category = s.kind == io::Kind::DirectedHypergraph ? "dhyper" : "pathcx";
  out << "# homotopy-check " << base_name(o.source) << " -> " << base_name(o.target) << "\n";
  out << "# category: " << category << ", mode: " << o.mode << ", strictness: " << o.strictness
      << ", certify: " << yes_no(o.certify);
  if (o.certify) out << ", max-dim: " << o.max_dim << (category == "dhyper" ? ", pipeline: " + o.pipeline : "");
  out << "\n";
  return category == "dhyper" ? homotopy_dhyper(o, s, t, out) : homotopy_pathcx(o, s, t, out);
}

// --- prism-check -------------------------------------------------------------

struct PrismOptions {
  std::string file;
  int degree = 1;
  int samples = 20;
  std::uint64_t seed = 0;
};

int cmd_prism(const PrismOptions& o, std::ostream& out) {
  const io::Document doc = io::read_file(o.file);
  const PathComplex& pc = doc.path_complex();
  const PrismOperator tau(pc);
  std::vector<Path> paths = regular_paths(pc, o.degree);
  const std::size_t total = paths.size();
  const auto k = std::min(total, static_cast<std::size_t>(o.samples));
  if (k < total) {
    // Partial Fisher-Yates driven directly by the engine so the sample does
    // not depend on the standard library's distribution implementations.
    std::mt19937_64 rng(o.seed);
    std::vector<std::size_t> idx(total);
    for (std::size_t i = 0; i < total; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng() % (total - i)]);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<Path> chosen;
    for (auto i : idx) chosen.push_back(paths[i]);
    paths = std::move(chosen);
  }
  out << "# prism-check " << base_name(o.file) << ", degree: " << o.degree << ", samples: " << o.samples
      << ", seed: " << o.seed << ", ring: " << pc.ring().name() << "\n";
  out << "# checking " << paths.size() << " of " << total << " regular " << o.degree << "-paths\n";
  std::size_t passed = 0;
  for (const auto& p : paths) {
    const auto r = tau.verify_identity(basis_chain(p));
    out << pc.format(p) << " " << (r.holds ? "PASS" : "FAIL");
    if (!r.holds) out << " difference: " << format_chain(tau.cylinder(), r.difference);
    out << "\n";
    passed += r.holds;
  }
  const bool ok = passed == paths.size();
  out << "prism identity: " << (ok ? "PASS" : "FAIL") << " (" << passed << "/" << paths.size() << ")\n";
  return ok ? kOk : kVerificationFailed;
}

// --- validate ----------------------------------------------------------------

int cmd_validate(const std::string& file, std::ostream& out) {
  const io::Document doc = io::read_file(file);
  out << base_name(file) << ": valid " << io::kind_name(doc.kind);
  if (doc.ring) out << " over " << doc.ring->name();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PathComplex>) {
          out << ", " << x.vertex_count() << " vertices, " << x.path_count() << " paths, max length "
              << x.max_length() << (x.is_weighted() ? ", weighted" : ", unweighted");
        } else if constexpr (std::is_same_v<T, WeightedDigraph>) {
          out << ", " << x.vertex_count() << " vertices, " << x.edges().size() << " edges"
              << (x.weights() ? ", weighted" : ", unweighted");
        } else if constexpr (std::is_same_v<T, DirectedHypergraph>) {
          out << ", " << x.vertex_count() << " vertices, " << x.arrows().size() << " arrows"
              << (x.weights() ? ", weighted" : ", unweighted");
        } else if constexpr (std::is_same_v<T, Hypergraph>) {
          out << ", " << x.vertex_count() << " vertices, " << x.edges().size() << " edges"
              << (x.weights() ? ", weighted" : ", unweighted");
        } else if constexpr (std::is_same_v<T, io::MorphismDoc>) {
          out << ", " << x.vertex_map.size() << " vertex images"
              << (x.arrow_map ? ", " + std::to_string(x.arrow_map->size()) + " arrow images" : "");
        } else {
          out << ", " << x.morphisms.size() << " morphisms";
        }
      },
      doc.object);
  out << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Diagnostics diag(err);
  CLI::App app{"Exact weighted path homology of path complexes, digraphs and directed hypergraphs.", "wph"};
  app.require_subcommand(1, 1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Parse a document and check every invariant");
  validate->add_option("file", validate_file, "Document")->required();

  HomologyOptions ho;
  auto* hom = app.add_subcommand("homology", "Weighted path homology table");
  hom->add_option("file", ho.file, "path_complex, digraph or directed_hypergraph document")->required();
  hom->add_option("--coeff", ho.coeff, "z, q or mod:p (default: the document's ring)");
  hom->add_option("--max-dim", ho.max_dim, "Build allowed chains to this degree; report degrees below it")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  hom->add_option("--pipeline", ho.pipeline, "direct, natural, connective, bold or density2")
      ->capture_default_str()
      ->check(CLI::IsMember({"direct", "natural", "connective", "bold", "density2"}));
  hom->add_flag("--unweighted", ho.unweighted, "Use unit weights on the final path complex");
  hom->add_option("--maxlen", ho.maxlen, "Path length bound for functor pipelines")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  hom->add_flag("--json", ho.json, "Emit the result as JSON");

  FunctorOptions fo;
  auto* fun = app.add_subcommand("functor", "Apply a functor and write the resulting document");
  fun->add_option("file", fo.file, "Input document")->required();
  fun->add_option("--functor", fo.functor, "natural, connective, bold, underlying, density2, cylinder, box:I1f, box:I1b, paths")
      ->required()
      ->check(CLI::IsMember(
          {"natural", "connective", "bold", "underlying", "density2", "cylinder", "box:I1f", "box:I1b", "paths"}));
  fun->add_option("--maxlen", fo.maxlen, "Path length bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  fun->add_option("-o,--output", fo.output, "Output file (default: standard output)");

  HomotopyOptions mo;
  auto* hc = app.add_subcommand("homotopy-check", "Verify one-step homotopies or chains of them");
  hc->add_option("source", mo.source, "Source document")->required();
  hc->add_option("target", mo.target, "Target document")->required();
  hc->add_option("--f", mo.f, "Morphism document for f");
  hc->add_option("--g", mo.g, "Morphism document for g");
  hc->add_option("--chain", mo.chain, "homotopy_chain document (chain mode)");
  hc->add_option("--mode", mo.mode, "one-step or chain")->capture_default_str()->check(CLI::IsMember({"one-step", "chain"}));
  hc->add_option("--category", mo.category, "pathcx or dhyper (default: from the source kind)")
      ->check(CLI::IsMember({"pathcx", "dhyper"}));
  hc->add_option("--strictness", mo.strictness, "strict, reflexive or allow-degenerate")
      ->capture_default_str()
      ->check(CLI::IsMember({"strict", "reflexive", "allow-degenerate"}));
  hc->add_flag("--allow-degenerate", [&](std::int64_t) { mo.strictness = "allow-degenerate"; },
               "Same as --strictness allow-degenerate");
  hc->add_flag("--certify-chain-homotopy", mo.certify, "Also build and check the chain homotopy");
  hc->add_option("--pipeline", mo.pipeline, "Pipeline for dhyper certificates")
      ->capture_default_str()
      ->check(CLI::IsMember({"natural", "connective", "bold", "density2"}));
  hc->add_option("--max-dim", mo.max_dim, "Top degree of the certificate")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  PrismOptions po;
  auto* pr = app.add_subcommand("prism-check", "Check the prism identity on sampled regular paths");
  pr->add_option("file", po.file, "path_complex document")->required();
  pr->add_option("--degree", po.degree, "Path length")->capture_default_str()->check(CLI::NonNegativeNumber);
  pr->add_option("--samples", po.samples, "Number of sampled paths")->capture_default_str()->check(CLI::NonNegativeNumber);
  pr->add_option("--seed", po.seed, "Sampling seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*validate) return cmd_validate(validate_file, out);
    if (*hom) return cmd_homology(ho, out, diag);
    if (*fun) return cmd_functor(fo, out, diag);
    if (*hc) return cmd_homotopy(mo, out);
    if (*pr) return cmd_prism(po, out);
  } catch (const IoError& e) {
    diag.error(e.what());
    return kIoError;
  } catch (const UnsupportedRing& e) {
    diag.error(e.what());
    return kUnsupported;
  } catch (const NonInvertibleWeight& e) {
    diag.error(e.what());
    return kUnsupported;
  } catch (const NotAMorphism& e) {
    diag.error(std::string("not a morphism: ") + e.what());
    return kVerificationFailed;
  } catch (const HomotopyIdentityFailed& e) {
    diag.error(e.what());
    return kVerificationFailed;
  } catch (const SyntaxError& e) {
    diag.error(std::string("syntax: ") + e.what());
    return kInvalidInput;
  } catch (const Error& e) {
    diag.error(e.what());
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace wph::cli
