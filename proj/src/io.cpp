#include "wph/io.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wph/error.hpp"

namespace wph::io {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1";

const std::map<std::string, Kind>& kinds() {
  static const std::map<std::string, Kind> table = {
      {"path_complex", Kind::PathComplex}, {"digraph", Kind::Digraph},
      {"directed_hypergraph", Kind::DirectedHypergraph}, {"hypergraph", Kind::Hypergraph},
      {"morphism", Kind::Morphism}, {"homotopy_chain", Kind::HomotopyChain}};
  return table;
}

std::string type_name(const json& j) { return j.type_name(); }

void check_fields(const json& obj, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object, found " + type_name(obj));
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!obj.contains(k)) throw SchemaError(where + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, v] : obj.items()) {
    if (!known.count(k)) throw SchemaError(where + ": unknown field \"" + k + "\"");
  }
}

const json& array_at(const json& obj, const char* key, const std::string& where) {
  const json& a = obj.at(key);
  if (!a.is_array()) throw SchemaError(where + "." + key + ": expected an array, found " + type_name(a));
  return a;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string, found " + type_name(j));
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& a, const std::string& where) {
  if (!a.is_array()) throw SchemaError(where + ": expected an array of strings, found " + type_name(a));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_of(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

mpz_class integer_of(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, re)) return mpz_class(s);
  }
  throw SchemaError(where + ": expected an integer");
}

Scalar scalar_of(const json& j, const Ring& ring, const std::string& where) {
  Scalar q;
  if (j.is_number_integer() || j.is_number_unsigned()) {
    q = Scalar(integer_of(j, where));
  } else if (j.is_string()) {
    static const std::regex re("-?[0-9]+(/[0-9]+)?");
    const auto s = j.get<std::string>();
    if (!std::regex_match(s, re)) throw SchemaError(where + ": \"" + s + "\" is not an integer or p/q rational");
    if (ring.kind() != Ring::Kind::Rationals && s.find('/') != std::string::npos) {
      throw SchemaError(where + ": weights over " + ring.name() + " are integers");
    }
    q.get_num() = mpz_class(s.substr(0, s.find('/')));
    q.get_den() = s.find('/') == std::string::npos ? mpz_class(1) : mpz_class(s.substr(s.find('/') + 1));
    if (q.get_den() == 0) throw SchemaError(where + ": zero denominator");
    q.canonicalize();
  } else {
    throw SchemaError(where + ": expected an integer or a \"p/q\" string, found " + type_name(j));
  }
  try {
    return ring.from_rational(q);
  } catch (const InvariantError& e) {
    throw InvariantError(where + ": " + e.what());
  }
}

std::optional<WeightMap> weights_of(const json& body, const Ring& ring, const std::string& where) {
  if (!body.contains("weights")) return std::nullopt;
  const json& w = body.at("weights");
  if (!w.is_object()) throw SchemaError(where + ".weights: expected an object, found " + type_name(w));
  WeightMap out;
  for (const auto& [k, v] : w.items()) out.emplace(k, scalar_of(v, ring, where + ".weights." + k));
  return out;
}

Ring ring_of(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    throw SchemaError("ring: unknown ring \"" + s + "\" (expected \"Z\", \"Q\" or {\"Zmod\": m})");
  }
  check_fields(j, "ring", {"Zmod"});
  return Ring::integers_mod(integer_of(j.at("Zmod"), "ring.Zmod"));
}

// Integers that fit in 64 bits are JSON numbers, larger ones strings.
ordered integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

ordered scalar_json(const Scalar& x, const Ring& ring) {
  if (ring.kind() == Ring::Kind::Rationals) return x.get_str();
  return integer_json(x.get_num());
}

ordered ring_json(const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::Integers:
      return "Z";
    case Ring::Kind::Rationals:
      return "Q";
    case Ring::Kind::IntegersMod: {
      ordered o = ordered::object();
      o["Zmod"] = integer_json(ring.modulus());
      return o;
    }
  }
  return "Z";
}

ordered weights_json(const std::vector<std::string>& labels, const std::vector<Scalar>& w, const Ring& ring) {
  ordered o = ordered::object();
  for (std::size_t i = 0; i < labels.size(); ++i) o[labels[i]] = scalar_json(w[i], ring);
  return o;
}

ordered labels_json(const std::vector<std::string>& labels) {
  ordered a = ordered::array();
  for (const auto& l : labels) a.push_back(l);
  return a;
}

std::string dump(const ordered& o) { return o.dump(2) + "\n"; }

ordered envelope(Kind kind, const std::optional<Ring>& ring, const std::string& description, ordered body) {
  ordered o = ordered::object();
  o["format_version"] = kVersion;
  o["kind"] = kind_name(kind);
  if (ring) o["ring"] = ring_json(*ring);
  if (!description.empty()) o["description"] = description;
  o["body"] = std::move(body);
  return o;
}

// --- bodies ----------------------------------------------------------------

PathComplex path_complex_of(const json& body, const Ring& ring) {
  check_fields(body, "body", {"vertices", "paths"}, {"weights"});
  PathComplexData d;
  d.ring = ring;
  d.vertices = strings_of(body.at("vertices"), "body.vertices");
  const json& paths = array_at(body, "paths", "body");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    d.paths.push_back(strings_of(paths[i], "body.paths[" + std::to_string(i) + "]"));
  }
  d.weights = weights_of(body, ring, "body");
  return PathComplex::build(d);
}

ordered path_complex_body(const PathComplex& pc) {
  ordered body = ordered::object();
  body["vertices"] = labels_json(pc.labels());
  ordered paths = ordered::array();
  for (const auto& p : pc.all_paths()) paths.push_back(labels_json(pc.label_path(p)));
  body["paths"] = std::move(paths);
  if (pc.weights()) body["weights"] = weights_json(pc.labels(), *pc.weights(), pc.ring());
  return body;
}

WeightedDigraph digraph_of(const json& body, const Ring& ring) {
  check_fields(body, "body", {"vertices", "edges"}, {"weights"});
  WeightedDigraphData d;
  d.ring = ring;
  d.vertices = strings_of(body.at("vertices"), "body.vertices");
  const json& edges = array_at(body, "edges", "body");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "body.edges[" + std::to_string(i) + "]";
    auto e = strings_of(edges[i], where);
    if (e.size() != 2) throw SchemaError(where + ": an edge is a pair [from, to]");
    d.edges.emplace_back(e[0], e[1]);
  }
  d.weights = weights_of(body, ring, "body");
  return WeightedDigraph::build(d);
}

ordered digraph_body(const WeightedDigraph& g) {
  ordered body = ordered::object();
  body["vertices"] = labels_json(g.labels());
  ordered edges = ordered::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(labels_json({g.labels()[a], g.labels()[b]}));
  body["edges"] = std::move(edges);
  if (g.weights()) body["weights"] = weights_json(g.labels(), *g.weights(), g.ring());
  return body;
}

DirectedHypergraph dhyper_of(const json& body, const Ring& ring) {
  check_fields(body, "body", {"vertices", "arrows"}, {"weights"});
  DirectedHypergraphData d;
  d.ring = ring;
  d.vertices = strings_of(body.at("vertices"), "body.vertices");
  const json& arrows = array_at(body, "arrows", "body");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string where = "body.arrows[" + std::to_string(i) + "]";
    check_fields(arrows[i], where, {"origin", "end"});
    d.arrows.push_back({strings_of(arrows[i].at("origin"), where + ".origin"),
                        strings_of(arrows[i].at("end"), where + ".end")});
  }
  d.weights = weights_of(body, ring, "body");
  return DirectedHypergraph::build(d);
}

ordered dhyper_body(const DirectedHypergraph& g) {
  ordered body = ordered::object();
  body["vertices"] = labels_json(g.labels());
  ordered arrows = ordered::array();
  for (const auto& a : g.arrows()) {
    ordered o = ordered::object();
    o["origin"] = labels_json(g.set_labels(a.origin));
    o["end"] = labels_json(g.set_labels(a.end));
    arrows.push_back(std::move(o));
  }
  body["arrows"] = std::move(arrows);
  if (g.weights()) body["weights"] = weights_json(g.labels(), *g.weights(), g.ring());
  return body;
}

Hypergraph hypergraph_of(const json& body, const Ring& ring) {
  check_fields(body, "body", {"vertices", "edges"}, {"weights"});
  HypergraphData d;
  d.ring = ring;
  d.vertices = strings_of(body.at("vertices"), "body.vertices");
  const json& edges = array_at(body, "edges", "body");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    d.edges.push_back(strings_of(edges[i], "body.edges[" + std::to_string(i) + "]"));
  }
  d.weights = weights_of(body, ring, "body");
  return Hypergraph::build(d);
}

ordered hypergraph_body(const Hypergraph& h) {
  ordered body = ordered::object();
  body["vertices"] = labels_json(h.labels());
  ordered edges = ordered::array();
  for (const auto& e : h.edges()) {
    std::vector<std::string> le;
    for (auto v : e) le.push_back(h.labels()[v]);
    edges.push_back(labels_json(le));
  }
  body["edges"] = std::move(edges);
  if (h.weights()) body["weights"] = weights_json(h.labels(), *h.weights(), h.ring());
  return body;
}

MorphismDoc morphism_of(const json& body, const std::string& where) {
  check_fields(body, where, {"vertex_map"}, {"arrow_map"});
  MorphismDoc m;
  const json& vm = body.at("vertex_map");
  if (!vm.is_object()) throw SchemaError(where + ".vertex_map: expected an object, found " + type_name(vm));
  for (const auto& [k, v] : vm.items()) m.vertex_map.emplace(k, string_of(v, where + ".vertex_map." + k));
  if (body.contains("arrow_map")) {
    const json& am = array_at(body, "arrow_map", where);
    std::vector<std::size_t> arrows;
    for (std::size_t i = 0; i < am.size(); ++i) {
      if (!am[i].is_number_unsigned()) {
        throw SchemaError(where + ".arrow_map[" + std::to_string(i) + "]: expected a non-negative integer");
      }
      arrows.push_back(am[i].get<std::size_t>());
    }
    m.arrow_map = std::move(arrows);
  }
  return m;
}

ordered morphism_body(const MorphismDoc& m) {
  ordered body = ordered::object();
  ordered vm = ordered::object();
  for (const auto& [k, v] : m.vertex_map) vm[k] = v;
  body["vertex_map"] = std::move(vm);
  if (m.arrow_map) {
    ordered am = ordered::array();
    for (auto i : *m.arrow_map) am.push_back(i);
    body["arrow_map"] = std::move(am);
  }
  return body;
}

HomotopyChainDoc homotopy_chain_of(const json& body) {
  check_fields(body, "body", {"morphisms", "directions"});
  HomotopyChainDoc h;
  const json& ms = array_at(body, "morphisms", "body");
  for (std::size_t i = 0; i < ms.size(); ++i) h.morphisms.push_back(morphism_of(ms[i], "body.morphisms[" + std::to_string(i) + "]"));
  const auto dirs = strings_of(body.at("directions"), "body.directions");
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] != "forward" && dirs[i] != "backward") {
      throw SchemaError("body.directions[" + std::to_string(i) + "]: expected \"forward\" or \"backward\"");
    }
    h.forward.push_back(dirs[i] == "forward");
  }
  if (h.morphisms.size() < 2) throw InvariantError("a homotopy chain needs at least two morphisms");
  if (h.forward.size() + 1 != h.morphisms.size()) {
    throw InvariantError("a homotopy chain of " + std::to_string(h.morphisms.size()) + " morphisms needs " +
                         std::to_string(h.morphisms.size() - 1) + " directions");
  }
  return h;
}

ordered homotopy_chain_body(const HomotopyChainDoc& h) {
  ordered body = ordered::object();
  ordered ms = ordered::array();
  for (const auto& m : h.morphisms) ms.push_back(morphism_body(m));
  body["morphisms"] = std::move(ms);
  ordered dirs = ordered::array();
  for (bool f : h.forward) dirs.push_back(f ? "forward" : "backward");
  body["directions"] = std::move(dirs);
  return body;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <typename T>
const T& typed(const Document& d, const char* wanted) {
  if (auto p = std::get_if<T>(&d.object)) return *p;
  throw SchemaError(std::string("expected a ") + wanted + " document, found " + kind_name(d.kind));
}

}  // namespace

std::string kind_name(Kind kind) {
  for (const auto& [name, k] : kinds())
    if (k == kind) return name;
  return "unknown";
}

const PathComplex& Document::path_complex() const { return typed<PathComplex>(*this, "path_complex"); }
const WeightedDigraph& Document::digraph() const { return typed<WeightedDigraph>(*this, "digraph"); }
const DirectedHypergraph& Document::directed_hypergraph() const {
  return typed<DirectedHypergraph>(*this, "directed_hypergraph");
}
const Hypergraph& Document::hypergraph() const { return typed<Hypergraph>(*this, "hypergraph"); }
const MorphismDoc& Document::morphism() const { return typed<MorphismDoc>(*this, "morphism"); }
const HomotopyChainDoc& Document::homotopy_chain() const { return typed<HomotopyChainDoc>(*this, "homotopy_chain"); }

Document parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw SyntaxError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line,
                      column);
  }
  check_fields(root, "document", {"format_version", "kind", "body"}, {"ring", "description"});
  const json& version = root.at("format_version");
  if (!version.is_string() || version.get<std::string>() != kVersion) {
    throw SchemaError("unsupported format_version " + version.dump() + " (this build reads \"" + kVersion + "\")");
  }
  const std::string kind_text = string_of(root.at("kind"), "kind");
  auto k = kinds().find(kind_text);
  if (k == kinds().end()) throw SchemaError("unknown kind \"" + kind_text + "\"");

  Document d;
  d.kind = k->second;
  if (root.contains("description")) d.description = string_of(root.at("description"), "description");
  if (root.contains("ring")) d.ring = ring_of(root.at("ring"));
  const bool structural = d.kind != Kind::Morphism && d.kind != Kind::HomotopyChain;
  if (structural && !d.ring) throw SchemaError("missing field \"ring\" (required for " + kind_text + ")");

  const json& body = root.at("body");
  switch (d.kind) {
    case Kind::PathComplex:
      d.object = path_complex_of(body, *d.ring);
      break;
    case Kind::Digraph:
      d.object = digraph_of(body, *d.ring);
      break;
    case Kind::DirectedHypergraph:
      d.object = dhyper_of(body, *d.ring);
      break;
    case Kind::Hypergraph:
      d.object = hypergraph_of(body, *d.ring);
      break;
    case Kind::Morphism:
      d.object = morphism_of(body, "body");
      break;
    case Kind::HomotopyChain:
      d.object = homotopy_chain_of(body);
      break;
  }
  return d;
}

Document read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  try {
    return parse(buf.str());
  } catch (const SyntaxError& e) {
    throw SyntaxError(path + ": " + e.what(), e.line(), e.column());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("error while writing " + path);
}

std::string emit(const PathComplex& pc, const std::string& description) {
  return dump(envelope(Kind::PathComplex, pc.ring(), description, path_complex_body(pc)));
}

std::string emit(const WeightedDigraph& g, const std::string& description) {
  return dump(envelope(Kind::Digraph, g.ring(), description, digraph_body(g)));
}

std::string emit(const DirectedHypergraph& g, const std::string& description) {
  return dump(envelope(Kind::DirectedHypergraph, g.ring(), description, dhyper_body(g)));
}

std::string emit(const Hypergraph& h, const std::string& description) {
  return dump(envelope(Kind::Hypergraph, h.ring(), description, hypergraph_body(h)));
}

std::string emit(const MorphismDoc& m, const std::string& description) {
  return dump(envelope(Kind::Morphism, std::nullopt, description, morphism_body(m)));
}

std::string emit(const HomotopyChainDoc& h, const std::string& description) {
  return dump(envelope(Kind::HomotopyChain, std::nullopt, description, homotopy_chain_body(h)));
}

std::string emit(const Document& doc) {
  return std::visit([&](const auto& x) { return emit(x, doc.description); }, doc.object);
}

namespace {

ordered group_json(const HomologyGroup& g) {
  ordered o = ordered::object();
  o["free_rank"] = g.free_rank;
  ordered t = ordered::array();
  for (const auto& z : g.torsion) t.push_back(integer_json(z));
  o["torsion"] = std::move(t);
  return o;
}

}  // namespace

std::string emit_group(const HomologyGroup& group) { return group_json(group).dump(); }

std::string emit_homology(const HomologyResult& result) {
  ordered o = ordered::object();
  o["ring"] = ring_json(result.ring);
  o["max_degree"] = result.max_degree;
  ordered groups = ordered::array();
  for (const auto& g : result.groups) groups.push_back(group_json(g));
  o["groups"] = std::move(groups);
  return dump(o);
}

std::string ring_text(const Ring& ring) {
  if (ring.kind() == Ring::Kind::IntegersMod) return "Zmod:" + ring.modulus().get_str();
  return ring.name();
}

}  // namespace wph::io
