#pragma once

/**
 * Versioned JSON documents.
 *
 *   {"format_version": "1", "kind": ..., "ring": "Z" | "Q" | {"Zmod": m},
 *    "description": optional string, "body": {...}}
 *
 * Parsing is strict: unknown fields, wrong types and version mismatches are
 * rejected, and every domain invariant is checked before an object is
 * returned. docs/formats.md lists the body of each kind.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wph/chain.hpp"
#include "wph/dhyper.hpp"
#include "wph/digraph.hpp"
#include "wph/pathcx.hpp"

namespace wph::io {

enum class Kind { PathComplex, Digraph, DirectedHypergraph, Hypergraph, Morphism, HomotopyChain };

std::string kind_name(Kind kind);

// Morphisms are stored by label; they are bound to a source and target by
// the caller. arrow_map is only meaningful between directed hypergraphs.
struct MorphismDoc {
  std::map<std::string, std::string> vertex_map;
  std::optional<std::vector<std::size_t>> arrow_map;
  bool operator==(const MorphismDoc&) const = default;
};

// f_0, ..., f_n and the direction of each one-step homotopy.
struct HomotopyChainDoc {
  std::vector<MorphismDoc> morphisms;
  std::vector<bool> forward;
  bool operator==(const HomotopyChainDoc&) const = default;
};

using Object = std::variant<PathComplex, WeightedDigraph, DirectedHypergraph, Hypergraph, MorphismDoc,
                            HomotopyChainDoc>;

struct Document {
  Kind kind = Kind::PathComplex;
  std::optional<Ring> ring;  // always present for the structural kinds
  std::string description;
  Object object;

  // Typed access; throws SchemaError naming the actual kind.
  const PathComplex& path_complex() const;
  const WeightedDigraph& digraph() const;
  const DirectedHypergraph& directed_hypergraph() const;
  const Hypergraph& hypergraph() const;
  const MorphismDoc& morphism() const;
  const HomotopyChainDoc& homotopy_chain() const;
};

// Throws SyntaxError (with line and column), SchemaError or InvariantError.
Document parse(std::string_view text);
// Throws IoError when the file cannot be read; parse errors are prefixed
// with the file name.
Document read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Canonical documents: fixed key order, two-space indent, trailing newline.
std::string emit(const Document& doc);
std::string emit(const PathComplex& pc, const std::string& description = "");
std::string emit(const WeightedDigraph& g, const std::string& description = "");
std::string emit(const DirectedHypergraph& g, const std::string& description = "");
std::string emit(const Hypergraph& h, const std::string& description = "");
std::string emit(const MorphismDoc& m, const std::string& description = "");
std::string emit(const HomotopyChainDoc& h, const std::string& description = "");

// {"ring": ..., "max_degree": N, "groups": [{"free_rank": r, "torsion": [...]}, ...]}
// with groups indexed by degree.
std::string emit_homology(const HomologyResult& result);
// A single group as {"free_rank":1,"torsion":[2]} (compact).
std::string emit_group(const HomologyGroup& group);

// Ring names as used in documents and on the command line ("Z", "Q", "Zmod:7").
std::string ring_text(const Ring& ring);

}  // namespace wph::io
