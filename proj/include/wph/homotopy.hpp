#pragma once

/**
 * Morphism and homotopy verification, the prism operator and chain homotopy
 * certificates.
 *
 * Verification functions report instead of throwing: a failed check is a
 * normal answer. Exceptions are kept for inputs the machinery cannot handle
 * (non-invertible weights, unsupported rings) and for broken identities that
 * a verified homotopy guarantees.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wph/chain.hpp"
#include "wph/dhyper.hpp"

namespace wph {

// Strict: image paths must be members of the target as they are.
// AllowDegenerate: consecutive repeats are collapsed before the test.
enum class Strictness { Strict, AllowDegenerate };

struct MorphismReport {
  bool valid = true;
  bool weighted = true;                      // delta_target(f(v)) == delta_source(v)
  std::vector<std::string> missing_images;   // "a b -> x x" per offending path
  std::vector<std::string> weight_mismatches;
  std::string to_string() const;
};

MorphismReport verify_path_morphism(const PathMorphism& f, Strictness strictness = Strictness::Strict);

struct OneStepReport {
  bool valid = false;
  bool weighted = false;
  std::string failure;                   // why the candidate was rejected
  std::optional<PathMorphism> homotopy;  // F on the cylinder of the source
  MorphismReport morphism;               // verification of F
  std::string to_string() const;
};

// F(v) = f(v), F(v') = g(v) on cylinder(source).
OneStepReport one_step_homotopy_pathcx(const PathMorphism& f, const PathMorphism& g,
                                       Strictness strictness = Strictness::Strict);

enum class HyperHomotopyMode { Strict, Reflexive };

struct HyperOneStepReport {
  bool valid = false;
  std::string failure;
  std::vector<std::string> missing_arrows;  // vertical arrows with no image in H
  std::size_t exempt_arrows = 0;            // reflexive mode: f_V(A) == g_V(A)
  MorphismClass classes;                    // weight classes of F
  std::string to_string() const;
};

HyperOneStepReport one_step_homotopy_dhyper(const HyperMorphism& f, const HyperMorphism& g,
                                            const DirectedHypergraph& source, const DirectedHypergraph& target,
                                            HyperHomotopyMode mode = HyperHomotopyMode::Strict);

// tau(e_{i0..in}) = sum_k gamma(i_k) (-1)^k e_{i0..ik ik'..in'}, gamma = 1/delta.
class PrismOperator {
 public:
  // Throws NonInvertibleWeight naming the vertex whose weight has no inverse.
  explicit PrismOperator(const PathComplex& base);

  const PathComplex& cylinder() const { return cylinder_; }
  // v over base vertex indices; result over cylinder indices.
  ChainVector prism(const ChainVector& v) const;
  ChainVector bottom(const ChainVector& v) const;  // v as a chain on V
  ChainVector top(const ChainVector& v) const;     // v'

  struct IdentityReport {
    bool holds = false;
    ChainVector lhs;         // boundary(tau v) + tau(boundary v)
    ChainVector rhs;         // v' - v
    ChainVector difference;  // lhs - rhs
  };
  IdentityReport verify_identity(const ChainVector& v) const;

 private:
  Ring ring_;
  std::vector<Scalar> base_weights_;
  std::vector<Scalar> gamma_;
  PathComplex cylinder_;
  std::vector<VertexIndex> lower_;
  std::vector<VertexIndex> upper_;
};

struct DegreeCertificate {
  int degree = 0;
  std::size_t generators = 0;
  bool prism_in_omega = true;
  bool identity_holds = true;
};

struct ChainHomotopyReport {
  OneStepReport one_step;
  int max_degree = 0;                     // identity checked in degrees 0..max_degree
  std::vector<DegreeCertificate> degrees;
  std::vector<bool> homology_maps_equal;  // degrees 0..max_degree-1
  bool valid() const;
  std::string to_string() const;
};

// Requires invertible source weights and a ring with elimination. When f and
// g are not one-step homotopic the report carries that and nothing else.
// Throws HomotopyIdentityFailed naming the generator if the prism leaves the
// allowed chains or the homotopy identity breaks.
ChainHomotopyReport chain_homotopy_certificate(const PathMorphism& f, const PathMorphism& g, int max_degree,
                                               Strictness strictness = Strictness::Strict);

// f_0, ..., f_n with step i going f_i -> f_{i+1} when forward[i], else the
// reverse cylinder direction (the pair is swapped).
struct HomotopyChainReport {
  std::vector<OneStepReport> steps;
  bool valid() const;
  std::string to_string() const;
};
HomotopyChainReport verify_homotopy_chain(const std::vector<PathMorphism>& morphisms, const std::vector<bool>& forward,
                                          Strictness strictness = Strictness::Strict);

struct HyperHomotopyChainReport {
  std::vector<HyperOneStepReport> steps;
  bool valid() const;
  std::string to_string() const;
};
HyperHomotopyChainReport verify_hyper_homotopy_chain(const std::vector<HyperMorphism>& morphisms,
                                                     const std::vector<bool>& forward,
                                                     const DirectedHypergraph& source,
                                                     const DirectedHypergraph& target,
                                                     HyperHomotopyMode mode = HyperHomotopyMode::Strict);

enum class HyperPipeline { Natural, Connective, Bold, DensityTwo };

// Path morphism induced by a hypergraph morphism on the pipeline complexes:
// source built to length source_length, target to target_length.
PathMorphism pipeline_morphism(const HyperMorphism& f, const DirectedHypergraph& source,
                               const DirectedHypergraph& target, HyperPipeline pipeline,
                               std::size_t source_length, std::size_t target_length);

struct HyperCertificate {
  HyperOneStepReport hyper;
  std::optional<ChainHomotopyReport> chain;  // absent when hyper is invalid
  bool valid() const { return hyper.valid && chain && chain->valid(); }
  std::string to_string() const;
};

// One-step hypergraph homotopy pushed through a pipeline and certified at the
// chain level. Throws NonInvertibleWeight when some |A| (natural pipeline) or
// delta(v) (vertex pipelines) of the source is not a unit.
HyperCertificate hyper_pipeline_certificate(const HyperMorphism& f, const HyperMorphism& g,
                                            const DirectedHypergraph& source, const DirectedHypergraph& target,
                                            HyperPipeline pipeline, int max_degree,
                                            HyperHomotopyMode mode = HyperHomotopyMode::Strict);

}  // namespace wph
