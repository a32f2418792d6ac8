#pragma once

/**
 * Weighted regular chain complexes and weighted path homology.
 *
 * Chains live in the regular quotient: any irregular path produced by a face
 * deletion represents zero. The allowed chains in degree n are computed as
 * the kernel of the weighted boundary followed by projection onto regular
 * (n-1)-paths that are not in P; their basis is the canonical echelon form of
 * that kernel, written over regular_paths(pc, n).
 */

#include <map>
#include <vector>

#include "wph/algebra.hpp"
#include "wph/pathcx.hpp"

namespace wph {

struct ChainVector {
  int degree = 0;
  std::map<Path, Scalar> coefficients;  // support only

  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const ChainVector& o) const { return degree == o.degree && coefficients == o.coefficients; }
};

// c += factor * e_p, dropping terms that become zero.
void accumulate(ChainVector& c, const Ring& ring, const Path& p, const Scalar& factor);
ChainVector add(const Ring& ring, const ChainVector& a, const ChainVector& b);
ChainVector subtract(const Ring& ring, const ChainVector& a, const ChainVector& b);
ChainVector basis_chain(const Path& p, const Scalar& coefficient = 1);
std::string format_chain(const PathComplex& pc, const ChainVector& c);

// Weighted boundary with irregular faces killed. Paths index the vertices of
// the weight vector. Degree-0 input has zero boundary.
ChainVector weighted_boundary(const ChainVector& v, const std::vector<Scalar>& weights, const Ring& ring);
// Weights looked up per vertex; throws MissingWeight for unweighted vertices.
ChainVector weighted_boundary(const ChainVector& v, const std::map<VertexIndex, Scalar>& weights,
                              const Ring& ring);
// Uses the complex's effective weights.
ChainVector weighted_boundary(const PathComplex& pc, const ChainVector& v);

struct OmegaDegree {
  std::vector<Path> paths;      // regular n-paths of P, canonical order
  std::map<Path, std::size_t> position;
  Matrix basis;                 // |paths| x rank, columns generate Omega_n
  Matrix boundary;              // rank(n-1) x rank(n); empty for n == 0
};

class OmegaComplex {
 public:
  const Ring& ring() const { return ring_; }
  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  const OmegaDegree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }
  std::size_t rank(int n) const { return n < 0 || n > max_degree() ? 0 : degree(n).basis.cols(); }
  // Boundary of Omega_n in the Omega bases (zero map for n == 0).
  const Matrix& boundary(int n) const { return degree(n).boundary; }
  // Generator `column` of Omega_n as a chain over the complex's paths.
  ChainVector generator(int n, std::size_t column) const;
  // Coordinates of a chain in the Omega_n basis; nullopt when it is not in
  // Omega_n (or has support outside the regular n-paths of P).
  std::optional<std::vector<Scalar>> coordinates(const ChainVector& c) const;

 private:
  friend OmegaComplex build_omega(const PathComplex& pc, int max_degree);
  Ring ring_ = Ring::integers();
  std::vector<OmegaDegree> degrees_;
};

// Throws UnsupportedRing for Z/m with m composite.
OmegaComplex build_omega(const PathComplex& pc, int max_degree);

struct HomologyResult {
  Ring ring = Ring::integers();
  int max_degree = 0;                  // N: the Omega complex was built to N
  std::vector<HomologyGroup> groups;   // degrees 0 .. N-1
};

HomologyResult homology(const PathComplex& pc, int max_degree);
HomologyResult homology(const OmegaComplex& omega);

// Matrix of f_* : Omega_n(source) -> Omega_n(target) in the Omega bases.
// Throws ImageNotInOmega if an image generator falls outside Omega_n(target).
Matrix induced_chain_map(const PathMorphism& f, const OmegaComplex& source, const OmegaComplex& target, int n);

// f_* on chains: images of irregular paths vanish.
ChainVector push_forward(const PathMorphism& f, const Ring& ring, const ChainVector& c);

}  // namespace wph
