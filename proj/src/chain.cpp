#include "wph/chain.hpp"

#include <sstream>

#include "wph/error.hpp"

namespace wph {

void accumulate(ChainVector& c, const Ring& ring, const Path& p, const Scalar& factor) {
  if (sgn(factor) == 0) return;
  auto it = c.coefficients.find(p);
  if (it == c.coefficients.end()) {
    c.coefficients.emplace(p, ring.from_rational(factor));
    return;
  }
  it->second = ring.add(it->second, factor);
  if (sgn(it->second) == 0) c.coefficients.erase(it);
}

ChainVector add(const Ring& ring, const ChainVector& a, const ChainVector& b) {
  ChainVector out = a;
  for (const auto& [p, x] : b.coefficients) accumulate(out, ring, p, x);
  return out;
}

ChainVector subtract(const Ring& ring, const ChainVector& a, const ChainVector& b) {
  ChainVector out = a;
  for (const auto& [p, x] : b.coefficients) accumulate(out, ring, p, ring.neg(x));
  return out;
}

ChainVector basis_chain(const Path& p, const Scalar& coefficient) {
  ChainVector c;
  c.degree = static_cast<int>(p.size()) - 1;
  if (sgn(coefficient) != 0) c.coefficients.emplace(p, coefficient);
  return c;
}

std::string format_chain(const PathComplex& pc, const ChainVector& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, x] : c.coefficients) {
    os << (first ? "" : " + ") << pc.ring().format(x) << "*e" << pc.format(p);
    first = false;
  }
  return os.str();
}

namespace {

template <typename WeightOf>
ChainVector boundary_impl(const ChainVector& v, const Ring& ring, WeightOf weight_of) {
  ChainVector out;
  out.degree = v.degree - 1;
  if (v.degree <= 0) return out;
  for (const auto& [path, coeff] : v.coefficients) {
    for (std::size_t s = 0; s < path.size(); ++s) {
      Path face;
      face.reserve(path.size() - 1);
      for (std::size_t k = 0; k < path.size(); ++k)
        if (k != s) face.push_back(path[k]);
      if (!is_regular(face)) continue;
      Scalar term = ring.mul(coeff, weight_of(path[s]));
      if (s % 2 == 1) term = ring.neg(term);
      accumulate(out, ring, face, term);
    }
  }
  return out;
}

}  // namespace

ChainVector weighted_boundary(const ChainVector& v, const std::vector<Scalar>& weights, const Ring& ring) {
  return boundary_impl(v, ring, [&](VertexIndex x) -> const Scalar& { return weights.at(x); });
}

ChainVector weighted_boundary(const ChainVector& v, const std::map<VertexIndex, Scalar>& weights,
                              const Ring& ring) {
  return boundary_impl(v, ring, [&](VertexIndex x) -> const Scalar& {
    auto it = weights.find(x);
    if (it == weights.end()) throw MissingWeight("vertex index " + std::to_string(x) + " has no weight");
    return it->second;
  });
}

ChainVector weighted_boundary(const PathComplex& pc, const ChainVector& v) {
  return weighted_boundary(v, pc.effective_weights(), pc.ring());
}

// ---------------------------------------------------------------------------

ChainVector OmegaComplex::generator(int n, std::size_t column) const {
  const auto& d = degree(n);
  ChainVector c;
  c.degree = n;
  for (std::size_t i = 0; i < d.paths.size(); ++i) accumulate(c, ring_, d.paths[i], d.basis(i, column));
  return c;
}

std::optional<std::vector<Scalar>> OmegaComplex::coordinates(const ChainVector& c) const {
  if (c.degree < 0 || c.degree > max_degree()) return std::nullopt;
  const auto& d = degree(c.degree);
  std::vector<Scalar> v(d.paths.size());
  for (const auto& [p, x] : c.coefficients) {
    auto it = d.position.find(p);
    if (it == d.position.end()) return std::nullopt;
    v[it->second] = x;
  }
  return solve_in_lattice(d.basis, v);
}

OmegaComplex build_omega(const PathComplex& pc, int max_degree) {
  const Ring& ring = pc.ring();
  ring.require_elimination("weighted path homology");
  const auto weights = pc.effective_weights();
  OmegaComplex omega;
  omega.ring_ = ring;

  for (int n = 0; n <= max_degree; ++n) {
    OmegaDegree d{regular_paths(pc, n), {}, Matrix(ring, 0, 0), Matrix(ring, 0, 0)};
    for (std::size_t i = 0; i < d.paths.size(); ++i) d.position.emplace(d.paths[i], i);
    const std::size_t width = d.paths.size();
    if (n == 0) {
      d.basis = Matrix::identity(ring, width);
      d.boundary = Matrix(ring, 0, width);
      omega.degrees_.push_back(std::move(d));
      continue;
    }
    const OmegaDegree& prev = omega.degrees_.back();

    // Faces split into those in P (rows of the boundary) and those outside P
    // (rows of the constraint matrix whose kernel is Omega_n).
    std::vector<ChainVector> faces(width);
    std::map<Path, std::size_t> outside;
    for (std::size_t j = 0; j < width; ++j) {
      faces[j] = weighted_boundary(basis_chain(d.paths[j]), weights, ring);
      for (const auto& [face, x] : faces[j].coefficients)
        if (!pc.contains(face)) outside.emplace(face, 0);
    }
    std::size_t row = 0;
    for (auto& [face, r] : outside) r = row++;

    Matrix constraint(ring, outside.size(), width);
    Matrix inside(ring, prev.paths.size(), width);
    for (std::size_t j = 0; j < width; ++j) {
      for (const auto& [face, x] : faces[j].coefficients) {
        auto o = outside.find(face);
        if (o != outside.end()) {
          constraint.set(o->second, j, x);
        } else {
          inside.set(prev.position.at(face), j, x);
        }
      }
    }
    d.basis = constraint.rows() == 0 ? Matrix::identity(ring, width) : kernel_basis(constraint);
    auto coords = solve_columns(prev.basis, inside * d.basis);
    if (!coords) throw InvariantError("boundary of an allowed chain left the previous allowed module");
    d.boundary = std::move(*coords);
    omega.degrees_.push_back(std::move(d));
  }
  return omega;
}

HomologyResult homology(const OmegaComplex& omega) {
  HomologyResult result;
  result.ring = omega.ring();
  result.max_degree = omega.max_degree();
  for (int n = 0; n < omega.max_degree(); ++n) {
    result.groups.push_back(homology_of_pair(omega.boundary(n), omega.boundary(n + 1)));
  }
  return result;
}

HomologyResult homology(const PathComplex& pc, int max_degree) { return homology(build_omega(pc, max_degree)); }

ChainVector push_forward(const PathMorphism& f, const Ring& ring, const ChainVector& c) {
  ChainVector out;
  out.degree = c.degree;
  for (const auto& [p, x] : c.coefficients) {
    Path q = f.image(p);
    if (is_regular(q)) accumulate(out, ring, q, x);
  }
  return out;
}

Matrix induced_chain_map(const PathMorphism& f, const OmegaComplex& source, const OmegaComplex& target, int n) {
  if (!(source.ring() == target.ring())) throw InvariantError("chain map between complexes over different rings");
  if (n > target.max_degree() && source.rank(n) > 0) {
    throw ImageNotInOmega("target allowed chains were not built to degree " + std::to_string(n));
  }
  Matrix out(source.ring(), target.rank(n), source.rank(n));
  for (std::size_t j = 0; j < source.rank(n); ++j) {
    ChainVector g = source.generator(n, j);
    ChainVector image = push_forward(f, source.ring(), g);
    auto coords = target.coordinates(image);
    if (!coords) {
      throw ImageNotInOmega("image of generator " + format_chain(*f.source, g) + " in degree " + std::to_string(n) +
                            " is not an allowed chain of the target");
    }
    out.set_column(j, *coords);
  }
  return out;
}

}  // namespace wph
