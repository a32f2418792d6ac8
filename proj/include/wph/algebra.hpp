#pragma once

/**
 * Exact scalars and dense matrix algorithms over Z, Q and Z/m.
 *
 * All scalars are stored as GMP rationals. Over Z the denominator is always
 * one; over Z/m the value is the canonical representative in [0, m). Every
 * mutating operation keeps values normalized for the owning ring, so plain
 * equality of stored scalars is ring equality.
 */

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wph {

using Scalar = mpq_class;

class Ring {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  // Throws InvariantError when m < 2.
  static Ring integers_mod(const mpz_class& m);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }

  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_field() const;
  // Z, Q or Z/p: the rings SNF, kernels and homology are implemented for.
  bool supports_elimination() const { return is_integers() || is_field(); }
  // Throws UnsupportedRing unless supports_elimination().
  void require_elimination(const char* operation) const;

  // "Z", "Q", "Z/7".
  std::string name() const;

  // Maps an arbitrary rational into the ring. Throws InvariantError when the
  // value has no image (fraction over Z, denominator not invertible mod m).
  Scalar from_rational(const Scalar& q) const;
  Scalar from_int(long v) const { return from_rational(Scalar(v)); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return from_int(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  // Throws NonInvertibleWeight when a is not a unit.
  Scalar inverse(const Scalar& a) const;

  // Total order used by the "smallest absolute value" pivot rule.
  int compare_magnitude(const Scalar& a, const Scalar& b) const;

  std::string format(const Scalar& a) const;

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  Ring(Kind kind, long m) : kind_(kind), modulus_(m) {}
  Ring(Kind kind, mpz_class m) : kind_(kind), modulus_(std::move(m)) {}

  Kind kind_;
  mpz_class modulus_;
};

bool is_probable_prime(const mpz_class& m);

// A scalar tagged with its ring, for public surfaces such as weights.
struct RingElem {
  Ring ring;
  Scalar value;

  RingElem(Ring r, const Scalar& v) : ring(std::move(r)), value(ring.from_rational(v)) {}

  RingElem operator+(const RingElem& o) const { return {ring, ring.add(value, o.value)}; }
  RingElem operator-(const RingElem& o) const { return {ring, ring.sub(value, o.value)}; }
  RingElem operator*(const RingElem& o) const { return {ring, ring.mul(value, o.value)}; }
  bool operator==(const RingElem& o) const { return ring == o.ring && value == o.value; }
  std::string to_string() const { return ring.format(value); }
};

class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const Ring& ring, std::size_t n);
  // Rows of small integers, mainly for tests and examples.
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = ring_.from_rational(v); }

  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Scalar>& v);
  Matrix columns(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  Matrix transpose() const;

  // Elementary operations (kept normalized).
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& factor);
  void scale_row(std::size_t r, const Scalar& factor);
  void scale_col(std::size_t c, const Scalar& factor);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const;

 private:
  Scalar& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct SmithDecomposition {
  std::vector<Scalar> d;  // invariant factors, d[i] | d[i+1]
  Matrix left;
  Matrix right;
  std::size_t rank = 0;
};

// left * m * right == diag(d) padded with zeros. Pivot: nonzero entry of
// smallest magnitude, ties broken by lowest row then lowest column.
SmithDecomposition smith_normal_form(const Matrix& m);

// Invariant factors only; the transforms are not accumulated.
std::vector<Scalar> invariant_factors(const Matrix& m);

// Canonical column echelon form: m * transform == form. Over Z this is the
// column Hermite normal form (positive pivots, entries left of a pivot reduced
// into [0, pivot)); over a field it is the reduced column echelon form.
struct ColumnEchelon {
  Matrix form;
  Matrix transform;
  std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
  std::size_t rank() const { return pivot_rows.size(); }
};
ColumnEchelon column_echelon(const Matrix& m, bool with_transform = true);

std::size_t rank(const Matrix& m);

// Columns form a basis of ker(m), in canonical echelon form. Over Z the basis
// spans the saturated kernel lattice.
Matrix kernel_basis(const Matrix& m);

// Basis of the column span (Z: the image lattice), canonical echelon form.
Matrix image_basis(const Matrix& m);

// Coefficients c with basis * c == target; nullopt when none exist in the ring.
// Basis columns must be linearly independent.
std::optional<std::vector<Scalar>> solve_in_lattice(const Matrix& basis,
                                                    const std::vector<Scalar>& target);

// Column-by-column solve of basis * X == targets; nullopt if any column fails.
std::optional<Matrix> solve_columns(const Matrix& basis, const Matrix& targets);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // ascending invariant factors > 1

  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string to_string() const;
};

// ker(boundary_out) / im(boundary_in). Both maps are written in the same
// basis of the middle module: boundary_out has that many columns,
// boundary_in that many rows.
HomologyGroup homology_of_pair(const Matrix& boundary_out, const Matrix& boundary_in);

}  // namespace wph
