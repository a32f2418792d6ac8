#include "wph/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "wph/error.hpp"

namespace wph {

bool is_probable_prime(const mpz_class& m) {
  if (m < 2) return false;
  return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
}

Ring Ring::integers_mod(const mpz_class& m) {
  if (m < 2) throw InvariantError("modulus must be at least 2, got " + m.get_str());
  return Ring(Kind::IntegersMod, m);
}

bool Ring::is_field() const {
  switch (kind_) {
    case Kind::Integers:
      return false;
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod:
      return is_probable_prime(modulus_);
  }
  return false;
}

void Ring::require_elimination(const char* operation) const {
  if (!supports_elimination()) {
    throw UnsupportedRing(std::string(operation) + " is not supported over " + name() +
                          " (composite modulus)");
  }
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Z/" + modulus_.get_str();
  }
  return "?";
}

namespace {

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Scalar Ring::from_rational(const Scalar& q) const {
  switch (kind_) {
    case Kind::Integers:
      if (q.get_den() != 1) throw InvariantError(q.get_str() + " is not an integer");
      return q;
    case Kind::Rationals: {
      Scalar c(q);
      c.canonicalize();
      return c;
    }
    case Kind::IntegersMod: {
      mpz_class den = mod_floor(q.get_den(), modulus_);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw InvariantError(q.get_str() + " has no image in " + name());
      }
      return Scalar(mod_floor(mpz_class(q.get_num() * inv), modulus_));
    }
  }
  return q;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::IntegersMod) return Scalar(mod_floor(a.get_num() + b.get_num(), modulus_));
  return a + b;
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::IntegersMod) return Scalar(mod_floor(a.get_num() - b.get_num(), modulus_));
  return a - b;
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::IntegersMod) return Scalar(mod_floor(a.get_num() * b.get_num(), modulus_));
  return a * b;
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ == Kind::IntegersMod) return Scalar(mod_floor(-a.get_num(), modulus_));
  return -a;
}

bool Ring::is_unit(const Scalar& a) const {
  switch (kind_) {
    case Kind::Integers:
      return abs(a) == 1;
    case Kind::Rationals:
      return sgn(a) != 0;
    case Kind::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw NonInvertibleWeight(format(a) + " is not invertible in " + name());
  switch (kind_) {
    case Kind::Integers:
      return a;
    case Kind::Rationals:
      return Scalar(1) / a;
    case Kind::IntegersMod: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), modulus_.get_mpz_t());
      return Scalar(inv);
    }
  }
  return a;
}

int Ring::compare_magnitude(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::IntegersMod) return cmp(a, b);
  return cmp(abs(a), abs(b));
}

std::string Ring::format(const Scalar& a) const { return a.get_str(); }

// ---------------------------------------------------------------------------

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvariantError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<Scalar>& v) {
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix m(ring_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m.raw(r, c) = (*this)(r, first + c);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.raw(c, r) = (*this)(r, c);
  return t;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(raw(a, c), raw(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(raw(r, a), raw(r, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Scalar& s = (*this)(src, c);
    if (sgn(s) != 0) raw(dst, c) = ring_.add(raw(dst, c), ring_.mul(factor, s));
  }
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar& s = (*this)(r, src);
    if (sgn(s) != 0) raw(r, dst) = ring_.add(raw(r, dst), ring_.mul(factor, s));
  }
}

void Matrix::scale_row(std::size_t r, const Scalar& factor) {
  for (std::size_t c = 0; c < cols_; ++c) raw(r, c) = ring_.mul(raw(r, c), factor);
}

void Matrix::scale_col(std::size_t c, const Scalar& factor) {
  for (std::size_t r = 0; r < rows_; ++r) raw(r, c) = ring_.mul(raw(r, c), factor);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvariantError("matrix product dimension mismatch");
  if (!(a.ring_ == b.ring_)) throw InvariantError("matrix product across rings");
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (sgn(y) != 0) out.raw(i, j) += x * y;
      }
    }
  }
  if (out.ring_.kind() == Ring::Kind::IntegersMod) {
    for (auto& s : out.data_) s = out.ring_.from_rational(s);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantError("matrix sum dimension mismatch");
  Matrix out(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantError("matrix difference dimension mismatch");
  Matrix out(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.sub(a.data_[i], b.data_[i]);
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw InvariantError("matrix-vector dimension mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = ring_.from_rational(acc);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Truncated integer quotient; remainders keep the sign of the dividend and
// are strictly smaller in magnitude than the divisor.
Scalar int_quotient(const Scalar& a, const Scalar& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  return Scalar(q);
}

Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  return Scalar(q);
}

bool divides(const Scalar& d, const Scalar& a) {
  return mpz_divisible_p(a.get_num().get_mpz_t(), d.get_num().get_mpz_t()) != 0;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest-magnitude nonzero entry of the trailing submatrix; row-major scan
// with strict comparison gives the lowest row, then lowest column on ties.
std::optional<Pivot> smallest_entry(const Matrix& a, std::size_t from) {
  std::optional<Pivot> best;
  const Ring& ring = a.ring();
  for (std::size_t i = from; i < a.rows(); ++i) {
    for (std::size_t j = from; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!best || ring.compare_magnitude(a(i, j), a(best->row, best->col)) < 0) best = Pivot{i, j};
    }
  }
  return best;
}

// Shared SNF driver; left/right are updated only when non-null.
std::vector<Scalar> smith_reduce(Matrix& a, Matrix* left, Matrix* right) {
  const Ring& ring = a.ring();
  const bool field = ring.is_field();
  const std::size_t limit = std::min(a.rows(), a.cols());

  auto row_op = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    a.add_row_multiple(dst, src, f);
    if (left) left->add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    a.add_col_multiple(dst, src, f);
    if (right) right->add_col_multiple(dst, src, f);
  };
  auto move_pivot = [&](std::size_t t, const Pivot& p) {
    a.swap_rows(t, p.row);
    if (left) left->swap_rows(t, p.row);
    a.swap_cols(t, p.col);
    if (right) right->swap_cols(t, p.col);
  };

  std::vector<Scalar> d;
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    move_pivot(t, *pivot);

    if (field) {
      const Scalar inv = ring.inverse(a(t, t));
      a.scale_row(t, inv);
      if (left) left->scale_row(t, inv);
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (sgn(a(i, t)) != 0) row_op(i, t, ring.neg(a(i, t)));
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (sgn(a(t, j)) != 0) col_op(j, t, ring.neg(a(t, j)));
      d.push_back(a(t, t));
      continue;
    }

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        row_op(i, t, -int_quotient(a(i, t), a(t, t)));
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        col_op(j, t, -int_quotient(a(t, j), a(t, t)));
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        move_pivot(t, *smallest_entry(a, t));
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remainder.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!divides(a(t, t), a(i, j))) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_op(t, *offender, Scalar(1));
    }
    if (sgn(a(t, t)) < 0) {
      a.scale_row(t, Scalar(-1));
      if (left) left->scale_row(t, Scalar(-1));
    }
    d.push_back(a(t, t));
  }
  return d;
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& m) {
  m.ring().require_elimination("Smith normal form");
  Matrix a = m;
  Matrix left = Matrix::identity(m.ring(), m.rows());
  Matrix right = Matrix::identity(m.ring(), m.cols());
  auto d = smith_reduce(a, &left, &right);
  const std::size_t r = d.size();
  return SmithDecomposition{std::move(d), std::move(left), std::move(right), r};
}

std::vector<Scalar> invariant_factors(const Matrix& m) {
  m.ring().require_elimination("Smith normal form");
  Matrix a = m;
  return smith_reduce(a, nullptr, nullptr);
}

ColumnEchelon column_echelon(const Matrix& m, bool with_transform) {
  m.ring().require_elimination("column echelon form");
  const Ring& ring = m.ring();
  const bool field = ring.is_field();
  Matrix a = m;
  Matrix u = with_transform ? Matrix::identity(ring, m.cols()) : Matrix(ring, 0, 0);
  std::vector<std::size_t> pivots;

  auto col_op = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    a.add_col_multiple(dst, src, f);
    if (with_transform) u.add_col_multiple(dst, src, f);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (with_transform) u.swap_cols(x, y);
  };
  auto col_scale = [&](std::size_t c, const Scalar& f) {
    a.scale_col(c, f);
    if (with_transform) u.scale_col(c, f);
  };

  std::size_t k = 0;
  for (std::size_t r = 0; r < a.rows() && k < a.cols(); ++r) {
    std::optional<std::size_t> pivot;
    for (;;) {
      pivot.reset();
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (sgn(a(r, j)) == 0) continue;
        if (!pivot || ring.compare_magnitude(a(r, j), a(r, *pivot)) < 0) pivot = j;
      }
      if (!pivot || field) break;
      bool others = false;
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (j == *pivot || sgn(a(r, j)) == 0) continue;
        col_op(j, *pivot, -int_quotient(a(r, j), a(r, *pivot)));
        if (sgn(a(r, j)) != 0) others = true;
      }
      if (!others) break;
    }
    if (!pivot) continue;
    col_swap(k, *pivot);
    if (field) {
      col_scale(k, ring.inverse(a(r, k)));
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (j != k && sgn(a(r, j)) != 0) col_op(j, k, ring.neg(a(r, j)));
    } else {
      if (sgn(a(r, k)) < 0) col_scale(k, Scalar(-1));
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(a(r, j)) != 0) col_op(j, k, -floor_quotient(a(r, j), a(r, k)));
    }
    pivots.push_back(r);
    ++k;
  }
  return ColumnEchelon{std::move(a), std::move(u), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return column_echelon(m, false).rank(); }

Matrix kernel_basis(const Matrix& m) {
  auto e = column_echelon(m, true);
  const std::size_t r = e.rank();
  Matrix k = e.transform.columns(r, m.cols() - r);
  if (k.cols() == 0) return k;
  auto canon = column_echelon(k, false);
  return canon.form.columns(0, canon.rank());
}

Matrix image_basis(const Matrix& m) {
  auto e = column_echelon(m, false);
  return e.form.columns(0, e.rank());
}

namespace {

std::optional<std::vector<Scalar>> solve_with(const ColumnEchelon& e, const Matrix& basis,
                                              const std::vector<Scalar>& target) {
  const Ring& ring = basis.ring();
  const Matrix& h = e.form;
  const std::size_t r = e.rank();
  std::vector<Scalar> y(r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t p = e.pivot_rows[j];
    Scalar rest = target[p];
    for (std::size_t i = 0; i < j; ++i)
      if (sgn(h(p, i)) != 0) rest = ring.sub(rest, ring.mul(h(p, i), y[i]));
    if (ring.is_field()) {
      y[j] = ring.mul(rest, ring.inverse(h(p, j)));
    } else {
      if (!divides(h(p, j), rest)) return std::nullopt;
      y[j] = Scalar(mpz_class(rest.get_num() / h(p, j).get_num()));
    }
  }
  // Residual check: rows without pivots must also match.
  for (std::size_t row = 0; row < h.rows(); ++row) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(h(row, j)) != 0) acc = ring.add(acc, ring.mul(h(row, j), y[j]));
    if (acc != target[row]) return std::nullopt;
  }
  std::vector<Scalar> c(basis.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(e.transform(i, j)) != 0) acc = ring.add(acc, ring.mul(e.transform(i, j), y[j]));
    c[i] = acc;
  }
  return c;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_in_lattice(const Matrix& basis,
                                                    const std::vector<Scalar>& target) {
  if (target.size() != basis.rows()) throw InvariantError("solve target has wrong length");
  auto e = column_echelon(basis, true);
  std::vector<Scalar> t(target.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = basis.ring().from_rational(target[i]);
  return solve_with(e, basis, t);
}

std::optional<Matrix> solve_columns(const Matrix& basis, const Matrix& targets) {
  if (targets.rows() != basis.rows()) throw InvariantError("solve targets have wrong row count");
  Matrix out(basis.ring(), basis.cols(), targets.cols());
  if (targets.cols() == 0) return out;
  auto e = column_echelon(basis, true);
  for (std::size_t c = 0; c < targets.cols(); ++c) {
    auto x = solve_with(e, basis, targets.column(c));
    if (!x) return std::nullopt;
    out.set_column(c, *x);
  }
  return out;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  os << "(" << free_rank << ",[";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i].get_str();
  os << "])";
  return os.str();
}

HomologyGroup homology_of_pair(const Matrix& boundary_out, const Matrix& boundary_in) {
  const Ring& ring = boundary_out.ring();
  ring.require_elimination("homology");
  if (boundary_out.cols() != boundary_in.rows()) {
    throw InvariantError("boundary maps do not share a middle module");
  }
  if (boundary_out.rows() > 0 && boundary_in.cols() > 0 && !(boundary_out * boundary_in).is_zero()) {
    throw CompositionNotZero("composed boundary maps are not zero");
  }
  const std::size_t rank_out = rank(boundary_out);
  const auto factors = invariant_factors(boundary_in);
  HomologyGroup h;
  h.free_rank = boundary_out.cols() - rank_out - factors.size();
  if (!ring.is_field()) {
    for (const auto& f : factors)
      if (f != 1) h.torsion.push_back(f.get_num());
  }
  return h;
}

}  // namespace wph
