#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfkit/field.hpp"

namespace hopfkit {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vector = std::vector<Scalar>;
using SparseEntry = std::pair<std::uint32_t, Scalar>;
/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& a, const Vector& v);
SparseVector to_sparse(const Vector& v);
Vector to_dense(const Field& f, std::size_t n, const SparseVector& v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  void set_row(std::size_t i, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator*(const Matrix& b) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Column-span of the horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

/// A linear subspace of k^n held as its reduced row echelon basis, so equal spaces
/// have identical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);

  static Subspace whole(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& gens);
  static Subspace span_columns(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  const std::vector<SparseVector>& sparse_basis() const { return rows_; }
  std::vector<Vector> basis() const;
  /// Basis vectors as the rows of a dim x ambient matrix.
  Matrix basis_matrix() const;
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  /// Columns that carry no pivot, ascending.
  std::vector<std::uint32_t> free_columns() const;

  /// v minus the unique element of the space that agrees with v on pivot columns.
  Vector reduce(const Vector& v) const;
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const SparseVector& v) const;
  bool includes(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  /// Coordinates of v with respect to basis(). Empty if v is not in the space.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend class SpanBuilder;
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> row_of_pivot_;
};

/// Incremental sparse elimination. Rows are kept semi-echelon while adding and
/// fully reduced by finish().
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t ambient);

  /// Returns true when v enlarged the span.
  bool add(const Vector& v);
  bool add(const SparseVector& v);
  std::size_t dim() const { return rows_.size(); }
  Subspace finish() &&;

 private:
  bool insert_from_work(std::vector<std::uint32_t>& heap);

  Field field_;
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<std::int32_t> row_of_pivot_;
  Vector work_;
  std::vector<char> queued_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
/// Some x with m x = b, preferring the representative supported on pivot columns.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Solves m X = b column by column.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> invert(const Matrix& m);

}  // namespace hopfkit
