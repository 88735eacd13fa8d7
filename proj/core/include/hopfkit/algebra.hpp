#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

struct StructureConstant {
  std::size_t i, j, k;
  Scalar value;
};

/// Finite-dimensional unital algebra given by structure constants e_i e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Field f, std::vector<std::string> names, Vector unit, const std::vector<StructureConstant>& products);

  /// The one-dimensional algebra k with basis element "1".
  static Algebra ground(Field f);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Vector& unit() const { return unit_; }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vector zero() const { return zero_vector(field_, dim()); }

  /// Product of basis elements as a sparse vector.
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  std::vector<StructureConstant> structure_constants() const;

  Vector mul(const Vector& x, const Vector& y) const;
  /// y -> x y
  Matrix left_mult(const Vector& x) const;
  /// y -> y x
  Matrix right_mult(const Vector& x) const;

  Algebra opposite() const;
  bool is_commutative() const;

  std::string format(const Vector& v) const;
  /// Element of an m-fold tensor power, printed as sums of a⊗b⊗c.
  std::string format_tensor(const Vector& v, std::size_t factors) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  Vector unit_;
  std::vector<SparseVector> table_;
};

/// Same dimension, unit and structure constants (basis names are ignored).
bool same_structure(const Algebra& a, const Algebra& b);

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

/// An element together with the algebra it lives in.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr parent, Vector coords);
  const AlgebraPtr& parent() const { return parent_; }
  const Vector& coords() const { return coords_; }
  AlgebraElement operator*(const AlgebraElement& b) const;
  AlgebraElement operator+(const AlgebraElement& b) const;
  AlgebraElement operator-(const AlgebraElement& b) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coords_ == b.coords_; }
  std::string str() const { return parent_->format(coords_); }

 private:
  AlgebraPtr parent_;
  Vector coords_;
};

enum class MapKind { Homomorphism, AntiHomomorphism };

const char* to_string(MapKind k);
MapKind compose_kinds(MapKind outer, MapKind inner);

/// Linear map between algebras claimed to be multiplicative or anti-multiplicative.
struct AlgebraMap {
  AlgebraPtr domain;
  AlgebraPtr codomain;
  Matrix matrix;  // codomain.dim x domain.dim
  MapKind kind = MapKind::Homomorphism;

  Vector apply(const Vector& v) const { return matrix * v; }
  Vector apply_basis(std::size_t i) const { return matrix.column(i); }
};

AlgebraMap identity_map(const AlgebraPtr& a);
/// outer o inner
AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner);

Report verify_algebra(const Algebra& a);
Report verify_map(const AlgebraMap& f);

/// Subalgebra spanned by a subspace closed under products and containing 1, with
/// the inclusion map. Basis is the echelon basis of the subspace.
struct Subalgebra {
  AlgebraPtr algebra;
  Matrix inclusion;  // ambient.dim x sub.dim
};
Subalgebra subalgebra(const Algebra& ambient, const Subspace& s, const std::string& prefix);

// --- tensor utilities ----------------------------------------------------
// Tensor powers use row-major index order: e_i ⊗ e_j has index i * dim2 + j.

std::size_t tensor_dim(const std::vector<std::size_t>& dims);
Vector tensor(const Vector& x, const Vector& y);
/// Applies m to tensor factor q; the factor's dimension becomes m.rows().
Vector apply_on_factor(const Vector& t, const std::vector<std::size_t>& dims, std::size_t q, const Matrix& m);
/// Swaps the two factors of an element of k^n ⊗ k^m.
Vector flip(const Vector& t, std::size_t n, std::size_t m);
/// Multiplication map A ⊗ A -> A.
Vector multiply_out(const Algebra& a, const Vector& t);
/// (x1 ⊗ y1)(x2 ⊗ y2) = x1x2 ⊗ y1y2 in A ⊗ A.
Vector tensor_product_mul(const Algebra& a, const Vector& t, const Vector& u);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace hopfkit
