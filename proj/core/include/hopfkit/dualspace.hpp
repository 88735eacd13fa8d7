#pragma once

#include "hopfkit/bialgebroid.hpp"

namespace hopfkit {

struct DualError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// LowerStar: maps A_L -> L_L, phi(t_L(l) a) = phi(a) l.
/// StarLower: maps _L A -> _L L, phi(s_L(l) a) = l phi(a).
/// UpperStar: maps A^R -> R^R, phi(a s_R(r)) = phi(a) r.
/// StarUpper: maps ^R A -> ^R R, phi(a t_R(r)) = r phi(a).
/// a ↼ phi = s_L(phi(a(1))) a(2) for a functional phi: A -> L (dim L x dim A).
Matrix harpoon(const LeftBialgebroid& lb, const Matrix& phi);

enum class DualKind { LowerStar, StarLower, UpperStar, StarUpper };

const char* to_string(DualKind k);

/// One of the four base-ring duals of a bialgebroid with its transposed product.
/// Elements are coordinate vectors in the echelon basis of the constraint kernel
/// inside Hom_k(A, base); a functional is a (dim base) x (dim A) matrix.
class DualRing {
 public:
  static DualRing build(DualKind kind, const LeftBialgebroid& lb);
  static DualRing build(DualKind kind, const RightBialgebroid& rb);

  DualKind kind() const { return kind_; }
  bool is_lower() const { return kind_ == DualKind::LowerStar || kind_ == DualKind::StarLower; }
  const AlgebraPtr& ring() const { return ring_; }
  const AlgebraPtr& total() const { return total_; }
  const AlgebraPtr& base() const { return base_; }
  std::size_t dim() const { return ring_->dim(); }
  const Field& field() const { return ring_->field(); }

  /// Columns are the basis functionals flattened as index a * dim(base) + b.
  const Matrix& embedding() const { return embedding_; }
  Matrix functional(const Vector& phi) const;
  /// Coordinates of a functional, empty if it violates the module constraint.
  std::optional<Vector> coordinates(const Matrix& functional) const;
  Vector evaluate(const Vector& phi, const Vector& a) const;

  /// Transposed regular action: a ⇀ phi (lower kinds) or phi ↼ a (upper kinds).
  Vector dual_action(const Vector& a, const Vector& phi) const;
  /// Action on the total ring: a ↼ phi, a ⇂ phi, phi ⇀ a or phi ⇁ a.
  Vector total_action(const Vector& phi, const Vector& a) const;
  /// a -> total_action(phi, a) as a matrix.
  Matrix total_action_matrix(const Vector& phi) const;

  /// Ring axioms, the module law of total_action and nondegeneracy of the pairing.
  Report verify() const;

 private:
  friend RightBialgebroid dual_right_bialgebroid(const DualRing& d);
  friend LeftBialgebroid dual_left_bialgebroid(const DualRing& d);

  DualKind kind_ = DualKind::LowerStar;
  /// Left bialgebroid whose lower-star dual this is, possibly on A^op or with L^op.
  LeftBialgebroid carrier_;
  bool ring_is_opposite_ = false;
  AlgebraPtr ring_, total_, base_;
  /// Lower-star ring of the carrier; equals ring_ unless ring_is_opposite_.
  AlgebraPtr carrier_ring_;
  Matrix embedding_;
  Subspace module_;
};

/// Dual of a lower-kind ring: a right bialgebroid over the base with
/// s(l) = [a -> pi_L(a s_L(l))], t(l) = [a -> l pi_L(a)], counit phi -> phi(1)
/// and the coproduct fixed by sum x_pq psi_p(a t_L(psi_q(b))) = phi(ab).
RightBialgebroid dual_right_bialgebroid(const DualRing& d);
/// Dual of an upper-kind ring, a left bialgebroid over R.
LeftBialgebroid dual_left_bialgebroid(const DualRing& d);

}  // namespace hopfkit
