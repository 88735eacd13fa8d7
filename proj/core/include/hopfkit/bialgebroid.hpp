#pragma once

#include <memory>
#include <mutex>

#include "hopfkit/bimodtensor.hpp"

namespace hopfkit {

class RightBialgebroid;

/// (A, L, s_L, t_L, gamma_L, pi_L). The coproduct is stored as a lift A -> A ⊗_k A of
/// the map into A_L ⊗_L A, where a·l = t_L(l) a on the left factor and l·a = s_L(l) a on
/// the right one.
class LeftBialgebroid {
 public:
  LeftBialgebroid() = default;
  LeftBialgebroid(AlgebraPtr total, AlgebraPtr base, AlgebraMap s, AlgebraMap t, Matrix gamma, Matrix pi);

  const AlgebraPtr& total() const { return total_; }
  const AlgebraPtr& base() const { return base_; }
  const AlgebraMap& s() const { return s_; }
  const AlgebraMap& t() const { return t_; }
  const Matrix& gamma() const { return gamma_; }
  const Matrix& pi() const { return pi_; }
  const Field& field() const { return total_->field(); }
  std::size_t dim() const { return total_->dim(); }

  Vector coproduct(const Vector& a) const { return gamma_ * a; }
  Vector coproduct_basis(std::size_t i) const { return gamma_.column(i); }
  Vector counit(const Vector& a) const { return pi_ * a; }

  /// A_L ⊗_L A
  const BalancedTensorSpace& tensor_space() const;
  /// A_L ⊗_L A_L ⊗_L A
  const BalancedTensorSpace& triple_space() const;
  ActionSpec right_action() const;  // a·l = t_L(l) a
  ActionSpec left_action() const;   // l·a = s_L(l) a

  /// (A, L^op, t_L, s_L, flip∘gamma_L, pi_L)
  LeftBialgebroid coopposite() const;
  /// (A^op, L, t_L, s_L, gamma_L, pi_L), a right bialgebroid.
  RightBialgebroid opposite() const;

 private:
  AlgebraPtr total_, base_;
  AlgebraMap s_, t_;
  Matrix gamma_, pi_;
  struct Cache {
    std::once_flag two, three;
    TensorSpacePtr pair, triple;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// (A, R, s_R, t_R, gamma_R, pi_R) with gamma_R landing in A^R ⊗^R A, where a·r = a s_R(r)
/// on the left factor and r·a = a t_R(r) on the right one.
class RightBialgebroid {
 public:
  RightBialgebroid() = default;
  RightBialgebroid(AlgebraPtr total, AlgebraPtr base, AlgebraMap s, AlgebraMap t, Matrix gamma, Matrix pi);

  const AlgebraPtr& total() const { return total_; }
  const AlgebraPtr& base() const { return base_; }
  const AlgebraMap& s() const { return s_; }
  const AlgebraMap& t() const { return t_; }
  const Matrix& gamma() const { return gamma_; }
  const Matrix& pi() const { return pi_; }
  const Field& field() const { return total_->field(); }
  std::size_t dim() const { return total_->dim(); }

  Vector coproduct(const Vector& a) const { return gamma_ * a; }
  Vector coproduct_basis(std::size_t i) const { return gamma_.column(i); }
  Vector counit(const Vector& a) const { return pi_ * a; }

  /// A^R ⊗^R A
  const BalancedTensorSpace& tensor_space() const;
  const BalancedTensorSpace& triple_space() const;
  ActionSpec right_action() const;  // a·r = a s_R(r)
  ActionSpec left_action() const;   // r·a = a t_R(r)

  /// (A^op, R, t_R, s_R, gamma_R, pi_R), a left bialgebroid.
  LeftBialgebroid opposite() const;
  /// (A, R^op, t_R, s_R, flip∘gamma_R, pi_R)
  RightBialgebroid coopposite() const;

 private:
  AlgebraPtr total_, base_;
  AlgebraMap s_, t_;
  Matrix gamma_, pi_;
  struct Cache {
    std::once_flag two, three;
    TensorSpacePtr pair, triple;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Report verify_left_bialgebroid(const LeftBialgebroid& lb);
Report verify_right_bialgebroid(const RightBialgebroid& rb);

struct MorphismReport {
  Report report;
  bool isomorphism = false;
};

/// (Phi, phi) with Phi: A -> A' and phi: L -> L'.
MorphismReport verify_morphism(const LeftBialgebroid& from, const LeftBialgebroid& to, const AlgebraMap& Phi,
                               const AlgebraMap& phi);
/// Right bialgebroid maps are checked through the opposite left bialgebroids.
MorphismReport verify_morphism(const RightBialgebroid& from, const RightBialgebroid& to, const AlgebraMap& Phi,
                               const AlgebraMap& phi);

/// phi = s'^{-1} ∘ Phi ∘ s when Phi maps s(L) into s'(L'); the base map a morphism must use.
std::optional<Matrix> induced_base_map(const AlgebraMap& s_from, const AlgebraMap& s_to, const Matrix& Phi);

/// The same structure maps placed on structurally equal rings; throws DimensionError otherwise.
LeftBialgebroid on_rings(const LeftBialgebroid& x, const AlgebraPtr& total, const AlgebraPtr& base);
RightBialgebroid on_rings(const RightBialgebroid& x, const AlgebraPtr& total, const AlgebraPtr& base);

/// Same algebra viewed with reversed multiplication (shared per call site).
AlgebraPtr opposite_of(const AlgebraPtr& a);

}  // namespace hopfkit
