#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

/// The eight ways a base ring acts on the total ring through a source or target map.
enum class ActionTag {
  L_left,     // l·a = s_L(l) a
  L_right_t,  // a·l = t_L(l) a
  L_right_s,  // a·l = a s_L(l)
  L_left_t,   // l·a = a t_L(l)
  R_right_s,  // a·r = a s_R(r)
  R_left_t,   // r·a = a t_R(r)
  R_left_s,   // r·a = s_R(r) a
  R_right_t,  // a·r = t_R(r) a
};

const char* to_string(ActionTag t);

struct ActionSpec {
  ActionTag tag;
  AlgebraMap map;  // base -> total

  /// True when the action multiplies the total-ring element from the left.
  bool multiplies_left() const;
  /// Matrix of a -> action by base basis element b.
  Matrix action_matrix(std::size_t b) const;
};

/// Checks that the map kind fits the tag (source maps multiplicative, target maps anti-multiplicative).
ActionSpec make_action(ActionTag tag, AlgebraMap map);

/// Balancing at the boundary between factor q and q+1: right action on the left factor
/// against left action on the right factor, both by the same base algebra.
struct Junction {
  ActionSpec on_left_factor;
  ActionSpec on_right_factor;
};

/// Tensor power A ⊗_B ... ⊗_B A presented as a quotient of the k-tensor power by the
/// span of all balancing relations. The section picks the representative supported
/// on the non-pivot columns of the echelon form of the relations.
class BalancedTensorSpace {
 public:
  BalancedTensorSpace(AlgebraPtr total, std::vector<Junction> junctions);

  const AlgebraPtr& total() const { return total_; }
  const std::vector<Junction>& junctions() const { return junctions_; }
  std::size_t factors() const { return junctions_.size() + 1; }
  std::size_t full_dim() const { return relations_.ambient(); }
  std::size_t quotient_dim() const { return free_.size(); }
  const Subspace& relations() const { return relations_; }
  const std::vector<std::uint32_t>& quotient_basis_columns() const { return free_; }

  /// Quotient coordinates of a full tensor.
  Vector project(const Vector& full) const;
  /// Canonical full representative of a class.
  Vector lift(const Vector& quotient) const;
  /// lift(project(v)): the normal form of v.
  Vector normal_form(const Vector& full) const { return relations_.reduce(full); }
  bool equivalent(const Vector& x, const Vector& y) const;

  Matrix projection_matrix() const;
  Matrix section_matrix() const;

  /// True when the linear map f on full tensors sends every relation into the
  /// relations of target, so it descends to the quotients.
  bool descends(const std::function<Vector(const Vector&)>& f, const BalancedTensorSpace& target) const;
  /// Same, for a map from the quotient into a plain vector space (f kills relations).
  bool kills_relations(const std::function<Vector(const Vector&)>& f) const;

  std::string format(const Vector& full) const;
  std::string describe() const;

 private:
  AlgebraPtr total_;
  std::vector<Junction> junctions_;
  Subspace relations_;
  std::vector<std::uint32_t> free_;
};

using TensorSpacePtr = std::shared_ptr<const BalancedTensorSpace>;

TensorSpacePtr balanced_tensor(const AlgebraPtr& total, const ActionSpec& on_left_factor, const ActionSpec& on_right_factor);
TensorSpacePtr balanced_triple(const AlgebraPtr& total, const Junction& first, const Junction& second);

}  // namespace hopfkit
