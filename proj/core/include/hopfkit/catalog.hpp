#pragma once

#include <string>
#include <vector>

#include "hopfkit/twistlab.hpp"

namespace hopfkit {

class FiniteGroup {
 public:
  /// mul[g][h] = index of gh; group axioms are checked.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul);

  static FiniteGroup cyclic(std::size_t n);
  /// Symmetric group on three letters: r of order 3, s of order 2, s r = r^2 s.
  static FiniteGroup symmetric3();

  std::size_t order() const { return names_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return mul_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

struct Character {
  std::vector<Scalar> values;  // indexed like the group elements
};

/// Checks chi(gh) = chi(g) chi(h) and chi(e) = 1; throws on failure.
Character make_character(const FiniteGroup& G, std::vector<Scalar> values);
/// t^k -> omega^k on the cyclic group of order n; omega^n must be 1.
Character cyclic_character(const FiniteGroup& G, const Scalar& omega);
/// The sign character of Z_2; needs characteristic different from 2.
Character sign_character(const FiniteGroup& z2, const Field& f);
Character trivial_character(const FiniteGroup& G, const Field& f);

AlgebraPtr group_algebra(const FiniteGroup& G, const Field& f);

/// kG as a left bialgebroid over k: gamma(g) = g ⊗ g, pi(g) = 1.
LeftBialgebroid group_left_bialgebroid(const FiniteGroup& G, const Field& f);
/// kG with S(g) = g^-1 and the reconstructed right bialgebroid.
HopfAlgebroid group_hopf_algebroid(const FiniteGroup& G, const Field& f);

struct TwistedGroupAlgebra {
  LeftBialgebroid lb;
  AlgebraMap S;  // S_chi(g) = chi(g) g^-1
  HopfAlgebroid hopf;
};

TwistedGroupAlgebra character_twisted(const FiniteGroup& G, const Character& chi, const Field& f);

/// kG viewed as a weak Hopf algebra, Delta(g) = g ⊗ g.
WeakHopfAlgebra group_weak_hopf(const FiniteGroup& G, const Field& f);

/// n x n matrix units, Delta(e_ij) = e_ij ⊗ e_ij, eps(e_ij) = 1, S(e_ij) = e_ji.
WeakHopfAlgebra pair_groupoid_weak_hopf(std::size_t n, const Field& f);
/// k^G on the idempotents delta_g, Delta(delta_g) = sum_{hk=g} delta_h ⊗ delta_k.
WeakHopfAlgebra dual_function_algebra(const FiniteGroup& G, const Field& f);

}  // namespace hopfkit
