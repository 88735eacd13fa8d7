#pragma once

#include <optional>

#include "hopfkit/bialgebroid.hpp"

namespace hopfkit {

/// (A_L, A_R, S) on a common total ring. base_antiiso identifies R with L^op.
struct HopfAlgebroid {
  LeftBialgebroid lb;
  RightBialgebroid rb;
  AlgebraMap S;
  AlgebraMap S_inv;
  AlgebraMap base_antiiso;  // R -> L^op, homomorphism

  const AlgebraPtr& total() const { return lb.total(); }
  std::size_t dim() const { return lb.dim(); }
};

enum class MixedKind { LLR, RRL };

/// A_L ⊗_L A^R ⊗^R A (LLR) or A^R ⊗^R A_L ⊗_L A (RRL).
TensorSpacePtr build_mixed_triple(MixedKind kind, const LeftBialgebroid& lb, const RightBialgebroid& rb);

/// x ⊗ y ⊗ ... -> f on one factor, as used for S_{A⊗A}: a ⊗ b -> f(b) ⊗ f(a).
Vector flip_apply(const Vector& t, std::size_t n, const Matrix& f);

Report verify_hopf(const HopfAlgebroid& h);
/// The eight identities relating S to the structure maps, and the two left
/// bialgebroid isomorphisms A_L -> (A_R)^op_cop.
Report verify_sisom(const HopfAlgebroid& h);

/// A_R = (A, R, S s_L nu^-1, s_L nu^-1, flip(S⊗S) gamma_L S^-1, nu pi_L S^-1).
RightBialgebroid reconstruct_right(const LeftBialgebroid& lb, const AlgebraMap& S, const AlgebraMap& nu);
/// nu = identity of L^op.
RightBialgebroid reconstruct_right(const LeftBialgebroid& lb, const AlgebraMap& S);
/// Full triple from (lb, S) with the reconstructed right bialgebroid.
HopfAlgebroid assemble_hopf(const LeftBialgebroid& lb, const AlgebraMap& S);

/// Mirror of assemble_hopf: the left bialgebroid over R^op is reconstructed from (rb, S)
/// with gamma_L(a) = S^-1(S(a)^(2)) ⊗ S^-1(S(a)^(1)).
HopfAlgebroid assemble_hopf_from_right(const RightBialgebroid& rb, const AlgebraMap& S);

Report check_luiiv(const LeftBialgebroid& lb, const AlgebraMap& S);

/// xi: quotient of A_L ⊗_L A -> A ⊗ A; nullopt uses the canonical section.
Report check_lu_axioms(const LeftBialgebroid& lb, const AlgebraMap& S, const std::optional<Matrix>& xi = std::nullopt);

struct GaloisMaps {
  TensorSpacePtr alpha_domain, beta_domain, beta_codomain;
  Matrix alpha, alpha_inverse, beta, beta_inverse;  // quotient coordinates
  Report report;
};

/// alpha(a⊗b) = a(1) ⊗ a(2) b and beta(a⊗b) = a(2) ⊗ a(1) b with their explicit inverses.
GaloisMaps galois_maps(const HopfAlgebroid& h);

struct UniquenessResult {
  bool equal = false;
  Report diagnostic;
};

/// Both (lb, rb, S1) and (lb, rb, S2) are assumed to verify. The diagnostic evaluates
/// S1(a(1)) a(2)(1) S2(a(2)(2)) and compares it with S1(a) and S2(a).
UniquenessResult antipode_unique(const LeftBialgebroid& lb, const RightBialgebroid& rb, const AlgebraMap& S1,
                                 const AlgebraMap& S2);

/// (A_R^op, A_L^op, S^-1)
HopfAlgebroid opposite(const HopfAlgebroid& h);
/// (A_L cop, A_R cop, S^-1)
HopfAlgebroid coopposite(const HopfAlgebroid& h);

}  // namespace hopfkit
