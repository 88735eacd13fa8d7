#pragma once

#include <array>
#include <optional>
#include <string>

#include "hopfkit/dualspace.hpp"
#include "hopfkit/hopfcore.hpp"
#include "hopfkit/twistlab.hpp"

namespace hopfkit {

struct IntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class IntegralSide { Left, Right };

struct IntegralSpace {
  IntegralSide side = IntegralSide::Left;
  Subspace space;
};

/// a ℓ = s_L π_L(a) ℓ for all a.
IntegralSpace integral_space(const LeftBialgebroid& lb);
/// Υ a = Υ s_R π_R(a) for all a.
IntegralSpace integral_space(const RightBialgebroid& rb);
/// Left integrals of h.lb or right integrals of h.rb.
IntegralSpace integral_space(const HopfAlgebroid& h, IntegralSide side);

bool is_left_integral(const LeftBialgebroid& lb, const Vector& ell);
bool is_right_integral(const RightBialgebroid& rb, const Vector& upsilon);

struct IntprResult {
  std::array<bool, 5> conditions{};
  Report report;
  bool consistent() const;
};

/// Conditions i) .. v) evaluated independently, ids intpr/(i) .. intpr/(v).
IntprResult intpr_equivalences(const HopfAlgebroid& h, const Vector& ell);

/// ℓ_R: φ ↦ φ⇀ℓ on A^* and ᵣℓ: φ ↦ φ⇁ℓ on *A, both duals of the right bialgebroid.
struct NondegenerateIntegral {
  Vector ell;
  DualRing upper;       // A^*
  DualRing star_upper;  // *A
  Matrix ell_R, ell_R_inverse;
  Matrix R_ell, R_ell_inverse;
  Vector lambda_star;  // ℓ_R^-1(1) in A^*
  Vector star_lambda;  // ᵣℓ^-1(1) in *A
};

struct Degenerate {
  std::string map;  // "ell_R" or "R_ell"
  Matrix matrix;
  std::size_t rank = 0;
};

struct NondegeneracyResult {
  std::optional<NondegenerateIntegral> integral;
  std::optional<Degenerate> degenerate;
  Report report;
  bool nondegenerate() const { return integral.has_value(); }
};

/// Bijectivity of ℓ_R and ᵣℓ for an arbitrary element of a right bialgebroid.
NondegeneracyResult right_witness(const RightBialgebroid& rb, const Vector& ell);
/// Throws IntegralError unless ell is a left integral of h. Also checks the inverse formulas
/// and that S(ℓ), S^-1(ℓ) are non-degenerate right integrals.
NondegeneracyResult nondegeneracy(const HopfAlgebroid& h, const Vector& ell);

/// Quasi-basis ℓ(1) ⊗ S(ℓ(2)) with λ*. The orientation actually satisfied is reported in
/// frobenius/(orientation).
Report frobenius_check(const HopfAlgebroid& h, const NondegenerateIntegral& nd);

struct TildeS {
  AlgebraMap map;
  AlgebraMap inverse;
  Vector nu;  // π_L s_R λ* in A_*
  Report report;
};

/// ~S(a) = ℓ ↼ (a ⇀ π_L s_R λ*).
TildeS twap(const HopfAlgebroid& h, const NondegenerateIntegral& nd);

/// The four arrows between (A_*R)^op_cop, (_*A_R)^op_cop, A^*_L and *A_L and the square.
Report duality_diagram(const HopfAlgebroid& h, const NondegenerateIntegral& nd);

struct DualHopf {
  HopfAlgebroid hopf;  // on A_*
  DualRing lower;
  Vector two_sided;    // π_L s_R λ*
  AlgebraMap S_star;
  Report report;
};

/// S_* = ℓ_L^-1 ~S ℓ_L on the dual right bialgebroid A_*R, left side reconstructed.
DualHopf dual_hopf_algebroid(const HopfAlgebroid& h, const NondegenerateIntegral& nd);

/// Evaluation A_L -> *(A_*R)_L, and a ↦ [ψ ↦ S_*(ψ)(~S(a))] onto the left bialgebroid of the
/// dual of the dual Hopf algebroid.
Report double_dual(const HopfAlgebroid& h, const NondegenerateIntegral& nd);

/// nondegeneracy(target, Φ(ℓ)).
NondegeneracyResult transport_integral(const HopfAlgebroid& target, const AlgebraMap& Phi, const NondegenerateIntegral& nd);

/// The k-dual weak Hopf algebra with (φψ)(h) = φ(h(1)) ψ(h(2)).
WeakHopfAlgebra dual_weak_hopf(const WeakHopfAlgebra& w);

/// Φ(ψ_*) = ε ψ_*, φ(l) = ε[1] ε[2](l) as a right bialgebroid isomorphism H_*R -> Ĥ_R̂,
/// and the weak Hopf structure obtained from the dual Hopf algebroid via (sep).
Report weak_dual_iso(const WeakHopfAlgebra& w, const HopfAlgebroid& h, const NondegenerateIntegral& nd);

/// ids bgdnd/(i), bgdnd/(sf), bgdnd/(sb).
Report verify_bgdnd(const RightBialgebroid& rb, const Vector& ell);
/// ids lac/(source), lac/(tac); a side whose map is not bijective is aborted.
Report lac_check(const RightBialgebroid& rb, const Vector& k);

struct LsResult {
  HopfAlgebroid hopf;
  Report report;
};

/// S(a) = (*λ ⇂ a) ⇁ ℓ, S^-1(a) = (λ* ↼ a) ⇀ ℓ; throws IntegralError unless verify_bgdnd passes.
LsResult ls_antipode(const RightBialgebroid& rb, const Vector& ell);
/// Through (A_L)^op; the antipode is compared with Υ ↼ (a ⇀ ρ_*).
LsResult ls_right(const LeftBialgebroid& lb, const Vector& upsilon);

}  // namespace hopfkit
