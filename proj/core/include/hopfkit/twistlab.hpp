#pragma once

#include <optional>

#include "hopfkit/dualspace.hpp"
#include "hopfkit/hopfcore.hpp"

namespace hopfkit {

struct TwistError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invertible element of the lower-star dual, kept as functionals A -> L (dim L x dim A).
struct Twist {
  Matrix g;
  Matrix g_inverse;
};

/// Throws TwistError when g is not a lower-star functional or not invertible.
Twist make_twist(const LeftBialgebroid& lb, const Matrix& g);
Twist identity_twist(const LeftBialgebroid& lb);
/// The ring product first · second.
Twist compose_twists(const LeftBialgebroid& lb, const Twist& first, const Twist& second);
Twist inverse_twist(const Twist& t);

Report verify_twist(const LeftBialgebroid& lb, const AlgebraMap& S, const Twist& t);
/// a -> S(a ↼ g)
AlgebraMap twisted_antipode(const LeftBialgebroid& lb, const AlgebraMap& S, const Twist& t);
/// a -> S^-1(a) ↼ g^-1
AlgebraMap twisted_antipode_inverse(const LeftBialgebroid& lb, const AlgebraMap& S_inv, const Twist& t);
/// g = pi_L S^-1 S', g^-1 = pi_L S'^-1 S.
Twist recover_twist(const LeftBialgebroid& lb, const AlgebraMap& S, const AlgebraMap& S_prime);

struct WeakHopfAlgebra {
  AlgebraPtr H;
  Matrix Delta;    // n*n x n
  Matrix epsilon;  // 1 x n
  AlgebraMap S;
  AlgebraMap S_inv;
};

/// Weak bialgebra axioms only.
Report verify_weak_bialgebra(const AlgebraPtr& H, const Matrix& Delta, const Matrix& epsilon);
Report verify_weak_hopf(const WeakHopfAlgebra& w);

/// h -> eps(1(1) h) 1(2)
Matrix pi_left(const AlgebraPtr& H, const Matrix& Delta, const Matrix& epsilon);
/// h -> 1(1) eps(h 1(2))
Matrix pi_right(const AlgebraPtr& H, const Matrix& Delta, const Matrix& epsilon);

/// L = image of pi_left and R = image of pi_right as subalgebras of H.
struct WeakBases {
  Subalgebra L, R;
};
WeakBases weak_bases(const WeakHopfAlgebra& w);

/// H_L = (H, L, incl, S^-1|_L, Delta, pi_left) and H_R = (H, R, incl, S^-1|_R, Delta, pi_right).
HopfAlgebroid weak_hopf_to_hopf_algebroid(const WeakHopfAlgebra& w);

struct SeparabilityStructure {
  AlgebraPtr L;
  Matrix delta;  // d*d x d
  Matrix psi;    // 1 x d
  Vector e_f;    // delta(1)
};

/// delta(1) = 1 ⊗ 1 and psi(1) = 1 on a one-dimensional base.
SeparabilityStructure trivial_separability(const AlgebraPtr& L);
Report verify_separability(const SeparabilityStructure& sep);
/// delta(l) = l pi_left(1(1)) ⊗ 1(2), psi = eps restricted to L. The base of the result is
/// the base ring of weak_hopf_to_hopf_algebroid(w).
SeparabilityStructure separability_from_weak(const WeakHopfAlgebra& w, const AlgebraPtr& L, const Matrix& inclusion);
SeparabilityStructure separability_from_weak(const WeakHopfAlgebra& w, const HopfAlgebroid& h);

struct WeakBialgebraData {
  Matrix Delta;
  Matrix epsilon;
  Report report;
};

/// Delta(a) = t_L(e_i) a(1) ⊗ s_L(f_i) a(2), eps = psi pi_L.
WeakBialgebraData weak_bialgebra_from_sep(const LeftBialgebroid& lb, const SeparabilityStructure& sep);

struct AhatKappa {
  AlgebraPtr ahat;      // k-dual of A, (phi phi')(a) = phi(a(1)) phi'(a(2))
  DualRing lower_star;  // A_*
  Matrix kappa;         // phi -> [a -> phi(t_L(e_i) a) f_i], into lower-star coordinates
  Matrix kappa_inverse; // phi_* -> psi ∘ phi_*
  Report report;
};

AhatKappa ahat_and_kappa(const LeftBialgebroid& lb, const SeparabilityStructure& sep);

enum class WhaVerdict { Exact, Twistable, No };
const char* to_string(WhaVerdict v);

struct WhaDecision {
  WhaVerdict verdict = WhaVerdict::No;
  std::optional<Twist> twist;          // Twistable only
  std::optional<WeakHopfAlgebra> weak;  // Exact or Twistable
  Report report;
};

WhaDecision wha_decide(const HopfAlgebroid& h, const SeparabilityStructure& sep);

/// Checks ids hopf-algebra/(i) .. (iii) and hopf-algebra/(counit); all pass exactly for a Hopf
/// algebra, the first three for a twisted one.
Report hopf_algebra_criterion(const HopfAlgebroid& h);

}  // namespace hopfkit
