#include "hopfkit/integrallab.hpp"

namespace hopfkit {

namespace {

/// Columns are total_action(e_p, x) for the basis of d.
Matrix action_columns(const DualRing& d, const Vector& x) {
  Matrix M(d.field(), x.size(), d.dim());
  for (std::size_t p = 0; p < d.dim(); ++p) M.set_column(p, d.total_action(unit_vector(d.field(), d.dim(), p), x));
  return M;
}

std::optional<Matrix> invert_square(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  return invert(m);
}

std::string rank_text(const Matrix& m) {
  return "rank " + std::to_string(rank(m)) + " of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_bijective(Check& c, const std::string& what, const Matrix& m, const std::optional<Matrix>& inv) {
  c.expect(inv.has_value(), [&] { return Certificate{what, rank_text(m), "invertible", {}}; });
}

template <class F>
void for_basis(const Algebra& A, F&& f) {
  for (std::size_t a = 0; a < A.dim(); ++a) f(a, A.basis_vector(a));
}

Vector left_factor_mul(const Vector& t, std::size_t n, std::size_t q, const Matrix& m) { return apply_on_factor(t, {n, n}, q, m); }

void left_integral_check(Check& c, const LeftBialgebroid& lb, const Vector& ell) {
  const Algebra& A = *lb.total();
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector lhs = A.mul(e, ell);
    Vector rhs = A.mul(lb.s().apply(lb.counit(e)), ell);
    c.expect(lhs == rhs, [&] { return Certificate{"a=" + A.name(a), A.format(lhs), A.format(rhs), {}}; });
  });
}

void right_integral_check(Check& c, const RightBialgebroid& rb, const Vector& ups) {
  const Algebra& A = *rb.total();
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector lhs = A.mul(ups, e);
    Vector rhs = A.mul(ups, rb.s().apply(rb.counit(e)));
    c.expect(lhs == rhs, [&] { return Certificate{"a=" + A.name(a), A.format(lhs), A.format(rhs), {}}; });
  });
}

/// Bijectivity of Υ_L on A_* and ₗΥ on _*A.
void lower_bijective_check(Check& c, const LeftBialgebroid& lb, const Vector& ups) {
  DualRing lower = DualRing::build(DualKind::LowerStar, lb);
  DualRing star_lower = DualRing::build(DualKind::StarLower, lb);
  Matrix M1 = action_columns(lower, ups), M2 = action_columns(star_lower, ups);
  check_bijective(c, "Upsilon_L", M1, invert_square(M1));
  check_bijective(c, "L_Upsilon", M2, invert_square(M2));
}

HopfAlgebroid hopf_on_ring(const HopfAlgebroid& h, const AlgebraPtr& A) {
  return HopfAlgebroid{on_rings(h.lb, A, h.lb.base()), on_rings(h.rb, A, h.rb.base()),
                       AlgebraMap{A, A, h.S.matrix, MapKind::AntiHomomorphism},
                       AlgebraMap{A, A, h.S_inv.matrix, MapKind::AntiHomomorphism}, h.base_antiiso};
}

MorphismReport arrow(const LeftBialgebroid& from, const LeftBialgebroid& to, const Matrix& Phi, const Matrix& phi) {
  return verify_morphism(from, to, AlgebraMap{from.total(), to.total(), Phi, MapKind::Homomorphism},
                         AlgebraMap{from.base(), to.base(), phi, MapKind::Homomorphism});
}

void absorb_iso(Check& c, const MorphismReport& mr) {
  absorb(c, mr.report);
  if (mr.report.passed() && !mr.isomorphism) c.fail_instance({"components", "not invertible", "invertible", {}});
}

}  // namespace

bool IntprResult::consistent() const {
  for (bool b : conditions)
    if (b != conditions[0]) return false;
  return true;
}

IntegralSpace integral_space(const LeftBialgebroid& lb) {
  const Algebra& A = *lb.total();
  Subspace s = Subspace::whole(A.field(), A.dim());
  for_basis(A, [&](std::size_t, const Vector& e) {
    if (s.dim() == 0) return;
    s = s.intersection(kernel(A.left_mult(e) - A.left_mult(lb.s().apply(lb.counit(e)))));
  });
  return IntegralSpace{IntegralSide::Left, std::move(s)};
}

IntegralSpace integral_space(const RightBialgebroid& rb) {
  const Algebra& A = *rb.total();
  Subspace s = Subspace::whole(A.field(), A.dim());
  for_basis(A, [&](std::size_t, const Vector& e) {
    if (s.dim() == 0) return;
    s = s.intersection(kernel(A.right_mult(e) - A.right_mult(rb.s().apply(rb.counit(e)))));
  });
  return IntegralSpace{IntegralSide::Right, std::move(s)};
}

IntegralSpace integral_space(const HopfAlgebroid& h, IntegralSide side) {
  return side == IntegralSide::Left ? integral_space(h.lb) : integral_space(h.rb);
}

bool is_left_integral(const LeftBialgebroid& lb, const Vector& ell) {
  Check c;
  left_integral_check(c, lb, ell);
  return c.failures == 0;
}

bool is_right_integral(const RightBialgebroid& rb, const Vector& upsilon) {
  Check c;
  right_integral_check(c, rb, upsilon);
  return c.failures == 0;
}

IntprResult intpr_equivalences(const HopfAlgebroid& h, const Vector& ell) {
  IntprResult out;
  out.report = Report("integral equivalences");
  const Algebra& A = *h.total();
  const std::size_t n = A.dim();
  Check& c1 = out.report.add("intpr/(i)", "a ℓ = s_L π_L(a) ℓ");
  left_integral_check(c1, h.lb, ell);
  Check& c2 = out.report.add("intpr/(ii)", "a ℓ = t_L π_L(a) ℓ");
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector lhs = A.mul(e, ell);
    Vector rhs = A.mul(h.lb.t().apply(h.lb.counit(e)), ell);
    c2.expect(lhs == rhs, [&] { return Certificate{"a=" + A.name(a), A.format(lhs), A.format(rhs), {}}; });
  });
  Check& c3 = out.report.add("intpr/(iii)", "S(ℓ) is a right integral");
  right_integral_check(c3, h.rb, h.S.apply(ell));
  Check& c4 = out.report.add("intpr/(iv)", "S^-1(ℓ) is a right integral");
  right_integral_check(c4, h.rb, h.S_inv.apply(ell));
  Check& c5 = out.report.add("intpr/(v)", "S(a) ℓ(1) ⊗ ℓ(2) = ℓ(1) ⊗ a ℓ(2) in A^R ⊗^R A");
  const BalancedTensorSpace& T = h.rb.tensor_space();
  Vector t = h.rb.coproduct(ell);
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector lhs = left_factor_mul(t, n, 0, A.left_mult(h.S.apply(e)));
    Vector rhs = left_factor_mul(t, n, 1, A.left_mult(e));
    c5.expect(T.equivalent(lhs, rhs), [&] { return Certificate{"a=" + A.name(a), T.format(lhs), T.format(rhs), {}}; });
  });
  const Check* cs[] = {&c1, &c2, &c3, &c4, &c5};
  for (std::size_t i = 0; i < 5; ++i) out.conditions[i] = cs[i]->failures == 0;
  return out;
}

NondegeneracyResult right_witness(const RightBialgebroid& rb, const Vector& ell) {
  NondegeneracyResult out;
  out.report = Report("non-degeneracy");
  DualRing upper = DualRing::build(DualKind::UpperStar, rb);
  DualRing star_upper = DualRing::build(DualKind::StarUpper, rb);
  Matrix M1 = action_columns(upper, ell), M2 = action_columns(star_upper, ell);
  auto inv1 = invert_square(M1), inv2 = invert_square(M2);
  Check& c1 = out.report.add("nondegenerate/(ell_R)", "φ ↦ φ ⇀ ℓ is bijective on A^*");
  check_bijective(c1, "ell_R", M1, inv1);
  Check& c2 = out.report.add("nondegenerate/(R_ell)", "φ ↦ φ ⇁ ℓ is bijective on *A");
  check_bijective(c2, "R_ell", M2, inv2);
  if (!inv1) {
    out.degenerate = Degenerate{"ell_R", M1, rank(M1)};
    return out;
  }
  if (!inv2) {
    out.degenerate = Degenerate{"R_ell", M2, rank(M2)};
    return out;
  }
  const Vector& one = rb.total()->unit();
  Vector ls = *inv1 * one, sl = *inv2 * one;
  out.integral = NondegenerateIntegral{ell, std::move(upper), std::move(star_upper), M1, *inv1, M2, *inv2, ls, sl};
  return out;
}

NondegeneracyResult nondegeneracy(const HopfAlgebroid& h, const Vector& ell) {
  if (!is_left_integral(h.lb, ell)) throw IntegralError("element is not a left integral");
  NondegeneracyResult out = right_witness(h.rb, ell);
  if (!out.integral) return out;
  const NondegenerateIntegral& nd = *out.integral;
  const Algebra& A = *h.total();
  Check& inv = out.report.add("nondegenerate/(fsrinv)", "ℓ_R^-1(a) = λ* ↼ S(a) and ᵣℓ^-1(a) = *λ ⇂ S^-1(a)");
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector l1 = nd.ell_R_inverse * e, r1 = nd.upper.dual_action(h.S.apply(e), nd.lambda_star);
    inv.expect(l1 == r1, [&] {
      return Certificate{"ell_R^-1 at a=" + A.name(a), nd.upper.ring()->format(l1), nd.upper.ring()->format(r1), {}};
    });
    Vector l2 = nd.R_ell_inverse * e, r2 = nd.star_upper.dual_action(h.S_inv.apply(e), nd.star_lambda);
    inv.expect(l2 == r2, [&] {
      return Certificate{"R_ell^-1 at a=" + A.name(a), nd.star_upper.ring()->format(l2), nd.star_upper.ring()->format(r2), {}};
    });
  });
  Check& s1 = out.report.add("nondegenerate/(S-ell)", "S(ℓ) is a non-degenerate right integral");
  right_integral_check(s1, h.rb, h.S.apply(ell));
  lower_bijective_check(s1, h.lb, h.S.apply(ell));
  Check& s2 = out.report.add("nondegenerate/(S-inverse-ell)", "S^-1(ℓ) is a non-degenerate right integral");
  right_integral_check(s2, h.rb, h.S_inv.apply(ell));
  lower_bijective_check(s2, h.lb, h.S_inv.apply(ell));
  return out;
}

Report frobenius_check(const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  Report rep("Frobenius system");
  const Algebra& A = *h.total();
  const Algebra& R = *h.rb.base();
  const std::size_t n = A.dim();
  Matrix Lam = nd.upper.functional(nd.lambda_star);
  Matrix sR = h.rb.s().matrix;
  Vector t = apply_on_factor(h.rb.coproduct(nd.ell), {n, n}, 1, h.S.matrix);
  auto E = [&](const Vector& x) { return sR * (Lam * x); };

  // Sum x E(y a) and sum E(a x) y, with x ⊗ y swapped when mirrored.
  auto identities = [&](bool mirrored, Check& c) {
    for_basis(A, [&](std::size_t a, const Vector& e) {
      Vector first = A.zero(), second = A.zero();
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& v = t[p * n + q];
          if (v.is_zero()) continue;
          Vector x = A.basis_vector(mirrored ? q : p), y = A.basis_vector(mirrored ? p : q);
          axpy(first, v, A.mul(x, E(A.mul(y, e))));
          axpy(second, v, A.mul(E(A.mul(e, x)), y));
        }
      c.expect(first == e, [&] { return Certificate{"x s_R(λ*(y a)), a=" + A.name(a), A.format(first), A.name(a), {}}; });
      c.expect(second == e, [&] { return Certificate{"s_R(λ*(a x)) y, a=" + A.name(a), A.format(second), A.name(a), {}}; });
    });
  };
  Check standard;
  identities(false, standard);
  bool use_mirror = false;
  if (standard.failures) {
    Check mirrored;
    identities(true, mirrored);
    use_mirror = mirrored.failures == 0;
  }
  Check& qb = rep.add("frobenius/(quasi-basis)", "x s_R(λ*(y a)) = a = s_R(λ*(a x)) y for x ⊗ y = ℓ(1) ⊗ S(ℓ(2))");
  if (use_mirror)
    identities(true, qb);
  else
    identities(false, qb);
  rep.add("frobenius/(orientation)", use_mirror ? "mirrored" : "standard").pass_instance();

  Check& bi = rep.add("frobenius/(bimodule)", "λ*(s_R(r) a s_R(r')) = r λ*(a) r'");
  for_basis(A, [&](std::size_t a, const Vector& e) {
    for (std::size_t r = 0; r < R.dim(); ++r) {
      Vector rv = R.basis_vector(r);
      Vector l1 = Lam * A.mul(sR * rv, e), r1 = R.mul(rv, Lam * e);
      Vector l2 = Lam * A.mul(e, sR * rv), r2 = R.mul(Lam * e, rv);
      bi.expect(l1 == r1, [&] { return Certificate{"left, a=" + A.name(a) + ", r=" + R.name(r), R.format(l1), R.format(r1), {}}; });
      bi.expect(l2 == r2, [&] { return Certificate{"right, a=" + A.name(a) + ", r=" + R.name(r), R.format(l2), R.format(r2), {}}; });
    }
  });
  return rep;
}

TildeS twap(const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  TildeS out;
  out.report = Report("~S");
  const AlgebraPtr& A = h.total();
  DualRing lower = DualRing::build(DualKind::LowerStar, h.lb);
  Matrix nu_f = h.lb.pi() * h.rb.s().matrix * nd.upper.functional(nd.lambda_star);
  auto nu = lower.coordinates(nu_f);
  if (!nu) throw IntegralError("π_L s_R λ* is not in the lower-star dual");
  out.nu = *nu;
  Matrix M(A->field(), A->dim(), A->dim());
  for (std::size_t a = 0; a < A->dim(); ++a) M.set_column(a, lower.total_action(lower.dual_action(A->basis_vector(a), *nu), nd.ell));
  out.map = AlgebraMap{A, A, M, MapKind::AntiHomomorphism};
  Check& hom = out.report.add("twap/(anti-homomorphism)", "~S reverses products and keeps 1");
  absorb(hom, verify_map(out.map));
  Check& bij = out.report.add("twap/(bijective)", "~S is invertible");
  auto inv = invert_square(M);
  check_bijective(bij, "~S", M, inv);
  out.inverse = AlgebraMap{A, A, inv ? *inv : M, MapKind::AntiHomomorphism};
  return out;
}

Report duality_diagram(const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  Report rep("duality diagram");
  DualRing lower = DualRing::build(DualKind::LowerStar, h.lb);
  DualRing star_lower = DualRing::build(DualKind::StarLower, h.lb);
  Matrix ell_L = action_columns(lower, nd.ell), L_ell = action_columns(star_lower, nd.ell);
  auto ell_L_inv = invert_square(ell_L), L_ell_inv = invert_square(L_ell);
  Check& b1 = rep.add("diagram/(ell_L)", "φ ↦ ℓ ↼ φ is bijective on A_*");
  check_bijective(b1, "ell_L", ell_L, ell_L_inv);
  Check& b2 = rep.add("diagram/(L_ell)", "φ ↦ ℓ ⇂ φ is bijective on _*A");
  check_bijective(b2, "L_ell", L_ell, L_ell_inv);
  TildeS ts = twap(h, nd);
  Check& tw = rep.add("diagram/(twap)", "~S is an anti-automorphism");
  absorb(tw, ts.report);

  Check& left = rep.add("diagram/(left)", "(ℓ_R^-1 ℓ_L, π_R s_L): (A_*R)^op_cop -> A^*_L");
  Check& right = rep.add("diagram/(right)", "(ᵣℓ^-1 ₗℓ, π_R t_L): (_*A_R)^op_cop -> *A_L");
  Check& bottom = rep.add("diagram/(bottom)", "(ᵣℓ^-1 ~S^-1 ℓ_R, π_R S^-1 t_R): A^*_L -> *A_L");
  Check& top = rep.add("diagram/(top)", "(ₗℓ^-1 ~S^-1 ℓ_L, id): (A_*R)^op_cop -> (_*A_R)^op_cop");
  Check& square = rep.add("diagram/(square)", "bottom o left = right o top");
  if (!ell_L_inv || !L_ell_inv || !ts.report.passed()) {
    for (Check* c : {&left, &right, &bottom, &top, &square}) c->abort("ℓ_L, ₗℓ or ~S is not bijective");
    return rep;
  }
  LeftBialgebroid src1 = dual_right_bialgebroid(lower).opposite().coopposite();
  LeftBialgebroid src2 = dual_right_bialgebroid(star_lower).opposite().coopposite();
  LeftBialgebroid tgt1 = dual_left_bialgebroid(nd.upper);
  LeftBialgebroid tgt2 = dual_left_bialgebroid(nd.star_upper);
  const Matrix& sTi = ts.inverse.matrix;
  Matrix P_left = nd.ell_R_inverse * ell_L;
  Matrix P_right = nd.R_ell_inverse * L_ell;
  Matrix P_bottom = nd.R_ell_inverse * sTi * nd.ell_R;
  Matrix P_top = *L_ell_inv * sTi * ell_L;
  absorb_iso(left, arrow(src1, tgt1, P_left, h.rb.pi() * h.lb.s().matrix));
  absorb_iso(right, arrow(src2, tgt2, P_right, h.rb.pi() * h.lb.t().matrix));
  absorb_iso(bottom, arrow(tgt1, tgt2, P_bottom, h.rb.pi() * h.S_inv.matrix * h.rb.t().matrix));
  absorb_iso(top, arrow(src1, src2, P_top, Matrix::identity(h.lb.field(), h.lb.base()->dim())));
  Matrix x = P_bottom * P_left, y = P_right * P_top;
  square.expect(x == y, [&] { return Certificate{"matrices", "differ", "equal", {}}; });
  return rep;
}

DualHopf dual_hopf_algebroid(const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  DualRing lower = DualRing::build(DualKind::LowerStar, h.lb);
  RightBialgebroid rbs = dual_right_bialgebroid(lower);
  TildeS ts = twap(h, nd);
  const AlgebraPtr& D = rbs.total();
  const std::size_t m = D->dim();
  Matrix M(D->field(), m, m);
  for (std::size_t p = 0; p < m; ++p)
    M.set_column(p, lower.dual_action(lower.total_action(D->basis_vector(p), nd.ell), ts.nu));
  AlgebraMap S_star{D, D, M, MapKind::AntiHomomorphism};
  if (!invert_square(M)) throw IntegralError("S_* is not invertible");
  Report rep("dual Hopf algebroid");
  Check& conj = rep.add("dual-hopf/(conjugate)", "S_* = ℓ_L^-1 ~S ℓ_L");
  Matrix ell_L = action_columns(lower, nd.ell);
  conj.expect(ell_L * M == ts.map.matrix * ell_L, [&] { return Certificate{"ℓ_L S_*", "differs from ~S ℓ_L", "", {}}; });
  HopfAlgebroid hopf = assemble_hopf_from_right(rbs, S_star);
  Check& hv = rep.add("dual-hopf/(hopf)", "the triple on A_* is a Hopf algebroid");
  absorb(hv, verify_hopf(hopf));
  Check& li = rep.add("dual-hopf/(left-integral)", "π_L s_R λ* is a left integral");
  left_integral_check(li, hopf.lb, ts.nu);
  Check& ri = rep.add("dual-hopf/(right-integral)", "π_L s_R λ* is a right integral");
  right_integral_check(ri, hopf.rb, ts.nu);
  Check& ndc = rep.add("dual-hopf/(nondegenerate)", "π_L s_R λ* is non-degenerate");
  if (li.failures == 0) {
    NondegeneracyResult r = nondegeneracy(hopf, ts.nu);
    absorb(ndc, r.report);
  } else {
    ndc.abort("not a left integral");
  }
  return DualHopf{std::move(hopf), std::move(lower), ts.nu, std::move(S_star), std::move(rep)};
}

namespace {

/// Columns a -> coordinates in target of the functional ψ -> (Q ψ)(P a).
std::optional<Matrix> evaluation_map(const DualRing& first, const DualRing& target, const Matrix& Q, const Matrix& P) {
  const Field& f = first.field();
  const std::size_t n = P.cols(), m = first.dim();
  Matrix Phi(f, target.dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector e = P.column(a);
    Matrix F(f, first.base()->dim(), m);
    for (std::size_t p = 0; p < m; ++p) F.set_column(p, first.evaluate(Q.column(p), e));
    auto coords = target.coordinates(F);
    if (!coords) return std::nullopt;
    Phi.set_column(a, *coords);
  }
  return Phi;
}

void evaluation_check(Check& c, const LeftBialgebroid& from, const LeftBialgebroid& to, const std::optional<Matrix>& Phi) {
  if (!Phi) {
    c.fail_instance({"evaluation", "violates the module law of the second dual", "", {}});
    return;
  }
  auto phi = induced_base_map(from.s(), to.s(), *Phi);
  if (!phi) {
    c.fail_instance({"base", "s_L(L) is not mapped into the source image", "", {}});
    return;
  }
  absorb_iso(c, arrow(from, to, *Phi, *phi));
}

}  // namespace

Report double_dual(const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  Report rep("double dual");
  const Field& f = h.lb.field();
  const std::size_t n = h.dim();
  DualHopf D = dual_hopf_algebroid(h, nd);
  const std::size_t m = D.lower.dim();
  Check& bi = rep.add("double-dual/(bialgebroid)", "a ↦ [ψ ↦ ψ(a)] is an isomorphism A_L -> *(A_*R)_L");
  DualRing su = DualRing::build(DualKind::StarUpper, dual_right_bialgebroid(D.lower));
  evaluation_check(bi, h.lb, dual_left_bialgebroid(su),
                   evaluation_map(D.lower, su, Matrix::identity(f, m), Matrix::identity(f, n)));
  Check& hc = rep.add("double-dual/(hopf)", "a ↦ [ψ ↦ S_*(ψ)(~S(a))] is an isomorphism onto the second dual Hopf algebroid");
  NondegeneracyResult r = nondegeneracy(D.hopf, D.two_sided);
  if (!r.integral) {
    hc.abort("the two-sided integral of the dual is degenerate");
    return rep;
  }
  DualHopf DD = dual_hopf_algebroid(D.hopf, *r.integral);
  evaluation_check(hc, h.lb, DD.hopf.lb, evaluation_map(D.lower, DD.lower, D.S_star.matrix, twap(h, nd).map.matrix));
  return rep;
}

NondegeneracyResult transport_integral(const HopfAlgebroid& target, const AlgebraMap& Phi, const NondegenerateIntegral& nd) {
  return nondegeneracy(target, Phi.apply(nd.ell));
}

WeakHopfAlgebra dual_weak_hopf(const WeakHopfAlgebra& w) {
  const Algebra& H = *w.H;
  const Field& f = H.field();
  const std::size_t n = H.dim();
  std::vector<std::string> names;
  for (const auto& s : H.names()) names.push_back("d(" + s + ")");
  std::vector<StructureConstant> sc;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < n; ++a)
        if (!w.Delta(p * n + q, a).is_zero()) sc.push_back({p, q, a, w.Delta(p * n + q, a)});
  AlgebraPtr Hd = share(Algebra(f, std::move(names), w.epsilon.row(0), sc));
  Matrix Delta(f, n * n, n);
  for (const auto& c : H.structure_constants()) Delta(c.i * n + c.j, c.k) = c.value;
  Matrix eps = Matrix::from_rows(f, n, {H.unit()});
  return WeakHopfAlgebra{Hd, Delta, eps, AlgebraMap{Hd, Hd, w.S.matrix.transpose(), MapKind::AntiHomomorphism},
                         AlgebraMap{Hd, Hd, w.S_inv.matrix.transpose(), MapKind::AntiHomomorphism}};
}

Report weak_dual_iso(const WeakHopfAlgebra& w, const HopfAlgebroid& h, const NondegenerateIntegral& nd) {
  Report rep("weak Hopf dual");
  const Field& f = w.H->field();
  const std::size_t n = w.H->dim();
  WeakHopfAlgebra hat = dual_weak_hopf(w);
  Check& wh = rep.add("whadiso/(dual-weak-hopf)", "the k-dual is a weak Hopf algebra");
  absorb(wh, verify_weak_hopf(hat));
  HopfAlgebroid hh = weak_hopf_to_hopf_algebroid(hat);
  DualRing lower = DualRing::build(DualKind::LowerStar, h.lb);
  RightBialgebroid rbs = dual_right_bialgebroid(lower);
  const std::size_t m = lower.dim();
  Matrix epsL = w.epsilon * h.lb.s().matrix;
  Matrix Phi(f, n, m);
  for (std::size_t p = 0; p < m; ++p) Phi.set_column(p, (epsL * lower.functional(unit_vector(f, m, p))).row(0));
  const Algebra& L = *h.lb.base();
  Vector c = hat.Delta * hat.H->unit();
  const Matrix& incl_R = hh.rb.s().matrix;
  Matrix phi(f, hh.rb.base()->dim(), L.dim());
  Check& mc = rep.add("whadiso/(right-morphism)", "(ε ψ_*, ε[1] ε[2]) is a right bialgebroid isomorphism H_*R -> Ĥ_R");
  for (std::size_t l = 0; l < L.dim(); ++l) {
    Vector x = h.lb.s().apply_basis(l);
    Vector y = zero_vector(f, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!c[p * n + q].is_zero()) y[p] = y[p] + c[p * n + q] * x[q];
    auto coords = solve(incl_R, y);
    mc.expect(coords.has_value(), [&] { return Certificate{"l=" + L.name(l), hat.H->format(y), "not in R̂", {}}; });
    if (coords) phi.set_column(l, *coords);
  }
  if (mc.failures) return rep;
  MorphismReport mr = verify_morphism(rbs, hh.rb, AlgebraMap{rbs.total(), hh.rb.total(), Phi, MapKind::Homomorphism},
                                      AlgebraMap{rbs.base(), hh.rb.base(), phi, MapKind::Homomorphism});
  absorb_iso(mc, mr);

  DualHopf D = dual_hopf_algebroid(h, nd);
  Check& dh = rep.add("whadiso/(dual-hopf)", "the dual Hopf algebroid verifies");
  absorb(dh, D.report);
  SeparabilityStructure sep_L = separability_from_weak(w, h);
  const std::size_t d = L.dim();
  Matrix delta(f, d * d, d);
  for (std::size_t l = 0; l < d; ++l) delta.set_column(l, flip(sep_L.delta.column(l), d, d));
  SeparabilityStructure sep{D.hopf.lb.base(), delta, sep_L.psi, flip(sep_L.e_f, d, d)};
  Check& sc = rep.add("whadiso/(separability)", "the opposite separability structure on the dual base");
  absorb(sc, verify_separability(sep));
  WhaDecision dec = wha_decide(D.hopf, sep);
  Check& tw = rep.add("whadiso/(twist)", "a twist of S_* gives a weak Hopf algebra on H_*");
  absorb(tw, dec.report);
  Check& iso = rep.add("whadiso/(weak-hopf-iso)", "Φ is a weak Hopf algebra isomorphism onto Ĥ");
  if (!dec.weak) {
    iso.abort("no weak Hopf structure on the dual");
    return rep;
  }
  const WeakHopfAlgebra& wd = *dec.weak;
  iso.expect(hat.Delta * Phi == kron(Phi, Phi) * wd.Delta, [] { return Certificate{"coproduct", "Δ̂ Φ", "(Φ⊗Φ) Δ", {}}; });
  iso.expect(hat.epsilon * Phi == wd.epsilon, [] { return Certificate{"counit", "ε̂ Φ", "ε", {}}; });
  iso.expect(hat.S.matrix * Phi == Phi * wd.S.matrix, [] { return Certificate{"antipode", "Ŝ Φ", "Φ S", {}}; });
  iso.expect(mr.isomorphism, [] { return Certificate{"Φ", "not invertible", "", {}}; });
  return rep;
}

Report verify_bgdnd(const RightBialgebroid& rb, const Vector& ell) {
  Report rep("non-degenerate left integral in a right bialgebroid");
  NondegeneracyResult w = right_witness(rb, ell);
  Check& c1 = rep.add("bgdnd/(i)", "ℓ_R and ᵣℓ are bijective");
  absorb(c1, w.report);
  Check& sf = rep.add("bgdnd/(sf)", "ℓ(1) ⊗ a ℓ(2) = [(*λ ⇂ a) ⇁ ℓ] ℓ(1) ⊗ ℓ(2)");
  Check& sb = rep.add("bgdnd/(sb)", "a ℓ(1) ⊗ ℓ(2) = ℓ(1) ⊗ [(λ* ↼ a) ⇀ ℓ] ℓ(2)");
  if (!w.integral) {
    sf.abort("condition i) fails");
    sb.abort("condition i) fails");
    return rep;
  }
  const NondegenerateIntegral& nd = *w.integral;
  const Algebra& A = *rb.total();
  const std::size_t n = A.dim();
  const BalancedTensorSpace& T = rb.tensor_space();
  Vector t = rb.coproduct(ell);
  for_basis(A, [&](std::size_t a, const Vector& e) {
    Vector lhs = left_factor_mul(t, n, 1, A.left_mult(e));
    Vector x = nd.star_upper.total_action(nd.star_upper.dual_action(e, nd.star_lambda), ell);
    Vector rhs = left_factor_mul(t, n, 0, A.left_mult(x));
    sf.expect(T.equivalent(lhs, rhs), [&] { return Certificate{"a=" + A.name(a), T.format(lhs), T.format(rhs), {}}; });
    Vector lhs2 = left_factor_mul(t, n, 0, A.left_mult(e));
    Vector y = nd.upper.total_action(nd.upper.dual_action(e, nd.lambda_star), ell);
    Vector rhs2 = left_factor_mul(t, n, 1, A.left_mult(y));
    sb.expect(T.equivalent(lhs2, rhs2), [&] { return Certificate{"a=" + A.name(a), T.format(lhs2), T.format(rhs2), {}}; });
  });
  return rep;
}

Report lac_check(const RightBialgebroid& rb, const Vector& k) {
  Report rep("technical lemma");
  const Algebra& A = *rb.total();
  const Algebra& R = *rb.base();
  auto side = [&](DualKind kind, const char* id, const char* desc, const Matrix& base_map) {
    Check& c = rep.add(id, desc);
    DualRing d = DualRing::build(kind, rb);
    Matrix M = action_columns(d, k);
    auto inv = invert_square(M);
    if (!inv) {
      c.abort("the map is not bijective (" + rank_text(M) + ")");
      return;
    }
    Vector kappa = *inv * A.unit();
    for_basis(A, [&](std::size_t a, const Vector& e) {
      Vector lhs = d.total_action(kappa, e);
      Vector ev = d.evaluate(kappa, e);
      Vector rhs = base_map * ev;
      c.expect(lhs == rhs, [&] { return Certificate{"a=" + A.name(a) + ", value " + R.format(ev), A.format(lhs), A.format(rhs), {}}; });
    });
  };
  side(DualKind::UpperStar, "lac/(source)", "κ* ⇀ a = s_R(κ*(a))", rb.s().matrix);
  side(DualKind::StarUpper, "lac/(tac)", "*κ ⇁ a = t_R(*κ(a))", rb.t().matrix);
  return rep;
}

LsResult ls_antipode(const RightBialgebroid& rb, const Vector& ell) {
  Report rep = verify_bgdnd(rb, ell);
  if (!rep.passed()) throw IntegralError("not a non-degenerate left integral: " + rep.first_failure());
  NondegeneracyResult w = right_witness(rb, ell);
  const NondegenerateIntegral& nd = *w.integral;
  const AlgebraPtr& Ap = rb.total();
  const Algebra& A = *Ap;
  const std::size_t n = A.dim();
  Matrix S(A.field(), n, n), Si(A.field(), n, n);
  std::vector<Matrix> after_S(n), after_Si(n);
  for_basis(A, [&](std::size_t a, const Vector& e) {
    after_S[a] = nd.star_upper.total_action_matrix(nd.star_upper.dual_action(e, nd.star_lambda));
    after_Si[a] = nd.upper.total_action_matrix(nd.upper.dual_action(e, nd.lambda_star));
    S.set_column(a, after_S[a] * ell);
    Si.set_column(a, after_Si[a] * ell);
  });
  Check& inv = rep.add("ls/(inverse)", "(λ* ↼ a) ⇀ ℓ inverts (*λ ⇂ a) ⇁ ℓ");
  bool inverse_ok = S * Si == Matrix::identity(A.field(), n) && Si * S == Matrix::identity(A.field(), n);
  inv.expect(inverse_ok, [] { return Certificate{"S S^-1", "not the identity", "identity", {}}; });
  if (!inverse_ok) throw IntegralError("the integral formulas do not give inverse maps");
  const BalancedTensorSpace& T = rb.tensor_space();
  Vector t = rb.coproduct(ell);
  Check& grs = rep.add("ls/(grs)", "γ_R S(a) = ℓ(1) ⊗ (*λ ⇂ a) ⇁ ℓ(2)");
  Check& grsi = rep.add("ls/(grsi)", "γ_R S^-1(a) = (λ* ↼ a) ⇀ ℓ(1) ⊗ ℓ(2)");
  for_basis(A, [&](std::size_t a, const Vector&) {
    Vector l1 = rb.coproduct(S.column(a)), r1 = left_factor_mul(t, n, 1, after_S[a]);
    grs.expect(T.equivalent(l1, r1), [&] { return Certificate{"a=" + A.name(a), T.format(l1), T.format(r1), {}}; });
    Vector l2 = rb.coproduct(Si.column(a)), r2 = left_factor_mul(t, n, 0, after_Si[a]);
    grsi.expect(T.equivalent(l2, r2), [&] { return Certificate{"a=" + A.name(a), T.format(l2), T.format(r2), {}}; });
  });
  HopfAlgebroid hopf = assemble_hopf_from_right(rb, AlgebraMap{Ap, Ap, S, MapKind::AntiHomomorphism});
  Check& gl = rep.add("ls/(gamma-L)", "γ_L(a) = S(S^-1(a)(2)) ⊗ S(S^-1(a)(1))");
  const BalancedTensorSpace& TL = hopf.lb.tensor_space();
  for_basis(A, [&](std::size_t a, const Vector&) {
    Vector y = flip_apply(rb.coproduct(Si.column(a)), n, S);
    Vector x = hopf.lb.coproduct_basis(a);
    gl.expect(TL.equivalent(x, y), [&] { return Certificate{"a=" + A.name(a), TL.format(x), TL.format(y), {}}; });
  });
  Check& hv = rep.add("ls/(hopf)", "the assembled triple is a Hopf algebroid");
  absorb(hv, verify_hopf(hopf));
  Check& ndc = rep.add("ls/(nondegenerate)", "ℓ is a non-degenerate left integral of the result");
  try {
    absorb(ndc, nondegeneracy(hopf, ell).report);
  } catch (const IntegralError& e) {
    ndc.fail_instance({"ℓ", e.what(), "left integral", {}});
  }
  return LsResult{std::move(hopf), std::move(rep)};
}

LsResult ls_right(const LeftBialgebroid& lb, const Vector& upsilon) {
  LsResult inner = ls_antipode(lb.opposite(), upsilon);
  HopfAlgebroid hopf = hopf_on_ring(opposite(inner.hopf), lb.total());
  Report rep = std::move(inner.report);
  const Algebra& A = *lb.total();
  Check& fm = rep.add("ls-right/(formula)", "S(a) = Υ ↼ (a ⇀ ρ_*)");
  DualRing lower = DualRing::build(DualKind::LowerStar, lb);
  Matrix M = action_columns(lower, upsilon);
  auto inv = invert_square(M);
  check_bijective(fm, "Upsilon_L", M, inv);
  if (inv) {
    Vector rho = *inv * A.unit();
    for_basis(A, [&](std::size_t a, const Vector& e) {
      Vector direct = lower.total_action(lower.dual_action(e, rho), upsilon);
      Vector got = hopf.S.apply(e);
      fm.expect(direct == got, [&] { return Certificate{"a=" + A.name(a), A.format(got), A.format(direct), {}}; });
    });
  }
  return LsResult{std::move(hopf), std::move(rep)};
}

}  // namespace hopfkit
