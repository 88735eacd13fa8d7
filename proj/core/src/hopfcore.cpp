#include "hopfkit/hopfcore.hpp"

namespace hopfkit {

namespace {

Matrix require_inverse(const Matrix& m, const char* what) {
  auto inv = invert(m);
  if (!inv) throw DimensionError(std::string(what) + " is not invertible");
  return *inv;
}

/// Columns gamma(e_a) with S applied to both factors and the factors swapped.
Matrix conjugate_coproduct(const Matrix& gamma, const Matrix& outer, const Matrix& inner, std::size_t n) {
  Matrix g = gamma * inner;
  Matrix r(gamma.field(), n * n, n);
  for (std::size_t a = 0; a < n; ++a) r.set_column(a, flip_apply(g.column(a), n, outer));
  return r;
}

/// x ⊗ y -> f(x) y
Vector mult_after_left(const Algebra& A, const Vector& t, const Matrix& f) {
  return multiply_out(A, apply_on_factor(t, {A.dim(), A.dim()}, 0, f));
}

/// x ⊗ y -> x f(y)
Vector mult_after_right(const Algebra& A, const Vector& t, const Matrix& f) {
  return multiply_out(A, apply_on_factor(t, {A.dim(), A.dim()}, 1, f));
}

/// Both mixed coassociativity identities, recorded into c.
void mixed_coassociativity(const LeftBialgebroid& lb, const RightBialgebroid& rb, Check& c) {
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim();
  const std::vector<std::size_t> dims{n, n};
  TensorSpacePtr llr = build_mixed_triple(MixedKind::LLR, lb, rb);
  TensorSpacePtr rrl = build_mixed_triple(MixedKind::RRL, lb, rb);

  auto left_on = [&](const Matrix& g) { return [&g, &dims](const Vector& v) { return apply_on_factor(v, dims, 0, g); }; };
  auto right_on = [&](const Matrix& g) { return [&g, &dims](const Vector& v) { return apply_on_factor(v, dims, 1, g); }; };
  struct Descent {
    const BalancedTensorSpace& from;
    std::function<Vector(const Vector&)> f;
    const BalancedTensorSpace& to;
    const char* what;
  };
  const Descent descents[] = {
      {rb.tensor_space(), left_on(lb.gamma()), *llr, "gamma_L ⊗ id on A^R ⊗^R A"},
      {lb.tensor_space(), right_on(rb.gamma()), *llr, "id ⊗ gamma_R on A_L ⊗_L A"},
      {lb.tensor_space(), left_on(rb.gamma()), *rrl, "gamma_R ⊗ id on A_L ⊗_L A"},
      {rb.tensor_space(), right_on(lb.gamma()), *rrl, "id ⊗ gamma_L on A^R ⊗^R A"},
  };
  bool descend_ok = true;
  for (const auto& d : descents)
    if (!d.from.descends(d.f, d.to)) {
      c.fail_instance({"well-definedness", d.what, "descends to the mixed triple", {}});
      descend_ok = false;
    }
  if (!descend_ok) return;

  for (std::size_t a = 0; a < n; ++a) {
    Vector gl = lb.coproduct_basis(a), gr = rb.coproduct_basis(a);
    Vector lhs = apply_on_factor(gr, dims, 0, lb.gamma());
    Vector rhs = apply_on_factor(gl, dims, 1, rb.gamma());
    c.expect(llr->equivalent(lhs, rhs), [&] {
      return Certificate{"a=" + A.name(a) + " (gamma_L ⊗ id) gamma_R vs (id ⊗ gamma_R) gamma_L", llr->format(lhs),
                         llr->format(rhs), {}};
    });
    Vector lhs2 = apply_on_factor(gl, dims, 0, rb.gamma());
    Vector rhs2 = apply_on_factor(gr, dims, 1, lb.gamma());
    c.expect(rrl->equivalent(lhs2, rhs2), [&] {
      return Certificate{"a=" + A.name(a) + " (gamma_R ⊗ id) gamma_L vs (id ⊗ gamma_L) gamma_R", rrl->format(lhs2),
                         rrl->format(rhs2), {}};
    });
  }
}

/// Anti-automorphism check shared by the Hopf, Lu and reconstruction verifiers.
/// Returns the inverse when S is bijective.
std::optional<Matrix> check_antipode(Check& c, const AlgebraMap& S) {
  if (S.kind != MapKind::AntiHomomorphism) c.fail_instance({"S", "declared homomorphism", "anti-homomorphism", {}});
  absorb(c, verify_map(S));
  auto inv = invert(S.matrix);
  if (!inv) c.fail_instance({"S", "singular", "bijective", {}});
  return inv;
}

}  // namespace

Vector flip_apply(const Vector& t, std::size_t n, const Matrix& f) {
  const std::size_t m = f.rows();
  Vector x = apply_on_factor(apply_on_factor(t, {n, n}, 0, f), {m, n}, 1, f);
  return flip(x, m, m);
}

TensorSpacePtr build_mixed_triple(MixedKind kind, const LeftBialgebroid& lb, const RightBialgebroid& rb) {
  if (lb.dim() != rb.dim()) throw DimensionError("mixed triple: total rings differ in dimension");
  Junction left{lb.right_action(), lb.left_action()};
  Junction right{rb.right_action(), rb.left_action()};
  if (kind == MixedKind::LLR) return balanced_triple(lb.total(), left, right);
  return balanced_triple(lb.total(), right, left);
}

Report verify_hopf(const HopfAlgebroid& h) {
  Report rep("hopf algebroid");
  const LeftBialgebroid& lb = h.lb;
  const RightBialgebroid& rb = h.rb;
  const Algebra& A = *lb.total();
  const Algebra& L = *lb.base();
  const Algebra& R = *rb.base();
  const std::size_t n = A.dim();

  rep.merge(verify_left_bialgebroid(lb));
  rep.merge(verify_right_bialgebroid(rb));

  Check& tot = rep.add("hopf/(total)", "left and right bialgebroids share the total ring");
  tot.expect(same_structure(A, *rb.total()), [] { return Certificate{"total rings", "differ", "equal", {}}; });
  if (A.dim() != rb.dim()) return rep;

  Check& anti = rep.add("hopf/(antipode)", "S is an anti-automorphism of A with inverse S^-1");
  check_antipode(anti, h.S);
  {
    Matrix I = Matrix::identity(A.field(), n);
    anti.expect(h.S.matrix * h.S_inv.matrix == I && h.S_inv.matrix * h.S.matrix == I,
                [] { return Certificate{"S ∘ S^-1", "not the identity", "identity", {}}; });
  }

  Check& iso = rep.add("hopf/(base-antiiso)", "the given map R -> L^op is a ring isomorphism");
  {
    const AlgebraMap& nu = h.base_antiiso;
    iso.expect(same_structure(*nu.domain, R), [] { return Certificate{"domain", "other ring", "R", {}}; });
    iso.expect(same_structure(*nu.codomain, L.opposite()), [] { return Certificate{"codomain", "other ring", "L^op", {}}; });
    if (iso.passed) {
      absorb(iso, verify_map(nu));
      iso.expect(invert(nu.matrix).has_value(), [] { return Certificate{"R -> L^op", "singular", "bijective", {}}; });
    }
  }

  Check& d1 = rep.add("hopf/(defi)", "s_L(L) = t_R(R) and t_L(L) = s_R(R) as subrings of A");
  {
    Subspace sl = Subspace::span_columns(lb.s().matrix), tl = Subspace::span_columns(lb.t().matrix);
    Subspace sr = Subspace::span_columns(rb.s().matrix), tr = Subspace::span_columns(rb.t().matrix);
    d1.expect(sl == tr, [&] { return Certificate{"s_L(L) vs t_R(R)", std::to_string(sl.dim()) + "-dim image",
                                                 std::to_string(tr.dim()) + "-dim image, different", {}}; });
    d1.expect(tl == sr, [&] { return Certificate{"t_L(L) vs s_R(R)", std::to_string(tl.dim()) + "-dim image",
                                                 std::to_string(sr.dim()) + "-dim image, different", {}}; });
  }

  Check& d2 = rep.add("hopf/(defii)", "(gamma_L ⊗ id) gamma_R = (id ⊗ gamma_R) gamma_L and (gamma_R ⊗ id) gamma_L = (id ⊗ gamma_L) gamma_R");
  if (!d1.passed)
    d2.abort("subrings of (defi) differ, so the mixed triples are not defined");
  else
    mixed_coassociativity(lb, rb, d2);

  Check& d3 = rep.add("hopf/(defiii)", "S(t_L(l) a t_L(l')) = s_L(l') S(a) s_L(l) and S(t_R(r') a t_R(r)) = s_R(r) S(a) s_R(r')");
  {
    auto twisted = [&](const AlgebraMap& t, const AlgebraMap& s, const Algebra& B, const char* side) {
      for (std::size_t l = 0; l < B.dim(); ++l)
        for (std::size_t m = 0; m < B.dim(); ++m) {
          Vector tl = t.apply_basis(l), tm = t.apply_basis(m), sl = s.apply_basis(l), sm = s.apply_basis(m);
          for (std::size_t a = 0; a < n; ++a) {
            Vector ea = A.basis_vector(a);
            Vector lhs = h.S.apply(A.mul(A.mul(tl, ea), tm));
            Vector rhs = A.mul(A.mul(sm, h.S.apply(ea)), sl);
            d3.expect(lhs == rhs, [&] {
              return Certificate{std::string(side) + " l=" + B.name(l) + ", l'=" + B.name(m) + ", a=" + A.name(a), A.format(lhs),
                                 A.format(rhs), {}};
            });
          }
        }
    };
    twisted(lb.t(), lb.s(), L, "L:");
    twisted(rb.t(), rb.s(), R, "R:");
  }

  Check& d4 = rep.add("hopf/(defiv)", "S(a(1)) a(2) = s_R(pi_R(a)) and a^(1) S(a^(2)) = s_L(pi_L(a))");
  {
    bool wl = lb.tensor_space().kills_relations([&](const Vector& v) { return mult_after_left(A, v, h.S.matrix); });
    bool wr = rb.tensor_space().kills_relations([&](const Vector& v) { return mult_after_right(A, v, h.S.matrix); });
    if (!wl) d3.fail_instance({"well-definedness", "x ⊗ y -> S(x) y does not vanish on A_L ⊗_L A relations", "vanishes", {}});
    if (!wr) d3.fail_instance({"well-definedness", "x ⊗ y -> x S(y) does not vanish on A^R ⊗^R A relations", "vanishes", {}});
    if (!wl || !wr) {
      d4.abort("(defiii) fails, so the expressions are not well defined on the balanced tensor products");
    } else {
      for (std::size_t a = 0; a < n; ++a) {
        Vector ea = A.basis_vector(a);
        Vector lhs = mult_after_left(A, lb.coproduct_basis(a), h.S.matrix);
        Vector rhs = rb.s().apply(rb.counit(ea));
        d4.expect(lhs == rhs, [&] { return Certificate{"a=" + A.name(a) + " (left)", A.format(lhs), A.format(rhs), {}}; });
        Vector lhs2 = mult_after_right(A, rb.coproduct_basis(a), h.S.matrix);
        Vector rhs2 = lb.s().apply(lb.counit(ea));
        d4.expect(lhs2 == rhs2, [&] { return Certificate{"a=" + A.name(a) + " (right)", A.format(lhs2), A.format(rhs2), {}}; });
      }
    }
  }
  return rep;
}

Report verify_sisom(const HopfAlgebroid& h) {
  Report rep("antipode as bialgebroid isomorphism");
  const LeftBialgebroid& lb = h.lb;
  const RightBialgebroid& rb = h.rb;
  const Algebra& A = *lb.total();
  const Algebra& L = *lb.base();
  const Algebra& R = *rb.base();
  const std::size_t n = A.dim();
  const Matrix& S = h.S.matrix;
  const Matrix& Si = h.S_inv.matrix;

  struct BaseIdentity {
    const char* tag;
    const char* text;
    Matrix lhs, rhs;
  };
  const Matrix& pR = rb.pi();
  const BaseIdentity base_ids[] = {
      {"(sisom-1)", "s_R pi_R s_L = S s_L", rb.s().matrix * pR * lb.s().matrix, S * lb.s().matrix},
      {"(sisom-2)", "s_R pi_R t_L = S^-1 s_L", rb.s().matrix * pR * lb.t().matrix, Si * lb.s().matrix},
      {"(sisom-3)", "t_R pi_R s_L = S t_L", rb.t().matrix * pR * lb.s().matrix, S * lb.t().matrix},
      {"(sisom-4)", "t_R pi_R t_L = S^-1 t_L", rb.t().matrix * pR * lb.t().matrix, Si * lb.t().matrix},
  };
  for (const auto& id : base_ids) {
    Check& c = rep.add(std::string("sisom/") + id.tag, id.text);
    for (std::size_t l = 0; l < L.dim(); ++l) {
      Vector x = id.lhs.column(l), y = id.rhs.column(l);
      c.expect(x == y, [&] { return Certificate{"l=" + L.name(l), A.format(x), A.format(y), {}}; });
    }
  }
  const BaseIdentity counit_ids[] = {
      {"(sisom-5)", "pi_R s_L pi_L = pi_R S", pR * lb.s().matrix * lb.pi(), pR * S},
      {"(sisom-6)", "pi_R t_L pi_L = pi_R S^-1", pR * lb.t().matrix * lb.pi(), pR * Si},
  };
  for (const auto& id : counit_ids) {
    Check& c = rep.add(std::string("sisom/") + id.tag, id.text);
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = id.lhs.column(a), y = id.rhs.column(a);
      c.expect(x == y, [&] { return Certificate{"a=" + A.name(a), R.format(x), R.format(y), {}}; });
    }
  }

  const BalancedTensorSpace& TL = lb.tensor_space();
  const BalancedTensorSpace& TR = rb.tensor_space();
  auto coproduct_identity = [&](const char* tag, const char* text, const Matrix& f) {
    Check& c = rep.add(std::string("sisom/") + tag, text);
    if (!TL.descends([&](const Vector& v) { return flip_apply(v, n, f); }, TR)) {
      c.fail_instance({"well-definedness", "a ⊗ b -> f(b) ⊗ f(a) does not descend to A^R ⊗^R A", "descends", {}});
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = flip_apply(lb.coproduct_basis(a), n, f);
      Vector y = rb.coproduct(f.column(a));
      c.expect(TR.equivalent(x, y), [&] { return Certificate{"a=" + A.name(a), TR.format(x), TR.format(y), {}}; });
    }
  };
  coproduct_identity("(sisom-7)", "S_{A⊗_L A} gamma_L = gamma_R S", S);
  coproduct_identity("(sisom-8)", "(S_{A⊗_R A})^-1 gamma_L = gamma_R S^-1", Si);

  LeftBialgebroid target = rb.opposite().coopposite();
  auto morphism = [&](const char* tag, const char* text, const Matrix& Phi, const Matrix& t) {
    Check& c = rep.add(std::string("sisom/") + tag, text);
    AlgebraMap P{lb.total(), target.total(), Phi, MapKind::Homomorphism};
    AlgebraMap p{lb.base(), target.base(), pR * t, MapKind::Homomorphism};
    MorphismReport m = verify_morphism(lb, target, P, p);
    absorb(c, m.report);
    if (m.report.passed() && !m.isomorphism) c.fail_instance({"components", "not invertible", "invertible", {}});
  };
  morphism("(morphism-S)", "(S, pi_R s_L) is a left bialgebroid isomorphism A_L -> (A_R)^op_cop", S, lb.s().matrix);
  morphism("(morphism-Sinv)", "(S^-1, pi_R t_L) is a left bialgebroid isomorphism A_L -> (A_R)^op_cop", Si, lb.t().matrix);
  return rep;
}

RightBialgebroid reconstruct_right(const LeftBialgebroid& lb, const AlgebraMap& S, const AlgebraMap& nu) {
  const std::size_t n = lb.dim();
  if (nu.matrix.cols() != lb.base()->dim() || nu.matrix.rows() != nu.codomain->dim())
    throw DimensionError("reconstruct_right: nu has the wrong shape");
  Matrix nu_inv = require_inverse(nu.matrix, "nu");
  Matrix S_inv = require_inverse(S.matrix, "antipode");
  const AlgebraPtr& R = nu.codomain;
  AlgebraMap s_R{R, lb.total(), S.matrix * lb.s().matrix * nu_inv, MapKind::Homomorphism};
  AlgebraMap t_R{R, lb.total(), lb.s().matrix * nu_inv, MapKind::AntiHomomorphism};
  Matrix gamma = conjugate_coproduct(lb.gamma(), S.matrix, S_inv, n);
  Matrix pi = nu.matrix * lb.pi() * S_inv;
  return RightBialgebroid(lb.total(), R, std::move(s_R), std::move(t_R), std::move(gamma), std::move(pi));
}

RightBialgebroid reconstruct_right(const LeftBialgebroid& lb, const AlgebraMap& S) {
  return reconstruct_right(lb, S, identity_map(opposite_of(lb.base())));
}

HopfAlgebroid assemble_hopf(const LeftBialgebroid& lb, const AlgebraMap& S) {
  RightBialgebroid rb = reconstruct_right(lb, S);
  Matrix S_inv = require_inverse(S.matrix, "antipode");
  AlgebraMap nu_inv = identity_map(rb.base());
  return HopfAlgebroid{lb, rb, S, AlgebraMap{lb.total(), lb.total(), S_inv, MapKind::AntiHomomorphism}, nu_inv};
}

HopfAlgebroid assemble_hopf_from_right(const RightBialgebroid& rb, const AlgebraMap& S) {
  Matrix S_inv = require_inverse(S.matrix, "antipode");
  LeftBialgebroid mirror = rb.opposite();
  HopfAlgebroid m = assemble_hopf(mirror, AlgebraMap{mirror.total(), mirror.total(), S_inv, MapKind::AntiHomomorphism});
  HopfAlgebroid o = opposite(m);
  const AlgebraPtr& A = rb.total();
  return HopfAlgebroid{on_rings(o.lb, A, o.lb.base()), rb, AlgebraMap{A, A, S.matrix, MapKind::AntiHomomorphism},
                       AlgebraMap{A, A, S_inv, MapKind::AntiHomomorphism},
                       AlgebraMap{rb.base(), o.lb.base(), Matrix::identity(A->field(), rb.base()->dim()), MapKind::Homomorphism}};
}

Report check_luiiv(const LeftBialgebroid& lb, const AlgebraMap& S) {
  Report rep("antipode data on a left bialgebroid");
  const Algebra& A = *lb.total();
  const Algebra& L = *lb.base();
  const std::size_t n = A.dim();

  Check& anti = rep.add("reconstruction/(antipode)", "S is an anti-automorphism of A");
  auto S_inv = check_antipode(anti, S);

  Check& c1 = rep.add("reconstruction/(lui)", "S t_L = s_L");
  for (std::size_t l = 0; l < L.dim(); ++l) {
    Vector x = S.apply(lb.t().apply_basis(l)), y = lb.s().apply_basis(l);
    c1.expect(x == y, [&] { return Certificate{"l=" + L.name(l), A.format(x), A.format(y), {}}; });
  }

  Check& c2 = rep.add("reconstruction/(luii)", "m (S ⊗ id) gamma_L = t_L pi_L S");
  Check& c3 = rep.add("reconstruction/(luiii)", "S_{A⊗_L A} gamma_L S^-1 = (S_{A⊗_R A})^-1 gamma_L S");
  Check& c4 = rep.add("reconstruction/(luiv)", "mixed coassociativity with gamma_R = S_{A⊗_L A} gamma_L S^-1");
  if (!S_inv) {
    const char* why = "S is not bijective";
    c2.abort(why);
    c3.abort(why);
    c4.abort(why);
    return rep;
  }

  const BalancedTensorSpace& TL = lb.tensor_space();
  if (!TL.kills_relations([&](const Vector& v) { return mult_after_left(A, v, S.matrix); })) {
    c2.abort("(lui) fails, so x ⊗ y -> S(x) y is not defined on A_L ⊗_L A");
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = mult_after_left(A, lb.coproduct_basis(a), S.matrix);
      Vector y = lb.t().apply(lb.counit(S.apply_basis(a)));
      c2.expect(x == y, [&] { return Certificate{"a=" + A.name(a), A.format(x), A.format(y), {}}; });
    }
  }

  RightBialgebroid rb = reconstruct_right(lb, S);
  const BalancedTensorSpace& TR = rb.tensor_space();
  {
    bool ok = true;
    if (!TL.descends([&](const Vector& v) { return flip_apply(v, n, S.matrix); }, TR)) {
      c3.fail_instance({"well-definedness", "S_{A⊗_L A} does not descend", "descends", {}});
      ok = false;
    }
    if (!TL.descends([&](const Vector& v) { return flip_apply(v, n, *S_inv); }, TR)) {
      c3.fail_instance({"well-definedness", "(S_{A⊗_R A})^-1 does not descend", "descends", {}});
      ok = false;
    }
    if (ok)
      for (std::size_t a = 0; a < n; ++a) {
        Vector x = flip_apply(lb.coproduct(S_inv->column(a)), n, S.matrix);
        Vector y = flip_apply(lb.coproduct(S.apply_basis(a)), n, *S_inv);
        c3.expect(TR.equivalent(x, y), [&] { return Certificate{"a=" + A.name(a), TR.format(x), TR.format(y), {}}; });
      }
  }
  mixed_coassociativity(lb, rb, c4);
  return rep;
}

Report check_lu_axioms(const LeftBialgebroid& lb, const AlgebraMap& S, const std::optional<Matrix>& xi) {
  Report rep("Lu Hopf algebroid axioms");
  const Algebra& A = *lb.total();
  const Algebra& L = *lb.base();
  const std::size_t n = A.dim();
  const BalancedTensorSpace& TL = lb.tensor_space();
  Matrix section = xi ? *xi : TL.section_matrix();

  Check& anti = rep.add("lu/(antipode)", "S is an anti-automorphism of A");
  check_antipode(anti, S);

  Check& sec = rep.add("lu/(section)", "p_L ∘ xi = id");
  if (section.rows() != n * n || section.cols() != TL.quotient_dim()) {
    sec.fail_instance({"xi", std::to_string(section.rows()) + "x" + std::to_string(section.cols()),
                       std::to_string(n * n) + "x" + std::to_string(TL.quotient_dim()), {}});
    return rep;
  }
  sec.expect(TL.projection_matrix() * section == Matrix::identity(A.field(), TL.quotient_dim()),
             [] { return Certificate{"xi", "p_L ∘ xi != id", "id", {}}; });

  Check& c1 = rep.add("lu/(lu1)", "S t_L = s_L");
  for (std::size_t l = 0; l < L.dim(); ++l) {
    Vector x = S.apply(lb.t().apply_basis(l)), y = lb.s().apply_basis(l);
    c1.expect(x == y, [&] { return Certificate{"l=" + L.name(l), A.format(x), A.format(y), {}}; });
  }

  Check& c2 = rep.add("lu/(lu2)", "m (S ⊗_L id) gamma_L = t_L pi_L S");
  if (!TL.kills_relations([&](const Vector& v) { return mult_after_left(A, v, S.matrix); })) {
    c2.abort("(lu1) fails, so S ⊗_L id is not defined");
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = mult_after_left(A, lb.coproduct_basis(a), S.matrix);
      Vector y = lb.t().apply(lb.counit(S.apply_basis(a)));
      c2.expect(x == y, [&] { return Certificate{"a=" + A.name(a), A.format(x), A.format(y), {}}; });
    }
  }

  Check& c3 = rep.add("lu/(lu3)", "m (id ⊗_k S) xi gamma_L = s_L pi_L");
  for (std::size_t a = 0; a < n; ++a) {
    Vector lifted = section * TL.project(lb.coproduct_basis(a));
    Vector x = mult_after_right(A, lifted, S.matrix);
    Vector y = lb.s().apply(lb.counit(A.basis_vector(a)));
    c3.expect(x == y, [&] { return Certificate{"a=" + A.name(a), A.format(x), A.format(y), {}}; });
  }
  return rep;
}

GaloisMaps galois_maps(const HopfAlgebroid& h) {
  const LeftBialgebroid& lb = h.lb;
  const RightBialgebroid& rb = h.rb;
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim();
  const std::vector<std::size_t> dims{n, n};
  GaloisMaps g;
  g.report = Report("Galois maps");
  g.alpha_domain = balanced_tensor(lb.total(), make_action(ActionTag::L_left_t, lb.t()), make_action(ActionTag::L_right_t, lb.t()));
  g.beta_domain = balanced_tensor(lb.total(), make_action(ActionTag::L_right_s, lb.s()), make_action(ActionTag::L_left, lb.s()));
  g.beta_codomain = balanced_tensor(lb.total(), make_action(ActionTag::L_left, lb.s()), make_action(ActionTag::L_right_t, lb.t()));
  const BalancedTensorSpace& TL = lb.tensor_space();

  std::vector<Matrix> right_mult(n);
  for (std::size_t b = 0; b < n; ++b) right_mult[b] = A.right_mult(A.basis_vector(b));

  // full maps on A ⊗ A; column a*n+b is the image of e_a ⊗ e_b
  auto full_map = [&](auto&& image) {
    Matrix m(A.field(), n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m.set_column(a * n + b, image(a, b));
    return m;
  };
  Matrix alpha = full_map([&](std::size_t a, std::size_t b) { return apply_on_factor(lb.coproduct_basis(a), dims, 1, right_mult[b]); });
  Matrix alpha_inv = full_map([&](std::size_t a, std::size_t b) {
    return apply_on_factor(apply_on_factor(rb.coproduct_basis(a), dims, 1, h.S.matrix), dims, 1, right_mult[b]);
  });
  Matrix beta = full_map([&](std::size_t a, std::size_t b) { return apply_on_factor(flip(lb.coproduct_basis(a), n, n), dims, 1, right_mult[b]); });
  Matrix beta_inv = full_map([&](std::size_t a, std::size_t b) {
    Vector v = flip(apply_on_factor(rb.coproduct_basis(a), dims, 0, h.S_inv.matrix), n, n);
    return apply_on_factor(v, dims, 1, right_mult[b]);
  });

  auto analyse = [&](const char* name, const Matrix& fwd, const Matrix& inv, const BalancedTensorSpace& dom,
                     const BalancedTensorSpace& cod, Matrix& q_fwd, Matrix& q_inv) {
    std::string base = std::string("galois/(") + name;
    Check& c = g.report.add(base + ")", std::string(name) + " is a well-defined bijection");
    Check& ci = g.report.add(base + "-schinvun)", std::string("the displayed formula inverts ") + name);
    bool fwd_ok = dom.descends([&](const Vector& v) { return fwd * v; }, cod);
    bool inv_ok = cod.descends([&](const Vector& v) { return inv * v; }, dom);
    if (!fwd_ok) c.fail_instance({"well-definedness", "does not descend", "descends", {}});
    if (!inv_ok) ci.fail_instance({"well-definedness", "inverse formula does not descend", "descends", {}});
    if (!fwd_ok || !inv_ok) return;
    q_fwd = cod.projection_matrix() * fwd * dom.section_matrix();
    q_inv = dom.projection_matrix() * inv * cod.section_matrix();
    c.expect(q_fwd.is_square() && invert(q_fwd).has_value(), [&] {
      return Certificate{name, std::to_string(dom.quotient_dim()) + " -> " + std::to_string(cod.quotient_dim()) + ", rank " +
                                   std::to_string(rank(q_fwd)),
                         "bijective", {}};
    });
    if (!q_fwd.is_square()) return;
    Matrix I = Matrix::identity(A.field(), q_fwd.rows());
    ci.expect(q_fwd * q_inv == I, [&] { return Certificate{std::string(name) + " ∘ inverse", "not the identity", "identity", {}}; });
    ci.expect(q_inv * q_fwd == I, [&] { return Certificate{std::string("inverse ∘ ") + name, "not the identity", "identity", {}}; });
  };
  analyse("alpha", alpha, alpha_inv, *g.alpha_domain, TL, g.alpha, g.alpha_inverse);
  analyse("beta", beta, beta_inv, *g.beta_domain, *g.beta_codomain, g.beta, g.beta_inverse);
  return g;
}

UniquenessResult antipode_unique(const LeftBialgebroid& lb, const RightBialgebroid& rb, const AlgebraMap& S1,
                                 const AlgebraMap& S2) {
  UniquenessResult out;
  out.equal = S1.matrix == S2.matrix;
  out.diagnostic = Report("antipode uniqueness");
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim();
  Check& c = out.diagnostic.add("uniqueness/(chain)", "S1(a(1)) a(2)^(1) S2(a(2)^(2)) equals both S1(a) and S2(a)");
  TensorSpacePtr llr = build_mixed_triple(MixedKind::LLR, lb, rb);
  auto sandwich = [&](const Vector& t) {
    Vector r = A.zero();
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      if (t[idx].is_zero()) continue;
      std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
      axpy(r, t[idx], A.mul(A.mul(S1.apply_basis(i), A.basis_vector(j)), S2.apply_basis(k)));
    }
    return r;
  };
  if (!llr->kills_relations(sandwich)) {
    c.abort("x ⊗ y ⊗ z -> S1(x) y S2(z) is not defined on the mixed triple");
    return out;
  }
  for (std::size_t a = 0; a < n; ++a) {
    Vector mid = sandwich(apply_on_factor(lb.coproduct_basis(a), {n, n}, 1, rb.gamma()));
    Vector x = S1.apply_basis(a), y = S2.apply_basis(a);
    c.expect(mid == x && mid == y, [&] {
      return Certificate{"a=" + A.name(a), A.format(mid), "S1(a) = " + A.format(x) + ", S2(a) = " + A.format(y), {}};
    });
  }
  return out;
}

HopfAlgebroid opposite(const HopfAlgebroid& h) {
  LeftBialgebroid lb = h.rb.opposite();
  RightBialgebroid rb = h.lb.opposite();
  AlgebraMap S{lb.total(), lb.total(), h.S_inv.matrix, MapKind::AntiHomomorphism};
  AlgebraMap Si{lb.total(), lb.total(), h.S.matrix, MapKind::AntiHomomorphism};
  Matrix nu_inv = require_inverse(h.base_antiiso.matrix, "base anti-isomorphism");
  AlgebraMap nu{rb.base(), opposite_of(lb.base()), nu_inv, MapKind::Homomorphism};
  return HopfAlgebroid{std::move(lb), std::move(rb), std::move(S), std::move(Si), std::move(nu)};
}

HopfAlgebroid coopposite(const HopfAlgebroid& h) {
  LeftBialgebroid lb = h.lb.coopposite();
  RightBialgebroid rb = h.rb.coopposite();
  AlgebraMap S{lb.total(), lb.total(), h.S_inv.matrix, MapKind::AntiHomomorphism};
  AlgebraMap Si{lb.total(), lb.total(), h.S.matrix, MapKind::AntiHomomorphism};
  AlgebraMap nu{rb.base(), h.lb.base(), h.base_antiiso.matrix, MapKind::Homomorphism};
  return HopfAlgebroid{std::move(lb), std::move(rb), std::move(S), std::move(Si), std::move(nu)};
}

}  // namespace hopfkit
