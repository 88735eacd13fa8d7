#include "hopfkit/twistlab.hpp"

namespace hopfkit {

const char* to_string(WhaVerdict v) {
  switch (v) {
    case WhaVerdict::Exact: return "exact";
    case WhaVerdict::Twistable: return "twistable";
    case WhaVerdict::No: return "no";
  }
  return "?";
}

namespace {

Matrix inverse_or_throw(const Matrix& m, const char* what) {
  auto inv = invert(m);
  if (!inv) throw TwistError(std::string(what) + " is not invertible");
  return *inv;
}

Vector ring_coordinates(const DualRing& d, const Matrix& g, const char* what) {
  auto c = d.coordinates(g);
  if (!c) throw TwistError(std::string(what) + " is not a lower-star functional");
  return *c;
}

/// Product in the k-tensor power with the given number of factors.
Vector power_mul(const Algebra& A, const Vector& x, const Vector& y, std::size_t factors) {
  const std::size_t n = A.dim();
  Vector out(x.size(), A.field().zero());
  std::vector<std::size_t> ix(factors), iy(factors);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (y[q].is_zero()) continue;
      std::size_t a = p, b = q;
      for (std::size_t f = factors; f-- > 0;) {
        ix[f] = a % n;
        iy[f] = b % n;
        a /= n;
        b /= n;
      }
      Vector acc{x[p] * y[q]};
      for (std::size_t f = 0; f < factors; ++f) acc = tensor(acc, to_dense(A.field(), n, A.product(ix[f], iy[f])));
      axpy(out, A.field().one(), acc);
    }
  }
  return out;
}

/// n x n^2 matrix of the multiplication map.
Matrix multiplication_matrix(const Algebra& A) {
  const std::size_t n = A.dim();
  Matrix M(A.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : A.product(i, j)) M(k, i * n + j) = v;
  return M;
}

/// Delta(1) as coefficients c(i, j) of e_i ⊗ e_j.
Matrix unit_coproduct(const Algebra& H, const Matrix& Delta) {
  const std::size_t n = H.dim();
  Vector d1 = Delta * H.unit();
  Matrix c(H.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = d1[i * n + j];
  return c;
}

Matrix counit_pairing(const Algebra& H, const Matrix& epsilon) {
  const std::size_t n = H.dim();
  Matrix E(H.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = H.field().zero();
      for (const auto& [k, c] : H.product(i, j)) v += c * epsilon(0, k);
      E(i, j) = v;
    }
  return E;
}

}  // namespace

// --- twists --------------------------------------------------------------

Twist make_twist(const LeftBialgebroid& lb, const Matrix& g) {
  DualRing d = DualRing::build(DualKind::LowerStar, lb);
  Vector c = ring_coordinates(d, g, "twist");
  auto x = solve(d.ring()->left_mult(c), d.ring()->unit());
  if (!x) throw TwistError("twist is not invertible in the lower-star dual");
  return Twist{g, d.functional(*x)};
}

Twist identity_twist(const LeftBialgebroid& lb) { return Twist{lb.pi(), lb.pi()}; }

Twist compose_twists(const LeftBialgebroid& lb, const Twist& first, const Twist& second) {
  DualRing d = DualRing::build(DualKind::LowerStar, lb);
  const Algebra& D = *d.ring();
  Vector a = ring_coordinates(d, first.g, "twist"), b = ring_coordinates(d, second.g, "twist");
  Vector ai = ring_coordinates(d, first.g_inverse, "twist inverse"), bi = ring_coordinates(d, second.g_inverse, "twist inverse");
  return Twist{d.functional(D.mul(a, b)), d.functional(D.mul(bi, ai))};
}

Twist inverse_twist(const Twist& t) { return Twist{t.g_inverse, t.g}; }

Report verify_twist(const LeftBialgebroid& lb, const AlgebraMap& S, const Twist& t) {
  Report rep("twist");
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim();
  DualRing d = DualRing::build(DualKind::LowerStar, lb);
  const Algebra& D = *d.ring();

  Check& inv = rep.add("twist/(inverse)", "g g^-1 = g^-1 g = pi_L in the lower-star dual");
  auto g = d.coordinates(t.g);
  auto gi = d.coordinates(t.g_inverse);
  if (!g || !gi) {
    inv.fail_instance({!g ? "g" : "g^-1", "violates phi(t_L(l) a) = phi(a) l", "lower-star functional", {}});
  } else {
    Vector x = D.mul(*g, *gi), y = D.mul(*gi, *g);
    inv.expect(x == D.unit(), [&] { return Certificate{"g g^-1", D.format(x), D.format(D.unit()), {}}; });
    inv.expect(y == D.unit(), [&] { return Certificate{"g^-1 g", D.format(y), D.format(D.unit()), {}}; });
  }

  Matrix Hg = harpoon(lb, t.g), Hgi = harpoon(lb, t.g_inverse);

  Check& c1 = rep.add("twist/(twistdef-i)", "1 ↼ g = 1");
  {
    Vector x = Hg * A.unit();
    c1.expect(x == A.unit(), [&] { return Certificate{"1 ↼ g", A.format(x), A.format(A.unit()), {}}; });
  }

  Check& c2 = rep.add("twist/(twistdef-ii)", "(a ↼ g)(b ↼ g) = ab ↼ g");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector lhs = A.mul(Hg.column(a), Hg.column(b));
      Vector rhs = Hg * A.mul(A.basis_vector(a), A.basis_vector(b));
      c2.expect(lhs == rhs, [&] {
        return Certificate{"a=" + A.name(a) + ", b=" + A.name(b), A.format(lhs), A.format(rhs), {}};
      });
    }

  Check& c3 = rep.add("twist/(twistdef-iii)", "S(a(1)) ↼ g ⊗ a(2) = S(a(1)) ⊗ a(2) ↼ g^-1 in A^L ⊗ A with l·a = s_L(g^-1(s_L(l))) a");
  {
    Matrix theta = t.g_inverse * lb.s().matrix;
    AlgebraMap theta_map{lb.base(), lb.base(), theta, MapKind::Homomorphism};
    Report tr = verify_map(theta_map);
    if (!tr.passed() || !invert(theta)) {
      c3.abort("g^-1 s_L is not an automorphism of L");
    } else {
      AlgebraMap s_def{lb.base(), lb.total(), lb.s().matrix * theta, MapKind::Homomorphism};
      TensorSpacePtr X = balanced_tensor(lb.total(), make_action(ActionTag::L_right_s, lb.s()), make_action(ActionTag::L_left, s_def));
      Matrix I = Matrix::identity(A.field(), n);
      Matrix f1 = kron(Hg * S.matrix, I), f2 = kron(S.matrix, Hgi);
      const BalancedTensorSpace& TL = lb.tensor_space();
      bool ok = true;
      if (!TL.descends([&](const Vector& v) { return f1 * v; }, *X)) {
        c3.fail_instance({"well-definedness", "a ⊗ b -> S(a) ↼ g ⊗ b does not descend from A_L ⊗_L A", "descends", {}});
        ok = false;
      }
      if (!TL.descends([&](const Vector& v) { return f2 * v; }, *X)) {
        c3.fail_instance({"well-definedness", "a ⊗ b -> S(a) ⊗ b ↼ g^-1 does not descend from A_L ⊗_L A", "descends", {}});
        ok = false;
      }
      if (ok)
        for (std::size_t a = 0; a < n; ++a) {
          Vector lhs = f1 * lb.coproduct_basis(a), rhs = f2 * lb.coproduct_basis(a);
          c3.expect(X->equivalent(lhs, rhs), [&] { return Certificate{"a=" + A.name(a), X->format(lhs), X->format(rhs), {}}; });
        }
    }
  }
  return rep;
}

AlgebraMap twisted_antipode(const LeftBialgebroid& lb, const AlgebraMap& S, const Twist& t) {
  return AlgebraMap{lb.total(), lb.total(), S.matrix * harpoon(lb, t.g), MapKind::AntiHomomorphism};
}

AlgebraMap twisted_antipode_inverse(const LeftBialgebroid& lb, const AlgebraMap& S_inv, const Twist& t) {
  return AlgebraMap{lb.total(), lb.total(), harpoon(lb, t.g_inverse) * S_inv.matrix, MapKind::AntiHomomorphism};
}

Twist recover_twist(const LeftBialgebroid& lb, const AlgebraMap& S, const AlgebraMap& S_prime) {
  Matrix S_inv = inverse_or_throw(S.matrix, "antipode");
  Matrix Sp_inv = inverse_or_throw(S_prime.matrix, "second antipode");
  return Twist{lb.pi() * S_inv * S_prime.matrix, lb.pi() * Sp_inv * S.matrix};
}

// --- weak Hopf algebras --------------------------------------------------

Matrix pi_left(const AlgebraPtr& H, const Matrix& Delta, const Matrix& epsilon) {
  const std::size_t n = H->dim();
  Matrix c = unit_coproduct(*H, Delta), E = counit_pairing(*H, epsilon);
  // column h: sum_ij c(i,j) eps(e_i e_h) e_j
  Matrix out(H->field(), n, n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < n; ++i) {
      if (E(i, h).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(j, h) += c(i, j) * E(i, h);
    }
  return out;
}

Matrix pi_right(const AlgebraPtr& H, const Matrix& Delta, const Matrix& epsilon) {
  const std::size_t n = H->dim();
  Matrix c = unit_coproduct(*H, Delta), E = counit_pairing(*H, epsilon);
  Matrix out(H->field(), n, n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t j = 0; j < n; ++j) {
      if (E(h, j).is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) out(i, h) += c(i, j) * E(h, j);
    }
  return out;
}

Report verify_weak_bialgebra(const AlgebraPtr& Hp, const Matrix& Delta, const Matrix& epsilon) {
  Report rep("weak bialgebra");
  const Algebra& H = *Hp;
  const std::size_t n = H.dim();
  const std::vector<std::size_t> dims{n, n};
  if (Delta.rows() != n * n || Delta.cols() != n || epsilon.rows() != 1 || epsilon.cols() != n)
    throw DimensionError("weak bialgebra: structure maps have the wrong shape");

  Check& ca = rep.add("weak-hopf/(coassociativity)", "(Delta ⊗ id) Delta = (id ⊗ Delta) Delta");
  Check& cu = rep.add("weak-hopf/(counit)", "(eps ⊗ id) Delta = id = (id ⊗ eps) Delta");
  Check& cm = rep.add("weak-hopf/(multiplicative)", "Delta(xy) = Delta(x) Delta(y)");
  for (std::size_t a = 0; a < n; ++a) {
    Vector d = Delta.column(a);
    Vector l = apply_on_factor(d, dims, 0, Delta), r = apply_on_factor(d, dims, 1, Delta);
    ca.expect(l == r, [&] { return Certificate{"a=" + H.name(a), H.format_tensor(l, 3), H.format_tensor(r, 3), {}}; });
    Vector e1 = apply_on_factor(d, dims, 0, epsilon), e2 = apply_on_factor(d, dims, 1, epsilon);
    cu.expect(e1 == H.basis_vector(a), [&] { return Certificate{"a=" + H.name(a) + " (left)", H.format(e1), H.name(a), {}}; });
    cu.expect(e2 == H.basis_vector(a), [&] { return Certificate{"a=" + H.name(a) + " (right)", H.format(e2), H.name(a), {}}; });
    for (std::size_t b = 0; b < n; ++b) {
      Vector x = Delta * H.mul(H.basis_vector(a), H.basis_vector(b));
      Vector y = tensor_product_mul(H, d, Delta.column(b));
      cm.expect(x == y, [&] {
        return Certificate{"x=" + H.name(a) + ", y=" + H.name(b), H.format_tensor(x, 2), H.format_tensor(y, 2), {}};
      });
    }
  }

  Check& wu = rep.add("weak-hopf/(weak-unit)", "(Delta(1) ⊗ 1)(1 ⊗ Delta(1)) = (Delta ⊗ id) Delta(1) = (1 ⊗ Delta(1))(Delta(1) ⊗ 1)");
  {
    Vector d1 = Delta * H.unit();
    Vector left = tensor(d1, H.unit()), right = tensor(H.unit(), d1);
    Vector x = power_mul(H, left, right, 3), y = apply_on_factor(d1, dims, 0, Delta), z = power_mul(H, right, left, 3);
    wu.expect(x == y, [&] { return Certificate{"(Delta(1) ⊗ 1)(1 ⊗ Delta(1))", H.format_tensor(x, 3), H.format_tensor(y, 3), {}}; });
    wu.expect(z == y, [&] { return Certificate{"(1 ⊗ Delta(1))(Delta(1) ⊗ 1)", H.format_tensor(z, 3), H.format_tensor(y, 3), {}}; });
  }

  Check& wc = rep.add("weak-hopf/(weak-counit)", "eps(x y(1)) eps(y(2) z) = eps(xyz) = eps(x y(2)) eps(y(1) z)");
  {
    Matrix E = counit_pairing(H, epsilon);
    for (std::size_t y = 0; y < n; ++y) {
      Matrix C(H.field(), n, n);
      Vector d = Delta.column(y);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = d[i * n + j];
      Matrix lhs = E * C * E, lhs2 = E * C.transpose() * E;
      Matrix mid = E * H.left_mult(H.basis_vector(y));  // (x, z) -> eps(x (y z))
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
          auto subject = [&] { return "x=" + H.name(x) + ", y=" + H.name(y) + ", z=" + H.name(z); };
          wc.expect(lhs(x, z) == mid(x, z), [&] { return Certificate{subject() + " (y(1) y(2))", lhs(x, z).str(), mid(x, z).str(), {}}; });
          wc.expect(lhs2(x, z) == mid(x, z), [&] { return Certificate{subject() + " (y(2) y(1))", lhs2(x, z).str(), mid(x, z).str(), {}}; });
        }
    }
  }
  return rep;
}

Report verify_weak_hopf(const WeakHopfAlgebra& w) {
  Report rep = verify_weak_bialgebra(w.H, w.Delta, w.epsilon);
  const Algebra& H = *w.H;
  const std::size_t n = H.dim();
  const std::vector<std::size_t> dims{n, n};
  Matrix PL = pi_left(w.H, w.Delta, w.epsilon), PR = pi_right(w.H, w.Delta, w.epsilon);
  Matrix M = multiplication_matrix(H);

  Check& inv = rep.add("weak-hopf/(antipode-inverse)", "S is an anti-automorphism with inverse S^-1");
  if (w.S.kind != MapKind::AntiHomomorphism) inv.fail_instance({"S", "declared homomorphism", "anti-homomorphism", {}});
  absorb(inv, verify_map(w.S));
  {
    Matrix I = Matrix::identity(H.field(), n);
    inv.expect(w.S.matrix * w.S_inv.matrix == I && w.S_inv.matrix * w.S.matrix == I,
               [] { return Certificate{"S ∘ S^-1", "not the identity", "identity", {}}; });
  }

  Check& al = rep.add("weak-hopf/(antipode-left)", "x(1) S(x(2)) = pi_left(x)");
  Check& ar = rep.add("weak-hopf/(antipode-right)", "S(x(1)) x(2) = pi_right(x)");
  Check& as = rep.add("weak-hopf/(antipode-sandwich)", "S(x(1)) x(2) S(x(3)) = S(x)");
  for (std::size_t a = 0; a < n; ++a) {
    Vector d = w.Delta.column(a);
    Vector x = M * apply_on_factor(d, dims, 1, w.S.matrix), px = PL.column(a);
    al.expect(x == px, [&] { return Certificate{"x=" + H.name(a), H.format(x), H.format(px), {}}; });
    Vector y = M * apply_on_factor(d, dims, 0, w.S.matrix), py = PR.column(a);
    ar.expect(y == py, [&] { return Certificate{"x=" + H.name(a), H.format(y), H.format(py), {}}; });
    Vector t = apply_on_factor(d, dims, 0, w.Delta);
    t = apply_on_factor(t, {n, n, n}, 0, w.S.matrix);
    t = apply_on_factor(t, {n, n, n}, 2, w.S.matrix);
    Vector z = M * apply_on_factor(t, {n * n, n}, 0, M), sz = w.S.apply_basis(a);
    as.expect(z == sz, [&] { return Certificate{"x=" + H.name(a), H.format(z), H.format(sz), {}}; });
  }
  return rep;
}

WeakBases weak_bases(const WeakHopfAlgebra& w) {
  Matrix PL = pi_left(w.H, w.Delta, w.epsilon), PR = pi_right(w.H, w.Delta, w.epsilon);
  return WeakBases{subalgebra(*w.H, image(PL), "l"), subalgebra(*w.H, image(PR), "r")};
}

HopfAlgebroid weak_hopf_to_hopf_algebroid(const WeakHopfAlgebra& w) {
  const AlgebraPtr& H = w.H;
  Matrix S_inv = inverse_or_throw(w.S.matrix, "weak Hopf antipode");
  WeakBases b = weak_bases(w);
  Subspace Ls = Subspace::span_columns(b.L.inclusion), Rs = Subspace::span_columns(b.R.inclusion);
  auto restrict_to = [&](const Matrix& f, const Subspace& target, const char* what) {
    Matrix out(H->field(), target.dim(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
      auto c = target.coordinates(f.column(j));
      if (!c) throw TwistError(std::string(what) + " leaves the base subalgebra");
      out.set_column(j, *c);
    }
    return out;
  };
  Matrix PL = restrict_to(pi_left(H, w.Delta, w.epsilon), Ls, "pi_left");
  Matrix PR = restrict_to(pi_right(H, w.Delta, w.epsilon), Rs, "pi_right");
  const AlgebraPtr& L = b.L.algebra;
  const AlgebraPtr& R = b.R.algebra;
  LeftBialgebroid lb(H, L, AlgebraMap{L, H, b.L.inclusion, MapKind::Homomorphism},
                     AlgebraMap{L, H, S_inv * b.L.inclusion, MapKind::AntiHomomorphism}, w.Delta, PL);
  RightBialgebroid rb(H, R, AlgebraMap{R, H, b.R.inclusion, MapKind::Homomorphism},
                      AlgebraMap{R, H, S_inv * b.R.inclusion, MapKind::AntiHomomorphism}, w.Delta, PR);
  Matrix nu = restrict_to(S_inv * b.R.inclusion, Ls, "S^-1 on R");
  return HopfAlgebroid{lb, rb, w.S, AlgebraMap{H, H, S_inv, MapKind::AntiHomomorphism},
                       AlgebraMap{R, opposite_of(L), nu, MapKind::Homomorphism}};
}

// --- separability and the weak bialgebra --------------------------------

SeparabilityStructure trivial_separability(const AlgebraPtr& L) {
  if (L->dim() != 1) throw TwistError("trivial separability needs a one-dimensional base");
  const Field& f = L->field();
  Scalar u = L->unit()[0];
  Matrix delta(f, 1, 1), psi(f, 1, 1);
  delta(0, 0) = u;
  psi(0, 0) = u.inverse();
  return SeparabilityStructure{L, delta, psi, Vector{u * u}};
}

SeparabilityStructure separability_from_weak(const WeakHopfAlgebra& w, const AlgebraPtr& L, const Matrix& inclusion) {
  const Algebra& H = *w.H;
  const std::size_t n = H.dim(), d = L->dim();
  Matrix c = unit_coproduct(H, w.Delta);
  Matrix PL = pi_left(w.H, w.Delta, w.epsilon);
  Matrix inc2 = kron(inclusion, inclusion);
  Matrix delta(H.field(), d * d, d);
  for (std::size_t l = 0; l < d; ++l) {
    Vector el = inclusion.column(l);
    Vector x(n * n, H.field().zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c(i, j).is_zero()) axpy(x, c(i, j), tensor(H.mul(el, PL.column(i)), H.basis_vector(j)));
    auto y = solve(inc2, x);
    if (!y) throw TwistError("separability coproduct leaves L ⊗ L");
    delta.set_column(l, *y);
  }
  Matrix psi = w.epsilon * inclusion;
  return SeparabilityStructure{L, delta, psi, delta * L->unit()};
}

SeparabilityStructure separability_from_weak(const WeakHopfAlgebra& w, const HopfAlgebroid& h) {
  return separability_from_weak(w, h.lb.base(), h.lb.s().matrix);
}

Report verify_separability(const SeparabilityStructure& sep) {
  Report rep("separability structure");
  const Algebra& L = *sep.L;
  const std::size_t d = L.dim();
  const std::vector<std::size_t> dims{d, d};
  Matrix M = multiplication_matrix(L);

  Check& bi = rep.add("separability/(bimodule)", "(id ⊗ m)(delta ⊗ id) = delta m = (m ⊗ id)(id ⊗ delta)");
  Check& sec = rep.add("separability/(section)", "m delta = id");
  Check& cu = rep.add("separability/(counit)", "(psi ⊗ id) delta = id = (id ⊗ psi) delta");
  Check& ca = rep.add("separability/(coassociativity)", "(delta ⊗ id) delta = (id ⊗ delta) delta");
  for (std::size_t l = 0; l < d; ++l) {
    Vector dl = sep.delta.column(l);
    for (std::size_t m = 0; m < d; ++m) {
      Vector mid = sep.delta * L.mul(L.basis_vector(l), L.basis_vector(m));
      Vector left = apply_on_factor(dl, dims, 1, L.right_mult(L.basis_vector(m)));
      Vector right = apply_on_factor(sep.delta.column(m), dims, 0, L.left_mult(L.basis_vector(l)));
      auto subject = [&] { return "l=" + L.name(l) + ", l'=" + L.name(m); };
      bi.expect(left == mid, [&] { return Certificate{subject() + " (right factor)", L.format_tensor(left, 2), L.format_tensor(mid, 2), {}}; });
      bi.expect(right == mid, [&] { return Certificate{subject() + " (left factor)", L.format_tensor(right, 2), L.format_tensor(mid, 2), {}}; });
    }
    Vector back = M * dl;
    sec.expect(back == L.basis_vector(l), [&] { return Certificate{"l=" + L.name(l), L.format(back), L.name(l), {}}; });
    Vector p1 = apply_on_factor(dl, dims, 0, sep.psi), p2 = apply_on_factor(dl, dims, 1, sep.psi);
    cu.expect(p1 == L.basis_vector(l) && p2 == L.basis_vector(l),
              [&] { return Certificate{"l=" + L.name(l), L.format(p1) + " / " + L.format(p2), L.name(l), {}}; });
    Vector x = apply_on_factor(dl, dims, 0, sep.delta), y = apply_on_factor(dl, dims, 1, sep.delta);
    ca.expect(x == y, [&] { return Certificate{"l=" + L.name(l), L.format_tensor(x, 3), L.format_tensor(y, 3), {}}; });
  }
  return rep;
}

WeakBialgebraData weak_bialgebra_from_sep(const LeftBialgebroid& lb, const SeparabilityStructure& sep) {
  if (!same_structure(*lb.base(), *sep.L)) throw TwistError("separability structure lives on a different base ring");
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim(), d = sep.L->dim();
  Matrix Delta(A.field(), n * n, n);
  std::vector<Matrix> T(d), S(d);
  for (std::size_t i = 0; i < d; ++i) {
    T[i] = A.left_mult(lb.t().apply_basis(i));
    S[i] = A.left_mult(lb.s().apply_basis(i));
  }
  Matrix K(A.field(), n * n, n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar& c = sep.e_f[i * d + j];
      if (c.is_zero()) continue;
      Matrix k = kron(T[i], S[j]);
      for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t q = 0; q < n * n; ++q)
          if (!k(r, q).is_zero()) K(r, q) += c * k(r, q);
    }
  Delta = K * lb.gamma();
  Matrix eps = sep.psi * lb.pi();
  Report rep = verify_weak_bialgebra(lb.total(), Delta, eps);
  return WeakBialgebraData{std::move(Delta), std::move(eps), std::move(rep)};
}

// --- the k-dual and kappa ------------------------------------------------

AhatKappa ahat_and_kappa(const LeftBialgebroid& lb, const SeparabilityStructure& sep) {
  const Algebra& A = *lb.total();
  const Field& f = A.field();
  const std::size_t n = A.dim(), d = sep.L->dim();
  WeakBialgebraData wb = weak_bialgebra_from_sep(lb, sep);

  std::vector<std::string> names(n);
  for (std::size_t p = 0; p < n; ++p) names[p] = "d(" + A.name(p) + ")";
  std::vector<StructureConstant> consts;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < n; ++a)
        if (!wb.Delta(p * n + q, a).is_zero()) consts.push_back({p, q, a, wb.Delta(p * n + q, a)});
  AlgebraPtr ahat = share(Algebra(f, names, wb.epsilon.row(0), consts));

  AhatKappa out{ahat, DualRing::build(DualKind::LowerStar, lb), Matrix(), Matrix(), Report("k-dual and kappa")};
  const DualRing& D = out.lower_star;
  const std::size_t m = D.dim();
  Check& alg = out.report.add("ahat/(algebra)", "the k-dual with (phi phi')(a) = phi(a(1)) phi'(a(2)) is associative and unital");
  absorb(alg, wb.report);
  absorb(alg, verify_algebra(*ahat));

  Check& mod = out.report.add("ahat/(kappa-module)", "kappa(phi) is a lower-star functional");
  std::vector<Matrix> Tl(d);
  for (std::size_t i = 0; i < d; ++i) Tl[i] = A.left_mult(lb.t().apply_basis(i));
  out.kappa = Matrix(f, m, n);
  for (std::size_t p = 0; p < n; ++p) {
    Matrix F(f, d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& c = sep.e_f[i * d + j];
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) F(j, a) += c * Tl[i](p, a);
      }
    auto coords = D.coordinates(F);
    mod.expect(coords.has_value(), [&] { return Certificate{"phi=" + names[p], "violates phi(t_L(l) a) = phi(a) l", "lower-star", {}}; });
    if (coords) out.kappa.set_column(p, *coords);
  }
  out.kappa_inverse = Matrix(f, n, m);
  for (std::size_t q = 0; q < m; ++q) out.kappa_inverse.set_column(q, (sep.psi * D.functional(D.ring()->basis_vector(q))).row(0));
  if (!mod.passed) return out;

  Check& hom = out.report.add("ahat/(kappa-hom)", "kappa(phi phi') = kappa(phi) kappa(phi') and kappa(eps) = pi_L");
  const Algebra& R = *D.ring();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vector lhs = out.kappa * ahat->mul(ahat->basis_vector(p), ahat->basis_vector(q));
      Vector rhs = R.mul(out.kappa.column(p), out.kappa.column(q));
      hom.expect(lhs == rhs, [&] { return Certificate{names[p] + " " + names[q], R.format(lhs), R.format(rhs), {}}; });
    }
  {
    Vector u = out.kappa * ahat->unit();
    hom.expect(u == R.unit(), [&] { return Certificate{"kappa(eps)", R.format(u), R.format(R.unit()), {}}; });
  }

  Check& bij = out.report.add("ahat/(kappa-bijective)", "kappa and psi ∘ - are mutually inverse");
  bij.expect(out.kappa * out.kappa_inverse == Matrix::identity(f, m), [] { return Certificate{"kappa ∘ kappa^-1", "not the identity", "identity", {}}; });
  bij.expect(out.kappa_inverse * out.kappa == Matrix::identity(f, n), [] { return Certificate{"kappa^-1 ∘ kappa", "not the identity", "identity", {}}; });
  return out;
}

WhaDecision wha_decide(const HopfAlgebroid& h, const SeparabilityStructure& sep) {
  WhaDecision out;
  out.report = Report("weak Hopf criterion");
  const LeftBialgebroid& lb = h.lb;
  AhatKappa ak = ahat_and_kappa(lb, sep);
  out.report.merge(ak.report);
  const Algebra& Ah = *ak.ahat;
  WeakBialgebraData wb = weak_bialgebra_from_sep(lb, sep);

  Vector eps = wb.epsilon.row(0);
  Vector phi = (wb.epsilon * h.S.matrix).row(0);
  Check& inv = out.report.add("wha/(invertible)", "psi pi_L S is invertible in the k-dual");
  Check& weak = out.report.add("wha/(weak-hopf)", "the weak bialgebra with the (twisted) antipode is a weak Hopf algebra");
  if (phi == eps) {
    inv.pass_instance();
    out.verdict = WhaVerdict::Exact;
    out.weak = WeakHopfAlgebra{lb.total(), wb.Delta, wb.epsilon, h.S, h.S_inv};
    absorb(weak, verify_weak_hopf(*out.weak));
    return out;
  }
  Matrix Lphi = Ah.left_mult(phi);
  auto phi_inv = solve(Lphi, Ah.unit());
  if (!phi_inv) {
    out.verdict = WhaVerdict::No;
    inv.fail_instance({"psi pi_L S = " + Ah.format(phi), "left multiplication of rank " + std::to_string(rank(Lphi)),
                       "rank " + std::to_string(Ah.dim()), {}});
    weak.abort("psi pi_L S is not invertible");
    return out;
  }
  inv.pass_instance();
  out.verdict = WhaVerdict::Twistable;
  const DualRing& D = ak.lower_star;
  Twist g{D.functional(ak.kappa * *phi_inv), D.functional(ak.kappa * phi)};
  Check& tw = out.report.add("wha/(twist)", "kappa((psi pi_L S)^-1) is a twist");
  absorb(tw, verify_twist(lb, h.S, g));
  AlgebraMap Sg = twisted_antipode(lb, h.S, g);
  AlgebraMap Sg_inv = twisted_antipode_inverse(lb, h.S_inv, g);
  out.twist = g;
  out.weak = WeakHopfAlgebra{lb.total(), wb.Delta, wb.epsilon, Sg, Sg_inv};
  absorb(weak, verify_weak_hopf(*out.weak));
  return out;
}

Report hopf_algebra_criterion(const HopfAlgebroid& h) {
  Report rep("Hopf algebra criterion");
  const LeftBialgebroid& lb = h.lb;
  const Algebra& A = *lb.total();
  const std::size_t n = A.dim();

  Check& c1 = rep.add("hopf-algebra/(i)", "L and R^op are isomorphic to k");
  c1.expect(lb.base()->dim() == 1, [&] { return Certificate{"dim L", std::to_string(lb.base()->dim()), "1", {}}; });
  c1.expect(h.rb.base()->dim() == 1, [&] { return Certificate{"dim R", std::to_string(h.rb.base()->dim()), "1", {}}; });

  Check& c2 = rep.add("hopf-algebra/(ii)", "A is a k-algebra: s_L = t_L and s_R = t_R with central images");
  Check& c3 = rep.add("hopf-algebra/(iii)", "pi_L S is invertible in the k-dual");
  Check& c4 = rep.add("hopf-algebra/(counit)", "pi_L S = pi_L");
  if (!c1.passed) {
    c2.abort("(i) fails");
    c3.abort("(i) fails");
    c4.abort("(i) fails");
    return rep;
  }
  auto central = [&](const AlgebraMap& s, const AlgebraMap& t, const char* side) {
    c2.expect(s.matrix == t.matrix, [&] { return Certificate{side, "source differs from target", "equal", {}}; });
    Vector x = s.apply_basis(0);
    for (std::size_t a = 0; a < n; ++a) {
      Vector l = A.mul(x, A.basis_vector(a)), r = A.mul(A.basis_vector(a), x);
      c2.expect(l == r, [&] { return Certificate{std::string(side) + " a=" + A.name(a), A.format(l), A.format(r), {}}; });
    }
  };
  central(lb.s(), lb.t(), "L");
  central(h.rb.s(), h.rb.t(), "R");

  SeparabilityStructure sep = trivial_separability(lb.base());
  AhatKappa ak = ahat_and_kappa(lb, sep);
  Vector phi = (sep.psi * lb.pi() * h.S.matrix).row(0);
  Matrix Lphi = ak.ahat->left_mult(phi);
  std::size_t r = rank(Lphi);
  c3.expect(r == n, [&] { return Certificate{"pi_L S = " + ak.ahat->format(phi), "rank " + std::to_string(r), "rank " + std::to_string(n), {}}; });

  Matrix piS = lb.pi() * h.S.matrix;
  c4.expect(piS == lb.pi(), [&] {
    return Certificate{"pi_L S", ak.ahat->format(phi), ak.ahat->format((sep.psi * lb.pi()).row(0)), {}};
  });
  return rep;
}

}  // namespace hopfkit
