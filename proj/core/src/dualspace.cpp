#include "hopfkit/dualspace.hpp"

namespace hopfkit {

const char* to_string(DualKind k) {
  switch (k) {
    case DualKind::LowerStar: return "lower-star";
    case DualKind::StarLower: return "star-lower";
    case DualKind::UpperStar: return "upper-star";
    case DualKind::StarUpper: return "star-upper";
  }
  return "?";
}

namespace {

template <class B>
B rebuild(const B& x, const AlgebraPtr& total, const AlgebraPtr& base) {
  try {
    return on_rings(x, total, base);
  } catch (const DimensionError&) {
    throw DualError("transported dual does not sit on the expected rings");
  }
}

std::string basis_name(const Vector& v, const Algebra& A, const Algebra& B, std::size_t index) {
  std::size_t hit = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (hit != v.size() || !v[i].is_one()) return "phi" + std::to_string(index);
    hit = i;
  }
  const std::size_t d = B.dim();
  if (d == 1) return "d(" + A.name(hit / d) + ")";
  return "d(" + A.name(hit / d) + ":" + B.name(hit % d) + ")";
}

/// a ↼ phi = s(phi(a(1))) a(2) in the carrier, for phi given as a functional matrix.
Matrix harpoon_matrix(const LeftBialgebroid& c, const Matrix& F) {
  const Algebra& T = *c.total();
  const std::size_t n = T.dim();
  std::vector<Vector> s_phi(n);
  for (std::size_t i = 0; i < n; ++i) s_phi[i] = c.s().apply(F.column(i));
  Matrix out(T.field(), n, n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector g = c.coproduct_basis(a);
    Vector r = T.zero();
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      if (g[idx].is_zero()) continue;
      axpy(r, g[idx], T.mul(s_phi[idx / n], T.basis_vector(idx % n)));
    }
    out.set_column(a, r);
  }
  return out;
}

Matrix unflatten(const Vector& raw, std::size_t d, std::size_t n, const Field& f) {
  Matrix F(f, d, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < d; ++b) F(b, a) = raw[a * d + b];
  return F;
}

Vector flatten(const Matrix& F) {
  Vector raw(F.rows() * F.cols(), F.field().zero());
  for (std::size_t a = 0; a < F.cols(); ++a)
    for (std::size_t b = 0; b < F.rows(); ++b) raw[a * F.rows() + b] = F(b, a);
  return raw;
}

RightBialgebroid dual_of_carrier(const LeftBialgebroid& C, const AlgebraPtr& D, const Matrix& E) {
  const Algebra& T = *C.total();
  const Algebra& B = *C.base();
  const std::size_t n = T.dim(), d = B.dim(), m = D->dim();
  const Field& f = T.field();
  std::vector<Matrix> F(m);
  for (std::size_t p = 0; p < m; ++p) F[p] = unflatten(E.column(p), d, n, f);
  Subspace module = Subspace::span_columns(E);
  auto coords = [&](const Matrix& G) {
    auto c = module.coordinates(flatten(G));
    if (!c) throw DualError("structure map of the dual leaves the dual module");
    return *c;
  };

  // rows (a, b, c), columns (p, q): psi_p(e_a t(psi_q(e_b)))_c
  Matrix M(f, n * n * d, m * m);
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t b = 0; b < n; ++b) {
      Vector tq = C.t().apply(F[q].column(b));
      for (std::size_t a = 0; a < n; ++a) {
        Vector w = T.mul(T.basis_vector(a), tq);
        for (std::size_t p = 0; p < m; ++p) {
          Vector val = F[p] * w;
          for (std::size_t c = 0; c < d; ++c) M((a * n + b) * d + c, p * m + q) = val[c];
        }
      }
    }
  Matrix rhs(f, n * n * d, m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector ab = T.mul(T.basis_vector(a), T.basis_vector(b));
      for (std::size_t r = 0; r < m; ++r) {
        Vector val = F[r] * ab;
        for (std::size_t c = 0; c < d; ++c) rhs((a * n + b) * d + c, r) = val[c];
      }
    }
  auto gamma = solve(M, rhs);
  if (!gamma) throw DualError("no coproduct on the dual satisfies the pairing rule");

  Matrix s(f, m, d), t(f, m, d);
  for (std::size_t l = 0; l < d; ++l) {
    Matrix Gs(f, d, n), Gt(f, d, n);
    Vector sl = C.s().apply_basis(l);
    for (std::size_t a = 0; a < n; ++a) {
      Gs.set_column(a, C.counit(T.mul(T.basis_vector(a), sl)));
      Gt.set_column(a, B.mul(B.basis_vector(l), C.counit(T.basis_vector(a))));
    }
    s.set_column(l, coords(Gs));
    t.set_column(l, coords(Gt));
  }
  Matrix pi(f, d, m);
  for (std::size_t p = 0; p < m; ++p) pi.set_column(p, F[p] * T.unit());
  const AlgebraPtr& Bp = C.base();
  return RightBialgebroid(D, Bp, AlgebraMap{Bp, D, s, MapKind::Homomorphism}, AlgebraMap{Bp, D, t, MapKind::AntiHomomorphism},
                          *gamma, pi);
}

struct CoreDual {
  AlgebraPtr ring;
  Matrix embedding;
  Subspace module;
};

CoreDual lower_star_of(const LeftBialgebroid& C) {
  const Algebra& T = *C.total();
  const Algebra& B = *C.base();
  const std::size_t n = T.dim(), d = B.dim();
  const Field& f = T.field();
  // phi(t(l) a) - phi(a) l = 0 in the variables x[a*d+b] = phi(e_a)_b
  std::vector<Vector> rows;
  for (std::size_t l = 0; l < d; ++l) {
    Matrix tl = T.left_mult(C.t().apply_basis(l));
    Matrix rl = B.right_mult(B.basis_vector(l));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < d; ++c) {
        Vector row(n * d, f.zero());
        for (std::size_t j = 0; j < n; ++j) row[j * d + c] += tl(j, a);
        for (std::size_t b = 0; b < d; ++b) row[a * d + b] -= rl(c, b);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Subspace module = rows.empty() ? Subspace::whole(f, n * d) : kernel(Matrix::from_rows(f, n * d, rows));
  if (module.dim() == 0) throw DualError("dual module is zero");
  std::vector<Vector> basis = module.basis();
  const std::size_t m = basis.size();
  Matrix E = Matrix::from_columns(f, n * d, basis);

  std::vector<Matrix> F(m), H(m);
  for (std::size_t p = 0; p < m; ++p) {
    F[p] = unflatten(basis[p], d, n, f);
    H[p] = harpoon_matrix(C, F[p]);
  }
  std::vector<std::string> names(m);
  for (std::size_t p = 0; p < m; ++p) names[p] = basis_name(basis[p], T, B, p);
  std::vector<StructureConstant> consts;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      // (phi_p phi_q)(a) = phi_q(a ↼ phi_p)
      auto c = module.coordinates(flatten(F[q] * H[p]));
      if (!c) throw DualError("product of dual elements leaves the dual module");
      for (std::size_t k = 0; k < m; ++k)
        if (!(*c)[k].is_zero()) consts.push_back({p, q, k, (*c)[k]});
    }
  auto unit = module.coordinates(flatten(C.pi()));
  if (!unit) throw DualError("counit is not in the dual module");
  return {share(Algebra(f, names, *unit, consts)), E, module};
}

}  // namespace

DualRing DualRing::build(DualKind kind, const LeftBialgebroid& lb) {
  DualRing d;
  d.kind_ = kind;
  d.total_ = lb.total();
  d.base_ = lb.base();
  if (kind == DualKind::LowerStar)
    d.carrier_ = lb;
  else if (kind == DualKind::StarLower)
    d.carrier_ = lb.coopposite();
  else
    throw DualError(std::string(to_string(kind)) + " is a dual of a right bialgebroid");
  CoreDual core = lower_star_of(d.carrier_);
  d.ring_ = d.carrier_ring_ = core.ring;
  d.embedding_ = std::move(core.embedding);
  d.module_ = std::move(core.module);
  return d;
}

DualRing DualRing::build(DualKind kind, const RightBialgebroid& rb) {
  DualRing d;
  d.kind_ = kind;
  d.total_ = rb.total();
  d.base_ = rb.base();
  if (kind == DualKind::UpperStar)
    d.carrier_ = rb.opposite();
  else if (kind == DualKind::StarUpper)
    d.carrier_ = rb.opposite().coopposite();
  else
    throw DualError(std::string(to_string(kind)) + " is a dual of a left bialgebroid");
  CoreDual core = lower_star_of(d.carrier_);
  d.carrier_ring_ = core.ring;
  d.ring_ = share(core.ring->opposite());
  d.ring_is_opposite_ = true;
  d.embedding_ = std::move(core.embedding);
  d.module_ = std::move(core.module);
  return d;
}

Matrix harpoon(const LeftBialgebroid& lb, const Matrix& phi) { return harpoon_matrix(lb, phi); }

Matrix DualRing::functional(const Vector& phi) const {
  return unflatten(embedding_ * phi, base_->dim(), total_->dim(), field());
}

std::optional<Vector> DualRing::coordinates(const Matrix& functional) const {
  if (functional.rows() != base_->dim() || functional.cols() != total_->dim()) return std::nullopt;
  return module_.coordinates(flatten(functional));
}

Vector DualRing::evaluate(const Vector& phi, const Vector& a) const { return functional(phi) * a; }

Vector DualRing::dual_action(const Vector& a, const Vector& phi) const {
  const Algebra& T = *carrier_.total();
  Matrix G = functional(phi) * T.right_mult(a);
  return *module_.coordinates(flatten(G));
}

Matrix DualRing::total_action_matrix(const Vector& phi) const { return harpoon_matrix(carrier_, functional(phi)); }

Vector DualRing::total_action(const Vector& phi, const Vector& a) const { return total_action_matrix(phi) * a; }

Report DualRing::verify() const {
  const std::string g = std::string("dual-") + to_string(kind_) + "/";
  Report rep(std::string(to_string(kind_)) + " dual ring");
  const Algebra& D = *ring_;
  const Algebra& A = *total_;
  const std::size_t m = D.dim(), n = A.dim();

  // ring structure transposed from the coproduct
  absorb(rep.add(g + (is_lower() ? "(ldual)" : "(rdual)"), "dual product is associative with unit the counit"),
         verify_algebra(D));

  Check& mod = rep.add(g + "(module)", is_lower() ? "(a ↼ phi) ↼ psi = a ↼ (phi psi)" : "phi ⇀ (psi ⇀ a) = (phi psi) ⇀ a");
  std::vector<Matrix> act(m);
  for (std::size_t p = 0; p < m; ++p) act[p] = total_action_matrix(D.basis_vector(p));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Matrix lhs = is_lower() ? act[q] * act[p] : act[p] * act[q];
      Matrix rhs = total_action_matrix(D.mul(D.basis_vector(p), D.basis_vector(q)));
      mod.expect(lhs == rhs, [&] { return Certificate{"phi=" + D.name(p) + ", psi=" + D.name(q), "actions differ", "equal", {}}; });
    }
  Check& unit = rep.add(g + "(unit-action)", "the counit acts as the identity");
  unit.expect(total_action_matrix(D.unit()) == Matrix::identity(A.field(), n),
              [] { return Certificate{"counit", "acts nontrivially", "identity", {}}; });

  Check& pair = rep.add(g + "(pairing)", "evaluation pairing separates the elements of A");
  {
    std::vector<Vector> rows;
    for (std::size_t p = 0; p < m; ++p) {
      Matrix F = functional(D.basis_vector(p));
      for (std::size_t b = 0; b < F.rows(); ++b) rows.push_back(F.row(b));
    }
    std::size_t r = rank(Matrix::from_rows(A.field(), n, rows));
    pair.expect(r == n, [&] { return Certificate{"pairing", "rank " + std::to_string(r), "rank " + std::to_string(n), {}}; });
  }
  return rep;
}

RightBialgebroid dual_right_bialgebroid(const DualRing& d) {
  if (!d.is_lower()) throw DualError("dual_right_bialgebroid needs a dual of a left bialgebroid");
  RightBialgebroid core = dual_of_carrier(d.carrier_, d.carrier_ring_, d.embedding_);
  if (d.kind_ == DualKind::LowerStar) return core;
  return rebuild(core.coopposite(), d.ring_, d.base_);
}

LeftBialgebroid dual_left_bialgebroid(const DualRing& d) {
  if (d.is_lower()) throw DualError("dual_left_bialgebroid needs a dual of a right bialgebroid");
  RightBialgebroid core = dual_of_carrier(d.carrier_, d.carrier_ring_, d.embedding_);
  if (d.kind_ == DualKind::UpperStar) return rebuild(core.opposite(), d.ring_, d.base_);
  return rebuild(core.coopposite().opposite(), d.ring_, d.base_);
}

}  // namespace hopfkit
