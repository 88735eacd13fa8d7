#include <gtest/gtest.h>

#include <chrono>

#include "handmade.hpp"
#include "hopfkit/catalog.hpp"
#include "hopfkit/integrallab.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

struct Example {
  std::string name;
  HopfAlgebroid h;
};

std::vector<Example> catalog_examples() {
  Field F = Field::gf(7);
  FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric3();
  return {
      {"kZ2", group_hopf_algebroid(z2, Q)},
      {"kZ3", group_hopf_algebroid(z3, Q)},
      {"kS3", group_hopf_algebroid(s3, Q)},
      {"kZ2 sign", character_twisted(z2, sign_character(z2, Q), Q).hopf},
      {"kZ3 GF7", group_hopf_algebroid(z3, F)},
      {"kZ3 GF7 twisted", character_twisted(z3, cyclic_character(z3, F.from_int(2)), F).hopf},
      {"M2", weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q))},
      {"M3", weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(3, Q))},
      {"k^Z2", weak_hopf_to_hopf_algebroid(dual_function_algebra(z2, Q))},
      {"k^S3", weak_hopf_to_hopf_algebroid(dual_function_algebra(s3, Q))},
  };
}

/// Stacked kernel of a ↦ (a x − s_L π_L(a) x) over the basis.
std::vector<Vector> left_integral_oracle(const LeftBialgebroid& lb) {
  const Algebra& A = *lb.total();
  std::size_t n = A.dim();
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a) {
    Vector sp = lb.s().apply(lb.counit(A.basis_vector(a)));
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(n, A.field().zero());
      for (std::size_t x = 0; x < n; ++x) row[x] = A.mul(A.basis_vector(a), A.basis_vector(x))[r] - A.mul(sp, A.basis_vector(x))[r];
      rows.push_back(row);
    }
  }
  return oracle::nullspace(rows, n, A.field());
}

/// Stacked kernel of a ↦ (x a − x s_R π_R(a)).
std::vector<Vector> right_integral_oracle(const RightBialgebroid& rb) {
  const Algebra& A = *rb.total();
  std::size_t n = A.dim();
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a) {
    Vector sp = rb.s().apply(rb.counit(A.basis_vector(a)));
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(n, A.field().zero());
      for (std::size_t x = 0; x < n; ++x) row[x] = A.mul(A.basis_vector(x), A.basis_vector(a))[r] - A.mul(A.basis_vector(x), sp)[r];
      rows.push_back(row);
    }
  }
  return oracle::nullspace(rows, n, A.field());
}

Vector all_ones(const HopfAlgebroid& h) { return Vector(h.dim(), h.lb.field().one()); }

/// First non-degenerate left integral among the basis of left integrals and their sum.
NondegenerateIntegral some_integral(const HopfAlgebroid& h) {
  auto basis = integral_space(h.lb).space.basis();
  Vector sum = h.total()->zero();
  for (const auto& b : basis) sum = add(sum, b);
  basis.push_back(sum);
  for (const auto& b : basis) {
    NondegeneracyResult r = nondegeneracy(h, b);
    if (r.integral) return *r.integral;
  }
  throw std::runtime_error("no non-degenerate integral");
}

}  // namespace

TEST(Integrallab, SpacesMatchStackedKernel) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& ex : catalog_examples()) {
    IntegralSpace l = integral_space(ex.h.lb), r = integral_space(ex.h.rb);
    EXPECT_EQ(l.side, IntegralSide::Left);
    EXPECT_EQ(r.side, IntegralSide::Right);
    EXPECT_EQ(l.space.basis(), left_integral_oracle(ex.h.lb)) << ex.name;
    EXPECT_EQ(r.space.basis(), right_integral_oracle(ex.h.rb)) << ex.name;
    EXPECT_EQ(integral_space(ex.h, IntegralSide::Right).space, r.space);
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Integrallab, KnownIntegralDimensions) {
  EXPECT_EQ(integral_space(group_hopf_algebroid(FiniteGroup::symmetric3(), Q).lb).space.dim(), 1u);
  // left integrals of the pair groupoid: the columns Σ_i e_ij, one per j
  HopfAlgebroid m2 = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q));
  IntegralSpace l = integral_space(m2.lb);
  EXPECT_EQ(l.space.dim(), 2u);
  EXPECT_TRUE(l.space.contains({Q.one(), Q.zero(), Q.one(), Q.zero()}));
  EXPECT_TRUE(l.space.contains({Q.zero(), Q.one(), Q.zero(), Q.one()}));
}

TEST(Integrallab, IntprConditionsAgree) {
  std::mt19937 rng(31);
  for (const auto& ex : catalog_examples()) {
    for (const auto& b : integral_space(ex.h.lb).space.basis()) {
      IntprResult r = intpr_equivalences(ex.h, b);
      EXPECT_TRUE(r.consistent()) << ex.name << "\n" << r.report.to_text();
      EXPECT_TRUE(r.conditions[0]) << ex.name;
    }
    for (int it = 0; it < 3; ++it) {
      Vector x = oracle::random_vector(rng, ex.h.lb.field(), ex.h.dim());
      IntprResult r = intpr_equivalences(ex.h, x);
      EXPECT_TRUE(r.consistent()) << ex.name << "\n" << r.report.to_text();
      EXPECT_EQ(r.conditions[0], is_left_integral(ex.h.lb, x));
    }
  }
}

TEST(Integrallab, NondegeneracyWitnesses) {
  for (const auto& ex : catalog_examples()) {
    NondegenerateIntegral nd = some_integral(ex.h);
    NondegeneracyResult r = nondegeneracy(ex.h, nd.ell);
    EXPECT_TRUE(r.report.passed()) << ex.name << "\n" << r.report.to_text();
    EXPECT_TRUE(r.report.find("nondegenerate/(fsrinv)")->passed);
    std::size_t d = nd.ell_R.rows();
    EXPECT_EQ(nd.ell_R * nd.ell_R_inverse, Matrix::identity(ex.h.lb.field(), d));
    EXPECT_EQ(nd.R_ell_inverse * nd.R_ell, Matrix::identity(ex.h.lb.field(), nd.R_ell.cols()));
    Report f = frobenius_check(ex.h, nd);
    EXPECT_TRUE(f.passed()) << ex.name << "\n" << f.to_text();
    EXPECT_EQ(f.find("frobenius/(orientation)")->description, "standard");
  }
}

TEST(Integrallab, GroupIntegral) {
  for (std::size_t n : {2u, 3u, 4u}) {
    LeftBialgebroid lb = handmade::group_lb(n, Q);
    HopfAlgebroid h = assemble_hopf(lb, handmade::cyclic_antipode(lb, Q.one()));
    NondegeneracyResult r = nondegeneracy(h, all_ones(h));
    ASSERT_TRUE(r.nondegenerate());
    // λ* is the counting functional at e, i.e. δ_e in the dual basis
    Vector de(n, Q.zero());
    de[0] = Q.one();
    EXPECT_EQ(r.integral->upper.functional(r.integral->lambda_star).row(0), de);
  }
}

TEST(Integrallab, PairGroupoidColumnIntegralIsDegenerate) {
  HopfAlgebroid h = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q));
  Vector ell = {Q.one(), Q.zero(), Q.one(), Q.zero()};
  ASSERT_TRUE(is_left_integral(h.lb, ell));
  NondegeneracyResult r = nondegeneracy(h, ell);
  EXPECT_FALSE(r.nondegenerate());
  ASSERT_TRUE(r.degenerate);
  EXPECT_EQ(r.degenerate->map, "ell_R");
  EXPECT_EQ(r.degenerate->rank, 2u);
  EXPECT_FALSE(r.report.passed());
  EXPECT_TRUE(nondegeneracy(h, all_ones(h)).nondegenerate());
}

TEST(Integrallab, NonIntegralThrows) {
  HopfAlgebroid h = group_hopf_algebroid(FiniteGroup::cyclic(2), Q);
  EXPECT_THROW(nondegeneracy(h, h.total()->basis_vector(1)), IntegralError);
  // φ ⇀ x = Σ φ(g) x_g g is bijective iff no coefficient vanishes
  EXPECT_FALSE(right_witness(h.rb, h.total()->basis_vector(1)).nondegenerate());
  EXPECT_TRUE(right_witness(h.rb, {Q.one(), Q.from_int(2)}).nondegenerate());
}

TEST(Integrallab, TwapIsBijectiveAntiHomomorphism) {
  for (const auto& ex : catalog_examples()) {
    NondegenerateIntegral nd = some_integral(ex.h);
    TildeS ts = twap(ex.h, nd);
    EXPECT_TRUE(ts.report.passed()) << ex.name << "\n" << ts.report.to_text();
    EXPECT_EQ(ts.map.matrix * ts.inverse.matrix, Matrix::identity(ex.h.lb.field(), ex.h.dim()));
    EXPECT_EQ(ts.map.kind, MapKind::AntiHomomorphism);
  }
}

TEST(Integrallab, DiagramCommutesOnCatalog) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& ex : catalog_examples()) {
    Report r = duality_diagram(ex.h, some_integral(ex.h));
    EXPECT_TRUE(r.passed()) << ex.name << "\n" << r.to_text();
    EXPECT_TRUE(r.find("diagram/(square)")->passed) << ex.name;
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 20.0);
}

TEST(Integrallab, DualOfGroupAlgebraIsFunctionAlgebra) {
  for (std::size_t n : {2u, 3u}) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    HopfAlgebroid h = group_hopf_algebroid(G, Q);
    NondegenerateIntegral nd = some_integral(h);
    DualHopf D = dual_hopf_algebroid(h, nd);
    EXPECT_TRUE(D.report.passed()) << D.report.to_text();
    EXPECT_TRUE(verify_hopf(D.hopf).passed());
    EXPECT_TRUE(D.hopf.total()->is_commutative());
    EXPECT_TRUE(same_structure(*D.hopf.total(), *dual_function_algebra(G, Q).H));
    Report iso = weak_dual_iso(group_weak_hopf(G, Q), h, nd);
    EXPECT_TRUE(iso.passed()) << iso.to_text();
    EXPECT_TRUE(iso.find("whadiso/(right-morphism)")->passed);
  }
}

TEST(Integrallab, DualHopfOnCatalog) {
  for (const auto& ex : catalog_examples()) {
    NondegenerateIntegral nd = some_integral(ex.h);
    DualHopf D = dual_hopf_algebroid(ex.h, nd);
    EXPECT_TRUE(D.report.passed()) << ex.name << "\n" << D.report.to_text();
    EXPECT_TRUE(nondegeneracy(D.hopf, D.two_sided).nondegenerate()) << ex.name;
  }
}

TEST(Integrallab, DoubleDual) {
  for (const auto& ex : catalog_examples()) {
    Report r = double_dual(ex.h, some_integral(ex.h));
    EXPECT_TRUE(r.passed()) << ex.name << "\n" << r.to_text();
    EXPECT_TRUE(r.find("double-dual/(bialgebroid)")->passed);
  }
}

TEST(Integrallab, WeakDualIsoOnGroupoid) {
  WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
  HopfAlgebroid h = weak_hopf_to_hopf_algebroid(w);
  Report r = weak_dual_iso(w, h, some_integral(h));
  EXPECT_TRUE(r.passed()) << r.to_text();
  WeakHopfAlgebra dw = dual_weak_hopf(w);
  EXPECT_TRUE(verify_weak_hopf(dw).passed());
  EXPECT_TRUE(dw.H->is_commutative());
}

TEST(Integrallab, TransportAlongAutomorphism) {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  HopfAlgebroid h = group_hopf_algebroid(z3, Q);
  Matrix P(Q, 3, 3);
  for (std::size_t g = 0; g < 3; ++g) P(2 * g % 3, g) = Q.one();
  NondegenerateIntegral nd = some_integral(h);
  NondegeneracyResult r = transport_integral(h, AlgebraMap{h.total(), h.total(), P, MapKind::Homomorphism}, nd);
  ASSERT_TRUE(r.nondegenerate());
  EXPECT_EQ(r.integral->ell, nd.ell);
}

TEST(Integrallab, HalfLarsonSweedlerOnCyclicGroups) {
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 5; ++n) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    HopfAlgebroid base = group_hopf_algebroid(G, Q);
    Vector ell = all_ones(base);
    EXPECT_TRUE(verify_bgdnd(base.rb, ell).passed());
    LsResult r = ls_antipode(base.rb, ell);
    EXPECT_TRUE(r.report.passed()) << r.report.to_text();
    for (std::size_t g = 0; g < n; ++g) EXPECT_EQ(r.hopf.S.apply_basis(g), base.total()->basis_vector(G.inverse(g)));
    EXPECT_TRUE(verify_hopf(r.hopf).passed());
    EXPECT_TRUE(nondegeneracy(r.hopf, ell).nondegenerate());
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Integrallab, HalfLarsonSweedlerOnPairGroupoid) {
  HopfAlgebroid m2 = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q));
  Vector ell = all_ones(m2);
  LsResult r = ls_antipode(m2.rb, ell);
  EXPECT_TRUE(r.report.passed()) << r.report.to_text();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(r.hopf.S.apply_basis(i * 2 + j), m2.total()->basis_vector(j * 2 + i));
  EXPECT_TRUE(verify_hopf(r.hopf).passed());
  EXPECT_TRUE(nondegeneracy(r.hopf, ell).nondegenerate());
}

TEST(Integrallab, HalfLarsonSweedlerRejectsNonIntegral) {
  HopfAlgebroid h = group_hopf_algebroid(FiniteGroup::cyclic(3), Q);
  Vector e = h.total()->basis_vector(0);
  Report b = verify_bgdnd(h.rb, e);
  EXPECT_FALSE(b.passed());
  EXPECT_FALSE(b.find("bgdnd/(i)")->passed);
  EXPECT_THROW(ls_antipode(h.rb, e), IntegralError);
}

TEST(Integrallab, LsRight) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  HopfAlgebroid h = assemble_hopf(lb, handmade::transpose(lb));
  LsResult r = ls_right(h.lb, Vector(4, Q.one()));
  EXPECT_TRUE(r.report.passed()) << r.report.to_text();
  EXPECT_EQ(r.hopf.S.matrix, handmade::transpose(lb).matrix);
}

TEST(Integrallab, LacConditions) {
  HopfAlgebroid h = group_hopf_algebroid(FiniteGroup::cyclic(3), Q);
  EXPECT_TRUE(lac_check(h.rb, all_ones(h)).passed());
  Vector zero = h.total()->zero();
  Report r = lac_check(h.rb, zero);
  EXPECT_FALSE(r.passed());
}
