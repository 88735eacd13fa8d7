#include <gtest/gtest.h>

#include <chrono>

#include "handmade.hpp"
#include "hopfkit/catalog.hpp"
#include "hopfkit/twistlab.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

HopfAlgebroid cyclic(std::size_t n, const Field& f) {
  LeftBialgebroid lb = handmade::group_lb(n, f);
  return assemble_hopf(lb, handmade::cyclic_antipode(lb, f.one()));
}

/// g(t^k) = omega^k as a 1 x n functional.
Matrix character_row(std::size_t n, const Scalar& omega) {
  Matrix g(omega.field(), 1, n);
  Scalar c = omega.field().one();
  for (std::size_t k = 0; k < n; ++k) {
    g(0, k) = c;
    c = c * omega;
  }
  return g;
}

/// Functional e_ij -> chi_ij f_i on the pair groupoid.
Matrix groupoid_functional(const std::vector<std::vector<Scalar>>& chi) {
  std::size_t n = chi.size();
  Matrix g(Q, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, i * n + j) = chi[i][j];
  return g;
}

std::vector<Scalar> roots_of_unity(const Field& f, std::size_t n) {
  std::vector<Scalar> out;
  if (f.is_rational()) {
    out.push_back(f.one());
    if (n % 2 == 0) out.push_back(f.from_int(-1));
    return out;
  }
  for (std::uint32_t x = 1; x < f.characteristic(); ++x) {
    Scalar s = f.from_int(x), p = f.one();
    for (std::size_t k = 0; k < n; ++k) p = p * s;
    if (p.is_one()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Twistlab, SignTwistOnZ2) {
  HopfAlgebroid h = cyclic(2, Q);
  Twist t = make_twist(h.lb, character_row(2, Q.from_int(-1)));
  EXPECT_TRUE(verify_twist(h.lb, h.S, t).passed());
  AlgebraMap Sp = twisted_antipode(h.lb, h.S, t);
  EXPECT_EQ(Sp.apply_basis(1), scale(Q.from_int(-1), h.total()->basis_vector(1)));
  EXPECT_TRUE(verify_hopf(assemble_hopf(h.lb, Sp)).passed());
}

TEST(Twistlab, Z3OverGF7WithOmega2) {
  Field F = Field::gf(7);
  HopfAlgebroid h = cyclic(3, F);
  Twist t = make_twist(h.lb, character_row(3, F.from_int(2)));
  EXPECT_TRUE(verify_twist(h.lb, h.S, t).passed());
  AlgebraMap Sp = twisted_antipode(h.lb, h.S, t);
  // S'(t) = 2 t^2
  EXPECT_EQ(Sp.apply_basis(1), scale(F.from_int(2), h.total()->basis_vector(2)));
  EXPECT_EQ(Sp.apply_basis(2), scale(F.from_int(4), h.total()->basis_vector(1)));
  AlgebraMap Spi = twisted_antipode_inverse(h.lb, h.S_inv, t);
  EXPECT_EQ(Spi.matrix * Sp.matrix, Matrix::identity(F, 3));
}

TEST(Twistlab, Z5OverGF11RoundTrip) {
  Field F = Field::gf(11);
  HopfAlgebroid h = cyclic(5, F);
  // 3^5 = 1 mod 11
  Twist t = make_twist(h.lb, character_row(5, F.from_int(3)));
  AlgebraMap Sp = twisted_antipode(h.lb, h.S, t);
  Twist back = recover_twist(h.lb, h.S, Sp);
  EXPECT_EQ(back.g, t.g);
  EXPECT_EQ(back.g_inverse, t.g_inverse);
  EXPECT_EQ(twisted_antipode(h.lb, h.S, back).matrix, Sp.matrix);
}

TEST(Twistlab, NonCharacterFailsTwistConditions) {
  HopfAlgebroid h = cyclic(3, Q);
  Matrix g(Q, 1, 3);
  g(0, 0) = Q.one();
  g(0, 1) = Q.from_int(2);
  g(0, 2) = Q.from_int(3);
  Twist t = make_twist(h.lb, g);
  Report r = verify_twist(h.lb, h.S, t);
  EXPECT_FALSE(r.passed());
  for (const auto& id : r.failing_ids()) EXPECT_EQ(id.rfind("twist/(twistdef-", 0), 0u) << id;
}

TEST(Twistlab, NonInvertibleRejected) {
  HopfAlgebroid h = cyclic(2, Q);
  Matrix g(Q, 1, 2);
  g(0, 0) = Q.one();
  EXPECT_THROW(make_twist(h.lb, g), TwistError);
}

TEST(Twistlab, GroupoidCoboundaryTwist) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  AlgebraMap S = handmade::transpose(lb);
  std::vector<Scalar> lambda = {Q.one(), Q.from_int(3)};
  std::vector<std::vector<Scalar>> chi(2, std::vector<Scalar>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) chi[i][j] = lambda[i] / lambda[j];
  Twist t = make_twist(lb, groupoid_functional(chi));
  Report r = verify_twist(lb, S, t);
  EXPECT_TRUE(r.passed()) << r.to_text();
  AlgebraMap Sp = twisted_antipode(lb, S, t);
  EXPECT_EQ(Sp.apply_basis(1), scale(Q.from_fraction(1, 3), lb.total()->basis_vector(2)));
  EXPECT_TRUE(verify_hopf(assemble_hopf(lb, Sp)).passed());

  chi = {{Q.one(), Q.from_int(2)}, {Q.from_int(5), Q.one()}};
  EXPECT_FALSE(verify_twist(lb, S, make_twist(lb, groupoid_functional(chi))).passed());
}

TEST(Twistlab, TwistGroupLaws) {
  Field F = Field::gf(13);
  HopfAlgebroid h = cyclic(6, F);
  auto roots = roots_of_unity(F, 6);
  ASSERT_EQ(roots.size(), 6u);
  Twist e = identity_twist(h.lb);
  for (const auto& a : roots) {
    Twist x = make_twist(h.lb, character_row(6, a));
    EXPECT_EQ(compose_twists(h.lb, x, e).g, x.g);
    EXPECT_EQ(compose_twists(h.lb, e, x).g, x.g);
    EXPECT_EQ(compose_twists(h.lb, x, inverse_twist(x)).g, e.g);
    for (const auto& b : roots) {
      Twist y = make_twist(h.lb, character_row(6, b));
      Twist xy = compose_twists(h.lb, x, y);
      EXPECT_EQ(xy.g, character_row(6, a * b));
      EXPECT_TRUE(verify_twist(h.lb, h.S, xy).passed());
      for (const auto& c : {roots[1], roots[4]}) {
        Twist z = make_twist(h.lb, character_row(6, c));
        EXPECT_EQ(compose_twists(h.lb, xy, z).g, compose_twists(h.lb, x, compose_twists(h.lb, y, z)).g);
      }
    }
  }
}

TEST(Twistlab, RandomCharacterRoundTrips) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(2024);
  std::vector<Field> fields = {Q, Field::gf(7), Field::gf(11), Field::gf(13), Field::gf(31)};
  for (int it = 0; it < 20; ++it) {
    const Field& F = fields[it % fields.size()];
    std::size_t n = 2 + rng() % 5;
    auto roots = roots_of_unity(F, n);
    Scalar omega = roots[rng() % roots.size()];
    HopfAlgebroid h = cyclic(n, F);
    Twist t = make_twist(h.lb, character_row(n, omega));
    AlgebraMap Sp = twisted_antipode(h.lb, h.S, t);
    EXPECT_EQ(recover_twist(h.lb, h.S, Sp).g, t.g);
    EXPECT_EQ(twisted_antipode(h.lb, h.S, recover_twist(h.lb, h.S, Sp)).matrix, Sp.matrix);
    EXPECT_TRUE(verify_twist(h.lb, h.S, t).passed());
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

TEST(Twistlab, PairGroupoidProjections) {
  WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
  EXPECT_TRUE(verify_weak_hopf(w).passed());
  Matrix pl = pi_left(w.H, w.Delta, w.epsilon), pr = pi_right(w.H, w.Delta, w.epsilon);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(pl.column(i * 2 + j), w.H->basis_vector(i * 2 + i));
      EXPECT_EQ(pr.column(i * 2 + j), w.H->basis_vector(j * 2 + j));
    }
  WeakBases b = weak_bases(w);
  EXPECT_EQ(b.L.algebra->dim(), 2u);
  EXPECT_EQ(b.R.algebra->dim(), 2u);
}

TEST(Twistlab, WeakHopfBridgeRoundTrip) {
  for (std::size_t n : {2u, 3u}) {
    auto start = std::chrono::steady_clock::now();
    WeakHopfAlgebra w = pair_groupoid_weak_hopf(n, Q);
    HopfAlgebroid h = weak_hopf_to_hopf_algebroid(w);
    EXPECT_TRUE(verify_hopf(h).passed());
    EXPECT_TRUE(verify_sisom(h).passed());
    SeparabilityStructure sep = separability_from_weak(w, h);
    EXPECT_TRUE(verify_separability(sep).passed());
    WeakBialgebraData back = weak_bialgebra_from_sep(h.lb, sep);
    EXPECT_TRUE(back.report.passed());
    EXPECT_EQ(back.Delta, w.Delta);
    EXPECT_EQ(back.epsilon, w.epsilon);
    WhaDecision d = wha_decide(h, sep);
    EXPECT_EQ(d.verdict, WhaVerdict::Exact);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
  }
}

TEST(Twistlab, CorruptedWeakAntipode) {
  WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
  w.S.matrix = Matrix::identity(Q, 4);
  w.S_inv.matrix = Matrix::identity(Q, 4);
  Report r = verify_weak_hopf(w);
  EXPECT_FALSE(r.passed());
  for (const auto& id : r.failing_ids()) EXPECT_EQ(id.rfind("weak-hopf/(antipode", 0), 0u) << id;
}

TEST(Twistlab, CorruptedWeakCoproduct) {
  WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
  w.Delta(1 * 4 + 1, 1) = Q.from_int(2);
  EXPECT_FALSE(verify_weak_bialgebra(w.H, w.Delta, w.epsilon).passed());
}

TEST(Twistlab, TwistedGroupIsTwistable) {
  HopfAlgebroid h = cyclic(2, Q);
  AlgebraMap Sp = twisted_antipode(h.lb, h.S, make_twist(h.lb, character_row(2, Q.from_int(-1))));
  HopfAlgebroid ht = assemble_hopf(h.lb, Sp);
  WhaDecision d = wha_decide(ht, trivial_separability(ht.lb.base()));
  EXPECT_EQ(d.verdict, WhaVerdict::Twistable);
  ASSERT_TRUE(d.twist);
  ASSERT_TRUE(d.weak);
  EXPECT_TRUE(verify_weak_hopf(*d.weak).passed());
  EXPECT_EQ(wha_decide(h, trivial_separability(h.lb.base())).verdict, WhaVerdict::Exact);
  EXPECT_STREQ(to_string(WhaVerdict::Twistable), "twistable");
}

TEST(Twistlab, HopfAlgebraCriterion) {
  HopfAlgebroid h = cyclic(3, Q);
  EXPECT_TRUE(hopf_algebra_criterion(h).passed());
  Field F = Field::gf(7);
  HopfAlgebroid g = cyclic(3, F);
  HopfAlgebroid tw = assemble_hopf(g.lb, twisted_antipode(g.lb, g.S, make_twist(g.lb, character_row(3, F.from_int(2)))));
  EXPECT_EQ(hopf_algebra_criterion(tw).failing_ids(), std::vector<std::string>{"hopf-algebra/(counit)"});
}

TEST(Twistlab, AhatKappaOnGroupoid) {
  WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
  HopfAlgebroid h = weak_hopf_to_hopf_algebroid(w);
  AhatKappa ak = ahat_and_kappa(h.lb, separability_from_weak(w, h));
  EXPECT_TRUE(ak.report.passed()) << ak.report.to_text();
  EXPECT_EQ(ak.kappa_inverse * ak.kappa, Matrix::identity(Q, 4));
}

TEST(Twistlab, TrivialSeparability) {
  auto k = share(Algebra::ground(Field::gf(5)));
  SeparabilityStructure s = trivial_separability(k);
  EXPECT_TRUE(verify_separability(s).passed());
  s.psi(0, 0) = Field::gf(5).from_int(2);
  EXPECT_FALSE(verify_separability(s).passed());
}
