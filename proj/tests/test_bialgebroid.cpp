#include <gtest/gtest.h>

#include "hopfkit/bialgebroid.hpp"
#include "handmade.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

LeftBialgebroid with_gamma(const LeftBialgebroid& lb, Matrix gamma) {
  return LeftBialgebroid(lb.total(), lb.base(), lb.s(), lb.t(), std::move(gamma), lb.pi());
}

LeftBialgebroid with_pi(const LeftBialgebroid& lb, Matrix pi) {
  return LeftBialgebroid(lb.total(), lb.base(), lb.s(), lb.t(), lb.gamma(), std::move(pi));
}

bool group_is(const Report& r, const std::string& prefix) {
  for (const auto& id : r.failing_ids())
    if (id.rfind(prefix, 0) != 0) return false;
  return !r.passed();
}

}  // namespace

TEST(Bialgebroid, GroupAndGroupoidPass) {
  for (std::size_t n : {2u, 3u}) {
    EXPECT_TRUE(verify_left_bialgebroid(handmade::group_lb(n, Q)).passed());
    Report r = verify_left_bialgebroid(handmade::groupoid_lb(n, Q));
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(Bialgebroid, TensorSpaceDimensions) {
  EXPECT_EQ(handmade::group_lb(3, Q).tensor_space().quotient_dim(), 9u);
  EXPECT_EQ(handmade::groupoid_lb(2, Q).tensor_space().quotient_dim(), 8u);
  EXPECT_EQ(handmade::groupoid_lb(2, Q).triple_space().quotient_dim(), 16u);
}

TEST(Bialgebroid, OppositeAndCoopposite) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  EXPECT_TRUE(verify_right_bialgebroid(lb.opposite()).passed());
  EXPECT_TRUE(verify_left_bialgebroid(lb.coopposite()).passed());
  EXPECT_TRUE(verify_right_bialgebroid(lb.opposite().coopposite()).passed());
  LeftBialgebroid back = lb.opposite().opposite();
  EXPECT_EQ(back.gamma(), lb.gamma());
  EXPECT_TRUE(same_structure(*back.total(), *lb.total()));
}

TEST(Bialgebroid, CorruptedCoproductFails) {
  LeftBialgebroid lb = handmade::group_lb(3, Q);
  Matrix g = lb.gamma();
  g(1 * 3 + 2, 1) = Q.one();
  Report r = verify_left_bialgebroid(with_gamma(lb, g));
  EXPECT_TRUE(group_is(r, "left-bialgebroid/"));
  const Check* c = r.find("left-bialgebroid/(coassoc)");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_FALSE(c->certificates.empty());
}

TEST(Bialgebroid, CorruptedCounitFails) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  Matrix p = lb.pi();
  p(1, 1) = Q.one();
  Report r = verify_left_bialgebroid(with_pi(lb, p));
  EXPECT_TRUE(group_is(r, "left-bialgebroid/"));
  // s_L(f1 + f2) e12 = e12 keeps the counit law, multiplicativity catches it
  EXPECT_TRUE(r.find("left-bialgebroid/(counit)")->passed);
  EXPECT_FALSE(r.find("left-bialgebroid/(counit-mult)")->passed);
}

TEST(Bialgebroid, RightReportUsesRightIds) {
  LeftBialgebroid lb = handmade::group_lb(2, Q);
  Matrix g = lb.gamma();
  g(0, 1) = Q.one();
  Report r = verify_right_bialgebroid(with_gamma(lb, g).opposite());
  EXPECT_TRUE(group_is(r, "right-bialgebroid/"));
}

TEST(Bialgebroid, IdentityMorphism) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  MorphismReport m = verify_morphism(lb, lb, identity_map(lb.total()), identity_map(lb.base()));
  EXPECT_TRUE(m.report.passed());
  EXPECT_TRUE(m.isomorphism);
  auto phi = induced_base_map(lb.s(), lb.s(), Matrix::identity(Q, 4));
  ASSERT_TRUE(phi);
  EXPECT_EQ(*phi, Matrix::identity(Q, 2));
}

TEST(Bialgebroid, TransposeIsNotAMorphism) {
  // e_ij -> e_ji is anti-multiplicative, so the morphism check must fail.
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  Matrix T(Q, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) T(j * 2 + i, i * 2 + j) = Q.one();
  MorphismReport m = verify_morphism(lb, lb, AlgebraMap{lb.total(), lb.total(), T, MapKind::Homomorphism}, identity_map(lb.base()));
  EXPECT_FALSE(m.report.passed());
}

TEST(Bialgebroid, GroupAutomorphismIsMorphism) {
  // t -> t^2 on k[Z_3].
  LeftBialgebroid lb = handmade::group_lb(3, Q);
  Matrix P(Q, 3, 3);
  for (std::size_t g = 0; g < 3; ++g) P(2 * g % 3, g) = Q.one();
  MorphismReport m = verify_morphism(lb, lb, AlgebraMap{lb.total(), lb.total(), P, MapKind::Homomorphism}, identity_map(lb.base()));
  EXPECT_TRUE(m.report.passed()) << m.report.to_text();
  EXPECT_TRUE(m.isomorphism);
  Matrix N(Q, 3, 3);
  for (std::size_t g = 0; g < 3; ++g) N(0, g) = Q.one();
  // g -> 1 is a morphism that is not invertible.
  MorphismReport triv = verify_morphism(lb, lb, AlgebraMap{lb.total(), lb.total(), N, MapKind::Homomorphism}, identity_map(lb.base()));
  EXPECT_TRUE(triv.report.passed());
  EXPECT_FALSE(triv.isomorphism);
}

TEST(Bialgebroid, OnRingsRequiresSameStructure) {
  LeftBialgebroid lb = handmade::group_lb(2, Q);
  auto copy = share(Algebra(*lb.total()));
  LeftBialgebroid moved = on_rings(lb, copy, lb.base());
  EXPECT_EQ(moved.total(), copy);
  EXPECT_TRUE(verify_left_bialgebroid(moved).passed());
  EXPECT_THROW(on_rings(lb, oracle::matrix_units(2, Q), lb.base()), DimensionError);
}
