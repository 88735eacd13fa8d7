#include <gtest/gtest.h>

#include <chrono>

#include "handmade.hpp"
#include "hopfkit/hopfcore.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

HopfAlgebroid cyclic(std::size_t n, const Scalar& omega) {
  LeftBialgebroid lb = handmade::group_lb(n, omega.field());
  return assemble_hopf(lb, handmade::cyclic_antipode(lb, omega));
}

}  // namespace

TEST(Hopfcore, SignTwistPassesButFailsLuAtLu3) {
  auto start = std::chrono::steady_clock::now();
  HopfAlgebroid h = cyclic(2, Q.from_int(-1));
  Report hopf = verify_hopf(h);
  EXPECT_TRUE(hopf.passed()) << hopf.to_text();
  EXPECT_TRUE(verify_sisom(h).passed());
  Report lu = check_lu_axioms(h.lb, h.S);
  EXPECT_EQ(lu.failing_ids(), std::vector<std::string>{"lu/(lu3)"});
  const Check* c = lu.find("lu/(lu3)");
  ASSERT_EQ(c->certificates.size(), 1u);
  EXPECT_EQ(c->certificates[0].subject, "a=g1");
  EXPECT_EQ(c->certificates[0].lhs, "-g0");
  EXPECT_EQ(c->certificates[0].rhs, "g0");
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(Hopfcore, TrivialCharacterPassesBoth) {
  HopfAlgebroid h = cyclic(2, Q.one());
  EXPECT_TRUE(verify_hopf(h).passed());
  EXPECT_TRUE(check_lu_axioms(h.lb, h.S).passed());
  EXPECT_TRUE(check_luiiv(h.lb, h.S).passed());
}

TEST(Hopfcore, CyclicTwistsOverPrimeField) {
  Field F = Field::gf(7);
  // 2 has order 3 mod 7
  HopfAlgebroid h = cyclic(3, F.from_int(2));
  EXPECT_TRUE(verify_hopf(h).passed());
  EXPECT_FALSE(check_lu_axioms(h.lb, h.S).passed());
  EXPECT_EQ(h.S.matrix(2, 1), F.from_int(2));
}

TEST(Hopfcore, GroupoidTranspose) {
  for (std::size_t n : {2u, 3u}) {
    LeftBialgebroid lb = handmade::groupoid_lb(n, Q);
    HopfAlgebroid h = assemble_hopf(lb, handmade::transpose(lb));
    Report r = verify_hopf(h);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_TRUE(verify_sisom(h).passed());
    EXPECT_EQ(h.S_inv.matrix, h.S.matrix);
    EXPECT_EQ(h.base_antiiso.matrix.rows(), n);
  }
}

TEST(Hopfcore, WrongAntipodeFailsUnderHopfIds) {
  LeftBialgebroid lb = handmade::group_lb(3, Q);
  HopfAlgebroid good = assemble_hopf(lb, handmade::cyclic_antipode(lb, Q.one()));
  HopfAlgebroid bad = good;
  bad.S.matrix = Matrix::identity(Q, 3);
  bad.S_inv.matrix = Matrix::identity(Q, 3);
  Report r = verify_hopf(bad);
  EXPECT_FALSE(r.passed());
  std::string first = r.first_failure();
  EXPECT_EQ(first.rfind("hopf/(def", 0), 0u) << first;
}

TEST(Hopfcore, ReconstructedRightMatchesOpposite) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  AlgebraMap S = handmade::transpose(lb);
  RightBialgebroid rb = reconstruct_right(lb, S);
  EXPECT_TRUE(verify_right_bialgebroid(rb).passed());
  HopfAlgebroid h = assemble_hopf(lb, S);
  EXPECT_EQ(rb.gamma(), h.rb.gamma());
}

TEST(Hopfcore, AssembleFromRight) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  HopfAlgebroid h = assemble_hopf(lb, handmade::transpose(lb));
  HopfAlgebroid g = assemble_hopf_from_right(h.rb, h.S);
  EXPECT_TRUE(verify_hopf(g).passed());
  EXPECT_EQ(g.lb.gamma(), h.lb.gamma());
}

TEST(Hopfcore, OppositeAndCoopposite) {
  HopfAlgebroid h = cyclic(3, Q.one());
  EXPECT_TRUE(verify_hopf(opposite(h)).passed());
  EXPECT_TRUE(verify_hopf(coopposite(h)).passed());
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  HopfAlgebroid m = assemble_hopf(lb, handmade::transpose(lb));
  EXPECT_TRUE(verify_hopf(opposite(m)).passed());
  EXPECT_TRUE(verify_hopf(coopposite(m)).passed());
}

TEST(Hopfcore, GaloisMapsInvertible) {
  LeftBialgebroid lb = handmade::groupoid_lb(2, Q);
  GaloisMaps g = galois_maps(assemble_hopf(lb, handmade::transpose(lb)));
  EXPECT_TRUE(g.report.passed()) << g.report.to_text();
  EXPECT_EQ(g.alpha * g.alpha_inverse, Matrix::identity(Q, g.alpha.rows()));
  EXPECT_EQ(g.beta_inverse * g.beta, Matrix::identity(Q, g.beta.cols()));
}

TEST(Hopfcore, AntipodeUniqueness) {
  HopfAlgebroid h = cyclic(2, Q.one());
  UniquenessResult same = antipode_unique(h.lb, h.rb, h.S, h.S);
  EXPECT_TRUE(same.equal);
  EXPECT_TRUE(same.diagnostic.passed());
  // S_chi against the right structure of S = id: the chain lands on S_chi only.
  AlgebraMap Schi = handmade::cyclic_antipode(h.lb, Q.from_int(-1));
  UniquenessResult diff = antipode_unique(h.lb, h.rb, h.S, Schi);
  EXPECT_FALSE(diff.equal);
  EXPECT_FALSE(diff.diagnostic.passed());
}

TEST(Hopfcore, MixedTriplesAndFlipApply) {
  HopfAlgebroid h = cyclic(3, Q.one());
  auto llr = build_mixed_triple(MixedKind::LLR, h.lb, h.rb);
  auto rrl = build_mixed_triple(MixedKind::RRL, h.lb, h.rb);
  EXPECT_EQ(llr->quotient_dim(), 27u);
  EXPECT_EQ(rrl->quotient_dim(), 27u);
  Vector t = tensor(h.total()->basis_vector(1), h.total()->basis_vector(2));
  EXPECT_EQ(flip_apply(t, 3, h.S.matrix), tensor(h.S.apply_basis(2), h.S.apply_basis(1)));
}

TEST(Hopfcore, LuSectionMustSplit) {
  HopfAlgebroid h = cyclic(2, Q.one());
  Matrix xi(Q, 4, 4);
  Report r = check_lu_axioms(h.lb, h.S, xi);
  EXPECT_FALSE(r.find("lu/(section)")->passed);
}
