#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "hopfkit/catalog.hpp"
#include "hopfkit/integrallab.hpp"
#include "hopfkit/twistlab.hpp"
#include "oracle.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

/// Collects the reasons a criterion fails; empty means pass.
struct Verdict {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void require(const Report& r, const std::string& what) {
    if (!r.passed()) problems.push_back(what + " fails " + join(r.failing_ids()));
  }
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return out;
  }
};

struct Example {
  std::string name;
  HopfAlgebroid h;
};

Vector all_ones(const HopfAlgebroid& h) { return Vector(h.dim(), h.lb.field().one()); }

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

/// g(t^k) = omega^k.
Matrix character_row(std::size_t n, const Scalar& omega) {
  Matrix g(omega.field(), 1, n);
  Scalar c = omega.field().one();
  for (std::size_t k = 0; k < n; ++k) {
    g(0, k) = c;
    c = c * omega;
  }
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

/// Kernel of x ↦ (a x − s π(a) x) stacked over all basis a, or the mirror image on the right.
std::vector<Vector> stacked_kernel(const Algebra& A, const std::function<Vector(std::size_t)>& sp, bool left) {
  std::size_t n = A.dim();
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a) {
    Vector s = sp(a);
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(n, A.field().zero());
      for (std::size_t x = 0; x < n; ++x) {
        const Vector& ea = A.basis_vector(a);
        const Vector& ex = A.basis_vector(x);
        row[x] = left ? A.mul(ea, ex)[r] - A.mul(s, ex)[r] : A.mul(ex, ea)[r] - A.mul(ex, s)[r];
      }
      rows.push_back(row);
    }
  }
  return oracle::nullspace(rows, n, A.field());
}

Verdict counterexample() {
  Verdict v;
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  HopfAlgebroid sign = character_twisted(z2, sign_character(z2, Q), Q).hopf;
  v.require(verify_hopf(sign), "sign verify_hopf");
  Report lu = check_lu_axioms(sign.lb, sign.S);
  v.require(lu.failing_ids() == std::vector<std::string>{"lu/(lu3)"}, "sign Lu failures are " + Verdict::join(lu.failing_ids()));
  const Check* c = lu.find("lu/(lu3)");
  bool cert = c && c->certificates.size() == 1 && c->certificates[0].subject == "a=t" && c->certificates[0].lhs == "-e" &&
              c->certificates[0].rhs == "e";
  v.require(cert, "lu3 certificate is not t*S(t) = -e != e");
  HopfAlgebroid plain = character_twisted(z2, trivial_character(z2, Q), Q).hopf;
  v.require(verify_hopf(plain), "trivial verify_hopf");
  v.require(check_lu_axioms(plain.lb, plain.S), "trivial Lu");
  return v;
}

Verdict weak_bridge() {
  Verdict v;
  for (std::size_t n : {2u, 3u}) {
    std::string tag = "M" + std::to_string(n) + " ";
    WeakHopfAlgebra w = pair_groupoid_weak_hopf(n, Q);
    HopfAlgebroid h = weak_hopf_to_hopf_algebroid(w);
    v.require(verify_hopf(h), tag + "verify_hopf");
    v.require(verify_sisom(h), tag + "verify_sisom");
    SeparabilityStructure sep = separability_from_weak(w, h);
    v.require(verify_separability(sep), tag + "separability");
    WeakBialgebraData back = weak_bialgebra_from_sep(h.lb, sep);
    v.require(back.Delta == w.Delta, tag + "Delta differs after round trip");
    v.require(back.epsilon == w.epsilon, tag + "epsilon differs after round trip");
    v.require(wha_decide(h, sep).verdict == WhaVerdict::Exact, tag + "wha_decide is not exact");
  }
  return v;
}

Verdict twist_round_trips() {
  Verdict v;
  std::mt19937 rng(2024);
  std::vector<Field> fields = {Q, Field::gf(7), Field::gf(11), Field::gf(13), Field::gf(31)};
  for (int it = 0; it < 20; ++it) {
    const Field& F = fields[it % fields.size()];
    std::size_t n = 2 + rng() % 5;
    auto roots = roots_of_unity(F, n);
    Scalar omega = roots[rng() % roots.size()];
    HopfAlgebroid h = group_hopf_algebroid(FiniteGroup::cyclic(n), F);
    Twist t = make_twist(h.lb, character_row(n, omega));
    std::string tag = "Z" + std::to_string(n) + " omega=" + omega.str() + " ";
    v.require(verify_twist(h.lb, h.S, t), tag + "twist");
    AlgebraMap Sp = twisted_antipode(h.lb, h.S, t);
    Twist back = recover_twist(h.lb, h.S, Sp);
    v.require(back.g == t.g, tag + "recover after twist");
    v.require(twisted_antipode(h.lb, h.S, back).matrix == Sp.matrix, tag + "twist after recover");
  }
  Field F = Field::gf(13);
  HopfAlgebroid h = group_hopf_algebroid(FiniteGroup::cyclic(6), F);
  auto roots = roots_of_unity(F, 6);
  Twist e = identity_twist(h.lb);
  for (const auto& a : roots) {
    Twist x = make_twist(h.lb, character_row(6, a));
    v.require(compose_twists(h.lb, x, e).g == x.g && compose_twists(h.lb, e, x).g == x.g, "identity law");
    v.require(compose_twists(h.lb, x, inverse_twist(x)).g == e.g, "inverse law");
    for (const auto& b : roots) {
      Twist y = make_twist(h.lb, character_row(6, b));
      Twist xy = compose_twists(h.lb, x, y);
      v.require(verify_twist(h.lb, h.S, xy), "closure");
      for (const auto& c : roots) {
        Twist z = make_twist(h.lb, character_row(6, c));
        v.require(compose_twists(h.lb, xy, z).g == compose_twists(h.lb, x, compose_twists(h.lb, y, z)).g, "associativity");
      }
    }
  }
  return v;
}

Verdict integral_theory() {
  Verdict v;
  FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric3();
  std::vector<Example> examples = {
      {"kZ2", group_hopf_algebroid(z2, Q)},
      {"kZ3", group_hopf_algebroid(z3, Q)},
      {"kS3", group_hopf_algebroid(s3, Q)},
      {"M2", weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q))},
  };
  for (const auto& ex : examples) {
    const LeftBialgebroid& lb = ex.h.lb;
    const RightBialgebroid& rb = ex.h.rb;
    const Algebra& A = *ex.h.total();
    auto left = stacked_kernel(A, [&](std::size_t a) { return lb.s().apply(lb.counit(A.basis_vector(a))); }, true);
    auto right = stacked_kernel(A, [&](std::size_t a) { return rb.s().apply(rb.counit(A.basis_vector(a))); }, false);
    IntegralSpace l = integral_space(lb), r = integral_space(rb);
    v.require(l.space.basis() == left, ex.name + " left integrals differ from oracle");
    v.require(r.space.basis() == right, ex.name + " right integrals differ from oracle");
    for (const auto& b : l.space.basis()) {
      IntprResult ip = intpr_equivalences(ex.h, b);
      v.require(ip.consistent() && ip.conditions[0], ex.name + " intpr conditions disagree");
    }
    NondegenerateIntegral nd = some_integral(ex.h);
    NondegeneracyResult res = nondegeneracy(ex.h, nd.ell);
    const Check* fs = res.report.find("nondegenerate/(fsrinv)");
    v.require(fs && fs->passed, ex.name + " fsrinv");
    v.require(frobenius_check(ex.h, nd), ex.name + " frobenius");
  }
  return v;
}

Verdict larson_sweedler() {
  Verdict v;
  for (std::size_t n = 2; n <= 5; ++n) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    HopfAlgebroid base = group_hopf_algebroid(G, Q);
    Vector ell = all_ones(base);
    LsResult r = ls_antipode(base.rb, ell);
    std::string tag = "Z" + std::to_string(n) + " ";
    v.require(r.report, tag + "ls_antipode");
    for (std::size_t g = 0; g < n; ++g)
      v.require(r.hopf.S.apply_basis(g) == base.total()->basis_vector(G.inverse(g)), tag + "S(g) != g^-1");
    v.require(verify_hopf(r.hopf), tag + "verify_hopf");
    v.require(is_left_integral(r.hopf.lb, ell) && nondegeneracy(r.hopf, ell).nondegenerate(), tag + "ell not non-degenerate");
  }
  HopfAlgebroid m2 = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q));
  Vector ell = all_ones(m2);
  LsResult r = ls_antipode(m2.rb, ell);
  v.require(r.report, "M2 ls_antipode");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      v.require(r.hopf.S.apply_basis(i * 2 + j) == m2.total()->basis_vector(j * 2 + i), "M2 S(e_ij) != e_ji");
  v.require(verify_hopf(r.hopf), "M2 verify_hopf");
  v.require(is_left_integral(r.hopf.lb, ell) && nondegeneracy(r.hopf, ell).nondegenerate(), "M2 ell not non-degenerate");
  return v;
}

Verdict duality() {
  Verdict v;
  for (std::size_t n : {2u, 3u}) {
    FiniteGroup G = FiniteGroup::cyclic(n);
    HopfAlgebroid h = group_hopf_algebroid(G, Q);
    NondegenerateIntegral nd = some_integral(h);
    DualHopf D = dual_hopf_algebroid(h, nd);
    std::string tag = "kZ" + std::to_string(n) + " ";
    v.require(D.report, tag + "dual");
    v.require(verify_hopf(D.hopf), tag + "dual verify_hopf");
    v.require(same_structure(*D.hopf.total(), *dual_function_algebra(G, Q).H), tag + "dual is not the function algebra");
    Report iso = weak_dual_iso(group_weak_hopf(G, Q), h, nd);
    v.require(iso, tag + "whadiso");
    const Check* m = iso.find("whadiso/(right-morphism)");
    v.require(m && m->passed, tag + "whadiso morphism");
  }
  Field F = Field::gf(7);
  FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric3();
  std::vector<Example> catalog = {
      {"kZ2", group_hopf_algebroid(z2, Q)},
      {"kZ3", group_hopf_algebroid(z3, Q)},
      {"kS3", group_hopf_algebroid(s3, Q)},
      {"kZ2 sign", character_twisted(z2, sign_character(z2, Q), Q).hopf},
      {"kZ3 GF7 twisted", character_twisted(z3, cyclic_character(z3, F.from_int(2)), F).hopf},
      {"M2", weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q))},
      {"M3", weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(3, Q))},
      {"k^Z2", weak_hopf_to_hopf_algebroid(dual_function_algebra(z2, Q))},
      {"k^S3", weak_hopf_to_hopf_algebroid(dual_function_algebra(s3, Q))},
  };
  for (const auto& ex : catalog) {
    NondegenerateIntegral nd = some_integral(ex.h);
    v.require(duality_diagram(ex.h, nd), ex.name + " diagram");
    Report dd = double_dual(ex.h, nd);
    const Check* b = dd.find("double-dual/(bialgebroid)");
    v.require(b && b->passed, ex.name + " double dual");
  }
  return v;
}

AlgebraPtr perturb_product(const Algebra& A, std::size_t i, std::size_t j, std::size_t k) {
  std::vector<StructureConstant> c = A.structure_constants();
  bool hit = false;
  for (auto& x : c)
    if (x.i == i && x.j == j && x.k == k) {
      x.value += A.field().one();
      hit = true;
    }
  if (!hit) c.push_back({i, j, k, A.field().one()});
  std::vector<std::string> names;
  for (std::size_t a = 0; a < A.dim(); ++a) names.push_back(A.name(a));
  return share(Algebra(A.field(), names, A.unit(), c));
}

struct Corruption {
  std::string name;
  std::function<Report()> run;
  std::string tag;  // the equation tag the failing check must carry
};

std::vector<Corruption> corruptions() {
  std::vector<Corruption> out;
  FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric3();
  out.push_back({"S3 product r*r", [=] { return verify_algebra(*perturb_product(*group_algebra(s3, Q), 1, 1, 0)); }, "(assoc)"});
  out.push_back({"kZ3 coproduct of t", [=] {
                   LeftBialgebroid lb = group_hopf_algebroid(z3, Q).lb;
                   Matrix g = lb.gamma();
                   g(1 * 3 + 1, 1) += Q.one();
                   return verify_left_bialgebroid(LeftBialgebroid(lb.total(), lb.base(), lb.s(), lb.t(), g, lb.pi()));
                 },
                 "(counit)"});
  out.push_back({"M2 right coproduct", [=] {
                   RightBialgebroid rb = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q)).rb;
                   Matrix g = rb.gamma();
                   g(0, 1) += Q.one();
                   return verify_right_bialgebroid(RightBialgebroid(rb.total(), rb.base(), rb.s(), rb.t(), g, rb.pi()));
                 },
                 "(counit)"});
  out.push_back({"M2 left coproduct in verify_hopf", [=] {
                   HopfAlgebroid h = weak_hopf_to_hopf_algebroid(pair_groupoid_weak_hopf(2, Q));
                   Matrix g = h.lb.gamma();
                   g(0, 3) += Q.one();
                   h.lb = LeftBialgebroid(h.lb.total(), h.lb.base(), h.lb.s(), h.lb.t(), g, h.lb.pi());
                   return verify_hopf(h);
                 },
                 "(defii)"});
  out.push_back({"kZ3 antipode in verify_hopf", [=] {
                   HopfAlgebroid h = group_hopf_algebroid(z3, Q);
                   h.S.matrix(0, 1) += Q.one();
                   return verify_hopf(h);
                 },
                 "(defiv)"});
  out.push_back({"kS3 antipode in verify_sisom", [=] {
                   HopfAlgebroid h = group_hopf_algebroid(s3, Q);
                   h.S.matrix(1, 3) += Q.one();
                   return verify_sisom(h);
                 },
                 "(sisom-"});
  out.push_back({"kZ2 antipode in Lu axioms", [=] {
                   HopfAlgebroid h = group_hopf_algebroid(z2, Q);
                   h.S.matrix(0, 1) += Q.one();
                   return check_lu_axioms(h.lb, h.S);
                 },
                 "(lu"});
  out.push_back({"M2 weak antipode", [=] {
                   WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
                   w.S.matrix(0, 1) += Q.one();
                   return verify_weak_hopf(w);
                 },
                 "(antipode"});
  out.push_back({"M2 weak coproduct", [=] {
                   WeakHopfAlgebra w = pair_groupoid_weak_hopf(2, Q);
                   w.Delta(1 * 4 + 1, 1) += Q.one();
                   return verify_weak_bialgebra(w.H, w.Delta, w.epsilon);
                 },
                 "(counit)"});
  out.push_back({"kZ3 antipode in Hopf algebra criterion", [=] {
                   HopfAlgebroid h = group_hopf_algebroid(z3, Q);
                   h.S.matrix(2, 2) += Q.one();
                   return hopf_algebra_criterion(h);
                 },
                 "hopf-algebra/("});
  return out;
}

Verdict negative_cases() {
  Verdict v;
  std::regex tagged(R"(^[a-z-]+/\([A-Za-z0-9-]+\)$)");
  for (const auto& c : corruptions()) {
    Report r = c.run();
    bool named = false, certified = false;
    for (const auto& id : r.failing_ids()) {
      if (!std::regex_match(id, tagged)) v.require(false, c.name + ": untagged failing check " + id);
      if (id.find(c.tag) == std::string::npos) continue;
      named = true;
      const Check* ch = r.find(id);
      if (ch && !ch->certificates.empty()) certified = true;
    }
    v.require(!r.passed(), c.name + ": not detected");
    v.require(named && certified, c.name + ": no certified failure tagged " + c.tag + " among " + Verdict::join(r.failing_ids()));
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit;  // seconds
  };
  std::vector<Criterion> criteria = {
      {"counterexample reproduction", counterexample, 1.0},
      {"weak-Hopf bridge", weak_bridge, 10.0},
      {"twist round trips", twist_round_trips, 5.0},
      {"integral theory", integral_theory, 10.0},
      {"half Larson-Sweedler", larson_sweedler, 10.0},
      {"duality", duality, 20.0},
      {"negative cases", negative_cases, 60.0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      std::ostringstream s;
      s << "took " << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit << " s";
      v.problems.push_back(s.str());
    }
    bool ok = v.problems.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << c.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    for (const auto& p : v.problems) std::cout << "    " << p << "\n";
  }
  return all ? 0 : 1;
}
