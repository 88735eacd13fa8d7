#include "hopfkit/catalog.hpp"

#include <stdexcept>

namespace hopfkit {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (n == 0 || mul_.size() != n) throw std::invalid_argument("group table has the wrong size");
  for (const auto& row : mul_) {
    if (row.size() != n) throw std::invalid_argument("group table has the wrong size");
    for (std::size_t x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = mul_[e][g] == g && mul_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw std::invalid_argument("group table is not associative");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (mul_[g][h] == identity_ && mul_[h][g] == identity_) inverse_[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (inverse_[g] == n) throw std::invalid_argument("group element " + names_[g] + " has no inverse");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order zero");
  std::vector<std::string> names(n);
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : i == 1 ? "t" : "t^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(names), std::move(mul));
}

FiniteGroup FiniteGroup::symmetric3() {
  // index a + 3b stands for r^a s^b
  std::vector<std::string> names{"e", "r", "r^2", "s", "rs", "r^2s"};
  std::vector<std::vector<std::size_t>> mul(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      std::size_t a = x % 3, b = x / 3, c = y % 3, d = y / 3;
      std::size_t e = (a + (b ? 3 - c : c)) % 3;
      mul[x][y] = e + 3 * ((b + d) % 2);
    }
  return FiniteGroup(std::move(names), std::move(mul));
}

Character make_character(const FiniteGroup& G, std::vector<Scalar> values) {
  if (values.size() != G.order()) throw std::invalid_argument("character needs one value per group element");
  if (!values[G.identity()].is_one()) throw std::invalid_argument("character does not send e to 1");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (values[G.mul(g, h)] != values[g] * values[h])
        throw std::invalid_argument("character is not multiplicative at " + G.names()[g] + ", " + G.names()[h]);
  return Character{std::move(values)};
}

Character cyclic_character(const FiniteGroup& G, const Scalar& omega) {
  std::vector<Scalar> v(G.order());
  Scalar p = omega.field().one();
  for (std::size_t k = 0; k < G.order(); ++k) {
    v[k] = p;
    p *= omega;
  }
  return make_character(G, std::move(v));
}

Character sign_character(const FiniteGroup& z2, const Field& f) {
  if (f.characteristic() == 2) throw std::invalid_argument("the sign character needs characteristic different from 2");
  if (z2.order() != 2) throw std::invalid_argument("the sign character is defined on Z_2");
  std::vector<Scalar> v(2, f.one());
  v[1 - z2.identity()] = -f.one();
  return make_character(z2, std::move(v));
}

Character trivial_character(const FiniteGroup& G, const Field& f) { return Character{std::vector<Scalar>(G.order(), f.one())}; }

AlgebraPtr group_algebra(const FiniteGroup& G, const Field& f) {
  const std::size_t n = G.order();
  std::vector<StructureConstant> c;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) c.push_back({g, h, G.mul(g, h), f.one()});
  return share(Algebra(f, G.names(), unit_vector(f, n, G.identity()), c));
}

LeftBialgebroid group_left_bialgebroid(const FiniteGroup& G, const Field& f) {
  AlgebraPtr A = group_algebra(G, f);
  AlgebraPtr k = share(Algebra::ground(f));
  const std::size_t n = G.order();
  Matrix eta(f, n, 1);
  eta.set_column(0, A->unit());
  Matrix gamma(f, n * n, n), pi(f, 1, n);
  for (std::size_t g = 0; g < n; ++g) {
    gamma(g * n + g, g) = f.one();
    pi(0, g) = f.one();
  }
  return LeftBialgebroid(A, k, AlgebraMap{k, A, eta, MapKind::Homomorphism}, AlgebraMap{k, A, eta, MapKind::AntiHomomorphism},
                         gamma, pi);
}

namespace {

AlgebraMap weighted_inverse(const FiniteGroup& G, const AlgebraPtr& A, const std::vector<Scalar>& w) {
  const std::size_t n = G.order();
  Matrix S(A->field(), n, n);
  for (std::size_t g = 0; g < n; ++g) S(G.inverse(g), g) = w[g];
  return AlgebraMap{A, A, S, MapKind::AntiHomomorphism};
}

}  // namespace

HopfAlgebroid group_hopf_algebroid(const FiniteGroup& G, const Field& f) {
  LeftBialgebroid lb = group_left_bialgebroid(G, f);
  return assemble_hopf(lb, weighted_inverse(G, lb.total(), trivial_character(G, f).values));
}

TwistedGroupAlgebra character_twisted(const FiniteGroup& G, const Character& chi, const Field& f) {
  LeftBialgebroid lb = group_left_bialgebroid(G, f);
  AlgebraMap S = weighted_inverse(G, lb.total(), chi.values);
  return TwistedGroupAlgebra{lb, S, assemble_hopf(lb, S)};
}

WeakHopfAlgebra pair_groupoid_weak_hopf(std::size_t n, const Field& f) {
  if (n == 0) throw std::invalid_argument("pair groupoid on zero objects");
  const std::size_t d = n * n;
  std::vector<std::string> names(d);
  std::vector<StructureConstant> c;
  Vector unit(d, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      names[i * n + j] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
      for (std::size_t l = 0; l < n; ++l) c.push_back({i * n + j, j * n + l, i * n + l, f.one()});
    }
  }
  AlgebraPtr H = share(Algebra(f, names, unit, c));
  Matrix Delta(f, d * d, d), eps(f, 1, d), S(f, d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t x = i * n + j;
      Delta(x * d + x, x) = f.one();
      eps(0, x) = f.one();
      S(j * n + i, x) = f.one();
    }
  AlgebraMap Sm{H, H, S, MapKind::AntiHomomorphism};
  return WeakHopfAlgebra{H, Delta, eps, Sm, Sm};
}

WeakHopfAlgebra group_weak_hopf(const FiniteGroup& G, const Field& f) {
  const std::size_t n = G.order();
  AlgebraPtr H = group_algebra(G, f);
  Matrix Delta(f, n * n, n), eps(f, 1, n), S(f, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    Delta(g * n + g, g) = f.one();
    eps(0, g) = f.one();
    S(G.inverse(g), g) = f.one();
  }
  AlgebraMap Sm{H, H, S, MapKind::AntiHomomorphism};
  return WeakHopfAlgebra{H, Delta, eps, Sm, Sm};
}

WeakHopfAlgebra dual_function_algebra(const FiniteGroup& G, const Field& f) {
  const std::size_t n = G.order();
  std::vector<std::string> names(n);
  std::vector<StructureConstant> c;
  for (std::size_t g = 0; g < n; ++g) {
    names[g] = "d(" + G.names()[g] + ")";
    c.push_back({g, g, g, f.one()});
  }
  AlgebraPtr H = share(Algebra(f, names, Vector(n, f.one()), c));
  Matrix Delta(f, n * n, n), eps(f, 1, n), S(f, n, n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) Delta(h * n + k, G.mul(h, k)) = f.one();
  eps(0, G.identity()) = f.one();
  for (std::size_t g = 0; g < n; ++g) S(G.inverse(g), g) = f.one();
  AlgebraMap Sm{H, H, S, MapKind::AntiHomomorphism};
  return WeakHopfAlgebra{H, Delta, eps, Sm, Sm};
}

}  // namespace hopfkit
