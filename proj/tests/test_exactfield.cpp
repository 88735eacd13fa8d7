#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hopfkit/linalg.hpp"

using namespace hopfkit;

namespace {

/// Reference rationals on __int128, small enough inputs never overflow.
struct Frac {
  __int128 n, d;
  Frac(__int128 a = 0, __int128 b = 1) {
    if (b < 0) a = -a, b = -b;
    __int128 g = gcd(a < 0 ? -a : a, b);
    n = a / g;
    d = b / g;
  }
  static __int128 gcd(__int128 a, __int128 b) {
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a ? a : 1;
  }
  Frac operator+(const Frac& o) const { return {n * o.d + o.n * d, d * o.d}; }
  Frac operator*(const Frac& o) const { return {n * o.n, d * o.d}; }
  Frac operator-() const { return {-n, d}; }
  Frac inv() const { return {d, n}; }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

std::string str(const Frac& f) {
  auto s = [](__int128 v) { return std::to_string(static_cast<long long>(v)); };
  return f.d == 1 ? s(f.n) : s(f.n) + "/" + s(f.d);
}

/// Rank over GF(p) by Gaussian elimination on plain integers.
std::size_t naive_rank(std::vector<std::vector<long long>> m, long long p) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pw = [p](long long b, long long e) {
    long long x = 1;
    b %= p;
    while (e) {
      if (e & 1) x = x * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return x;
  };
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    long long inv = pw((m[r][c] % p + p) % p, p - 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      long long f = (m[i][c] % p + p) % p * inv % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Field, ParsesNames) {
  EXPECT_TRUE(Field::parse("rational").is_rational());
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("gf:7").characteristic(), 7u);
  EXPECT_EQ(Field::parse("GF(11)").characteristic(), 11u);
  EXPECT_THROW(Field::parse("gf:8"), FieldError);
  EXPECT_THROW(Field::parse("reals"), FieldError);
}

TEST(Field, ScalarLiterals) {
  Field Q = Field::rationals();
  EXPECT_EQ(Q.parse_scalar("-6/4").str(), "-3/2");
  EXPECT_EQ(Q.parse_scalar("0").str(), "0");
  EXPECT_THROW(Q.parse_scalar("1/0"), FieldError);
  EXPECT_THROW(Q.parse_scalar("1.5"), FieldError);
  Field F = Field::gf(7);
  EXPECT_EQ(F.parse_scalar("6").str(), "6");
  EXPECT_THROW(F.parse_scalar("7"), FieldError);
  EXPECT_EQ(F.from_int(-1).str(), "6");
  EXPECT_EQ(F.from_fraction(1, 2).str(), "4");
}

TEST(Field, MixingFieldsThrows) {
  EXPECT_THROW(Field::gf(5).one() + Field::gf(7).one(), FieldError);
  EXPECT_THROW(Field::rationals().one() * Field::gf(7).one(), FieldError);
}

TEST(Field, ZeroHasNoInverse) {
  EXPECT_THROW(Field::rationals().zero().inverse(), FieldError);
  EXPECT_THROW(Field::gf(3).zero().inverse(), FieldError);
}

TEST(Field, RationalArithmeticMatchesReference) {
  Field Q = Field::rationals();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30);
  for (int it = 0; it < 2000; ++it) {
    int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Scalar x = Q.from_fraction(a, b), y = Q.from_fraction(c, d);
    Frac fx(a, b), fy(c, d);
    EXPECT_EQ((x + y).str(), str(fx + fy));
    EXPECT_EQ((x - y).str(), str(fx + -fy));
    EXPECT_EQ((x * y).str(), str(fx * fy));
    if (c != 0) EXPECT_EQ((x / y).str(), str(fx * fy.inv()));
  }
}

TEST(Field, RationalOverflowFallsBackToBig) {
  Field Q = Field::rationals();
  Scalar x = Q.from_int(1LL << 62);
  Scalar y = x * x * x;
  EXPECT_EQ(y.str(), "98079714615416886934934209737619787751599303819750539264");
  EXPECT_EQ((y / x / x).str(), x.str());
  Scalar h = Q.from_fraction(1, 3);
  for (int i = 0; i < 50; ++i) h = h * Q.from_fraction(1, 3);
  for (int i = 0; i < 50; ++i) h = h * Q.from_int(3);
  EXPECT_EQ(h.str(), "1/3");
  EXPECT_TRUE(h.inverse() == Q.from_int(3));
}

TEST(Field, PrimeFieldArithmetic) {
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 11ULL, 2147483647ULL}) {
    Field F = Field::gf(p);
    std::mt19937_64 rng(p);
    for (int it = 0; it < 500; ++it) {
      long long a = static_cast<long long>(rng() % p), b = static_cast<long long>(rng() % p);
      Scalar x = F.from_int(a), y = F.from_int(b);
      unsigned long long prod = static_cast<unsigned __int128>(a) * b % p;
      EXPECT_EQ((x * y).residue(), static_cast<std::int64_t>(prod));
      EXPECT_EQ((x + y).residue(), static_cast<std::int64_t>((a + b) % static_cast<long long>(p)));
      if (b != 0) EXPECT_TRUE((x / y) * y == x);
    }
  }
}

TEST(Field, IsPrime) {
  std::vector<int> primes;
  for (int n = 0; n < 200; ++n) {
    bool p = n >= 2;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) p = false;
    EXPECT_EQ(is_prime(n), p) << n;
  }
  EXPECT_TRUE(is_prime(2147483647ULL));
}

TEST(Linalg, RrefIsCanonical) {
  Field Q = Field::rationals();
  Matrix m = Matrix::from_rows(Q, 3, {{Q.from_int(2), Q.from_int(4), Q.from_int(2)},
                                      {Q.from_int(1), Q.from_int(2), Q.from_int(3)}});
  RrefResult r = rref(m);
  Matrix expect = Matrix::from_rows(Q, 3, {{Q.one(), Q.from_int(2), Q.zero()}, {Q.zero(), Q.zero(), Q.one()}});
  EXPECT_EQ(r.reduced, expect);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
}

TEST(Linalg, RankMatchesNaiveElimination) {
  for (std::uint64_t p : {2ULL, 5ULL, 13ULL}) {
    Field F = Field::gf(p);
    std::mt19937 rng(static_cast<unsigned>(p));
    for (int it = 0; it < 60; ++it) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      std::vector<std::vector<long long>> raw(r, std::vector<long long>(c));
      Matrix m(F, r, c);
      bool sparse = it % 2;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          raw[i][j] = sparse && rng() % 3 ? 0 : rng() % p;
          m(i, j) = F.from_int(raw[i][j]);
        }
      EXPECT_EQ(rank(m), naive_rank(raw, static_cast<long long>(p)));
      EXPECT_EQ(kernel(m).dim() + rank(m), c);
      for (const auto& v : kernel(m).basis()) EXPECT_TRUE(is_zero(m * v));
      EXPECT_EQ(image(m).dim(), rank(m));
    }
  }
}

TEST(Linalg, SolveAndInvert) {
  Field Q = Field::rationals();
  std::mt19937 rng(5);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 6;
    Matrix m(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Q.from_int(static_cast<int>(rng() % 7) - 3);
    auto inv = invert(m);
    ASSERT_EQ(inv.has_value(), rank(m) == n);
    if (inv) {
      EXPECT_EQ(*inv * m, Matrix::identity(Q, n));
      EXPECT_EQ(m * *inv, Matrix::identity(Q, n));
    }
    Vector b(n);
    for (auto& x : b) x = Q.from_int(static_cast<int>(rng() % 5));
    auto x = solve(m, b);
    if (x) EXPECT_EQ(m * *x, b);
    else EXPECT_FALSE(image(m).contains(b));
  }
}

TEST(Linalg, SubspaceLattice) {
  Field F = Field::gf(3);
  auto v = [&](std::initializer_list<int> xs) {
    Vector r;
    for (int x : xs) r.push_back(F.from_int(x));
    return r;
  };
  Subspace a = Subspace::span(F, 4, {v({1, 0, 0, 0}), v({0, 1, 1, 0})});
  Subspace b = Subspace::span(F, 4, {v({0, 1, 1, 0}), v({0, 0, 0, 1})});
  EXPECT_EQ(a.intersection(b), Subspace::span(F, 4, {v({0, 2, 2, 0})}));
  EXPECT_EQ(a.sum(b).dim(), 3u);
  EXPECT_TRUE(a.sum(b).includes(a));
  EXPECT_FALSE(a.includes(b));
  EXPECT_EQ(a.free_columns(), (std::vector<std::uint32_t>{2, 3}));
  auto c = a.coordinates(v({2, 1, 1, 0}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, v({2, 1}));
  EXPECT_FALSE(a.coordinates(v({0, 0, 1, 0})));
  EXPECT_TRUE(is_zero(a.reduce(v({1, 2, 2, 0}))));
  EXPECT_EQ(Subspace::whole(F, 4).dim(), 4u);
}

TEST(Linalg, SpanBuilderAgreesWithDenseSpan) {
  Field Q = Field::rationals();
  std::mt19937 rng(9);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 2 + rng() % 8;
    std::vector<Vector> gens;
    SpanBuilder sb(Q, n);
    for (int g = 0; g < 6; ++g) {
      Vector x(n, Q.zero());
      for (auto& e : x)
        if (rng() % 3 == 0) e = Q.from_int(static_cast<int>(rng() % 5) - 2);
      gens.push_back(x);
      sb.add(x);
    }
    EXPECT_EQ(std::move(sb).finish(), Subspace::span(Q, n, gens));
  }
}

TEST(Linalg, DimensionMismatchThrows) {
  Field Q = Field::rationals();
  EXPECT_THROW(Matrix(Q, 2, 3) * Matrix(Q, 2, 3), DimensionError);
  EXPECT_THROW(add(Vector(2, Q.one()), Vector(3, Q.one())), DimensionError);
}
