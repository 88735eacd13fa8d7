#pragma once

/// Brute-force references for the tests. Nothing here calls the elimination or
/// structure code under test beyond Scalar arithmetic and the Algebra constructor.

#include <random>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace oracle {

using hopfkit::Field;
using hopfkit::Scalar;
using hopfkit::Vector;

/// Reduced row echelon basis of the span of rows, dense Gauss-Jordan.
inline std::vector<Vector> rref_rows(std::vector<Vector> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar m = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - m * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Canonical basis of {x : row·x = 0 for every row}.
inline std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t n, const Field& f) {
  auto R = rref_rows(rows, n);
  std::vector<int> pivot_row(n, -1);
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (!R[i][c].is_zero()) {
        pivot_row[c] = static_cast<int>(i);
        break;
      }
  std::vector<Vector> out;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (pivot_row[fcol] >= 0) continue;
    Vector v(n, f.zero());
    v[fcol] = f.one();
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_row[c] >= 0) v[c] = -R[pivot_row[c]][fcol];
    out.push_back(v);
  }
  return rref_rows(out, n);
}

/// k[G] from a multiplication table, basis named g0, g1, ...
inline hopfkit::AlgebraPtr table_algebra(const std::vector<std::vector<std::size_t>>& mul, const Field& f) {
  std::size_t n = mul.size();
  std::vector<std::string> names;
  std::vector<hopfkit::StructureConstant> sc;
  std::size_t e = 0;
  for (std::size_t g = 0; g < n; ++g) {
    names.push_back("g" + std::to_string(g));
    bool id = true;
    for (std::size_t h = 0; h < n; ++h) id = id && mul[g][h] == h;
    if (id) e = g;
    for (std::size_t h = 0; h < n; ++h) sc.push_back({g, h, mul[g][h], f.one()});
  }
  Vector unit(n, f.zero());
  unit[e] = f.one();
  return hopfkit::share(hopfkit::Algebra(f, names, unit, sc));
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i + j) % n;
  return m;
}

/// n x n matrix units e_ij at index i*n+j.
inline hopfkit::AlgebraPtr matrix_units(std::size_t n, const Field& f) {
  std::vector<std::string> names;
  std::vector<hopfkit::StructureConstant> sc;
  Vector unit(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k) sc.push_back({i * n + j, j * n + k, i * n + k, f.one()});
    }
  }
  return hopfkit::share(hopfkit::Algebra(f, names, unit, sc));
}

/// Product of n x n matrices stored row-major as vectors.
inline Vector matmul(const Vector& a, const Vector& b, std::size_t n, const Field& f) {
  Vector c(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i * n + k] = c[i * n + k] + a[i * n + j] * b[j * n + k];
  return c;
}

inline Vector random_vector(std::mt19937& rng, const Field& f, std::size_t n, int spread = 3) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(static_cast<int>(rng() % (2 * spread + 1)) - spread));
  return v;
}

}  // namespace oracle
