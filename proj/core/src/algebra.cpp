#include "hopfkit/algebra.hpp"

#include <algorithm>
#include <map>

namespace hopfkit {

Algebra::Algebra(Field f, std::vector<std::string> names, Vector unit, const std::vector<StructureConstant>& products)
    : field_(f), names_(std::move(names)), unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DimensionError("algebra must have positive dimension");
  if (unit_.size() != n) throw DimensionError("unit vector has wrong length");
  for (const auto& u : unit_)
    if (u.modulus() != f.characteristic()) throw FieldError("unit coefficient from another field");
  std::vector<std::map<std::uint32_t, Scalar>> acc(n * n);
  for (const auto& c : products) {
    if (c.i >= n || c.j >= n || c.k >= n)
      throw DimensionError("structure constant index out of range: [" + std::to_string(c.i) + "," + std::to_string(c.j) +
                           "," + std::to_string(c.k) + "]");
    if (c.value.modulus() != f.characteristic()) throw FieldError("structure constant from another field");
    auto& slot = acc[c.i * n + c.j];
    auto [it, fresh] = slot.emplace(static_cast<std::uint32_t>(c.k), c.value);
    if (!fresh) it->second += c.value;
  }
  table_.resize(n * n);
  for (std::size_t p = 0; p < n * n; ++p)
    for (const auto& [k, v] : acc[p])
      if (!v.is_zero()) table_[p].emplace_back(k, v);
}

Algebra Algebra::ground(Field f) { return Algebra(f, {"1"}, {f.one()}, {{0, 0, 0, f.one()}}); }

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, v] : product(i, j))
    if (kk == k) return v;
  return field_.zero();
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, v] : product(i, j)) out.push_back({i, j, k, v});
  return out;
}

Vector Algebra::mul(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("Algebra::mul: length mismatch");
  Vector r(n, field_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : product(i, j)) r[k] += c * v;
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(x, basis_vector(j)));
  return m;
}

Matrix Algebra::right_mult(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(basis_vector(j), x));
  return m;
}

bool same_structure(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field()) || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

Algebra Algebra::opposite() const {
  std::vector<StructureConstant> c;
  for (const auto& s : structure_constants()) c.push_back({s.j, s.i, s.k, s.value});
  return Algebra(field_, names_, unit_, c);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

namespace {

std::string format_terms(const Field& f, const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  const Scalar one = f.one();
  const Scalar minus_one = -one;
  bool first = true;
  for (const auto& [label, c] : terms) {
    std::string coef;
    bool negative = false;
    if (f.is_rational()) {
      std::string s = c.str();
      if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
      }
      coef = s == "1" ? "" : s + "*";
    } else {
      coef = c == one ? "" : c.str() + "*";
    }
    if (first) {
      out += (negative ? "-" : "") + coef + label;
    } else {
      out += (negative ? " - " : " + ") + coef + label;
    }
    first = false;
  }
  (void)minus_one;
  return out;
}

}  // namespace

std::string Algebra::format(const Vector& v) const {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (std::size_t i = 0; i < v.size() && i < dim(); ++i)
    if (!v[i].is_zero()) terms.emplace_back(names_[i], v[i]);
  return format_terms(field_, terms);
}

std::string Algebra::format_tensor(const Vector& v, std::size_t factors) const {
  std::vector<std::pair<std::string, Scalar>> terms;
  const std::size_t n = dim();
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    std::vector<std::size_t> digits(factors);
    std::size_t rest = idx;
    for (std::size_t q = factors; q-- > 0;) {
      digits[q] = rest % n;
      rest /= n;
    }
    std::string label;
    for (std::size_t q = 0; q < factors; ++q) {
      if (q) label += "⊗";
      label += names_[digits[q]];
    }
    terms.emplace_back(label, v[idx]);
  }
  return format_terms(field_, terms);
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

AlgebraElement::AlgebraElement(AlgebraPtr parent, Vector coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_->dim()) throw DimensionError("element has wrong length");
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& b) const {
  return AlgebraElement(parent_, parent_->mul(coords_, b.coords_));
}
AlgebraElement AlgebraElement::operator+(const AlgebraElement& b) const { return AlgebraElement(parent_, add(coords_, b.coords_)); }
AlgebraElement AlgebraElement::operator-(const AlgebraElement& b) const { return AlgebraElement(parent_, sub(coords_, b.coords_)); }

const char* to_string(MapKind k) { return k == MapKind::Homomorphism ? "hom" : "antihom"; }

MapKind compose_kinds(MapKind outer, MapKind inner) {
  return outer == inner ? MapKind::Homomorphism : MapKind::AntiHomomorphism;
}

AlgebraMap identity_map(const AlgebraPtr& a) {
  return {a, a, Matrix::identity(a->field(), a->dim()), MapKind::Homomorphism};
}

AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner) {
  if (outer.matrix.cols() != inner.matrix.rows()) throw DimensionError("compose: dimension mismatch");
  return {inner.domain, outer.codomain, outer.matrix * inner.matrix, compose_kinds(outer.kind, inner.kind)};
}

Report verify_algebra(const Algebra& a) {
  Report r("algebra");
  const std::size_t n = a.dim();
  Check& assoc = r.add("algebra/(assoc)", "(e_i e_j) e_k = e_i (e_j e_k)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.mul(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.mul(ij, a.basis_vector(k));
        Vector rhs = a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k)));
        assoc.record(lhs == rhs, a.name(i) + ", " + a.name(j) + ", " + a.name(k), a.format(lhs), a.format(rhs));
      }
    }
  Check& unit = r.add("algebra/(unit)", "1 e_i = e_i = e_i 1");
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = a.basis_vector(i);
    Vector l = a.mul(a.unit(), e);
    Vector rr = a.mul(e, a.unit());
    unit.record(l == e, a.name(i) + " (left)", a.format(l), a.format(e));
    unit.record(rr == e, a.name(i) + " (right)", a.format(rr), a.format(e));
  }
  return r;
}

Report verify_map(const AlgebraMap& f) {
  Report r("algebra map");
  const Algebra& d = *f.domain;
  const Algebra& c = *f.codomain;
  Check& shape = r.add("map/(shape)", "matrix is codomain.dim x domain.dim");
  if (f.matrix.rows() != c.dim() || f.matrix.cols() != d.dim()) {
    shape.fail_instance({"matrix", std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()),
                         std::to_string(c.dim()) + "x" + std::to_string(d.dim()), {}});
    return r;
  }
  shape.pass_instance();
  Check& unit = r.add("map/(unit)", "f(1) = 1");
  Vector fu = f.apply(d.unit());
  unit.record(fu == c.unit(), "1", c.format(fu), c.format(c.unit()));
  const bool anti = f.kind == MapKind::AntiHomomorphism;
  Check& mult = r.add(anti ? "map/(antimult)" : "map/(mult)", anti ? "f(xy) = f(y) f(x)" : "f(xy) = f(x) f(y)");
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      Vector lhs = f.apply(d.mul(d.basis_vector(i), d.basis_vector(j)));
      Vector fi = f.apply_basis(i), fj = f.apply_basis(j);
      Vector rhs = anti ? c.mul(fj, fi) : c.mul(fi, fj);
      mult.record(lhs == rhs, d.name(i) + ", " + d.name(j), c.format(lhs), c.format(rhs));
    }
  return r;
}

Subalgebra subalgebra(const Algebra& ambient, const Subspace& s, const std::string& prefix) {
  const Field& f = ambient.field();
  auto basis = s.basis();
  const std::size_t d = basis.size();
  if (d == 0) throw DimensionError("subalgebra of dimension zero");
  Matrix inc = Matrix::from_columns(f, ambient.dim(), basis);
  std::vector<std::string> names;
  for (std::size_t b = 0; b < d; ++b) {
    const auto& sv = s.sparse_basis()[b];
    if (sv.size() == 1 && sv[0].second.is_one())
      names.push_back(ambient.name(sv[0].first));
    else
      names.push_back(prefix + std::to_string(b));
  }
  Vector unit = s.coordinates(ambient.unit()).value_or(Vector{});
  if (unit.empty()) throw DimensionError("subspace does not contain the unit");
  std::vector<StructureConstant> c;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = s.coordinates(ambient.mul(basis[i], basis[j]));
      if (!coords) throw DimensionError("subspace is not closed under multiplication");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) c.push_back({i, j, k, (*coords)[k]});
    }
  return {share(Algebra(f, names, unit, c)), inc};
}

// ---------------------------------------------------------------------------

std::size_t tensor_dim(const std::vector<std::size_t>& dims) {
  std::size_t t = 1;
  for (auto d : dims) t *= d;
  return t;
}

Vector tensor(const Vector& x, const Vector& y) {
  if (x.empty() || y.empty()) throw DimensionError("tensor of empty vectors");
  Vector r(x.size() * y.size(), x[0].field().zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

Vector apply_on_factor(const Vector& t, const std::vector<std::size_t>& dims, std::size_t q, const Matrix& m) {
  if (q >= dims.size() || m.cols() != dims[q] || t.size() != tensor_dim(dims))
    throw DimensionError("apply_on_factor: shape mismatch");
  std::size_t inner = 1;
  for (std::size_t p = q + 1; p < dims.size(); ++p) inner *= dims[p];
  const std::size_t mid = dims[q];
  const std::size_t out_mid = m.rows();
  std::vector<SparseVector> col(mid);
  for (std::size_t j = 0; j < mid; ++j)
    for (std::size_t i = 0; i < out_mid; ++i)
      if (!m(i, j).is_zero()) col[j].emplace_back(static_cast<std::uint32_t>(i), m(i, j));
  const std::size_t outer = t.size() / (mid * inner);
  Vector r(outer * out_mid * inner, m.field().zero());
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    std::size_t in = idx % inner;
    std::size_t md = (idx / inner) % mid;
    std::size_t ou = idx / (inner * mid);
    for (const auto& [i, v] : col[md]) r[(ou * out_mid + i) * inner + in] += t[idx] * v;
  }
  return r;
}

Vector flip(const Vector& t, std::size_t n, std::size_t m) {
  if (t.size() != n * m) throw DimensionError("flip: shape mismatch");
  Vector r(t.size(), t.empty() ? Field().zero() : t[0].field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j * n + i] = t[i * m + j];
  return r;
}

Vector multiply_out(const Algebra& a, const Vector& t) {
  const std::size_t n = a.dim();
  if (t.size() != n * n) throw DimensionError("multiply_out: shape mismatch");
  Vector r = a.zero();
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    for (const auto& [k, v] : a.product(idx / n, idx % n)) r[k] += t[idx] * v;
  }
  return r;
}

Vector tensor_product_mul(const Algebra& a, const Vector& t, const Vector& u) {
  const std::size_t n = a.dim();
  if (t.size() != n * n || u.size() != n * n) throw DimensionError("tensor_product_mul: shape mismatch");
  Vector r(n * n, a.field().zero());
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p].is_zero()) continue;
    for (std::size_t q = 0; q < u.size(); ++q) {
      if (u[q].is_zero()) continue;
      Scalar c = t[p] * u[q];
      const auto& left = a.product(p / n, q / n);
      const auto& right = a.product(p % n, q % n);
      for (const auto& [k1, v1] : left) {
        Scalar c1 = c * v1;
        for (const auto& [k2, v2] : right) r[k1 * n + k2] += c1 * v2;
      }
    }
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

}  // namespace hopfkit
