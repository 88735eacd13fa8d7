#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace hopfkit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  require(y.size() == x.size(), "axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector add(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "add: length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "sub: length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& a, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= a;
  return r;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Vector to_dense(const Field& f, std::size_t n, const SparseVector& v) {
  Vector d(n, f.zero());
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  require(i < rows_, "row index out of range");
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  require(j < cols_, "column index out of range");
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  require(j < cols_ && v.size() == rows_, "set_column: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  require(i < rows_ && v.size() == cols_, "set_row: shape mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& b) const {
  require(cols_ == b.rows_, "matrix product: shape mismatch");
  require(field_ == b.field_, "matrix product: field mismatch");
  Matrix r(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& x = b(k, j);
        if (!x.is_zero()) r(i, j) += a * x;
      }
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  require(cols_ == v.size(), "matrix-vector product: shape mismatch");
  Vector r(rows_, field_.zero());
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) r[i] += a * v[k];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  require(rows_ == b.rows_ && cols_ == b.cols_, "matrix sum: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  require(rows_ == b.rows_ && cols_ == b.cols_, "matrix difference: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hconcat: row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vconcat: column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
  return r;
}

// ---------------------------------------------------------------------------

SpanBuilder::SpanBuilder(Field f, std::size_t ambient)
    : field_(f), ambient_(ambient), row_of_pivot_(ambient, -1), work_(ambient, f.zero()), queued_(ambient, 0) {}

bool SpanBuilder::add(const Vector& v) {
  require(v.size() == ambient_, "SpanBuilder::add: length mismatch");
  std::vector<std::uint32_t> heap;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    work_[i] = v[i];
    queued_[i] = 1;
    heap.push_back(static_cast<std::uint32_t>(i));
  }
  std::make_heap(heap.begin(), heap.end(), std::greater<>());
  return insert_from_work(heap);
}

bool SpanBuilder::add(const SparseVector& v) {
  std::vector<std::uint32_t> heap;
  for (const auto& [i, x] : v) {
    require(i < ambient_, "SpanBuilder::add: index out of range");
    if (x.is_zero()) continue;
    work_[i] = x;
    queued_[i] = 1;
    heap.push_back(i);
  }
  std::make_heap(heap.begin(), heap.end(), std::greater<>());
  return insert_from_work(heap);
}

bool SpanBuilder::insert_from_work(std::vector<std::uint32_t>& heap) {
  const Scalar zero = field_.zero();
  std::vector<std::uint32_t> remaining;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>());
    std::uint32_t j = heap.back();
    heap.pop_back();
    queued_[j] = 0;
    if (work_[j].is_zero()) continue;
    std::int32_t r = row_of_pivot_[j];
    if (r < 0) {
      remaining.push_back(j);
      continue;
    }
    Scalar c = work_[j];
    for (const auto& [col, val] : rows_[static_cast<std::size_t>(r)]) {
      if (col == j) continue;
      work_[col] -= c * val;
      if (!queued_[col]) {
        queued_[col] = 1;
        heap.push_back(col);
        std::push_heap(heap.begin(), heap.end(), std::greater<>());
      }
    }
    work_[j] = zero;
  }
  if (remaining.empty()) return false;
  Scalar inv = work_[remaining.front()].inverse();
  SparseVector row;
  row.reserve(remaining.size());
  for (std::uint32_t j : remaining) {
    row.emplace_back(j, work_[j] * inv);
    work_[j] = zero;
  }
  row_of_pivot_[remaining.front()] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

Subspace SpanBuilder::finish() && {
  const Scalar zero = field_.zero();
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a][0].first > rows_[b][0].first; });
  for (std::size_t idx : order) {
    SparseVector& row = rows_[idx];
    std::uint32_t pivot = row[0].first;
    bool touched_pivot = false;
    for (std::size_t e = 1; e < row.size(); ++e)
      if (row_of_pivot_[row[e].first] >= 0) {
        touched_pivot = true;
        break;
      }
    if (!touched_pivot) continue;
    std::vector<std::uint32_t> cols;
    for (const auto& [c, x] : row) {
      work_[c] = x;
      cols.push_back(c);
    }
    for (std::size_t e = 1; e < row.size(); ++e) {
      std::uint32_t c = row[e].first;
      std::int32_t r = row_of_pivot_[c];
      if (r < 0) continue;
      Scalar coef = work_[c];
      if (coef.is_zero()) continue;
      for (const auto& [c2, x2] : rows_[static_cast<std::size_t>(r)]) {
        if (work_[c2].is_zero()) cols.push_back(c2);
        work_[c2] -= coef * x2;
      }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    SparseVector reduced;
    for (std::uint32_t c : cols) {
      if (!work_[c].is_zero()) reduced.emplace_back(c, work_[c]);
      work_[c] = zero;
    }
    (void)pivot;
    row = std::move(reduced);
  }
  Subspace s(field_, ambient_);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a][0].first < rows_[b][0].first; });
  for (std::size_t idx : order) {
    s.row_of_pivot_[rows_[idx][0].first] = static_cast<std::int32_t>(s.rows_.size());
    s.pivots_.push_back(rows_[idx][0].first);
    s.rows_.push_back(std::move(rows_[idx]));
  }
  return s;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), row_of_pivot_(ambient, -1) {}

Subspace Subspace::whole(Field f, std::size_t ambient) {
  SpanBuilder b(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) b.add(SparseVector{{static_cast<std::uint32_t>(i), f.one()}});
  return std::move(b).finish();
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& gens) {
  SpanBuilder b(f, ambient);
  for (const auto& g : gens) b.add(g);
  return std::move(b).finish();
}

Subspace Subspace::span_columns(const Matrix& m) {
  SpanBuilder b(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) b.add(m.column(j));
  return std::move(b).finish();
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(to_dense(field_, ambient_, r));
  return out;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis()); }

std::vector<std::uint32_t> Subspace::free_columns() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (row_of_pivot_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  require(v.size() == ambient_, "Subspace::reduce: length mismatch");
  Vector r(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (const auto& [col, x] : rows_[i]) r[col] -= c * x;
  }
  return r;
}

SparseVector Subspace::reduce(const SparseVector& v) const { return to_sparse(reduce(to_dense(field_, ambient_, v))); }

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }
bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::includes(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  require(other.ambient_ == ambient_, "Subspace::sum: ambient mismatch");
  SpanBuilder b(field_, ambient_);
  for (const auto& r : rows_) b.add(r);
  for (const auto& r : other.rows_) b.add(r);
  return std::move(b).finish();
}

Subspace Subspace::intersection(const Subspace& other) const {
  require(other.ambient_ == ambient_, "Subspace::intersection: ambient mismatch");
  std::size_t du = dim(), dw = other.dim();
  if (du == 0 || dw == 0) return Subspace(field_, ambient_);
  Matrix m(field_, ambient_, du + dw);
  for (std::size_t i = 0; i < du; ++i)
    for (const auto& [c, x] : rows_[i]) m(c, i) = x;
  for (std::size_t j = 0; j < dw; ++j)
    for (const auto& [c, x] : other.rows_[j]) m(c, du + j) = -x;
  Subspace k = kernel(m);
  SpanBuilder b(field_, ambient_);
  for (const auto& kv : k.sparse_basis()) {
    Vector e(ambient_, field_.zero());
    for (const auto& [idx, coef] : kv) {
      if (idx >= du) continue;
      for (const auto& [c, x] : rows_[idx]) e[c] += coef * x;
    }
    b.add(e);
  }
  return std::move(b).finish();
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.rows_.size() != b.rows_.size() || !(a.field_ == b.field_)) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].size() != b.rows_[i].size()) return false;
    for (std::size_t e = 0; e < a.rows_[i].size(); ++e)
      if (a.rows_[i][e].first != b.rows_[i][e].first || a.rows_[i][e].second != b.rows_[i][e].second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  SpanBuilder b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
  Subspace s = std::move(b).finish();
  RrefResult r{Matrix(m.field(), m.rows(), m.cols()), {}};
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (const auto& [c, x] : s.sparse_basis()[i]) r.reduced(i, c) = x;
    r.pivots.push_back(s.pivots()[i]);
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  SpanBuilder b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
  return b.dim();
}

Subspace kernel(const Matrix& m) {
  SpanBuilder b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
  Subspace rs = std::move(b).finish();
  const Field& f = m.field();
  SpanBuilder kb(f, m.cols());
  for (std::uint32_t fc : rs.free_columns()) {
    SparseVector v;
    v.emplace_back(fc, f.one());
    for (std::size_t r = 0; r < rs.dim(); ++r)
      for (const auto& [c, x] : rs.sparse_basis()[r])
        if (c == fc) v.emplace_back(rs.pivots()[r], -x);
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
    kb.add(v);
  }
  return std::move(kb).finish();
}

Subspace image(const Matrix& m) { return Subspace::span_columns(m); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), "solve: right-hand side length mismatch");
  Matrix aug = hconcat(m, Matrix::from_columns(m.field(), m.rows(), {b}));
  RrefResult r = rref(aug);
  Vector x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, m.cols());
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  require(b.rows() == m.rows(), "solve: right-hand side shape mismatch");
  RrefResult r = rref(hconcat(m, b));
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, m.cols() + j);
  }
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  RrefResult r = rref(hconcat(m, Matrix::identity(m.field(), n)));
  if (r.pivots.size() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

}  // namespace hopfkit
