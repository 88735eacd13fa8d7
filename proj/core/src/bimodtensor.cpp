#include "hopfkit/bimodtensor.hpp"

#include <algorithm>

namespace hopfkit {

const char* to_string(ActionTag t) {
  switch (t) {
    case ActionTag::L_left: return "L_left";
    case ActionTag::L_right_t: return "L_right_t";
    case ActionTag::L_right_s: return "L_right_s";
    case ActionTag::L_left_t: return "L_left_t";
    case ActionTag::R_right_s: return "R_right_s";
    case ActionTag::R_left_t: return "R_left_t";
    case ActionTag::R_left_s: return "R_left_s";
    case ActionTag::R_right_t: return "R_right_t";
  }
  return "?";
}

bool ActionSpec::multiplies_left() const {
  switch (tag) {
    case ActionTag::L_left:
    case ActionTag::L_right_t:
    case ActionTag::R_left_s:
    case ActionTag::R_right_t: return true;
    default: return false;
  }
}

Matrix ActionSpec::action_matrix(std::size_t b) const {
  Vector x = map.apply_basis(b);
  return multiplies_left() ? map.codomain->left_mult(x) : map.codomain->right_mult(x);
}

ActionSpec make_action(ActionTag tag, AlgebraMap map) {
  bool wants_hom = false;
  switch (tag) {
    case ActionTag::L_left:
    case ActionTag::L_right_s:
    case ActionTag::R_right_s:
    case ActionTag::R_left_s: wants_hom = true; break;
    default: wants_hom = false;
  }
  MapKind expected = wants_hom ? MapKind::Homomorphism : MapKind::AntiHomomorphism;
  if (map.kind != expected)
    throw DimensionError(std::string("action ") + to_string(tag) + " needs a map of kind " + to_string(expected));
  if (map.matrix.rows() != map.codomain->dim() || map.matrix.cols() != map.domain->dim())
    throw DimensionError(std::string("action ") + to_string(tag) + ": map matrix has wrong shape");
  return {tag, std::move(map)};
}

BalancedTensorSpace::BalancedTensorSpace(AlgebraPtr total, std::vector<Junction> junctions)
    : total_(std::move(total)), junctions_(std::move(junctions)) {
  const std::size_t n = total_->dim();
  const std::size_t m = junctions_.size() + 1;
  std::size_t full = 1;
  for (std::size_t q = 0; q < m; ++q) full *= n;
  const Field& f = total_->field();
  SpanBuilder builder(f, full);
  for (std::size_t q = 0; q < junctions_.size(); ++q) {
    const Junction& jn = junctions_[q];
    const std::size_t base_dim = jn.on_left_factor.map.domain->dim();
    if (jn.on_right_factor.map.domain->dim() != base_dim)
      throw DimensionError("junction actions use base algebras of different dimension");
    std::size_t prefix = 1, suffix = 1;
    for (std::size_t p = 0; p < q; ++p) prefix *= n;
    for (std::size_t p = q + 2; p < m; ++p) suffix *= n;
    for (std::size_t b = 0; b < base_dim; ++b) {
      Matrix lm = jn.on_left_factor.action_matrix(b);
      Matrix rm = jn.on_right_factor.action_matrix(b);
      std::vector<SparseVector> lcol(n), rcol(n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i) {
          if (!lm(i, x).is_zero()) lcol[x].emplace_back(static_cast<std::uint32_t>(i), lm(i, x));
          if (!rm(i, x).is_zero()) rcol[x].emplace_back(static_cast<std::uint32_t>(i), rm(i, x));
        }
      SparseVector gen;
      for (std::size_t p = 0; p < prefix; ++p)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t s = 0; s < suffix; ++s) {
              gen.clear();
              for (const auto& [i, v] : lcol[x])
                gen.emplace_back(static_cast<std::uint32_t>(((p * n + i) * n + y) * suffix + s), v);
              for (const auto& [j, v] : rcol[y])
                gen.emplace_back(static_cast<std::uint32_t>(((p * n + x) * n + j) * suffix + s), -v);
              std::sort(gen.begin(), gen.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
              SparseVector merged;
              for (auto& e : gen) {
                if (!merged.empty() && merged.back().first == e.first)
                  merged.back().second += e.second;
                else
                  merged.push_back(e);
              }
              merged.erase(std::remove_if(merged.begin(), merged.end(), [](const SparseEntry& e) { return e.second.is_zero(); }),
                           merged.end());
              if (!merged.empty()) builder.add(merged);
            }
    }
  }
  relations_ = std::move(builder).finish();
  free_ = relations_.free_columns();
}

Vector BalancedTensorSpace::project(const Vector& full) const {
  Vector r = relations_.reduce(full);
  Vector q;
  q.reserve(free_.size());
  for (auto c : free_) q.push_back(r[c]);
  return q;
}

Vector BalancedTensorSpace::lift(const Vector& quotient) const {
  if (quotient.size() != free_.size()) throw DimensionError("lift: wrong quotient dimension");
  Vector v = zero_vector(total_->field(), full_dim());
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = quotient[i];
  return v;
}

bool BalancedTensorSpace::equivalent(const Vector& x, const Vector& y) const { return relations_.contains(sub(x, y)); }

Matrix BalancedTensorSpace::projection_matrix() const {
  Matrix p(total_->field(), quotient_dim(), full_dim());
  for (std::size_t c = 0; c < full_dim(); ++c) p.set_column(c, project(unit_vector(total_->field(), full_dim(), c)));
  return p;
}

Matrix BalancedTensorSpace::section_matrix() const {
  Matrix s(total_->field(), full_dim(), quotient_dim());
  for (std::size_t i = 0; i < free_.size(); ++i) s(free_[i], i) = total_->field().one();
  return s;
}

bool BalancedTensorSpace::descends(const std::function<Vector(const Vector&)>& f, const BalancedTensorSpace& target) const {
  for (const auto& row : relations_.sparse_basis()) {
    Vector image = f(to_dense(total_->field(), full_dim(), row));
    if (!target.relations().contains(image)) return false;
  }
  return true;
}

bool BalancedTensorSpace::kills_relations(const std::function<Vector(const Vector&)>& f) const {
  for (const auto& row : relations_.sparse_basis())
    if (!is_zero(f(to_dense(total_->field(), full_dim(), row)))) return false;
  return true;
}

std::string BalancedTensorSpace::format(const Vector& full) const {
  return total_->format_tensor(normal_form(full), factors());
}

std::string BalancedTensorSpace::describe() const {
  std::string s;
  for (std::size_t q = 0; q < junctions_.size(); ++q) {
    s += "A ";
    s += to_string(junctions_[q].on_left_factor.tag);
    s += "|";
    s += to_string(junctions_[q].on_right_factor.tag);
    s += " ";
  }
  s += "A";
  return s;
}

TensorSpacePtr balanced_tensor(const AlgebraPtr& total, const ActionSpec& on_left_factor, const ActionSpec& on_right_factor) {
  return std::make_shared<const BalancedTensorSpace>(total, std::vector<Junction>{{on_left_factor, on_right_factor}});
}

TensorSpacePtr balanced_triple(const AlgebraPtr& total, const Junction& first, const Junction& second) {
  return std::make_shared<const BalancedTensorSpace>(total, std::vector<Junction>{first, second});
}

}  // namespace hopfkit
