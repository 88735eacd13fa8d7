#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/hopfcore.hpp"
#include "hopfkit/twistlab.hpp"

namespace hopfkit {

/// Parse failure with a 1-based position; line 0 means the whole file.
struct SpecError : std::runtime_error {
  SpecError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line, column;
};

struct NamedElement {
  std::string algebra;
  Vector coords;
};

/// Line-based description of algebras, maps and assemblies. See docs in the README.
struct SpecFile {
  Field field;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, AlgebraMap> maps;
  std::map<std::string, Matrix> matrices;
  std::map<std::string, LeftBialgebroid> left;
  std::map<std::string, RightBialgebroid> right;
  std::map<std::string, HopfAlgebroid> hopf;
  std::map<std::string, WeakHopfAlgebra> weak;
  std::map<std::string, NamedElement> elements;
  /// Every top-level name in declaration order.
  std::vector<std::string> order;
};

inline constexpr const char* kSpecHeader = "hopfkit-spec 1";

/// field_override is used when the file has no field line and must agree with it otherwise.
SpecFile parse_spec(std::istream& in, const std::optional<Field>& field_override = std::nullopt);
SpecFile parse_spec_text(const std::string& text, const std::optional<Field>& field_override = std::nullopt);
SpecFile parse_spec_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);

/// Emits objects in insertion order; algebras are named once and shared by pointer or structure.
class SpecWriter {
 public:
  explicit SpecWriter(Field f);

  std::string algebra(const AlgebraPtr& a, const std::string& name);
  std::string map(const AlgebraMap& m, const std::string& name);
  std::string matrix(const Matrix& m, const std::string& name);
  std::string left(const LeftBialgebroid& lb, const std::string& name);
  std::string right(const RightBialgebroid& rb, const std::string& name);
  std::string hopf(const HopfAlgebroid& h, const std::string& name);
  std::string weak(const WeakHopfAlgebra& w, const std::string& name);
  void element(const std::string& name, const AlgebraPtr& a, const Vector& v);
  void comment(const std::string& text);

  std::string str() const;

 private:
  std::string reference(const AlgebraPtr& a, const std::string& hint);
  std::string fresh(const std::string& hint);

  Field field_;
  std::vector<std::pair<AlgebraPtr, std::string>> known_;
  std::vector<std::string> used_;
  std::string out_;
};

}  // namespace hopfkit
