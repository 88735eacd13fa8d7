#include "hopfkit/specio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfkit {

SpecError::SpecError(std::size_t l, std::size_t c, const std::string& what)
    : std::runtime_error(l ? "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what : what),
      line(l),
      column(c) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i == raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Parser {
 public:
  Parser(std::vector<Line> lines, const std::optional<Field>& override) : lines_(std::move(lines)), override_(override) {}

  SpecFile run() {
    if (lines_.empty()) throw SpecError(0, 0, "empty spec file");
    const Line& head = lines_[0];
    if (head.tokens.size() != 2 || head.tokens[0].text + " " + head.tokens[1].text != kSpecHeader)
      throw SpecError(head.number, head.tokens[0].column, std::string("expected header \"") + kSpecHeader + "\"");
    pos_ = 1;
    if (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "field") {
      const Line& l = lines_[pos_++];
      expect_count(l, 2);
      try {
        spec_.field = Field::parse(l.tokens[1].text);
      } catch (const std::exception& e) {
        throw SpecError(l.number, l.tokens[1].column, e.what());
      }
      if (override_ && *override_ != spec_.field)
        throw SpecError(l.number, l.tokens[1].column, "field " + spec_.field.name() + " conflicts with --field " + override_->name());
    } else {
      spec_.field = override_.value_or(Field::rationals());
    }
    while (pos_ < lines_.size()) statement(lines_[pos_++]);
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& what) const {
    std::size_t col = tok < l.tokens.size() ? l.tokens[tok].column : 1;
    throw SpecError(l.number, col, what);
  }

  void expect_count(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n) fail(l, std::min(n, l.tokens.size() - 1), "expected " + std::to_string(n) + " tokens");
  }

  Scalar scalar(const Line& l, std::size_t tok) const {
    try {
      return spec_.field.parse_scalar(l.tokens[tok].text);
    } catch (const std::exception& e) {
      fail(l, tok, e.what());
    }
  }

  std::size_t index(const Line& l, std::size_t tok, std::size_t bound, const char* what) const {
    const std::string& t = l.tokens[tok].text;
    std::size_t v = 0;
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) fail(l, tok, std::string("expected an index for ") + what);
    try {
      v = std::stoul(t);
    } catch (const std::exception&) {
      fail(l, tok, "index too large");
    }
    if (v >= bound) fail(l, tok, std::string(what) + " index " + t + " out of range (dimension " + std::to_string(bound) + ")");
    return v;
  }

  void declare(const Line& l, std::size_t tok, const std::string& name) {
    for (const auto& n : spec_.order)
      if (n == name) fail(l, tok, "duplicate name " + name);
    spec_.order.push_back(name);
  }

  AlgebraPtr algebra_ref(const Line& l, std::size_t tok, const std::string& name) {
    std::string base = name;
    const bool op = name.size() > 3 && name.compare(name.size() - 3, 3, "^op") == 0;
    if (op) base = name.substr(0, name.size() - 3);
    auto it = spec_.algebras.find(base);
    if (it == spec_.algebras.end()) fail(l, tok, "unknown algebra " + base);
    if (!op) return it->second;
    auto& cached = opposites_[base];
    if (!cached) cached = opposite_of(it->second);
    return cached;
  }

  template <class M>
  const typename M::mapped_type& lookup(const Line& l, std::size_t tok, const M& m, const std::string& name, const char* what) const {
    auto it = m.find(name);
    if (it == m.end()) fail(l, tok, std::string("unknown ") + what + " " + name);
    return it->second;
  }

  /// Body lines up to "end".
  std::vector<const Line*> block(const Line& opener) {
    std::vector<const Line*> body;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_++];
      if (l.tokens[0].text == "end") {
        expect_count(l, 1);
        return body;
      }
      body.push_back(&l);
    }
    fail(opener, 0, "block is not closed by end");
  }

  void fill_matrix(const Line& opener, Matrix& m) {
    std::size_t next_row = 0;
    bool rows = false, entries = false;
    for (const Line* lp : block(opener)) {
      const Line& l = *lp;
      const std::string& kw = l.tokens[0].text;
      if (kw == "row") {
        rows = true;
        if (next_row >= m.rows()) fail(l, 0, "too many rows (dimension " + std::to_string(m.rows()) + ")");
        expect_count(l, m.cols() + 1);
        for (std::size_t c = 0; c < m.cols(); ++c) m(next_row, c) = scalar(l, c + 1);
        ++next_row;
      } else if (kw == "entry") {
        entries = true;
        expect_count(l, 4);
        std::size_t r = index(l, 1, m.rows(), "row"), c = index(l, 2, m.cols(), "column");
        m(r, c) = scalar(l, 3);
      } else {
        fail(l, 0, "expected row, entry or end");
      }
      if (rows && entries) fail(l, 0, "row and entry lines cannot be mixed");
    }
    if (rows && next_row != m.rows())
      fail(opener, 0, "expected " + std::to_string(m.rows()) + " rows, got " + std::to_string(next_row));
  }

  void algebra_stmt(const Line& l) {
    expect_count(l, 2);
    const std::string name = l.tokens[1].text;
    if (name.find('^') != std::string::npos) fail(l, 1, "algebra names cannot contain ^");
    declare(l, 1, name);
    std::vector<std::string> names;
    std::optional<Vector> unit;
    std::vector<std::pair<const Line*, StructureConstant>> products;
    for (const Line* lp : block(l)) {
      const Line& b = *lp;
      const std::string& kw = b.tokens[0].text;
      if (kw == "basis") {
        if (!names.empty()) fail(b, 0, "basis given twice");
        for (std::size_t i = 1; i < b.tokens.size(); ++i) names.push_back(b.tokens[i].text);
        if (names.empty()) fail(b, 0, "empty basis");
      } else if (kw == "unit") {
        if (names.empty()) fail(b, 0, "unit before basis");
        expect_count(b, names.size() + 1);
        Vector u;
        for (std::size_t i = 1; i < b.tokens.size(); ++i) u.push_back(scalar(b, i));
        unit = std::move(u);
      } else if (kw == "product") {
        if (names.empty()) fail(b, 0, "product before basis");
        expect_count(b, 5);
        const std::size_t n = names.size();
        products.push_back({&b, {index(b, 1, n, "product"), index(b, 2, n, "product"), index(b, 3, n, "product"), scalar(b, 4)}});
      } else {
        fail(b, 0, "expected basis, unit, product or end");
      }
    }
    if (names.empty()) fail(l, 0, "algebra without basis");
    if (!unit) fail(l, 0, "algebra without unit");
    std::vector<StructureConstant> sc;
    for (auto& [line, c] : products) sc.push_back(c);
    try {
      spec_.algebras[name] = share(Algebra(spec_.field, names, *unit, sc));
    } catch (const std::exception& e) {
      fail(l, 1, e.what());
    }
  }

  void map_stmt(const Line& l) {
    expect_count(l, 5);
    const std::string name = l.tokens[1].text;
    declare(l, 1, name);
    AlgebraPtr dom = algebra_ref(l, 2, l.tokens[2].text), cod = algebra_ref(l, 3, l.tokens[3].text);
    MapKind kind;
    if (l.tokens[4].text == "hom")
      kind = MapKind::Homomorphism;
    else if (l.tokens[4].text == "anti")
      kind = MapKind::AntiHomomorphism;
    else
      fail(l, 4, "expected hom or anti");
    Matrix m(spec_.field, cod->dim(), dom->dim());
    fill_matrix(l, m);
    spec_.maps[name] = AlgebraMap{dom, cod, std::move(m), kind};
  }

  void matrix_stmt(const Line& l) {
    expect_count(l, 4);
    const std::string name = l.tokens[1].text;
    declare(l, 1, name);
    std::size_t r = index(l, 2, 1u << 24, "rows"), c = index(l, 3, 1u << 24, "columns");
    Matrix m(spec_.field, r, c);
    fill_matrix(l, m);
    spec_.matrices[name] = std::move(m);
  }

  void element_stmt(const Line& l) {
    if (l.tokens.size() < 3) fail(l, 0, "expected element NAME ALGEBRA coordinates");
    const std::string name = l.tokens[1].text;
    declare(l, 1, name);
    AlgebraPtr a = algebra_ref(l, 2, l.tokens[2].text);
    expect_count(l, a->dim() + 3);
    Vector v;
    for (std::size_t i = 3; i < l.tokens.size(); ++i) v.push_back(scalar(l, i));
    spec_.elements[name] = NamedElement{l.tokens[2].text, std::move(v)};
  }

  /// key=value pairs after the name; tokens index recorded for error positions.
  std::map<std::string, std::size_t> keys(const Line& l, const std::vector<std::string>& required,
                                          const std::vector<std::string>& optional) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 2; i < l.tokens.size(); ++i) {
      const std::string& t = l.tokens[i].text;
      auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t.size()) fail(l, i, "expected key=value");
      std::string k = t.substr(0, eq);
      bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                   std::find(optional.begin(), optional.end(), k) != optional.end();
      if (!known) fail(l, i, "unknown key " + k);
      if (out.count(k)) fail(l, i, "key " + k + " given twice");
      out[k] = i;
    }
    for (const auto& k : required)
      if (!out.count(k)) fail(l, 0, "missing key " + k);
    return out;
  }

  std::string value(const Line& l, std::size_t tok) const {
    const std::string& t = l.tokens[tok].text;
    return t.substr(t.find('=') + 1);
  }

  template <class B>
  B bialgebroid_stmt(const Line& l) {
    if (l.tokens.size() < 2) fail(l, 0, "missing name");
    auto k = keys(l, {"total", "base", "s", "t", "gamma", "pi"}, {});
    AlgebraPtr total = algebra_ref(l, k["total"], value(l, k["total"]));
    AlgebraPtr base = algebra_ref(l, k["base"], value(l, k["base"]));
    AlgebraMap s = lookup(l, k["s"], spec_.maps, value(l, k["s"]), "map");
    AlgebraMap t = lookup(l, k["t"], spec_.maps, value(l, k["t"]), "map");
    const Matrix& gamma = lookup(l, k["gamma"], spec_.matrices, value(l, k["gamma"]), "matrix");
    const Matrix& pi = lookup(l, k["pi"], spec_.matrices, value(l, k["pi"]), "matrix");
    for (auto [key, m] : {std::pair<const char*, AlgebraMap*>{"s", &s}, {"t", &t}}) {
      if (!same_structure(*m->domain, *base) || !same_structure(*m->codomain, *total))
        fail(l, k[key], std::string("map ") + key + " must go from the base to the total ring");
      m->domain = base;
      m->codomain = total;
    }
    try {
      return B(total, base, s, t, gamma, pi);
    } catch (const std::exception& e) {
      fail(l, 1, e.what());
    }
  }

  void hopf_stmt(const Line& l) {
    if (l.tokens.size() < 2) fail(l, 0, "missing name");
    const std::string name = l.tokens[1].text;
    declare(l, 1, name);
    auto k = keys(l, {"left", "S"}, {"right", "nu"});
    const LeftBialgebroid& lb = lookup(l, k["left"], spec_.left, value(l, k["left"]), "left bialgebroid");
    AlgebraMap S = lookup(l, k["S"], spec_.maps, value(l, k["S"]), "map");
    if (S.kind != MapKind::AntiHomomorphism || !same_structure(*S.domain, *lb.total()) || !same_structure(*S.codomain, *lb.total()))
      fail(l, k["S"], "antipode must be an anti map on the total ring");
    S.domain = S.codomain = lb.total();
    auto Si = invert(S.matrix);
    if (!Si) fail(l, k["S"], "antipode is not invertible");
    if (k.count("right") != k.count("nu")) fail(l, 0, "right and nu must be given together");
    try {
      if (!k.count("right")) {
        spec_.hopf[name] = assemble_hopf(lb, S);
        return;
      }
      RightBialgebroid rb = lookup(l, k["right"], spec_.right, value(l, k["right"]), "right bialgebroid");
      if (!same_structure(*rb.total(), *lb.total())) fail(l, k["right"], "left and right total rings differ");
      rb = on_rings(rb, lb.total(), rb.base());
      AlgebraMap nu = lookup(l, k["nu"], spec_.maps, value(l, k["nu"]), "map");
      if (!same_structure(*nu.domain, *rb.base())) fail(l, k["nu"], "nu must start at the right base");
      nu.domain = rb.base();
      spec_.hopf[name] = HopfAlgebroid{lb, rb, S, AlgebraMap{lb.total(), lb.total(), *Si, MapKind::AntiHomomorphism}, nu};
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception& e) {
      fail(l, 1, e.what());
    }
  }

  void weak_stmt(const Line& l) {
    if (l.tokens.size() < 2) fail(l, 0, "missing name");
    const std::string name = l.tokens[1].text;
    declare(l, 1, name);
    auto k = keys(l, {"algebra", "delta", "epsilon", "S"}, {"S_inv"});
    AlgebraPtr H = algebra_ref(l, k["algebra"], value(l, k["algebra"]));
    const std::size_t n = H->dim();
    const Matrix& D = lookup(l, k["delta"], spec_.matrices, value(l, k["delta"]), "matrix");
    const Matrix& e = lookup(l, k["epsilon"], spec_.matrices, value(l, k["epsilon"]), "matrix");
    if (D.rows() != n * n || D.cols() != n) fail(l, k["delta"], "coproduct must be dim^2 x dim");
    if (e.rows() != 1 || e.cols() != n) fail(l, k["epsilon"], "counit must be 1 x dim");
    AlgebraMap S = lookup(l, k["S"], spec_.maps, value(l, k["S"]), "map");
    if (!same_structure(*S.domain, *H) || !same_structure(*S.codomain, *H)) fail(l, k["S"], "antipode must act on the algebra");
    S.domain = S.codomain = H;
    AlgebraMap Si = S;
    if (k.count("S_inv")) {
      Si = lookup(l, k["S_inv"], spec_.maps, value(l, k["S_inv"]), "map");
      Si.domain = Si.codomain = H;
    } else {
      auto inv = invert(S.matrix);
      if (!inv) fail(l, k["S"], "antipode is not invertible");
      Si.matrix = *inv;
    }
    spec_.weak[name] = WeakHopfAlgebra{H, D, e, S, Si};
  }

  void statement(const Line& l) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "algebra") {
      algebra_stmt(l);
    } else if (kw == "map") {
      map_stmt(l);
    } else if (kw == "matrix") {
      matrix_stmt(l);
    } else if (kw == "element") {
      element_stmt(l);
    } else if (kw == "left-bialgebroid") {
      LeftBialgebroid b = bialgebroid_stmt<LeftBialgebroid>(l);
      declare(l, 1, l.tokens[1].text);
      spec_.left[l.tokens[1].text] = std::move(b);
    } else if (kw == "right-bialgebroid") {
      RightBialgebroid b = bialgebroid_stmt<RightBialgebroid>(l);
      declare(l, 1, l.tokens[1].text);
      spec_.right[l.tokens[1].text] = std::move(b);
    } else if (kw == "hopf-algebroid") {
      hopf_stmt(l);
    } else if (kw == "weak-hopf") {
      weak_stmt(l);
    } else if (kw == "field") {
      fail(l, 0, "field must directly follow the header");
    } else {
      fail(l, 0, "unknown statement " + kw);
    }
  }

  std::vector<Line> lines_;
  std::optional<Field> override_;
  std::size_t pos_ = 0;
  SpecFile spec_;
  std::map<std::string, AlgebraPtr> opposites_;
};

}  // namespace

SpecFile parse_spec(std::istream& in, const std::optional<Field>& field_override) {
  return Parser(tokenize(in), field_override).run();
}

SpecFile parse_spec_text(const std::string& text, const std::optional<Field>& field_override) {
  std::istringstream in(text);
  return parse_spec(in, field_override);
}

SpecFile parse_spec_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, 0, "cannot read " + path);
  return parse_spec(in, field_override);
}

// --- writer --------------------------------------------------------------

SpecWriter::SpecWriter(Field f) : field_(f) {
  out_ = std::string(kSpecHeader) + "\nfield " + (f.is_rational() ? std::string("rational") : "gf:" + std::to_string(f.characteristic())) + "\n";
}

std::string SpecWriter::fresh(const std::string& hint) {
  std::string name = hint;
  for (std::size_t k = 2; std::find(used_.begin(), used_.end(), name) != used_.end(); ++k) name = hint + std::to_string(k);
  used_.push_back(name);
  return name;
}

std::string SpecWriter::reference(const AlgebraPtr& a, const std::string& hint) {
  for (const auto& [p, n] : known_)
    if (p == a || (same_structure(*p, *a) && p->names() == a->names())) return n;
  for (const auto& [p, n] : known_)
    if (same_structure(p->opposite(), *a) && p->names() == a->names()) return n + "^op";
  return algebra(a, hint);
}

std::string SpecWriter::algebra(const AlgebraPtr& a, const std::string& hint) {
  std::string name = fresh(hint);
  known_.push_back({a, name});
  std::ostringstream o;
  o << "\nalgebra " << name << "\n  basis";
  for (const auto& n : a->names()) o << ' ' << n;
  o << "\n  unit";
  for (const auto& s : a->unit()) o << ' ' << s.str();
  o << '\n';
  for (const auto& c : a->structure_constants()) o << "  product " << c.i << ' ' << c.j << ' ' << c.k << ' ' << c.value.str() << '\n';
  o << "end\n";
  out_ += o.str();
  return name;
}

std::string SpecWriter::map(const AlgebraMap& m, const std::string& hint) {
  std::string dom = reference(m.domain, hint + "_domain"), cod = reference(m.codomain, hint + "_codomain");
  std::string name = fresh(hint);
  std::ostringstream o;
  o << "\nmap " << name << ' ' << dom << ' ' << cod << ' ' << (m.kind == MapKind::Homomorphism ? "hom" : "anti") << '\n';
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    o << "  row";
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) o << ' ' << m.matrix(r, c).str();
    o << '\n';
  }
  o << "end\n";
  out_ += o.str();
  return name;
}

std::string SpecWriter::matrix(const Matrix& m, const std::string& hint) {
  std::string name = fresh(hint);
  std::ostringstream o;
  o << "\nmatrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) o << "  entry " << r << ' ' << c << ' ' << m(r, c).str() << '\n';
  o << "end\n";
  out_ += o.str();
  return name;
}

namespace {

std::string bialgebroid_line(const char* kw, const std::string& name, const std::string& total, const std::string& base,
                             const std::string& s, const std::string& t, const std::string& gamma, const std::string& pi) {
  return std::string("\n") + kw + " " + name + " total=" + total + " base=" + base + " s=" + s + " t=" + t + " gamma=" + gamma +
         " pi=" + pi + "\n";
}

}  // namespace

std::string SpecWriter::left(const LeftBialgebroid& lb, const std::string& hint) {
  std::string total = reference(lb.total(), hint + "_A"), base = reference(lb.base(), hint + "_L");
  std::string s = map(lb.s(), hint + "_s"), t = map(lb.t(), hint + "_t");
  std::string g = matrix(lb.gamma(), hint + "_gamma"), p = matrix(lb.pi(), hint + "_pi");
  std::string name = fresh(hint);
  out_ += bialgebroid_line("left-bialgebroid", name, total, base, s, t, g, p);
  return name;
}

std::string SpecWriter::right(const RightBialgebroid& rb, const std::string& hint) {
  std::string total = reference(rb.total(), hint + "_A"), base = reference(rb.base(), hint + "_R");
  std::string s = map(rb.s(), hint + "_s"), t = map(rb.t(), hint + "_t");
  std::string g = matrix(rb.gamma(), hint + "_gamma"), p = matrix(rb.pi(), hint + "_pi");
  std::string name = fresh(hint);
  out_ += bialgebroid_line("right-bialgebroid", name, total, base, s, t, g, p);
  return name;
}

std::string SpecWriter::hopf(const HopfAlgebroid& h, const std::string& hint) {
  reference(h.total(), hint + "_A");
  std::string l = left(h.lb, hint + "_left"), r = right(h.rb, hint + "_right");
  std::string S = map(h.S, hint + "_S"), nu = map(h.base_antiiso, hint + "_nu");
  std::string name = fresh(hint);
  out_ += "\nhopf-algebroid " + name + " left=" + l + " S=" + S + " right=" + r + " nu=" + nu + "\n";
  return name;
}

std::string SpecWriter::weak(const WeakHopfAlgebra& w, const std::string& hint) {
  std::string a = reference(w.H, hint + "_H");
  std::string d = matrix(w.Delta, hint + "_delta"), e = matrix(w.epsilon, hint + "_epsilon");
  std::string S = map(w.S, hint + "_S"), Si = map(w.S_inv, hint + "_S_inv");
  std::string name = fresh(hint);
  out_ += "\nweak-hopf " + name + " algebra=" + a + " delta=" + d + " epsilon=" + e + " S=" + S + " S_inv=" + Si + "\n";
  return name;
}

void SpecWriter::element(const std::string& hint, const AlgebraPtr& a, const Vector& v) {
  std::string alg = reference(a, hint + "_algebra");
  std::string name = fresh(hint);
  out_ += "\nelement " + name + " " + alg;
  for (const auto& s : v) out_ += " " + s.str();
  out_ += "\n";
}

void SpecWriter::comment(const std::string& text) { out_ += "# " + text + "\n"; }

std::string SpecWriter::str() const { return out_; }

}  // namespace hopfkit
