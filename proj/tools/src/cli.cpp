#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "hopfkit/catalog.hpp"
#include "hopfkit/integrallab.hpp"
#include "hopfkit/specio.hpp"

namespace hopfkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec, field, report = "text", level, object, element, section, mode, twist, antipode, weak, output, example;
  std::size_t limit = 10;
};

struct Outcome {
  Report report;
  std::optional<std::string> spec;  // emitted spec text
  std::string note;                 // extra line after the report
};

bool is_op(const SpecFile& s, const std::string& name, const std::vector<std::string>& kinds) {
  for (const auto& k : kinds) {
    if (k == "hopf" && s.hopf.count(name)) return true;
    if (k == "weak" && s.weak.count(name)) return true;
    if (k == "left" && s.left.count(name)) return true;
    if (k == "right" && s.right.count(name)) return true;
  }
  return false;
}

/// The named object, or the first declared one of the given kinds.
std::string pick(const SpecFile& s, const std::string& requested, const std::vector<std::string>& kinds, const char* what) {
  if (!requested.empty()) {
    if (!is_op(s, requested, kinds)) throw UsageError(std::string("no ") + what + " named " + requested);
    return requested;
  }
  for (const auto& n : s.order)
    if (is_op(s, n, kinds)) return n;
  throw UsageError(std::string("the spec file contains no ") + what);
}

HopfAlgebroid hopf_object(const SpecFile& s, const std::string& name) {
  std::string n = pick(s, name, {"hopf", "weak"}, "Hopf algebroid or weak Hopf algebra");
  if (s.hopf.count(n)) return s.hopf.at(n);
  return weak_hopf_to_hopf_algebroid(s.weak.at(n));
}

LeftBialgebroid left_object(const SpecFile& s, const std::string& name) {
  std::string n = pick(s, name, {"left", "hopf", "weak"}, "left bialgebroid");
  if (s.left.count(n)) return s.left.at(n);
  return hopf_object(s, n).lb;
}

RightBialgebroid right_object(const SpecFile& s, const std::string& name) {
  std::string n = pick(s, name, {"right", "hopf", "weak"}, "right bialgebroid");
  if (s.right.count(n)) return s.right.at(n);
  return hopf_object(s, n).rb;
}

Vector element_for(const SpecFile& s, const std::string& name, const Algebra& A) {
  auto it = s.elements.find(name);
  if (it == s.elements.end()) throw UsageError("no element named " + name);
  if (it->second.coords.size() != A.dim()) throw UsageError("element " + name + " does not live in an algebra of dimension " + std::to_string(A.dim()));
  return it->second.coords;
}

const Matrix& matrix_for(const SpecFile& s, const std::string& name) {
  auto it = s.matrices.find(name);
  if (it == s.matrices.end()) throw UsageError("no matrix named " + name);
  return it->second;
}

/// Left-integral basis vectors, then their sum.
std::optional<Vector> find_nondegenerate(const HopfAlgebroid& h) {
  std::vector<Vector> cands = integral_space(h.lb).space.basis();
  if (cands.empty()) return std::nullopt;
  Vector sum = h.total()->zero();
  for (const auto& c : cands) sum = add(sum, c);
  cands.push_back(sum);
  for (const auto& c : cands)
    if (nondegeneracy(h, c).nondegenerate()) return c;
  return std::nullopt;
}

Vector integral_for(const SpecFile& s, const Options& o, const HopfAlgebroid& h, Report& rep) {
  if (!o.element.empty()) return element_for(s, o.element, *h.total());
  auto ell = find_nondegenerate(h);
  Check& c = rep.add("integrals/(search)", "a non-degenerate left integral among the basis of left integrals and its sum");
  if (!ell) {
    c.fail_instance({"left integrals", "no candidate is non-degenerate", "", {}});
    throw UsageError("no non-degenerate left integral found; pass --element");
  }
  c.pass_instance();
  c.description += ": " + h.total()->format(*ell);
  return *ell;
}

std::string space_text(const Algebra& A, const Subspace& s) {
  std::string t = "dim " + std::to_string(s.dim());
  for (const auto& v : s.basis()) t += ", " + A.format(v);
  return t;
}

Outcome cmd_check(const SpecFile& s, const Options& o) {
  Outcome out{Report(o.level), {}, {}};
  if (o.level == "algebra") {
    for (const auto& n : s.order) {
      if (!s.algebras.count(n) || (!o.object.empty() && n != o.object)) continue;
      out.report.merge(verify_algebra(*s.algebras.at(n)));
    }
    if (out.report.checks().empty()) throw UsageError("no algebra to check");
  } else if (o.level == "left-bialgebroid") {
    out.report = verify_left_bialgebroid(left_object(s, o.object));
  } else if (o.level == "right-bialgebroid") {
    out.report = verify_right_bialgebroid(right_object(s, o.object));
  } else if (o.level == "hopf") {
    HopfAlgebroid h = hopf_object(s, o.object);
    out.report = verify_hopf(h);
    out.report.merge(verify_sisom(h));
  } else if (o.level == "weak-hopf") {
    std::string n = pick(s, o.object, {"weak"}, "weak Hopf algebra");
    out.report = verify_weak_hopf(s.weak.at(n));
  } else {
    HopfAlgebroid h = hopf_object(s, o.object);
    std::optional<Matrix> xi;
    if (!o.section.empty()) xi = matrix_for(s, o.section);
    out.report = check_lu_axioms(h.lb, h.S, xi);
  }
  return out;
}

Outcome cmd_integrals(const SpecFile& s, const Options& o) {
  HopfAlgebroid h = hopf_object(s, o.object);
  const Algebra& A = *h.total();
  Outcome out{Report("integrals"), {}, {}};
  out.report.add("integrals/(left-space)", "left integrals: " + space_text(A, integral_space(h.lb).space)).pass_instance();
  out.report.add("integrals/(right-space)", "right integrals: " + space_text(A, integral_space(h.rb).space)).pass_instance();
  Vector ell;
  try {
    ell = integral_for(s, o, h, out.report);
  } catch (const UsageError&) {
    if (!o.element.empty()) throw;
    return out;
  }
  out.report.merge(intpr_equivalences(h, ell).report);
  if (!is_left_integral(h.lb, ell)) return out;
  NondegeneracyResult nd = nondegeneracy(h, ell);
  out.report.merge(nd.report);
  if (nd.integral) out.report.merge(frobenius_check(h, *nd.integral));
  return out;
}

Outcome cmd_ls(const SpecFile& s, const Options& o) {
  RightBialgebroid rb = right_object(s, o.object);
  if (o.element.empty()) throw UsageError("ls-antipode needs --element");
  Vector ell = element_for(s, o.element, *rb.total());
  Outcome out{Report("half Larson-Sweedler"), {}, {}};
  try {
    LsResult r = ls_antipode(rb, ell);
    out.report = std::move(r.report);
    SpecWriter w(rb.field());
    w.comment("antipode from a non-degenerate left integral");
    w.hopf(r.hopf, "H");
    w.element("ell", r.hopf.total(), ell);
    out.spec = w.str();
  } catch (const IntegralError&) {
    out.report = verify_bgdnd(rb, ell);
  }
  return out;
}

Outcome cmd_twist(const SpecFile& s, const Options& o) {
  HopfAlgebroid h = hopf_object(s, o.object);
  Outcome out{Report("twist"), {}, {}};
  if (o.mode == "recover") {
    if (o.antipode.empty()) throw UsageError("twist --mode recover needs --antipode");
    auto it = s.maps.find(o.antipode);
    if (it == s.maps.end()) throw UsageError("no map named " + o.antipode);
    AlgebraMap Sp = it->second;
    Sp.domain = Sp.codomain = h.total();
    Twist t = recover_twist(h.lb, h.S, Sp);
    out.report = verify_twist(h.lb, h.S, t);
    Check& c = out.report.add("twist/(recovered)", "S(a ↼ g) equals the given antipode");
    c.expect(twisted_antipode(h.lb, h.S, t).matrix == Sp.matrix, [] { return Certificate{"S'", "differs", "", {}}; });
    SpecWriter w(h.lb.field());
    w.matrix(t.g, "g");
    w.matrix(t.g_inverse, "g_inverse");
    out.spec = w.str();
    return out;
  }
  if (o.twist.empty()) throw UsageError("twist --mode " + o.mode + " needs --twist");
  Twist t;
  try {
    t = make_twist(h.lb, matrix_for(s, o.twist));
  } catch (const TwistError& e) {
    out.report.add("twist/(invertible)", "the candidate is an invertible lower-star functional").fail_instance({o.twist, e.what(), "", {}});
    return out;
  }
  out.report = verify_twist(h.lb, h.S, t);
  if (o.mode == "apply" && out.report.passed()) {
    HopfAlgebroid ht = assemble_hopf(h.lb, twisted_antipode(h.lb, h.S, t));
    out.report.merge(verify_hopf(ht));
    SpecWriter w(h.lb.field());
    w.hopf(ht, "H");
    out.spec = w.str();
  }
  return out;
}

Outcome cmd_dualize(const SpecFile& s, const Options& o) {
  HopfAlgebroid h = hopf_object(s, o.object);
  Outcome out{Report("dual Hopf algebroid"), {}, {}};
  Vector ell = integral_for(s, o, h, out.report);
  NondegeneracyResult nd = nondegeneracy(h, ell);
  out.report.merge(nd.report);
  if (!nd.integral) return out;
  DualHopf D = dual_hopf_algebroid(h, *nd.integral);
  out.report.merge(D.report);
  SpecWriter w(h.lb.field());
  w.comment("dual Hopf algebroid on the lower-star dual");
  w.hopf(D.hopf, "D");
  w.element("ell", D.hopf.total(), D.two_sided);
  out.spec = w.str();
  return out;
}

Outcome cmd_wha(const SpecFile& s, const Options& o) {
  std::string n = pick(s, o.object, {"hopf", "weak"}, "Hopf algebroid or weak Hopf algebra");
  HopfAlgebroid h = hopf_object(s, n);
  SeparabilityStructure sep;
  std::string weak = o.weak.empty() && s.weak.count(n) ? n : o.weak;
  if (!weak.empty()) {
    if (!s.weak.count(weak)) throw UsageError("no weak Hopf algebra named " + weak);
    sep = separability_from_weak(s.weak.at(weak), h);
  } else if (h.lb.base()->dim() == 1) {
    sep = trivial_separability(h.lb.base());
  } else {
    throw UsageError("a base of dimension > 1 needs --weak for its separability structure");
  }
  Outcome out{Report("weak Hopf criterion"), {}, {}};
  out.report = verify_separability(sep);
  WhaDecision d = wha_decide(h, sep);
  out.report.merge(d.report);
  out.note = std::string("verdict: ") + to_string(d.verdict);
  return out;
}

Outcome cmd_diagram(const SpecFile& s, const Options& o) {
  HopfAlgebroid h = hopf_object(s, o.object);
  Outcome out{Report("duality diagram"), {}, {}};
  Vector ell = integral_for(s, o, h, out.report);
  NondegeneracyResult nd = nondegeneracy(h, ell);
  out.report.merge(nd.report);
  if (nd.integral) out.report.merge(duality_diagram(h, *nd.integral));
  return out;
}

std::string example_spec(const std::string& name) {
  const Field Q = Field::rationals();
  SpecWriter w(Q);
  auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  if (name == "kz2" || name == "kz3" || name == "s3") {
    auto G = name == "kz2" ? z2 : name == "kz3" ? z3 : FiniteGroup::symmetric3();
    w.comment("group Hopf algebra");
    auto h = group_hopf_algebroid(G, Q);
    w.hopf(h, "H");
    w.element("ell", h.total(), Vector(G.order(), Q.one()));
  } else if (name == "kz2-twisted") {
    w.comment("kZ2 with S(t) = -t");
    auto tw = character_twisted(z2, sign_character(z2, Q), Q);
    w.hopf(tw.hopf, "H");
  } else if (name == "kz3-twisted-gf7") {
    const Field F = Field::gf(7);
    SpecWriter g(F);
    g.comment("kZ3 over GF(7) with S(t) = 2 t^2");
    auto tw = character_twisted(z3, cyclic_character(z3, F.from_int(2)), F);
    g.hopf(tw.hopf, "H");
    return g.str();
  } else if (name == "kz3-rb") {
    w.comment("right bialgebroid of kZ3 and the integral 1 + t + t^2");
    auto h = group_hopf_algebroid(z3, Q);
    w.right(h.rb, "B");
    w.element("ell", h.total(), Vector(3, Q.one()));
  } else if (name == "m2-groupoid" || name == "m3-groupoid") {
    std::size_t n = name[1] - '0';
    w.comment("pair groupoid algebra as a weak Hopf algebra");
    auto wh = pair_groupoid_weak_hopf(n, Q);
    w.weak(wh, "W");
    w.element("ell", wh.H, Vector(n * n, Q.one()));
  } else if (name == "k-z2" || name == "k-z3") {
    w.comment("function algebra on a cyclic group");
    auto wh = dual_function_algebra(name == "k-z2" ? z2 : z3, Q);
    w.weak(wh, "W");
  } else {
    throw UsageError("unknown example " + name);
  }
  return w.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hopfkit: exact verification of finite Hopf algebroids", "hopfkit"};
  Options o;
  app.add_option("--field", o.field, "rational or gf:p, used when the spec has no field line");
  app.add_option("--report", o.report, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--certificate-limit", o.limit, "failing instances kept per check");
  app.add_option("--output", o.output, "file for an emitted spec (stdout otherwise, with the report on stderr)");
  app.require_subcommand(1);
  app.fallthrough();

  auto spec_arg = [&](CLI::App* c) { c->add_option("spec", o.spec, "spec file")->required(); };
  auto* check = app.add_subcommand("check", "run the axioms of one level");
  spec_arg(check);
  check->add_option("--level", o.level)
      ->required()
      ->check(CLI::IsMember({"algebra", "left-bialgebroid", "right-bialgebroid", "hopf", "weak-hopf", "lu"}));
  check->add_option("--object", o.object, "name of the object to check");
  check->add_option("--section", o.section, "matrix used as the Lu section");
  auto* integrals = app.add_subcommand("integrals", "integral spaces and non-degeneracy");
  spec_arg(integrals);
  integrals->add_option("--object", o.object);
  integrals->add_option("--element", o.element, "element to test");
  auto* ls = app.add_subcommand("ls-antipode", "antipode of a right bialgebroid from a non-degenerate left integral");
  spec_arg(ls);
  ls->add_option("--object", o.object);
  ls->add_option("--element", o.element)->required();
  auto* twist = app.add_subcommand("twist", "verify, apply or recover a twist");
  spec_arg(twist);
  twist->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"verify", "apply", "recover"}));
  twist->add_option("--object", o.object);
  twist->add_option("--twist", o.twist, "matrix holding the twist functional");
  twist->add_option("--antipode", o.antipode, "map holding the second antipode");
  auto* dualize = app.add_subcommand("dualize", "emit the dual Hopf algebroid");
  spec_arg(dualize);
  dualize->add_option("--object", o.object);
  dualize->add_option("--element", o.element);
  auto* wha = app.add_subcommand("wha-decide", "decide whether the Hopf algebroid comes from a weak Hopf algebra");
  spec_arg(wha);
  wha->add_option("--object", o.object);
  wha->add_option("--weak", o.weak, "weak Hopf algebra supplying the separability structure");
  auto* diagram = app.add_subcommand("diagram", "the four dual isomorphisms and their square");
  spec_arg(diagram);
  diagram->add_option("--object", o.object);
  diagram->add_option("--element", o.element);
  auto* example = app.add_subcommand("example", "emit a catalog example as a spec file");
  example->add_option("name", o.example)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopfkit: " << e.what() << "\n";
    return 2;
  }

  try {
    set_default_certificate_limit(o.limit);
    if (example->parsed()) {
      std::string text = example_spec(o.example);
      if (o.output.empty())
        out << text;
      else
        write_file(o.output, text);
      return 0;
    }
    std::optional<Field> field;
    if (!o.field.empty()) {
      try {
        field = Field::parse(o.field);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--field: ") + e.what());
      }
    }
    SpecFile s = parse_spec_file(o.spec, field);
    Outcome r;
    if (check->parsed()) r = cmd_check(s, o);
    else if (integrals->parsed()) r = cmd_integrals(s, o);
    else if (ls->parsed()) r = cmd_ls(s, o);
    else if (twist->parsed()) r = cmd_twist(s, o);
    else if (dualize->parsed()) r = cmd_dualize(s, o);
    else if (wha->parsed()) r = cmd_wha(s, o);
    else r = cmd_diagram(s, o);

    std::ostream& rep_out = r.spec && o.output.empty() ? err : out;
    rep_out << (o.report == "structured" ? r.report.to_structured() : r.report.to_text());
    if (!r.note.empty()) rep_out << r.note << "\n";
    if (r.spec) {
      if (o.output.empty())
        out << *r.spec;
      else
        write_file(o.output, *r.spec);
    }
    return r.report.passed() ? 0 : 1;
  } catch (const SpecError& e) {
    err << "hopfkit: " << o.spec << ": " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "hopfkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "hopfkit: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hopfkit::cli
