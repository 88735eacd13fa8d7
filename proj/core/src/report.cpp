#include "hopfkit/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hopfkit {

namespace {
std::size_t g_certificate_limit = 10;
}

std::size_t default_certificate_limit() { return g_certificate_limit; }
void set_default_certificate_limit(std::size_t n) { g_certificate_limit = n; }

void Check::fail_instance(Certificate c) {
  ++instances;
  ++failures;
  passed = false;
  if (certificates.size() < certificate_limit) certificates.push_back(std::move(c));
}

void Check::record(bool ok, const std::string& subject, const std::string& lhs, const std::string& rhs) {
  if (ok)
    pass_instance();
  else
    fail_instance({subject, lhs, rhs, {}});
}

void Check::abort(std::string reason) {
  passed = false;
  aborted = std::move(reason);
}

void absorb(Check& c, const Report& r) {
  for (const auto& sub : r.checks()) {
    if (sub.passed) {
      c.instances += sub.instances;
      continue;
    }
    for (const auto& cert : sub.certificates) c.fail_instance({cert.subject, cert.lhs, cert.rhs, sub.id});
    if (sub.certificates.empty()) c.fail_instance({sub.id, "fails", "holds", sub.aborted});
  }
}

Check& Report::add(std::string id, std::string description) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.certificate_limit = g_certificate_limit;
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return c.id;
  return {};
}

std::vector<std::string> Report::failing_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c.id);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "report: " << subject_ << "\n";
  for (const auto& c : checks_) {
    os << (c.passed ? "  PASS " : "  FAIL ") << c.id << "  " << c.description;
    if (!c.aborted.empty()) {
      os << "  [not evaluated: " << c.aborted << "]\n";
      continue;
    }
    os << "  (" << c.instances - c.failures << "/" << c.instances << ")\n";
    for (const auto& cert : c.certificates) {
      os << "      at " << cert.subject << ": " << cert.lhs << " != " << cert.rhs;
      if (!cert.note.empty()) os << "  // " << cert.note;
      os << "\n";
    }
    if (c.failures > c.certificates.size())
      os << "      ... " << c.failures - c.certificates.size() << " more\n";
  }
  os << "result: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string Report::to_structured() const {
  nlohmann::ordered_json j;
  j["schema"] = "hopfkit-report/1";
  j["subject"] = subject_;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["passed"] = c.passed;
    cj["instances"] = c.instances;
    cj["failures"] = c.failures;
    if (!c.aborted.empty()) cj["aborted"] = c.aborted;
    cj["certificates"] = nlohmann::ordered_json::array();
    for (const auto& cert : c.certificates) {
      nlohmann::ordered_json k;
      k["subject"] = cert.subject;
      k["lhs"] = cert.lhs;
      k["rhs"] = cert.rhs;
      if (!cert.note.empty()) k["note"] = cert.note;
      cj["certificates"].push_back(std::move(k));
    }
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

}  // namespace hopfkit
