#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace hopfkit {

/// One failing instance of a check.
struct Certificate {
  std::string subject;  // which basis elements were plugged in
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Check {
  std::string id;  // "<group>/(<tag>)", stable across runs
  std::string description;
  bool passed = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t certificate_limit = 10;
  std::vector<Certificate> certificates;
  /// Set when the check could not be evaluated because a precondition failed.
  std::string aborted;

  void pass_instance() { ++instances; }
  void fail_instance(Certificate c);
  void record(bool ok, const std::string& subject, const std::string& lhs, const std::string& rhs);
  /// Builds the certificate only on failure.
  template <class MakeCertificate>
  void expect(bool ok, MakeCertificate&& make) {
    if (ok)
      pass_instance();
    else
      fail_instance(make());
  }
  void abort(std::string reason);
};

std::size_t default_certificate_limit();
void set_default_certificate_limit(std::size_t n);

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  /// References stay valid while further checks are added.
  Check& add(std::string id, std::string description);
  /// Copies all checks of other, prefixing the subject of other when given.
  void merge(const Report& other);

  bool passed() const;
  const std::string& subject() const { return subject_; }
  const std::deque<Check>& checks() const { return checks_; }
  std::deque<Check>& checks() { return checks_; }
  const Check* find(const std::string& id) const;
  /// Id of the first failing check, empty if none.
  std::string first_failure() const;
  std::vector<std::string> failing_ids() const;

  std::string to_text() const;
  /// Stable key-value tree; keys are emitted in a fixed order.
  std::string to_structured() const;

 private:
  std::string subject_;
  std::deque<Check> checks_;
};

/// Folds the outcome of a sub-report into one check: passing sub-checks add their
/// instance counts, failing ones contribute their certificates.
void absorb(Check& c, const Report& r);

}  // namespace hopfkit
