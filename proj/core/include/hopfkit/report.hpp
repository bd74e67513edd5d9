#pragma once

#include <string>
#include <vector>

namespace hopfkit {

// Structured pass/fail record per verified axiom. A skipped check carries the
// reason and does not count as a failure.
struct Check {
  enum class Status { pass, fail, skip };
  std::string id;
  Status status = Status::pass;
  std::string detail;  // counterexample location or skip reason
};

struct VerificationReport {
  std::string name;
  std::vector<Check> checks;

  void add_pass(const std::string& id);
  void add_fail(const std::string& id, const std::string& detail);
  void add_skip(const std::string& id, const std::string& reason);
  void require(bool ok, const std::string& id, const std::string& detail_on_fail);
  // Append another report's checks under "prefix/".
  void absorb(const VerificationReport& sub, const std::string& prefix);

  bool passed() const;
  int fail_count() const;
  std::string str() const;
};

}  // namespace hopfkit
