#include "hopfkit/report.hpp"

#include <sstream>

namespace hopfkit {

void VerificationReport::add_pass(const std::string& id) {
  checks.push_back({id, Check::Status::pass, ""});
}

void VerificationReport::add_fail(const std::string& id,
                                  const std::string& detail) {
  checks.push_back({id, Check::Status::fail, detail});
}

void VerificationReport::add_skip(const std::string& id,
                                  const std::string& reason) {
  checks.push_back({id, Check::Status::skip, reason});
}

void VerificationReport::require(bool ok, const std::string& id,
                                 const std::string& detail_on_fail) {
  if (ok)
    add_pass(id);
  else
    add_fail(id, detail_on_fail);
}

void VerificationReport::absorb(const VerificationReport& sub,
                                const std::string& prefix) {
  for (const auto& c : sub.checks)
    checks.push_back({prefix + "/" + c.id, c.status, c.detail});
}

bool VerificationReport::passed() const { return fail_count() == 0; }

int VerificationReport::fail_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == Check::Status::fail) ++n;
  return n;
}

std::string VerificationReport::str() const {
  std::ostringstream out;
  out << name << ": " << (passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : checks) {
    const char* tag = c.status == Check::Status::pass   ? "  [ok]   "
                      : c.status == Check::Status::fail ? "  [FAIL] "
                                                        : "  [skip] ";
    out << tag << c.id;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace hopfkit
